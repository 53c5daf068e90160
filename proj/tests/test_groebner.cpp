#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "thilb/groebner.hpp"

using namespace thilb;

namespace {

// Test-side reducer: plain multivariate division, written from the textbook
// definition with no pair logic. Used to validate bases independently.
Polynomial plainDivide(Polynomial f, const std::vector<Polynomial>& gs) {
  const auto& ring = f.ring();
  Polynomial rem = Polynomial::zero(ring);
  while (!f.isZero()) {
    const Term& lt = f.leading();
    bool hit = false;
    for (const auto& g : gs) {
      if (!g.isZero() && g.leadingMonomial().divides(lt.mono)) {
        Monomial q = lt.mono.div(g.leadingMonomial());
        Fp c = ring->field.mul(lt.coeff, ring->field.inv(g.leadingCoeff()));
        f = f - g.mulTerm(q, c);
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem = rem + Polynomial::monomial(ring, lt.mono, lt.coeff);
      f = f - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return rem;
}

// Definition-level Groebner check: every generator and every S-polynomial of
// the basis reduces to zero under plain division.
void checkIsGroebnerBasisFor(const std::vector<Polynomial>& basis,
                             const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) CHECK(plainDivide(g, basis).isZero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Monomial l = Monomial::lcm(basis[i].leadingMonomial(), basis[j].leadingMonomial());
      const auto& F = basis[i].ring()->field;
      Polynomial s = basis[i].mulTerm(l.div(basis[i].leadingMonomial()),
                                      F.inv(basis[i].leadingCoeff())) -
                     basis[j].mulTerm(l.div(basis[j].leadingMonomial()),
                                      F.inv(basis[j].leadingCoeff()));
      CHECK(plainDivide(s, basis).isZero());
    }
  }
}

std::vector<Monomial> monomialsOfDegree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  // lexicographic enumeration of compositions
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.emplace_back(cur);
      cur[i] = 0;
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

// Dense row reduction over F_p; returns the row-echelon basis.
struct Rref {
  const PrimeField& F;
  std::vector<std::vector<Fp>> rows;
  explicit Rref(const PrimeField& f) : F(f) {}

  void add(std::vector<Fp> v) {
    for (const auto& r : rows) {
      std::size_t p = pivot(r);
      if (p < v.size() && v[p] != 0) {
        Fp c = v[p];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(c, r[i]));
      }
    }
    std::size_t p = pivot(v);
    if (p == v.size()) return;
    Fp inv = F.inv(v[p]);
    for (auto& x : v) x = F.mul(x, inv);
    rows.push_back(std::move(v));
  }

  bool inSpan(std::vector<Fp> v) {
    for (const auto& r : rows) {
      std::size_t p = pivot(r);
      if (p < v.size() && v[p] != 0) {
        Fp c = v[p];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(c, r[i]));
      }
    }
    return pivot(v) == v.size();
  }

  static std::size_t pivot(const std::vector<Fp>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i;
    return v.size();
  }
};

std::vector<Fp> toVector(const Polynomial& f, const std::vector<Monomial>& basis) {
  std::vector<Fp> v(basis.size(), 0);
  for (const auto& t : f.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.mono);
    REQUIRE(it != basis.end());
    v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return v;
}

Ideal parseIdeal(const PolyRingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> gs;
  for (auto* s : gens) gs.push_back(parsePoly(s, R));
  return Ideal(R, std::move(gs));
}

}  // namespace

TEST_CASE("monomial generators are already a basis") {
  auto R = makeRing(5, {"x", "y"});
  Ideal I = parseIdeal(R, {"x^2", "y"});
  REQUIRE(I.basis().size() == 2);
  CHECK(I.basis()[0] == parsePoly("y", R));
  CHECK(I.basis()[1] == parsePoly("x^2", R));
}

TEST_CASE("linear elimination under lex") {
  auto R = makeRing(5, {"x", "y", "z"}, MonomialOrder::lex());
  Ideal I = parseIdeal(R, {"x - y", "y - z"});
  REQUIRE(I.basis().size() == 2);
  CHECK(I.basis()[0] == parsePoly("y - z", R).monic());
  CHECK(I.basis()[1] == parsePoly("x - z", R).monic());
}

TEST_CASE("twisted cubic: lex basis and elimination part") {
  auto R = makeRing(5, {"x", "y", "z"}, MonomialOrder::lex());
  Ideal I = parseIdeal(R, {"y - x^2", "z - x^3"});
  const auto& B = I.basis();
  checkIsGroebnerBasisFor(B, I.generators());
  // elimination part cap k[y,z] is generated by y^3 - z^2
  std::vector<Polynomial> elim;
  for (const auto& b : B) {
    bool hasX = false;
    for (const auto& t : b.terms())
      if (t.mono[0]) hasX = true;
    if (!hasX) elim.push_back(b);
  }
  REQUIRE(elim.size() == 1);
  CHECK(elim[0] == parsePoly("y^3 - z^2", R).monic());
}

TEST_CASE("normal form") {
  auto R = makeRing(5, {"x", "y"});
  Ideal I = parseIdeal(R, {"x^2 - y"});
  SUBCASE("members reduce to zero") {
    CHECK(normalForm(parsePoly("x^2 - y", R), I).isZero());
    CHECK(normalForm(parsePoly("(x^2 - y)*(x + 3)", R), I).isZero());
  }
  SUBCASE("one is its own normal form modulo a proper ideal") {
    CHECK(normalForm(Polynomial::constant(R, 1), I) == Polynomial::constant(R, 1));
  }
  SUBCASE("single reduction step") {
    // x^2*y = y*(x^2 - y) + y^2
    CHECK(normalForm(parsePoly("x^2*y", R), I) == parsePoly("y^2", R));
  }
  SUBCASE("linearity in f") {
    std::mt19937 rng(3);
    auto RR = makeRing(5, {"x", "y"});
    Ideal J = parseIdeal(RR, {"x^2 + y^2", "x*y - 1"});
    std::uniform_int_distribution<std::uint32_t> ex(0, 4);
    std::uniform_int_distribution<std::uint64_t> cf(0, 4);
    for (int i = 0; i < 50; ++i) {
      std::vector<Term> ta, tb;
      for (int k = 0; k < 3; ++k) {
        Monomial m(2);
        m[0] = ex(rng); m[1] = ex(rng);
        ta.push_back({m, cf(rng)});
        Monomial m2(2);
        m2[0] = ex(rng); m2[1] = ex(rng);
        tb.push_back({m2, cf(rng)});
      }
      auto f = Polynomial::fromTerms(RR, ta);
      auto g = Polynomial::fromTerms(RR, tb);
      CHECK(normalForm(f + g, J) == normalForm(f, J) + normalForm(g, J));
    }
  }
}

TEST_CASE("ideal quotient") {
  auto R = makeRing(5, {"x", "y"});
  SUBCASE("principal examples") {
    Ideal A = parseIdeal(R, {"x^2"});
    Ideal Q1 = idealQuotient(A, parsePoly("x", R));
    CHECK(Q1.equals(parseIdeal(R, {"x"})));
    Ideal B = parseIdeal(R, {"x*y"});
    CHECK(idealQuotient(B, parsePoly("x", R)).equals(parseIdeal(R, {"y"})));
  }
  SUBCASE("((x^2,y^2):xy) = (x,y), with brute-force membership check") {
    Ideal A = parseIdeal(R, {"x^2", "y^2"});
    Ideal C = idealQuotient(A, parsePoly("x*y", R));
    CHECK(C.equals(parseIdeal(R, {"x", "y"})));
    // brute force: a monomial m of degree <= 2 satisfies m*xy in (x^2,y^2)
    // exactly when x | m or y | m
    for (std::uint32_t d = 0; d <= 2; ++d) {
      for (const auto& m : monomialsOfDegree(2, d)) {
        Polynomial mm = Polynomial::monomial(R, m);
        bool inColon = A.contains(mm * parsePoly("x*y", R));
        CHECK(inColon == C.contains(mm));
      }
    }
  }
  SUBCASE("saturation stabilizes") {
    Ideal A = parseIdeal(R, {"x^3*y", "x^2*y^2"});
    Ideal S = idealQuotient(A, parsePoly("x", R), true);
    CHECK(S.equals(parseIdeal(R, {"y"})));
    CHECK_THROWS_AS(idealQuotient(A, Polynomial::zero(R)), ValidationError);
  }
}

TEST_CASE("ideal intersection") {
  auto R = makeRing(5, {"x", "y"});
  SUBCASE("(x) cap (y) = (xy)") {
    Ideal I = parseIdeal(R, {"x"});
    Ideal J = parseIdeal(R, {"y"});
    CHECK(idealIntersect(I, J).equals(parseIdeal(R, {"x*y"})));
  }
  SUBCASE("I cap I = I") {
    Ideal I = parseIdeal(R, {"x^2 + y", "x*y"});
    CHECK(idealIntersect(I, I).equals(I));
  }
  SUBCASE("(x,y)^2 cap (z,t)^2: the nine products, by double inclusion") {
    auto R4 = makeRing(5, {"x", "y", "z", "t"});
    Ideal I = parseIdeal(R4, {"x^2", "x*y", "y^2"});
    Ideal J = parseIdeal(R4, {"z^2", "z*t", "t^2"});
    Ideal meet = idealIntersect(I, J);
    Ideal expect = parseIdeal(
        R4, {"x^2*z^2", "x^2*z*t", "x^2*t^2", "x*y*z^2", "x*y*z*t", "x*y*t^2",
             "y^2*z^2", "y^2*z*t", "y^2*t^2"});
    CHECK(meet.containsIdeal(expect));
    CHECK(expect.containsIdeal(meet));
    CHECK(meet.equals(expect));
  }
}

TEST_CASE("elimination") {
  auto R = makeRing(5, {"t", "x", "y"});
  SUBCASE("matches the intersection construction") {
    Ideal I = parseIdeal(R, {"t*x", "(1 - t)*y"});
    Ideal E = eliminate(I, 1);
    for (const auto& g : E.generators())
      for (const auto& term : g.terms()) CHECK(term.mono[0] == 0);
    auto R2 = makeRing(5, {"t", "x", "y"});
    CHECK(E.equals(parseIdeal(R2, {"x*y"})));
  }
  SUBCASE("eliminating zero variables is the identity") {
    Ideal I = parseIdeal(R, {"t*x", "x + y"});
    CHECK(eliminate(I, 0).equals(I));
  }
}

TEST_CASE("bracket power") {
  SUBCASE("monomial ideal, p=2") {
    auto R = makeRing(2, {"x", "y"});
    Ideal I = parseIdeal(R, {"x", "y"});
    CHECK(bracketPower(I, 1).equals(parseIdeal(R, {"x^2", "y^2"})));
  }
  SUBCASE("zero ideal") {
    auto R = makeRing(2, {"x", "y"});
    Ideal Z(R, {});
    CHECK(bracketPower(Z, 1).isZeroIdeal());
  }
  SUBCASE("independence of the generating set, p=3") {
    auto R = makeRing(3, {"x", "y", "z"});
    Ideal A = parseIdeal(R, {"x + y", "y + z"});
    // x - z = (x + y) - (y + z) generates the same ideal with x + y
    Ideal B = parseIdeal(R, {"x + y", "x - z"});
    REQUIRE(A.equals(B));
    CHECK(bracketPower(A, 1).equals(bracketPower(B, 1)));
    CHECK(bracketPower(A, 2).equals(bracketPower(B, 2)));
  }
}

TEST_CASE("vector space length") {
  auto R = makeRing(5, {"x", "y"});
  CHECK(vsLength(parseIdeal(R, {"x", "y"})) == Length::of(1));
  CHECK(vsLength(parseIdeal(R, {"x^2", "x*y", "y^2"})) == Length::of(3));
  CHECK(vsLength(parseIdeal(R, {"x"})) == Length::infinite());
  CHECK(vsLength(parseIdeal(R, {"x - 1"})) == Length::infinite());
  auto R4 = makeRing(5, {"x", "y", "z", "t"});
  Ideal H = parseIdeal(R4, {"x^2", "x*y", "y^2", "z^2", "z*t", "t^2"});
  CHECK(vsLength(H) == Length::of(9));  // product count: 3 x 3
  // unit ideal has length 0
  CHECK(vsLength(parseIdeal(R, {"3"})) == Length::of(0));
}

TEST_CASE("standard monomials agree with the count and the basis") {
  auto R = makeRing(5, {"x", "y", "z"});
  Ideal I = parseIdeal(R, {"x^2 - y", "y^3", "z^2 - x*y"});
  Length n = vsLength(I);
  REQUIRE(n.isFinite());
  auto mons = standardMonomials(I);
  CHECK(mons.size() == n.value());
  for (const auto& m : mons)
    for (const auto& b : I.basis()) CHECK(!b.leadingMonomial().divides(m));
  for (std::size_t i = 1; i < mons.size(); ++i)
    CHECK(R->order.less(mons[i - 1], mons[i]));
}

TEST_CASE("Krull dimension") {
  auto R4 = makeRing(5, {"x", "y", "z", "t"});
  CHECK(krullDimension(Ideal(R4, {})) == 4);
  Ideal twoPlanes = idealIntersect(parseIdeal(R4, {"x", "y"}), parseIdeal(R4, {"z", "t"}));
  CHECK(krullDimension(twoPlanes) == 2);
  CHECK(krullDimension(parseIdeal(R4, {"x", "y", "z", "t"})) == 0);
  CHECK_THROWS_AS(krullDimension(parseIdeal(R4, {"2"})), ValidationError);

  // oracle: enumerate variable subsets independent modulo the leading terms
  const auto& lts = twoPlanes.basis();
  std::size_t best = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    bool indep = true;
    for (const auto& g : lts) {
      bool supported = true;
      for (std::size_t i = 0; i < 4; ++i)
        if (g.leadingMonomial()[i] > 0 && !(mask & (1u << i))) supported = false;
      if (supported) indep = false;
    }
    if (indep) best = std::max(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  CHECK(best == 2);
}

TEST_CASE("graded Hilbert function") {
  auto R2 = makeRing(5, {"x", "y"});
  CHECK(gradedHilbertFunction(Ideal(R2, {}), 3) == 4);
  Ideal m2 = parseIdeal(R2, {"x^2", "x*y", "y^2"});
  CHECK(gradedHilbertFunction(m2, 1) == 2);
  CHECK(gradedHilbertFunction(m2, 2) == 0);
  CHECK(gradedHilbertFunction(m2, 5) == 0);
  auto R4 = makeRing(5, {"x", "y", "z", "t"});
  Ideal twoPlanes = idealIntersect(parseIdeal(R4, {"x", "y"}), parseIdeal(R4, {"z", "t"}));
  CHECK(gradedHilbertFunction(twoPlanes, 1) == 4);
  CHECK_THROWS_AS(gradedHilbertFunction(parseIdeal(R2, {"x^2 - y"}), 2), ValidationError);
}

TEST_CASE("membership matches degree-bounded linear algebra") {
  std::mt19937 rng(23);
  auto R = makeRing(5, {"x", "y", "z"});
  std::uniform_int_distribution<std::uint64_t> cf(0, 4);
  for (int round = 0; round < 20; ++round) {
    // random homogeneous ideal: two quadrics
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Term> ts;
      for (const auto& m : monomialsOfDegree(3, 2)) ts.push_back({m, cf(rng)});
      gens.push_back(Polynomial::fromTerms(R, ts));
    }
    Ideal I(R, gens);
    for (std::uint32_t d = 2; d <= 4; ++d) {
      // span of m*g in degree d
      auto basisMons = monomialsOfDegree(3, d);
      Rref span(R->field);
      for (const auto& g : I.generators()) {
        if (g.isZero()) continue;
        std::uint32_t gd = static_cast<std::uint32_t>(g.degree());
        if (gd > d) continue;
        for (const auto& m : monomialsOfDegree(3, d - gd))
          span.add(toVector(g.mulTerm(m, 1), basisMons));
      }
      // random homogeneous f of degree d: membership agrees both ways
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Term> ts;
        for (const auto& m : basisMons) ts.push_back({m, cf(rng)});
        auto f = Polynomial::fromTerms(R, ts);
        bool viaNF = I.contains(f);
        bool viaLA = span.inSpan(toVector(f, basisMons));
        CHECK(viaNF == viaLA);
      }
    }
  }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
  std::mt19937 rng(29);
  auto R = makeRing(5, {"x", "y", "z"});
  std::uniform_int_distribution<std::uint64_t> cf(0, 4);
  std::uniform_int_distribution<std::uint32_t> ex(0, 2);
  for (int round = 0; round < 25; ++round) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        Monomial m(3);
        for (int i = 0; i < 3; ++i) m[i] = ex(rng);
        ts.push_back({m, cf(rng)});
      }
      gens.push_back(Polynomial::fromTerms(R, ts));
    }
    Ideal I(R, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Ideal J(R, shuffled);
    CHECK(I.equals(J));
    checkIsGroebnerBasisFor(I.basis(), gens);
  }
}

TEST_CASE("budget exceeded is a typed error") {
  Budget saved = globalBudget();
  globalBudget().maxPairs = 1;
  auto R = makeRing(5, {"x", "y", "z"});
  bool threw = false;
  try {
    Ideal I = parseIdeal(R, {"x^2 + y*z", "x*y + z^2", "y^2 - x*z"});
    I.basis();
  } catch (const BudgetError&) {
    threw = true;
  }
  globalBudget() = saved;
  CHECK(threw);
}
