#include "thilb/groebner.hpp"

#include <algorithm>
#include <map>

namespace thilb {

Budget& globalBudget() {
  static Budget b;
  return b;
}

BudgetUsage& globalUsage() {
  static BudgetUsage u;
  return u;
}

Ideal::Ideal(PolyRingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!g.ring()->sameSignature(*ring_)) throw ValidationError("generator signature mismatch");
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::basis() const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (gb_) return *gb_;
  }
  auto computed = std::make_shared<const std::vector<Polynomial>>(buchberger(ring_, gens_));
  std::lock_guard<std::mutex> lk(mu_);
  if (!gb_) gb_ = std::move(computed);  // first writer wins
  return *gb_;
}

bool Ideal::contains(const Polynomial& f) const { return normalForm(f, *this).isZero(); }

bool Ideal::containsIdeal(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::isUnit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].leadingMonomial().isOne();
}

bool Ideal::isZeroIdeal() const { return basis().empty(); }

bool Ideal::equals(const Ideal& other) const {
  if (!ring_->sameSignature(*other.ring_)) throw ValidationError("ideal ring mismatch");
  const auto& a = basis();
  const auto& b = other.basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Ideal Ideal::inRing(const PolyRingPtr& other) const {
  std::vector<Polynomial> gs;
  gs.reserve(gens_.size());
  for (const auto& g : gens_) gs.push_back(g.inRing(other));
  return Ideal(other, std::move(gs));
}

Polynomial reduceByList(const Polynomial& f, const std::vector<Polynomial>& gs) {
  if (f.isZero()) return f;
  const auto& ring = f.ring();
  const auto& F = ring->field;
  std::vector<Term> remainder;
  Polynomial work = f;
  const std::uint64_t degCap = globalBudget().maxDegree;
  while (!work.isZero()) {
    const Term& lt = work.leading();
    if (lt.mono.degree() > degCap) throw BudgetError("degree budget exceeded during reduction");
    bool reduced = false;
    for (const auto& g : gs) {
      if (g.isZero()) continue;
      if (g.leadingMonomial().divides(lt.mono)) {
        Monomial q = lt.mono.div(g.leadingMonomial());
        Fp c = F.mul(lt.coeff, F.inv(g.leadingCoeff()));
        work = work - g.mulTerm(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      work = work - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  // remainder was collected in descending order, already canonical
  return Polynomial::fromTerms(ring, std::move(remainder));
}

Polynomial normalForm(const Polynomial& f, const Ideal& I) {
  if (!f.ring()->sameSignature(*I.ring())) throw ValidationError("normalForm signature mismatch");
  return reduceByList(f, I.basis());
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  const auto& F = f.ring()->field;
  Monomial uf = lcm.div(f.leadingMonomial());
  Monomial ug = lcm.div(g.leadingMonomial());
  return f.mulTerm(uf, F.inv(f.leadingCoeff())) - g.mulTerm(ug, F.inv(g.leadingCoeff()));
}

// Gebauer-Moeller installation of a new element: prunes the pending pair set
// with the product and chain criteria before adding the new pairs.
void updatePairs(const std::vector<Polynomial>& basis, std::vector<Pair>& pairs, std::size_t t) {
  const Monomial& ht = basis[t].leadingMonomial();
  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cand;
  cand.reserve(t);
  for (std::size_t g = 0; g < t; ++g) {
    cand.push_back({g, Monomial::lcm(ht, basis[g].leadingMonomial()),
                    Monomial::coprime(ht, basis[g].leadingMonomial())});
  }
  std::vector<Cand> kept;
  std::vector<bool> dropped(cand.size(), false);
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (dropped[a]) continue;
    bool keep = cand[a].coprime;
    if (!keep) {
      bool dominated = false;
      for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
        if (b == a || dropped[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) dominated = true;
      }
      if (!dominated) {
        // among equal lcms keep a single representative (the first)
        for (std::size_t b = 0; b < a && !dominated; ++b)
          if (!dropped[b] && cand[b].lcm == cand[a].lcm) dominated = true;
      }
      keep = !dominated;
    }
    if (keep && !cand[a].coprime) kept.push_back(cand[a]);
    if (!keep) dropped[a] = true;
  }
  // chain criterion against the old pair set
  std::vector<Pair> surviving;
  surviving.reserve(pairs.size());
  for (auto& pr : pairs) {
    const Monomial& l1 = Monomial::lcm(basis[pr.i].leadingMonomial(), ht);
    const Monomial& l2 = Monomial::lcm(ht, basis[pr.j].leadingMonomial());
    if (!ht.divides(pr.lcm) || l1 == pr.lcm || l2 == pr.lcm) surviving.push_back(std::move(pr));
  }
  pairs = std::move(surviving);
  for (auto& c : kept) pairs.push_back({c.g, t, std::move(c.lcm)});
}

std::size_t selectPair(const std::vector<Pair>& pairs, const MonomialOrder& ord) {
  // normal strategy: smallest lcm in the active order, ties by indices
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
    if (c < 0 ||
        (c == 0 && (pairs[k].i < pairs[best].i ||
                    (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
      best = k;
  }
  return best;
}

std::vector<Polynomial> reduceBasis(const PolyRingPtr& ring, std::vector<Polynomial> G) {
  const auto& ord = ring->order;
  // minimalize: drop elements whose leading term another leading term divides
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadingMonomial(), b.leadingMonomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    bool covered = false;
    for (const auto& m : minimal)
      if (m.leadingMonomial().divides(g.leadingMonomial())) { covered = true; break; }
    if (!covered) minimal.push_back(std::move(g));
  }
  // inter-reduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduceByList(minimal[i], others);
      if (r != minimal[i]) { minimal[i] = std::move(r); changed = true; }
    }
  }
  for (auto& g : minimal) g = g.monic();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadingMonomial(), b.leadingMonomial());
  });
  return minimal;
}

}  // namespace

std::vector<Polynomial> buchberger(const PolyRingPtr& ring, std::vector<Polynomial> gens) {
  const Budget& budget = globalBudget();
  BudgetUsage& usage = globalUsage();
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  for (auto& g : gens) {
    if (g.isZero()) continue;
    Polynomial r = reduceByList(g, basis);
    if (r.isZero()) continue;
    basis.push_back(r.monic());
    updatePairs(basis, pairs, basis.size() - 1);
  }
  while (!pairs.empty()) {
    if (++usage.pairsProcessed > budget.maxPairs)
      throw BudgetError("pair budget exceeded in Buchberger loop");
    std::size_t k = selectPair(pairs, ring->order);
    Pair pr = std::move(pairs[k]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial s = sPolynomial(basis[pr.i], basis[pr.j], pr.lcm);
    Polynomial r = reduceByList(s, basis);
    if (r.isZero()) continue;
    std::uint64_t d = r.degree();
    if (d > usage.maxDegreeSeen) usage.maxDegreeSeen = d;
    if (d > budget.maxDegree) throw BudgetError("degree budget exceeded in Buchberger loop");
    basis.push_back(r.monic());
    updatePairs(basis, pairs, basis.size() - 1);
  }
  return reduceBasis(ring, std::move(basis));
}

Ideal idealSum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gs = I.generators();
  for (const auto& g : J.generators()) gs.push_back(g);
  return Ideal(I.ring(), std::move(gs));
}

Ideal idealProduct(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gs;
  gs.reserve(I.generators().size() * J.generators().size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gs.push_back(a * b);
  return Ideal(I.ring(), std::move(gs));
}

Ideal idealPower(const Ideal& I, std::uint32_t n) {
  if (n == 0) throw ValidationError("ideal power requires n >= 1");
  const auto& g = I.generators();
  std::vector<Polynomial> out;
  // all n-fold products, via multisets of generator indices
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Polynomial p = Polynomial::constant(I.ring(), 1);
    for (auto i : idx) p = p * g[i];
    out.push_back(std::move(p));
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == g.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
  }
  if (g.empty()) out.clear();
  return Ideal(I.ring(), std::move(out));
}

namespace {

// Extend the ring with a fresh elimination variable in front.
PolyRingPtr extendWithAux(const PolyRingPtr& ring, std::string* auxName) {
  std::string name = "@t";
  while (ring->indexOf(name) >= 0) name = "@" + name;
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(name);
  for (const auto& v : ring->vars) vars.push_back(v);
  *auxName = name;
  return std::make_shared<const PolyRing>(ring->field, std::move(vars), MonomialOrder::block(1));
}

Polynomial liftToAux(const Polynomial& f, const PolyRingPtr& ext) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e;
    e.reserve(t.mono.nvars() + 1);
    e.push_back(0);
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) e.push_back(t.mono[i]);
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(ext, std::move(ts));
}

Polynomial dropAux(const Polynomial& f, const PolyRingPtr& ring) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::fromTerms(ring, std::move(ts));
}

Polynomial divideExact(const Polynomial& f, const Polynomial& g) {
  // f is guaranteed to lie in (g); {g} is a Groebner basis of (g)
  const auto& ring = f.ring();
  const auto& F = ring->field;
  std::vector<Term> quotient;
  Polynomial work = f;
  while (!work.isZero()) {
    const Term& lt = work.leading();
    if (!g.leadingMonomial().divides(lt.mono))
      throw Error("internal: exact division left a remainder");
    Monomial q = lt.mono.div(g.leadingMonomial());
    Fp c = F.mul(lt.coeff, F.inv(g.leadingCoeff()));
    quotient.push_back({q, c});
    work = work - g.mulTerm(q, c);
  }
  return Polynomial::fromTerms(ring, std::move(quotient));
}

}  // namespace

Ideal idealIntersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->sameSignature(*J.ring())) throw ValidationError("intersect: ring mismatch");
  if (I.isZeroIdeal() || J.isZeroIdeal()) return Ideal(I.ring(), {});
  std::string aux;
  PolyRingPtr ext = extendWithAux(I.ring(), &aux);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial oneMinusT = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gs;
  for (const auto& f : I.generators()) gs.push_back(t * liftToAux(f, ext));
  for (const auto& h : J.generators()) gs.push_back(oneMinusT * liftToAux(h, ext));
  Ideal extIdeal(ext, std::move(gs));
  std::vector<Polynomial> kept;
  for (const auto& b : extIdeal.basis()) {
    bool hasAux = false;
    for (const auto& term : b.terms())
      if (term.mono[0]) { hasAux = true; break; }
    if (!hasAux) kept.push_back(dropAux(b, I.ring()));
  }
  return Ideal(I.ring(), std::move(kept));
}

Ideal idealQuotient(const Ideal& I, const Polynomial& g, bool saturate) {
  if (g.isZero()) throw ValidationError("colon by zero");
  Ideal current = I;
  for (;;) {
    Ideal meet = idealIntersect(current, Ideal(I.ring(), {g}));
    std::vector<Polynomial> qs;
    qs.reserve(meet.generators().size());
    for (const auto& w : meet.basis()) qs.push_back(divideExact(w, g));
    Ideal next(I.ring(), std::move(qs));
    if (!saturate) return next;
    if (next.equals(current)) return next;  // stabilization by Noetherianity
    current = std::move(next);
  }
}

Ideal eliminate(const Ideal& I, std::size_t k) {
  if (k == 0) return I;
  if (k >= I.ring()->nvars()) throw ValidationError("cannot eliminate every variable");
  PolyRingPtr blockRing = withOrder(I.ring(), MonomialOrder::block(k));
  Ideal blocked = I.inRing(blockRing);
  std::vector<Polynomial> kept;
  for (const auto& b : blocked.basis()) {
    bool involved = false;
    for (const auto& t : b.terms())
      for (std::size_t i = 0; i < k && !involved; ++i)
        if (t.mono[i]) involved = true;
    if (!involved) kept.push_back(b.inRing(I.ring()));
  }
  return Ideal(I.ring(), std::move(kept));
}

Ideal bracketPower(const Ideal& I, std::uint32_t e) {
  if (e == 0) throw ValidationError("bracket power requires e >= 1");
  std::vector<Polynomial> gs;
  gs.reserve(I.generators().size());
  for (const auto& g : I.generators()) gs.push_back(g.frobeniusPow(e));
  return Ideal(I.ring(), std::move(gs));
}

namespace {

// Cells are products of intervals cut at the generators' exponent values, so
// divisibility by each generator is constant on a cell. A cell contributes its
// volume when no generator divides it; an unbounded such cell means INFINITE.
struct StandardCounter {
  std::size_t nvars;
  std::vector<std::vector<std::uint32_t>> thresholds;  // per variable, sorted unique, starts at 0
  bool infinite = false;
  unsigned __int128 total = 0;

  void run(std::size_t var, const std::vector<const Monomial*>& gens,
           unsigned __int128 width, bool widthUnbounded) {
    if (infinite) return;
    if (var == nvars) {
      if (gens.empty()) {
        if (widthUnbounded) infinite = true;
        else total += width;
      }
      return;
    }
    const auto& th = thresholds[var];
    for (std::size_t j = 0; j < th.size(); ++j) {
      std::uint32_t lo = th[j];
      bool unbounded = (j + 1 == th.size());
      std::vector<const Monomial*> sub;
      sub.reserve(gens.size());
      for (auto* g : gens)
        if ((*g)[var] <= lo) sub.push_back(g);
      if (unbounded) {
        run(var + 1, sub, width, true);
      } else {
        run(var + 1, sub, width * (th[j + 1] - lo), widthUnbounded);
      }
      if (infinite) return;
    }
  }
};

}  // namespace

Length countStandardMonomials(const std::vector<Monomial>& lts, std::size_t nvars) {
  for (const auto& m : lts)
    if (m.isOne()) return Length::of(0);
  if (nvars == 0) return Length::of(1);
  // A finite count needs a pure power of each variable among the lts.
  for (std::size_t i = 0; i < nvars; ++i) {
    bool pure = false;
    for (const auto& m : lts) {
      bool onlyI = m[i] > 0;
      for (std::size_t j = 0; j < nvars && onlyI; ++j)
        if (j != i && m[j] > 0) onlyI = false;
      if (onlyI) { pure = true; break; }
    }
    if (!pure) return Length::infinite();
  }
  StandardCounter sc;
  sc.nvars = nvars;
  sc.thresholds.resize(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<std::uint32_t> th{0};
    for (const auto& m : lts) th.push_back(m[i]);
    std::sort(th.begin(), th.end());
    th.erase(std::unique(th.begin(), th.end()), th.end());
    sc.thresholds[i] = std::move(th);
  }
  std::vector<const Monomial*> gens;
  gens.reserve(lts.size());
  for (const auto& m : lts) gens.push_back(&m);
  sc.run(0, gens, 1, false);
  if (sc.infinite) return Length::infinite();
  if (sc.total > 0x7fffffffffffffffull) throw OverflowError("standard monomial count overflow");
  return Length::of(static_cast<std::uint64_t>(sc.total));
}

namespace {

std::vector<Monomial> leadingMonomials(const Ideal& I) {
  std::vector<Monomial> lts;
  lts.reserve(I.basis().size());
  for (const auto& g : I.basis()) lts.push_back(g.leadingMonomial());
  return lts;
}

void enumerateStandard(const std::vector<Monomial>& lts, std::size_t nvars,
                       const std::vector<std::uint32_t>& bounds, std::size_t var,
                       std::vector<std::uint32_t>& current,
                       std::vector<const Monomial*> active, std::vector<Monomial>& out) {
  if (var == nvars) {
    if (active.empty()) out.emplace_back(current);
    return;
  }
  for (std::uint32_t a = 0; a < bounds[var]; ++a) {
    current[var] = a;
    std::vector<const Monomial*> sub;
    bool full = false;
    for (auto* g : active) {
      if ((*g)[var] <= a) {
        bool allLow = true;
        for (std::size_t j = var + 1; j < nvars && allLow; ++j)
          if ((*g)[j] > 0) allLow = false;
        if (allLow) { full = true; break; }  // g already divides every completion
        sub.push_back(g);
      }
    }
    if (!full) enumerateStandard(lts, nvars, bounds, var + 1, current, std::move(sub), out);
  }
  current[var] = 0;
}

}  // namespace

Length vsLength(const Ideal& I) {
  return countStandardMonomials(leadingMonomials(I), I.ring()->nvars());
}

std::vector<Monomial> standardMonomials(const Ideal& I) {
  auto lts = leadingMonomials(I);
  std::size_t nvars = I.ring()->nvars();
  Length len = countStandardMonomials(lts, nvars);
  if (!len.isFinite()) throw ValidationError("standard monomial basis is infinite");
  std::vector<std::uint32_t> bounds(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    std::uint32_t b = 0;
    bool found = false;
    for (const auto& m : lts) {
      bool onlyI = m[i] > 0;
      for (std::size_t j = 0; j < nvars && onlyI; ++j)
        if (j != i && m[j] > 0) onlyI = false;
      if (onlyI && (!found || m[i] < b)) { b = m[i]; found = true; }
    }
    bounds[i] = b;
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(len.value()));
  std::vector<std::uint32_t> current(nvars, 0);
  std::vector<const Monomial*> active;
  active.reserve(lts.size());
  for (const auto& m : lts) active.push_back(&m);
  enumerateStandard(lts, nvars, bounds, 0, current, std::move(active), out);
  const auto& ord = I.ring()->order;
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

std::size_t krullDimension(const Ideal& I) {
  if (I.isUnit()) throw ValidationError("Krull dimension of the unit ideal");
  auto lts = leadingMonomials(I);
  std::size_t n = I.ring()->nvars();
  if (n > 24) throw ValidationError("too many variables for dimension enumeration");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lts) {
      bool supported = true;
      for (std::size_t i = 0; i < n && supported; ++i)
        if (m[i] > 0 && !(mask & (1u << i))) supported = false;
      if (supported) { independent = false; break; }
    }
    if (independent) best = size;
  }
  return best;
}

namespace {

void countDegree(const std::vector<Monomial>& lts, std::size_t nvars, std::uint32_t remaining,
                 std::size_t var, std::vector<std::uint32_t>& current, std::uint64_t& total) {
  if (var + 1 == nvars) {
    current[var] = remaining;
    bool divisible = false;
    for (const auto& m : lts) {
      bool d = true;
      for (std::size_t i = 0; i < nvars && d; ++i)
        if (m[i] > current[i]) d = false;
      if (d) { divisible = true; break; }
    }
    if (!divisible) ++total;
    current[var] = 0;
    return;
  }
  for (std::uint32_t a = 0; a <= remaining; ++a) {
    current[var] = a;
    countDegree(lts, nvars, remaining - a, var + 1, current, total);
  }
  current[var] = 0;
}

}  // namespace

std::uint64_t gradedHilbertFunction(const Ideal& I, std::uint32_t n) {
  for (const auto& g : I.generators())
    if (!g.isHomogeneous()) throw ValidationError("graded Hilbert function needs homogeneous generators");
  auto lts = leadingMonomials(I);
  std::size_t nvars = I.ring()->nvars();
  if (nvars == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  std::vector<std::uint32_t> current(nvars, 0);
  countDegree(lts, nvars, n, 0, current, total);
  return total;
}

}  // namespace thilb
