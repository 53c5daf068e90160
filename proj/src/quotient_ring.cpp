#include "thilb/quotient_ring.hpp"

namespace thilb {

std::shared_ptr<const PresentedRing> PresentedRing::make(std::uint64_t p,
                                                         std::vector<std::string> vars,
                                                         std::vector<std::string> definingText) {
  PolyRingPtr ring = makeRing(p, std::move(vars));
  std::vector<Polynomial> defs;
  defs.reserve(definingText.size());
  for (const auto& s : definingText) defs.push_back(parsePoly(s, ring));
  return make(ring, std::move(defs));
}

std::shared_ptr<const PresentedRing> PresentedRing::make(PolyRingPtr ring,
                                                         std::vector<Polynomial> defining) {
  Ideal J(ring, std::move(defining));
  if (J.isUnit()) throw ValidationError("defining ideal is the unit ideal");
  std::size_t d = krullDimension(J);
  return std::shared_ptr<const PresentedRing>(new PresentedRing(std::move(ring), std::move(J), d));
}

IdealInR::IdealInR(PresentedRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), own_(std::move(gens)) {
  std::vector<Polynomial> lift = own_;
  for (const auto& j : ring_->defining().generators()) lift.push_back(j);
  lifted_ = Ideal(ring_->polyRing(), std::move(lift));
}

Length lengthInR(const IdealInR& A) { return vsLength(A.lifted()); }

bool originSupported(const IdealInR& A) {
  Length len = vsLength(A.lifted());
  if (!len.isFinite()) return false;
  // x nilpotent on an L-dimensional algebra forces x^L = 0, so one normal
  // form per variable decides nilpotency
  std::uint64_t L = len.value();
  const auto& ring = A.ring()->polyRing();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Monomial m(ring->nvars());
    if (L > 0xffffffffull) throw OverflowError("nilpotency exponent overflow");
    m[i] = static_cast<std::uint32_t>(L);
    if (!A.lifted().contains(Polynomial::monomial(ring, m))) return false;
  }
  return true;
}

bool isSop(const std::vector<Polynomial>& gens, const PresentedRingPtr& R) {
  if (gens.size() != R->dim()) return false;
  IdealInR Q(R, gens);
  if (Q.lifted().isUnit()) return false;
  if (krullDimension(Q.lifted()) != 0) return false;
  return originSupported(Q);
}

ParameterIdeal makeParameterIdeal(const PresentedRingPtr& R, std::vector<Polynomial> gens) {
  if (!isSop(gens, R))
    throw ValidationError("generators are not a system of parameters at the origin");
  IdealInR ideal(R, gens);
  return ParameterIdeal{R, std::move(gens), std::move(ideal)};
}

IdealInR idealPowerInR(const IdealInR& Q, std::uint32_t n) {
  if (n == 0) throw ValidationError("ideal power requires n >= 1");
  const auto& g = Q.ownGenerators();
  std::vector<Polynomial> out;
  if (!g.empty()) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      Polynomial p = Polynomial::constant(Q.ring()->polyRing(), 1);
      for (auto i : idx) p = p * g[i];
      out.push_back(std::move(p));
      std::size_t k = n;
      while (k > 0 && idx[k - 1] == g.size() - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
    }
  }
  return IdealInR(Q.ring(), std::move(out));
}

IdealInR idealSumInR(const IdealInR& A, const IdealInR& B) {
  std::vector<Polynomial> gens = A.ownGenerators();
  for (const auto& g : B.ownGenerators()) gens.push_back(g);
  return IdealInR(A.ring(), std::move(gens));
}

IdealInR idealProductInR(const IdealInR& A, const IdealInR& B) {
  // (A + J)(B + J) + J = AB + J in P, so products of own generators suffice
  std::vector<Polynomial> gens;
  gens.reserve(A.ownGenerators().size() * B.ownGenerators().size());
  for (const auto& a : A.ownGenerators())
    for (const auto& b : B.ownGenerators()) gens.push_back(a * b);
  return IdealInR(A.ring(), std::move(gens));
}

IdealInR idealQuotientInR(const IdealInR& A, const Polynomial& g, bool saturate) {
  Ideal lifted = idealQuotient(A.lifted(), g, saturate);
  return IdealInR(A.ring(), lifted.generators());
}

bool isSuperficial(const Polynomial& x, const IdealInR& I, std::uint32_t c, std::uint32_t nMax) {
  if (!I.contains(x)) throw ValidationError("superficial candidate must lie in the ideal");
  if (c < 1 || nMax < c) throw ValidationError("superficial check needs 1 <= c <= nMax");
  IdealInR Ic = idealPowerInR(I, c);
  for (std::uint32_t n = c; n <= nMax; ++n) {
    IdealInR In = idealPowerInR(I, n);
    IdealInR In1 = idealPowerInR(I, n + 1);
    Ideal colon = idealQuotient(In1.lifted(), x);
    Ideal lhs = idealIntersect(colon, Ic.lifted());
    if (!lhs.equals(In.lifted())) return false;
  }
  return true;
}

}  // namespace thilb
