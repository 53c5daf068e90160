#ifndef THILB_QUOTIENT_RING_HPP
#define THILB_QUOTIENT_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "thilb/groebner.hpp"

namespace thilb {

/// R = P/J, studied at the origin. Every computation lifts to P and carries
/// J along; lengths are affine vector-space dimensions and are trusted as
/// local lengths only where originSupported holds.
class PresentedRing {
 public:
  static std::shared_ptr<const PresentedRing> make(std::uint64_t p,
                                                   std::vector<std::string> vars,
                                                   std::vector<std::string> definingText);
  static std::shared_ptr<const PresentedRing> make(PolyRingPtr ring,
                                                   std::vector<Polynomial> defining);

  const PolyRingPtr& polyRing() const { return ring_; }
  const Ideal& defining() const { return defining_; }
  std::size_t dim() const { return dim_; }
  Polynomial parse(const std::string& text) const { return parsePoly(text, ring_); }

 private:
  PresentedRing(PolyRingPtr ring, Ideal defining, std::size_t dim)
      : ring_(std::move(ring)), defining_(std::move(defining)), dim_(dim) {}
  PolyRingPtr ring_;
  Ideal defining_;
  std::size_t dim_;
};

using PresentedRingPtr = std::shared_ptr<const PresentedRing>;

/// Ideal of R, stored as its full preimage in P (the lift always contains J).
class IdealInR {
 public:
  IdealInR() = default;
  IdealInR(PresentedRingPtr ring, std::vector<Polynomial> gens);

  const PresentedRingPtr& ring() const { return ring_; }
  /// Lifted ideal in P, including the defining generators.
  const Ideal& lifted() const { return lifted_; }
  /// The generators this ideal was built from (defining generators excluded).
  const std::vector<Polynomial>& ownGenerators() const { return own_; }

  bool contains(const Polynomial& f) const { return lifted_.contains(f); }
  bool containsIdeal(const IdealInR& other) const { return lifted_.containsIdeal(other.lifted_); }
  bool equals(const IdealInR& other) const { return lifted_.equals(other.lifted_); }

 private:
  PresentedRingPtr ring_;
  std::vector<Polynomial> own_;
  Ideal lifted_;
};

/// Ordered system of parameters x_1..x_d together with the ideal it generates.
struct ParameterIdeal {
  PresentedRingPtr ring;
  std::vector<Polynomial> gens;
  IdealInR ideal;
};

/// l_Fp(R/A) as an affine dimension; INFINITE when A is not zero-dimensional.
Length lengthInR(const IdealInR& A);

/// True when Spec(P/lift(A)) is supported only at the origin: finite length
/// and every variable nilpotent modulo the lift. Exactly then the affine
/// length equals the local length at the maximal ideal.
bool originSupported(const IdealInR& A);

/// Validates that gens form a system of parameters and builds the ideal.
bool isSop(const std::vector<Polynomial>& gens, const PresentedRingPtr& R);
ParameterIdeal makeParameterIdeal(const PresentedRingPtr& R, std::vector<Polynomial> gens);

/// Q^n in R: all n-fold products of Q's own generators, plus J.
IdealInR idealPowerInR(const IdealInR& Q, std::uint32_t n);

IdealInR idealSumInR(const IdealInR& A, const IdealInR& B);
IdealInR idealProductInR(const IdealInR& A, const IdealInR& B);
IdealInR idealQuotientInR(const IdealInR& A, const Polynomial& g, bool saturate = false);

/// Bounded verification of (I^{n+1} : x) cap I^c = I^n for c <= n <= nMax.
/// A true answer certifies only the checked window.
bool isSuperficial(const Polynomial& x, const IdealInR& I, std::uint32_t c, std::uint32_t nMax);

}  // namespace thilb

#endif
