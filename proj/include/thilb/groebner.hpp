#ifndef THILB_GROEBNER_HPP
#define THILB_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "thilb/length.hpp"
#include "thilb/polynomial.hpp"

namespace thilb {

/// Resource caps for basis computations. Exceeding either is a BudgetError,
/// never silent truncation.
struct Budget {
  std::uint64_t maxPairs = 500000;
  std::uint64_t maxDegree = 100000;
};

/// Process-wide budget; the CLI seeds it from THILB_BUDGET.
Budget& globalBudget();

/// Counters actually consumed; reported for reproducibility.
struct BudgetUsage {
  std::uint64_t pairsProcessed = 0;
  std::uint64_t maxDegreeSeen = 0;
  void absorb(const BudgetUsage& o) {
    pairsProcessed += o.pairsProcessed;
    if (o.maxDegreeSeen > maxDegreeSeen) maxDegreeSeen = o.maxDegreeSeen;
  }
};
BudgetUsage& globalUsage();

/// Ideal of a polynomial ring with a lazily computed, cached reduced
/// Groebner basis. The cache is single-assignment: concurrent readers may
/// race to fill it; the result is identical by uniqueness of reduced bases.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr ring, std::vector<Polynomial> gens);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced Groebner basis, sorted by ascending leading monomial.
  const std::vector<Polynomial>& basis() const;

  bool contains(const Polynomial& f) const;
  bool containsIdeal(const Ideal& other) const;
  bool isUnit() const;
  bool isZeroIdeal() const;
  /// Equality of ideals (same ring and order), via reduced bases.
  bool equals(const Ideal& other) const;

  Ideal inRing(const PolyRingPtr& other) const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<Polynomial>> gb_;

 public:
  Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    gb_ = o.gb_;
  }
  Ideal& operator=(const Ideal& o) {
    if (this != &o) {
      ring_ = o.ring_;
      gens_ = o.gens_;
      std::lock_guard<std::mutex> lk(o.mu_);
      gb_ = o.gb_;
    }
    return *this;
  }
};

/// Full normal form: no remainder term is divisible by a basis leading term.
Polynomial normalForm(const Polynomial& f, const Ideal& I);
/// Division-only reduction against an explicit polynomial list (no basis
/// completion); used internally and by oracles.
Polynomial reduceByList(const Polynomial& f, const std::vector<Polynomial>& gs);

/// Buchberger with Gebauer-Moeller pair elimination; returns the reduced basis.
std::vector<Polynomial> buchberger(const PolyRingPtr& ring, std::vector<Polynomial> gens);

Ideal idealSum(const Ideal& I, const Ideal& J);
Ideal idealProduct(const Ideal& I, const Ideal& J);
Ideal idealPower(const Ideal& I, std::uint32_t n);
/// (I : g); with saturate set, (I : g^infty) by iterating until the basis stabilizes.
Ideal idealQuotient(const Ideal& I, const Polynomial& g, bool saturate = false);
/// I cap J via eliminating t from t*I + (1-t)*J.
Ideal idealIntersect(const Ideal& I, const Ideal& J);
/// Generators of I cap k[x_{k+1},...], returned in the ambient ring.
Ideal eliminate(const Ideal& I, std::size_t k);
/// Ideal generated by g^(p^e) over the generators of I.
Ideal bracketPower(const Ideal& I, std::uint32_t e);

/// dim_Fp P/I: the number of monomials outside the leading-term ideal.
Length vsLength(const Ideal& I);
/// Those standard monomials, ascending in the ring order. Throws if infinite.
std::vector<Monomial> standardMonomials(const Ideal& I);
/// Krull dimension of P/I as the largest variable subset independent modulo
/// the leading-term ideal. Errors on the unit ideal.
std::size_t krullDimension(const Ideal& I);
/// dim_Fp (P/I)_n for homogeneous I.
std::uint64_t gradedHilbertFunction(const Ideal& I, std::uint32_t n);

/// Count of monomials in no (m + N^v) for m among lts; INFINITE when the
/// staircase is unbounded. Shared by vsLength and the lattice engines.
Length countStandardMonomials(const std::vector<Monomial>& lts, std::size_t nvars);

}  // namespace thilb

#endif
