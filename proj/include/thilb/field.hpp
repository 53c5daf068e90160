#ifndef THILB_FIELD_HPP
#define THILB_FIELD_HPP

#include <cstdint>

#include "thilb/error.hpp"

namespace thilb {

/// Element of F_p, stored as a value in [0, p).
using Fp = std::uint64_t;

/// The prime field F_p for 2 <= p < 2^31. Products of two reduced elements
/// fit in 64 bits, so plain % reduction is exact.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p > 0x7fffffffull) throw ValidationError("characteristic out of range");
    if (!isPrime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  }

  std::uint64_t p() const { return p_; }

  Fp reduce(std::uint64_t n) const { return n % p_; }
  /// Reduce a possibly negative machine integer.
  Fp reduceSigned(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return r < 0 ? static_cast<Fp>(r + static_cast<std::int64_t>(p_)) : static_cast<Fp>(r);
  }

  Fp add(Fp a, Fp b) const { Fp s = a + b; return s >= p_ ? s - p_ : s; }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const { return (a * b) % p_; }

  Fp pow(Fp a, std::uint64_t e) const {
    Fp r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Fp inv(Fp a) const {
    if (a == 0) throw ValidationError("division by zero in F_p");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

}  // namespace thilb

#endif
