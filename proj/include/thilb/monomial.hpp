#ifndef THILB_MONOMIAL_HPP
#define THILB_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "thilb/error.hpp"

namespace thilb {

/// Exponent vector; the entry count always equals the ambient variable count.
/// Exponents are 32-bit; any operation that could overflow them throws.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool isOne() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial mul(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = std::uint64_t(r.e_[i]) + m.e_[i];
      if (s > 0xffffffffull) throw OverflowError("monomial exponent overflow");
      r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  /// Componentwise difference; caller guarantees m | *this.
  Monomial div(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    return r;
  }

  Monomial pow(std::uint64_t k) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = std::uint64_t(r.e_[i]) * k;
      if (s > 0xffffffffull) throw OverflowError("monomial exponent overflow");
      r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

/// Term orders. block(k) compares the first k variables grevlex-first
/// (so the order eliminates them), then the rest grevlex.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  MonomialOrder() : kind_(Kind::GrevLex), block_(0) {}
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const { return kind_; }
  std::size_t blockSize() const { return block_; }

  /// Three-way compare: negative when a < b, 0 when equal, positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex: return lexCmp(a, b, 0, a.nvars());
      case Kind::GrevLex: return grevlexCmp(a, b, 0, a.nvars());
      case Kind::Block: {
        int c = grevlexCmp(a, b, 0, block_);
        if (c) return c;
        return grevlexCmp(a, b, block_, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  static int lexCmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int grevlexCmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // smaller last exponent wins
    }
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace thilb

#endif
