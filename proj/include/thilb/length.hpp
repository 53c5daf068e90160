#ifndef THILB_LENGTH_HPP
#define THILB_LENGTH_HPP

#include <cstdint>
#include <string>

#include "thilb/error.hpp"

namespace thilb {

/// A vector-space dimension that may be infinite. INFINITE is a value,
/// not an error: callers branch on it.
class Length {
 public:
  static Length infinite() { return Length(false, 0); }
  static Length of(std::uint64_t v) { return Length(true, v); }

  bool isFinite() const { return finite_; }
  std::uint64_t value() const {
    if (!finite_) throw ValidationError("length is infinite");
    return value_;
  }

  bool operator==(const Length& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator!=(const Length& o) const { return !(*this == o); }

  std::string str() const { return finite_ ? std::to_string(value_) : "INFINITE"; }

 private:
  Length(bool f, std::uint64_t v) : finite_(f), value_(v) {}
  bool finite_;
  std::uint64_t value_;
};

}  // namespace thilb

#endif
