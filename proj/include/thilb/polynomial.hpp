#ifndef THILB_POLYNOMIAL_HPP
#define THILB_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "thilb/field.hpp"
#include "thilb/monomial.hpp"

namespace thilb {

/// Ambient signature shared by polynomials: coefficient field, named
/// variables, and the order terms are kept sorted under.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  PolyRing(PrimeField f, std::vector<std::string> v, MonomialOrder o = MonomialOrder::grevlex())
      : field(f), vars(std::move(v)), order(o) {}

  std::size_t nvars() const { return vars.size(); }
  bool sameSignature(const PolyRing& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
  int indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr makeRing(std::uint64_t p, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::grevlex());

/// Same field and variables, different active order.
PolyRingPtr withOrder(const PolyRingPtr& ring, MonomialOrder order);

struct Term {
  Monomial mono;
  Fp coeff;
};

/// Immutable sparse polynomial in canonical form: terms strictly descending
/// in the ring order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(PolyRingPtr ring);
  static Polynomial constant(PolyRingPtr ring, std::uint64_t c);
  static Polynomial variable(PolyRingPtr ring, std::size_t i);
  static Polynomial monomial(PolyRingPtr ring, Monomial m, Fp c = 1);
  /// Canonicalizes: sorts, merges, strips zeros.
  static Polynomial fromTerms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const;
  const Monomial& leadingMonomial() const { return leading().mono; }
  Fp leadingCoeff() const { return leading().coeff; }
  std::uint64_t degree() const;  // max total degree over terms; 0 for the zero polynomial
  bool isHomogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  Polynomial scaled(Fp c) const;
  Polynomial mulTerm(const Monomial& m, Fp c) const;
  /// Leading coefficient normalized to 1.
  Polynomial monic() const;
  Polynomial pow(std::uint64_t n) const;

  /// f^(p^e) via termwise exponent scaling; equals repeated multiplication
  /// because Frobenius is additive and c^(p^e) = c on F_p.
  Polynomial frobeniusPow(std::uint32_t e) const;

  /// Transplant into a ring with the same field and variables (re-sorts).
  Polynomial inRing(const PolyRingPtr& other) const;

  /// Substitute images[i] for variable i (images live in an arbitrary ring).
  Polynomial substitute(const PolyRingPtr& target, const std::vector<Polynomial>& images) const;

  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*;  term := factor ('*' factor)*;
/// factor := base ['^' natural];  base := natural | variable | '(' expr ')'.
/// Implicit multiplication is rejected; '^' requires a literal exponent.
Polynomial parsePoly(const std::string& text, const PolyRingPtr& ring);

}  // namespace thilb

#endif
