#include "thilb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thilb {

PolyRingPtr makeRing(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars), order);
}

PolyRingPtr withOrder(const PolyRingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return std::make_shared<const PolyRing>(ring->field, ring->vars, order);
}

Polynomial Polynomial::zero(PolyRingPtr ring) {
  Polynomial f;
  f.ring_ = std::move(ring);
  return f;
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::uint64_t c) {
  Fp r = ring->field.reduce(c);
  Polynomial f;
  f.ring_ = std::move(ring);
  if (r != 0) f.terms_.push_back({Monomial(f.ring_->nvars()), r});
  return f;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t i) {
  Monomial m(ring->nvars());
  m[i] = 1;
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial m, Fp c) {
  Polynomial f;
  f.ring_ = std::move(ring);
  Fp r = f.ring_->field.reduce(c);
  if (r != 0) f.terms_.push_back({std::move(m), r});
  return f;
}

Polynomial Polynomial::fromTerms(PolyRingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Fp c = ring->field.reduce(t.coeff);
    if (c == 0) continue;
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring->field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else {
      out.push_back({std::move(t.mono), c});
    }
  }
  Polynomial f;
  f.ring_ = std::move(ring);
  f.terms_ = std::move(out);
  return f;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

static void requireSameRing(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring() || !f.ring()->sameSignature(*g.ring()))
    throw ValidationError("polynomial signature mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  requireSameRing(*this, g);
  const auto& F = ring_->field;
  const auto& ord = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = ord.compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Fp s = F.add(terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i; ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  requireSameRing(*this, g);
  const auto& F = ring_->field;
  const auto& ord = ring_->order;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
  std::map<Monomial, Fp, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.mono.mul(b.mono);
      Fp c = F.mul(a.coeff, b.coeff);
      auto it = acc.find(m);
      if (it == acc.end()) {
        if (c != 0) acc.emplace(std::move(m), c);
      } else {
        it->second = F.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, c});
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!ring_ || !g.ring_) return terms_.empty() && g.terms_.empty();
  if (!ring_->sameSignature(*g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff || terms_[i].mono != g.terms_[i].mono) return false;
  return true;
}

Polynomial Polynomial::scaled(Fp c) const {
  c = ring_->field.reduce(c);
  if (c == 0) return zero(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mulTerm(const Monomial& m, Fp c) const {
  c = ring_->field.reduce(c);
  if (c == 0) return zero(ring_);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono.mul(m), ring_->field.mul(t.coeff, c)});
  return r;  // multiplying by a fixed monomial preserves the term order
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field.inv(leadingCoeff()));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

Polynomial Polynomial::frobeniusPow(std::uint32_t e) const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= ring_->field.p();
    if (q > 0xffffffffull) throw OverflowError("Frobenius exponent overflow");
  }
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.pow(q), t.coeff});
  // exponents scale uniformly, so relative order of terms is preserved
  return r;
}

Polynomial Polynomial::inRing(const PolyRingPtr& other) const {
  if (ring_->field != other->field || ring_->vars != other->vars)
    throw ValidationError("inRing: rings differ beyond the order");
  if (ring_->order == other->order) {
    Polynomial r(*this);
    r.ring_ = other;
    return r;
  }
  return fromTerms(other, terms_);
}

Polynomial Polynomial::substitute(const PolyRingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars())
    throw ValidationError("substitute: need one image per variable");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial p = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i]) p = p * images[i].pow(t.mono[i]);
    }
    acc = acc + p;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = t.mono.isOne();
    bool needCoeff = constant || t.coeff != 1;
    if (needCoeff) os << t.coeff;
    bool needStar = needCoeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (needStar) os << "*";
      os << ring_->vars[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      needStar = true;
    }
  }
  return os.str();
}

}  // namespace thilb
