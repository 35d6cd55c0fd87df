#include "poly.hpp"

#include <algorithm>

namespace fjump {

Poly Poly::constant(RingPtr ring, FqElem c) {
  Poly f(std::move(ring));
  if (c != 0) f.terms_.push_back({Monomial(f.ring_->nvars(), 0), c});
  return f;
}

Poly Poly::variable(RingPtr ring, size_t index) {
  Poly f(std::move(ring));
  Monomial m(f.ring_->nvars(), 0);
  m.at(index) = 1;
  f.terms_.push_back({std::move(m), f.ring_->field.one()});
  return f;
}

Poly Poly::term(RingPtr ring, Monomial m, FqElem c) {
  Poly f(std::move(ring));
  if (m.size() != f.ring_->nvars()) fail_internal("monomial width mismatch");
  if (c != 0) f.terms_.push_back({std::move(m), c});
  return f;
}

Poly Poly::from_map(RingPtr ring, const TermMap& m) {
  Poly f(std::move(ring));
  f.terms_.reserve(m.size());
  for (const auto& [mon, c] : m)
    if (c != 0) f.terms_.push_back({mon, c});
  return f;
}

TermMap Poly::to_map() const {
  TermMap m(MonDescLess{ring_.get()});
  for (const auto& t : terms_) m.emplace(t.mon, t.c);
  return m;
}

const Term& Poly::lt() const {
  if (terms_.empty()) fail_internal("leading term of the zero polynomial");
  return terms_[0];
}

uint64_t Poly::degree() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, mon_deg(t.mon));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  uint64_t d = mon_deg(terms_[0].mon);
  for (const auto& t : terms_)
    if (mon_deg(t.mon) != d) return false;
  return true;
}

bool Poly::constant_term_is_zero() const {
  for (const auto& t : terms_)
    if (mon_is_one(t.mon)) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& F = ring_->field;
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->order.cmp(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FqElem s = F.add(terms_[i].c, o.terms_[j].c);
      if (s != 0) r.terms_.push_back({terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::negate() const {
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negate(); }

Poly Poly::mul_term(const Monomial& m, FqElem c) const {
  if (c == 0) return Poly(ring_);
  const Field& F = ring_->field;
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    FqElem prod = F.mul(t.c, c);
    if (prod != 0) r.terms_.push_back({mon_mul(t.mon, m), prod});
  }
  return r;  // monomial orders are translation invariant, so sortedness is preserved
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  const Field& F = ring_->field;
  const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mon, a.terms_[0].c);
  TermMap acc(MonDescLess{ring_.get()});
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Monomial m = mon_mul(ta.mon, tb.mon);
      FqElem prod = F.mul(ta.c, tb.c);
      auto [it, inserted] = acc.emplace(std::move(m), prod);
      if (!inserted) {
        it->second = F.add(it->second, prod);
        if (it->second == 0) acc.erase(it);
      }
    }
  return from_map(ring_, acc);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  FqElem lc = terms_[0].c;
  if (lc == ring_->field.one()) return *this;
  FqElem s = ring_->field.inv(lc);
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_->field.mul(t.c, s);
  return r;
}

Poly Poly::frobenius(uint64_t q) const {
  uint64_t e = power_of_p_exponent(q, ring_->field.p());
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({mon_pow(t.mon, q), ring_->field.frobenius_power(t.c, e)});
  return r;  // m -> m^q preserves the order; coefficients stay nonzero
}

namespace {

Poly pow_binary(const Poly& f, uint64_t n) {
  Poly r = Poly::constant(f.ring(), f.ring()->field.one());
  Poly base = f;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

}  // namespace

Poly Poly::pow(uint64_t n) const {
  Poly one = constant(ring_, ring_->field.one());
  if (n == 0) return one;
  if (is_zero()) return Poly(ring_);
  uint64_t p = ring_->field.p();
  std::vector<uint64_t> digits;  // base-p, least significant first
  for (uint64_t m = n; m; m /= p) digits.push_back(m % p);
  Poly r = one;
  for (size_t i = digits.size(); i-- > 0;) {
    r = r.frobenius(p);
    if (digits[i]) r = r * pow_binary(*this, digits[i]);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const Field& F = ring_->field;
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mon;
    for (size_t i = 0; i < t.mon.size(); ++i) {
      if (t.mon[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += ring_->vars[i];
      if (t.mon[i] > 1) mon += "^" + std::to_string(t.mon[i]);
    }
    if (mon.empty()) {
      out += F.coeff_to_string(t.c);
    } else if (t.c == F.one()) {
      out += mon;
    } else if (F.coeff_needs_parens(t.c)) {
      out += "(" + F.coeff_to_string(t.c) + ")*" + mon;
    } else {
      out += F.coeff_to_string(t.c) + "*" + mon;
    }
  }
  return out;
}

uint64_t power_of_p_exponent(uint64_t q, uint64_t p) {
  uint64_t e = 0, v = 1;
  while (v < q) {
    if (v > q / p) fail_pre(std::to_string(q) + " is not a power of p = " + std::to_string(p));
    v *= p;
    ++e;
  }
  if (v != q) fail_pre(std::to_string(q) + " is not a power of p = " + std::to_string(p));
  return e;
}

}  // namespace fjump
