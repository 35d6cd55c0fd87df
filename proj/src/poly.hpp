#pragma once

#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace fjump {

struct Term {
  Monomial mon;
  FqElem c;
  bool operator==(const Term& o) const { return mon == o.mon && c == o.c; }
};

// Descending comparator under a ring's monomial order; map.begin() is the leading term.
struct MonDescLess {
  const Ring* ring = nullptr;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->order.cmp(a, b) > 0; }
};

using TermMap = std::map<Monomial, FqElem, MonDescLess>;

// Sparse multivariate polynomial. Terms are kept strictly descending in the
// ring's monomial order with no zero coefficients; values are immutable.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, FqElem c);
  static Poly variable(RingPtr ring, size_t index);
  static Poly term(RingPtr ring, Monomial m, FqElem c);
  static Poly from_map(RingPtr ring, const TermMap& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || mon_is_one(terms_[0].mon); }
  bool is_unit_constant() const { return terms_.size() == 1 && mon_is_one(terms_[0].mon); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lt() const;
  uint64_t degree() const;  // total degree; 0 for the zero polynomial
  bool is_homogeneous() const;
  bool constant_term_is_zero() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negate() const;
  Poly mul_term(const Monomial& m, FqElem c) const;
  Poly monic() const;

  // f^n, Frobenius-aware: n is split into base-p digits and the p-th power
  // steps are taken term-wise.
  Poly pow(uint64_t n) const;
  // f^q for q = p^e, term-wise.
  Poly frobenius(uint64_t q) const;

  bool equals(const Poly& o) const { return terms_ == o.terms_; }
  std::string str() const;

  TermMap to_map() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// e with p^e = q; fails unless q is a power of p (e = 0 allowed).
uint64_t power_of_p_exponent(uint64_t q, uint64_t p);

}  // namespace fjump
