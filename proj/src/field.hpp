#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace fjump {

// Element of F_{p^k}, packed in base p: value = sum d_i * p^i with digits d_i in [0, p).
// Digits are the coefficients of the residue polynomial in the extension generator t.
// For k = 1 the value is simply the canonical residue in [0, p).
using FqElem = uint64_t;

// F_{p^k} with a user-supplied monic irreducible modulus for k > 1.
// All elements are kept fully reduced; there is no lazy reduction.
class Field {
 public:
  static Field prime_field(uint64_t p);
  // modulus: coefficients m_0..m_k of a monic degree-k polynomial in t over F_p.
  static Field extension(uint64_t p, uint32_t k, std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }
  FqElem gen() const;  // t, defined for k > 1
  FqElem from_int(long long v) const;
  FqElem from_decimal(const std::string& digits) const;  // arbitrary-length decimal mod p

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, uint64_t n) const;

  // d with d^p = c (unique since the field is perfect).
  FqElem pth_root(FqElem c) const;
  // d with d^{p^e} = c.
  FqElem frobenius_root(FqElem c, uint64_t e) const;
  // c^{p^e}.
  FqElem frobenius_power(FqElem c, uint64_t e) const;

  // "3", "t", "2*t+1"; no enclosing parentheses.
  std::string coeff_to_string(FqElem c) const;
  // True when printing next to a monomial requires parentheses (more than one t-term).
  bool coeff_needs_parens(FqElem c) const;

  bool same(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

 private:
  Field() = default;
  std::vector<uint64_t> decode(FqElem a) const;
  FqElem encode(const std::vector<uint64_t>& digits) const;

  uint64_t p_ = 0;
  uint32_t k_ = 1;
  uint64_t q_ = 0;
  std::vector<uint64_t> modulus_;  // empty for k = 1
};

bool is_prime_u64(uint64_t n);

}  // namespace fjump
