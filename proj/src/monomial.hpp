#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace fjump {

using Exp = uint32_t;
using Monomial = std::vector<Exp>;  // one exponent per ring variable

constexpr uint64_t kMaxExp = uint64_t(1) << 30;

inline Exp exp_checked(uint64_t v) {
  if (v > kMaxExp) fail_overflow("monomial exponent exceeds the checked range");
  return Exp(v);
}

inline uint64_t mon_deg(const Monomial& a) {
  uint64_t d = 0;
  for (Exp e : a) d += e;
  return d;
}

inline bool mon_is_one(const Monomial& a) {
  for (Exp e : a)
    if (e) return false;
  return true;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = exp_checked(uint64_t(a[i]) + b[i]);
  return r;
}

inline Monomial mon_pow(const Monomial& a, uint64_t n) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = exp_checked(uint64_t(a[i]) * n);
  return r;
}

inline bool mon_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mon_div(const Monomial& a, const Monomial& b) {  // a / b, b | a
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline bool mon_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Graded reverse lexicographic order, optionally with a leading elimination
// block (the first `elim` variables dominate the rest).
struct MonOrder {
  uint32_t elim = 0;

  static int grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    uint64_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    if (elim) {
      if (int c = grevlex_range(a, b, 0, elim)) return c;
      return grevlex_range(a, b, elim, a.size());
    }
    return grevlex_range(a, b, 0, a.size());
  }
};

}  // namespace fjump
