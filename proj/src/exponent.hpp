#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace fjump {

// Exact rational on checked 64-bit integers (128-bit intermediates).
// Everything here fails loudly instead of wrapping.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;  // > 0, gcd(num, den) = 1
};

inline Rat rat_make(int64_t num, int64_t den) {
  if (den == 0) fail_pre("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

inline int rat_cmp(Rat a, Rat b) {
  __int128 l = __int128(a.num) * b.den;
  __int128 r = __int128(b.num) * a.den;
  return l < r ? -1 : l > r ? 1 : 0;
}

inline bool rat_is_integer(Rat a) { return a.den == 1; }
inline int64_t rat_floor(Rat a) {
  int64_t q = a.num / a.den;
  if (a.num % a.den != 0 && a.num < 0) --q;
  return q;
}

inline Rat rat_sub_int(Rat a, int64_t n) {
  __int128 num = __int128(a.num) - __int128(n) * a.den;
  if (num > INT64_MAX || num < INT64_MIN) fail_overflow("rational out of checked range");
  return rat_make(int64_t(num), a.den);
}

inline int64_t checked_mul_i64(int64_t a, int64_t b, const char* what) {
  __int128 r = __int128(a) * b;
  if (r > INT64_MAX || r < INT64_MIN) fail_overflow(std::string(what) + " exceeds the checked range");
  return int64_t(r);
}

inline int64_t checked_pow_i64(int64_t base, uint32_t exp, const char* what) {
  int64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) r = checked_mul_i64(r, base, what);
  return r;
}

// ceil(num * scale / den) for positive inputs.
inline int64_t ceil_div_scaled(int64_t num, int64_t scale, int64_t den) {
  __int128 n = __int128(num) * scale;
  __int128 q = (n + den - 1) / den;
  if (q > INT64_MAX) fail_overflow("exponent ladder exceeds the checked range");
  return int64_t(q);
}

// alpha = r / (p^e - 1), the standing presentation for flag recurrences.
struct Alpha {
  int64_t r = 0;
  uint32_t e = 1;
};

inline int64_t alpha_denominator(const Alpha& a, uint64_t p) {
  return checked_pow_i64(int64_t(p), a.e, "p^e") - 1;
}

inline Rat alpha_to_rat(const Alpha& a, uint64_t p) {
  return rat_make(a.r, alpha_denominator(a, p));
}

inline std::string alpha_str(const Alpha& a, uint64_t p) {
  return std::to_string(a.r) + "/" + std::to_string(alpha_denominator(a, p));
}

// "r/d" with d = p^e - 1, or "auto:n/m" (e recovered from the multiplicative
// order of p modulo m, capped at 64).
Alpha parse_alpha(const std::string& text, uint64_t p);

// "n", "n/d"; must be positive.
Rat parse_rational(const std::string& text);

}  // namespace fjump
