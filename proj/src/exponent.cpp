#include "exponent.hpp"

#include <cctype>

namespace fjump {

namespace {

int64_t parse_i64(const std::string& s, const char* what) {
  if (s.empty()) fail_parse(std::string("empty ") + what);
  for (char c : s)
    if (!std::isdigit(uint8_t(c))) fail_parse(std::string("bad ") + what + ": " + s);
  if (s.size() > 18) fail_overflow(std::string(what) + " out of the checked range: " + s);
  return std::stoll(s);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  int64_t num, den = 1;
  if (slash == std::string::npos) {
    num = parse_i64(text, "numerator");
  } else {
    num = parse_i64(text.substr(0, slash), "numerator");
    den = parse_i64(text.substr(slash + 1), "denominator");
    if (den == 0) fail_parse("zero denominator: " + text);
  }
  return rat_make(num, den);
}

Alpha parse_alpha(const std::string& text, uint64_t p) {
  if (text.rfind("auto:", 0) == 0) {
    Rat c = parse_rational(text.substr(5));
    if (c.num <= 0) fail_pre("alpha must be positive: " + text);
    if (c.den == 1) {
      // Integer alpha: use e = 1, r = c * (p - 1).
      return {checked_mul_i64(c.num, int64_t(p) - 1, "alpha numerator"), 1};
    }
    if (std::gcd(int64_t(p), c.den) != 1)
      fail_pre("alpha denominator must be coprime to p for auto conversion: " + text);
    // Multiplicative order of p modulo den, capped at 64.
    int64_t pm = int64_t(p % uint64_t(c.den));
    int64_t acc = pm;
    for (uint32_t e = 1; e <= 64; ++e) {
      if (acc == 1) {
        int64_t d = checked_pow_i64(int64_t(p), e, "p^e") - 1;
        return {checked_mul_i64(c.num, d / c.den, "alpha numerator"), e};
      }
      acc = int64_t(__int128(acc) * pm % c.den);
    }
    fail_pre("no exponent e <= 64 with denominator dividing p^e - 1: " + text);
  }
  size_t slash = text.find('/');
  if (slash == std::string::npos)
    fail_parse("alpha must be r/d or auto:n/m, got: " + text);
  int64_t r = parse_i64(text.substr(0, slash), "alpha numerator");
  int64_t d = parse_i64(text.substr(slash + 1), "alpha denominator");
  if (r <= 0 || d <= 0) fail_pre("alpha must be positive: " + text);
  int64_t v = 1;
  for (uint32_t e = 1; e <= 64; ++e) {
    v = checked_mul_i64(v, int64_t(p), "p^e");
    if (v - 1 == d) return {r, e};
    if (v - 1 > d) break;
  }
  fail_pre("alpha denominator " + std::to_string(d) + " is not p^e - 1 for p = " +
           std::to_string(p) + "; use auto:n/m for general rationals");
}

}  // namespace fjump
