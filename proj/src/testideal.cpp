#include "testideal.hpp"

#include <cstdlib>

namespace fjump {

uint32_t default_chain_cap() {
  if (const char* env = std::getenv("FJUMP_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 100000) return uint32_t(v);
  }
  return 32;
}

Ideal tau_dyadic(const Poly& f, int64_t s, uint32_t e) {
  if (f.is_zero()) fail_pre("test ideal of the zero element");
  if (s < 0) fail_pre("negative power");
  uint64_t q = uint64_t(checked_pow_i64(int64_t(f.ring()->field.p()), e, "p^e"));
  return frobenius_root(Ideal::principal(f.pow(uint64_t(s))), q);
}

namespace {

// Chain stride: the natural Frobenius step of the exponent. For denominators
// coprime to p this is the multiplicative order of p (so the ladder stays in
// exact integer arithmetic); for p-power denominators it is the dyadic level;
// otherwise stride 1 with exact ceilings.
uint32_t chain_stride(uint64_t p, int64_t den) {
  if (den == 1) return 1;
  if (std::gcd(int64_t(p), den) == 1) {
    int64_t pm = int64_t(p % uint64_t(den));
    int64_t acc = pm;
    for (uint32_t e = 1; e <= 64; ++e) {
      if (acc == 1) return e;
      acc = int64_t(__int128(acc) * pm % den);
    }
    fail_pre("multiplicative order of p modulo " + std::to_string(den) + " exceeds 64");
  }
  int64_t d = den;
  uint32_t level = 0;
  while (d % int64_t(p) == 0) {
    d /= int64_t(p);
    ++level;
  }
  return d == 1 ? level : 1;
}

Ideal tau_chain(const Poly& f, Rat c, const ChainOptions& opt) {
  uint64_t p = f.ring()->field.p();
  uint32_t e0 = chain_stride(p, c.den);
  int64_t q0 = checked_pow_i64(int64_t(p), e0, "p^e");
  Ideal prev = Ideal::zero(f.ring());
  bool have_prev = false;
  uint32_t confirmed = 0;
  int64_t qs = 1;
  for (uint32_t s = 1; s <= opt.cap; ++s) {
    qs = checked_mul_i64(qs, q0, "q^s");
    int64_t a = ceil_div_scaled(c.num, qs, c.den);
    Ideal k = frobenius_root(Ideal::principal(f.pow(uint64_t(a))), uint64_t(qs));
    if (have_prev && k.equals(prev)) {
      ++confirmed;
      if (!opt.paranoid || confirmed >= 2) return k;
    } else {
      confirmed = 0;
    }
    prev = k;
    have_prev = true;
  }
  fail_cap("test-ideal chain did not stabilize within cap = " + std::to_string(opt.cap));
}

}  // namespace

Ideal tau_general_no_skoda(const Poly& f, Rat c, const ChainOptions& opt) {
  if (f.is_zero()) fail_pre("test ideal of the zero element");
  if (c.num <= 0) fail_pre("test-ideal exponent must be positive");
  return tau_chain(f, c, opt);
}

Ideal tau_general(const Poly& f, Rat c, const ChainOptions& opt) {
  if (f.is_zero()) fail_pre("test ideal of the zero element");
  if (c.num <= 0) fail_pre("test-ideal exponent must be positive");
  if (rat_is_integer(c)) return Ideal::principal(f.pow(uint64_t(c.num)));
  int64_t whole = rat_floor(c);
  if (whole == 0) return tau_chain(f, c, opt);
  // Skoda: tau(f^c) = f^whole * tau(f^{c - whole}).
  Ideal tail = tau_chain(f, rat_sub_int(c, whole), opt);
  return tail.times(f.pow(uint64_t(whole)));
}

Ideal tau_minus_epsilon(const Poly& f, const Alpha& alpha, const ChainOptions& opt) {
  if (f.is_zero()) fail_pre("test ideal of the zero element");
  if (alpha.r <= 0) fail_pre("alpha must be positive");
  uint64_t p = f.ring()->field.p();
  int64_t q = checked_pow_i64(int64_t(p), alpha.e, "p^e");
  // b_l = r (1 + q + ... + q^{l-1}); f^{b_l} builds incrementally.
  Poly fr = f.pow(uint64_t(alpha.r));
  Poly fpow = fr;
  int64_t ql = q;
  Ideal prev = Ideal::zero(f.ring());
  bool have_prev = false;
  uint32_t confirmed = 0;
  for (uint32_t l = 1; l <= opt.cap; ++l) {
    Ideal k = frobenius_root(Ideal::principal(fpow), uint64_t(ql));
    if (have_prev && k.equals(prev)) {
      ++confirmed;
      if (!opt.paranoid || confirmed >= 2) return k;
    } else {
      confirmed = 0;
    }
    prev = k;
    have_prev = true;
    ql = checked_mul_i64(ql, q, "q^l");
    fpow = fpow.frobenius(uint64_t(q)) * fr;
  }
  fail_cap("left-limit chain did not stabilize within cap = " + std::to_string(opt.cap));
}

}  // namespace fjump
