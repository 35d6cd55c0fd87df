#include "fjumping.hpp"

namespace fjump {

FlagTrace fflag(const Poly& f, const Alpha& alpha, const ChainOptions& opt) {
  if (f.is_zero()) fail_pre("F-flag of the zero element");
  if (alpha.r <= 0) fail_pre("alpha must be positive");
  uint64_t p = f.ring()->field.p();
  uint64_t q = uint64_t(checked_pow_i64(int64_t(p), alpha.e, "p^e"));
  FlagTrace trace;
  trace.step = "I[j+1] = ((I[j])^[" + std::to_string(q) + "] : f^" + std::to_string(alpha.r) + ")";
  Poly fr = f.pow(uint64_t(alpha.r));
  trace.ideals.push_back(tau_general(f, alpha_to_rat(alpha, p), opt));
  for (uint32_t j = 1; j <= opt.cap; ++j) {
    Ideal next = bracket_power(trace.ideals.back(), q).colon(fr);
    bool stable = next.equals(trace.ideals.back());
    trace.ideals.push_back(std::move(next));
    if (stable) {
      trace.stable_index = trace.ideals.size() - 1;
      return trace;
    }
  }
  fail_cap("F-flag did not stabilize within cap = " + std::to_string(opt.cap));
}

Ideal fjumping_ideal(const Poly& f, const Alpha& alpha, const ChainOptions& opt) {
  return fflag(f, alpha, opt).stable();
}

JumpDecision is_fjumping_number(const Poly& f, const Alpha& alpha, const ChainOptions& opt) {
  FlagTrace trace = fflag(f, alpha, opt);
  Ideal cert = trace.stable();
  bool jumping = !cert.is_unit();
  return {jumping, std::move(cert), std::move(trace)};
}

bool same_fsubmodule(const Ideal& I, const Ideal& J, const Poly& f, const Alpha& alpha,
                     uint32_t l_max) {
  require_same_ring(I.ring(), f.ring());
  require_same_ring(J.ring(), f.ring());
  if (alpha.r <= 0) fail_pre("alpha must be positive");
  uint64_t p = f.ring()->field.p();
  uint64_t q = uint64_t(checked_pow_i64(int64_t(p), alpha.e, "p^e"));
  Poly fr = f.pow(uint64_t(alpha.r));
  if (!J.contains(I)) fail_pre("precondition I inside J fails");
  if (!bracket_power(I, q).contains(I.times(fr)))
    fail_pre("precondition f^r I inside I^[q] fails");
  if (!bracket_power(J, q).contains(J.times(fr)))
    fail_pre("precondition f^r J inside J^[q] fails");
  Poly fpow = fr;        // f^{r(1 + q + ... + q^{l-1})}
  Ideal bracket_I = I;   // I^{[q^l]}
  for (uint32_t l = 1; l <= l_max; ++l) {
    bracket_I = bracket_power(bracket_I, q);
    if (bracket_I.contains(J.times(fpow))) return true;
    if (l < l_max) fpow = fpow.frobenius(q) * fr;
  }
  return false;
}

std::vector<SweepRow> jumping_sweep(const Poly& f, uint32_t e, const ChainOptions& opt) {
  if (e < 1) fail_pre("Frobenius step e must be at least 1");
  uint64_t p = f.ring()->field.p();
  int64_t d = checked_pow_i64(int64_t(p), e, "p^e") - 1;
  std::vector<SweepRow> rows;
  for (int64_t r = 1; r <= d; ++r) {
    Alpha a{r, e};
    JumpDecision dec = is_fjumping_number(f, a, opt);
    rows.push_back({r, alpha_str(a, p), dec.is_jumping, std::move(dec.certificate)});
  }
  return rows;
}

}  // namespace fjump
