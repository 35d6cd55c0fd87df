#include "fjacobian.hpp"

namespace fjump {

bool fedder_fpure_at_origin(const Poly& f) {
  if (f.is_zero() || !f.constant_term_is_zero())
    fail_pre("not a local question at origin: f must lie in (x_1, ..., x_n)");
  const RingPtr& ring = f.ring();
  uint64_t p = ring->field.p();
  Ideal mp = bracket_power(Ideal::maximal_at_origin(ring), p);
  return !mp.member(f.pow(p - 1));
}

FjacResult fjacobian_from_seed(const Poly& f, const Ideal& seed, const ChainOptions& opt) {
  require_same_ring(f.ring(), seed.ring());
  if (f.is_zero()) fail_pre("F-Jacobian of the zero element");
  uint64_t p = f.ring()->field.p();
  if (!seed.member(f)) fail_pre("seed does not contain f");
  Poly fp1 = f.pow(p - 1);
  Ideal seed_p = bracket_power(seed, p);
  for (const auto& g : seed.gens()) {
    if (!seed_p.member(g * fp1))
      fail_pre("seed is not a flag start: f^(p-1) * (" + g.str() + ") is not in seed^[p]");
  }
  FlagTrace trace;
  trace.step = "I[j+1] = ((I[j])^[" + std::to_string(p) + "] : f^" + std::to_string(p - 1) + ")";
  trace.ideals.push_back(seed);
  for (uint32_t j = 1; j <= opt.cap; ++j) {
    Ideal next = bracket_power(trace.ideals.back(), p).colon(fp1);
    bool stable = next.equals(trace.ideals.back());
    trace.ideals.push_back(std::move(next));
    if (stable) {
      trace.stable_index = trace.ideals.size() - 1;
      Ideal jf = trace.stable();
      return {std::move(jf), std::move(trace)};
    }
  }
  fail_cap("F-Jacobian flag did not stabilize within cap = " + std::to_string(opt.cap));
}

bool minimal_fixed_ideal_check(const Ideal& I, const Poly& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) fail_pre("fixed-ideal check against the zero element");
  uint64_t p = f.ring()->field.p();
  if (!I.member(f)) return false;
  if (I.equals(Ideal::principal(f))) return false;
  return bracket_power(I, p).colon(f.pow(p - 1)).equals(I);
}

Ideal leibniz_fjacobian(const Poly& f, const Poly& g, const Ideal& jf, const Ideal& jg) {
  require_same_ring(f.ring(), g.ring());
  require_same_ring(f.ring(), jf.ring());
  require_same_ring(f.ring(), jg.ring());
  if (f.is_zero() || g.is_zero()) fail_pre("Leibniz rule needs nonzero factors");
  Ideal fg = Ideal::principal(f * g);
  if (!Ideal::principal(f).intersect(Ideal::principal(g)).equals(fg))
    fail_pre("factors are not coprime: (f) cap (g) != (fg)");
  Ideal f_jg = jg.times(f);
  Ideal g_jf = jf.times(g);
  if (!f_jg.intersect(g_jf).equals(fg))
    fail_pre("intersection identity f*J_F(g) cap g*J_F(f) = (fg) fails; "
             "check that the supplied ideals are the factors' F-Jacobians");
  return f_jg.plus(g_jf);
}

CyclicResult cyclic_dmodule_ideal(const Poly& f, const Poly& a, uint32_t e_max) {
  require_same_ring(f.ring(), a.ring());
  if (f.is_zero() || a.is_zero()) fail_pre("cyclic closure needs nonzero f and a");
  uint64_t p = f.ring()->field.p();
  Ideal prev = Ideal::zero(f.ring());
  bool have_prev = false;
  for (uint32_t e = 1; e <= e_max; ++e) {
    uint64_t q = uint64_t(checked_pow_i64(int64_t(p), e, "p^e"));
    Poly fq1 = f.pow(q - 1);
    Ideal root = frobenius_root(Ideal::principal(fq1 * a), q);
    Ideal inner = bracket_power(root.plus(Ideal::principal(f)), q);
    Ideal ae = inner.colon(fq1);
    if (have_prev && ae.equals(prev)) return {std::move(ae), true};
    prev = std::move(ae);
    have_prev = true;
  }
  return {std::move(prev), false};
}

VassilevResult vassilev_step_check(const std::vector<Ideal>& chain) {
  if (chain.size() < 2) fail_pre("chain needs at least two ideals");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    require_same_ring(chain[i].ring(), chain[i + 1].ring());
    if (!chain[i + 1].contains(chain[i]) || chain[i + 1].equals(chain[i]))
      fail_pre("chain is not strictly ascending at index " + std::to_string(i));
  }
  uint64_t p = chain[0].ring()->field.p();
  std::vector<Ideal> colons;
  for (const auto& tau : chain) colons.push_back(bracket_power(tau, p).colon(tau));
  for (size_t i = 0; i + 1 < colons.size(); ++i)
    if (!colons[i + 1].contains(colons[i])) return {false, i};
  return {true, 0};
}

}  // namespace fjump
