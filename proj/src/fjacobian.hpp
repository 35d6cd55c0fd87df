#pragma once

#include "testideal.hpp"

namespace fjump {

// Fedder's criterion at the origin: f^{p-1} outside (x_1^p, ..., x_n^p).
// Requires f nonzero with zero constant term.
bool fedder_fpure_at_origin(const Poly& f);

struct FjacResult {
  Ideal jf;
  FlagTrace trace;
};

// F-Jacobian flag from a caller-supplied seed (the pullback test ideal of
// R/fR): I^1 = seed, I^{j+1} = ((I^j)^{[p]} : f^{p-1}).
// Validates f in seed and f^{p-1} seed inside seed^{[p]}.
FjacResult fjacobian_from_seed(const Poly& f, const Ideal& seed, const ChainOptions& opt = {});

// Conditions of the minimal fixed ideal: f in I, I != fR, (I^{[p]} : f^{p-1}) = I.
bool minimal_fixed_ideal_check(const Ideal& I, const Poly& f);

// Leibniz rule for coprime factors: J_F(fg) = f J_F(g) + g J_F(f).
// Validates weak coprimality ((f) cap (g) = (fg)) and the intersection
// identity f J_F(g) cap g J_F(f) = (fg).
Ideal leibniz_fjacobian(const Poly& f, const Poly& g, const Ideal& jf, const Ideal& jg);

struct CyclicResult {
  Ideal ideal;
  bool stabilized;
};

// Cyclic D-module closure for gcd(a, f) = 1 (caller-asserted):
// A_e = ((((f^{p^e-1} a))^{[1/p^e]} + (f))^{[p^e]} : f^{p^e-1}), e = 1..e_max.
// Returns the first stable value, or the value at e_max unstabilized.
// By the cyclic-closure characterization each A_e contains J_F(f); only that
// containment is ever asserted.
CyclicResult cyclic_dmodule_ideal(const Poly& f, const Poly& a, uint32_t e_max);

struct VassilevResult {
  bool ok;
  size_t first_violation;  // index i of the failing step when !ok
};

// Checks (tau_i^{[p]} : tau_i) inside (tau_{i+1}^{[p]} : tau_{i+1}) along a
// strictly ascending chain (validated).
VassilevResult vassilev_step_check(const std::vector<Ideal>& chain);

}  // namespace fjump
