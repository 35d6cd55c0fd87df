#pragma once

#include "exponent.hpp"
#include "flag.hpp"
#include "frobenius.hpp"

namespace fjump {

// tau(f^{s/p^e}) = (f^s)^{[1/p^e]}, exact for dyadic exponents.
Ideal tau_dyadic(const Poly& f, int64_t s, uint32_t e);

// Generalized test ideal tau(f^c) for exact rational c > 0, via the
// stabilizing chain K_s = (f^{ceil(c p^{e0 s})})^{[1/p^{e0 s}]}. Skoda's
// theorem peels integer parts off first: tau(f^c) = f^{floor(c)} tau(f^{c'}).
Ideal tau_general(const Poly& f, Rat c, const ChainOptions& opt = {});

// The raw chain without the Skoda reduction; the independent route used by
// property tests against the Skoda identity.
Ideal tau_general_no_skoda(const Poly& f, Rat c, const ChainOptions& opt = {});

// Left limit tau(f^{alpha - eps}), the stable value of the descending chain
// L_l = (f^{r(1 + p^e + ... + p^{e(l-1)})})^{[1/p^{el}]}.
Ideal tau_minus_epsilon(const Poly& f, const Alpha& alpha, const ChainOptions& opt = {});

}  // namespace fjump
