#pragma once

#include "ideal.hpp"

namespace fjump {

// I^{[q]}: ideal generated by g^q over the generators of I; q = p^e, e >= 0.
Ideal bracket_power(const Ideal& I, uint64_t q);

// I^{[1/q]}: the smallest J with I contained in J^{[q]}; q = p^e, e >= 1.
// Every generator g splits uniquely as sum h_mu^q x^mu over residues mu in
// [0,q)^n; the root is generated by all the h_mu.
Ideal frobenius_root(const Ideal& I, uint64_t q);

}  // namespace fjump
