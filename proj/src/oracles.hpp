#pragma once

#include <random>

#include "frobenius.hpp"

namespace fjump {

// Closed-form Frobenius root of a monomial ideal: per-variable exponent
// quotients mod q. Independent of the decomposition path in frobenius_root.
Ideal monomial_root_oracle(const Ideal& I, uint64_t q);

// Seeded random generators for property tests. Trial n of a run derives its
// generator deterministically from (master_seed, n).
Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, size_t max_terms, Exp max_exp);
Ideal random_ideal(const RingPtr& ring, std::mt19937_64& rng, size_t max_gens, size_t max_terms,
                   Exp max_exp);
Ideal random_monomial_ideal(const RingPtr& ring, std::mt19937_64& rng, size_t max_gens,
                            Exp max_exp);

struct FuzzReport {
  uint64_t master_seed;
  size_t trials;
  size_t failures;
  std::string jsonl;  // one object per trial: {seed, inputs, verdict}
};

// Galois-connection fuzzer: I inside J^{[q]} iff I^{[1/q]} inside J on random
// small ideals, q in {p, p^2}.
FuzzReport adjunction_fuzzer(const RingPtr& ring, size_t trials, uint64_t master_seed);

}  // namespace fjump
