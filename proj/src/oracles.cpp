#include "oracles.hpp"

#include <json.hpp>

#include "jsonio.hpp"

namespace fjump {

Ideal monomial_root_oracle(const Ideal& I, uint64_t q) {
  const RingPtr& ring = I.ring();
  power_of_p_exponent(q, ring->field.p());
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) fail_pre("monomial root oracle on a non-monomial generator");
    Monomial m = g.lt().mon;
    for (auto& e : m) e = Exp(e / q);
    gens.push_back(Poly::term(ring, std::move(m), ring->field.one()));
  }
  return Ideal(ring, std::move(gens));
}

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, size_t max_terms, Exp max_exp) {
  size_t nterms = 1 + rng() % max_terms;
  TermMap m(MonDescLess{ring.get()});
  for (size_t i = 0; i < nterms; ++i) {
    Monomial mon(ring->nvars());
    for (auto& e : mon) e = Exp(rng() % (uint64_t(max_exp) + 1));
    FqElem c = FqElem(1 + rng() % (ring->field.q() - 1));
    m.insert_or_assign(std::move(mon), c);
  }
  return Poly::from_map(ring, m);
}

Ideal random_ideal(const RingPtr& ring, std::mt19937_64& rng, size_t max_gens, size_t max_terms,
                   Exp max_exp) {
  size_t ngens = 1 + rng() % max_gens;
  std::vector<Poly> gens;
  for (size_t i = 0; i < ngens; ++i) gens.push_back(random_poly(ring, rng, max_terms, max_exp));
  return Ideal(ring, std::move(gens));
}

Ideal random_monomial_ideal(const RingPtr& ring, std::mt19937_64& rng, size_t max_gens,
                            Exp max_exp) {
  size_t ngens = 1 + rng() % max_gens;
  std::vector<Poly> gens;
  for (size_t i = 0; i < ngens; ++i) {
    Monomial mon(ring->nvars());
    for (auto& e : mon) e = Exp(rng() % (uint64_t(max_exp) + 1));
    gens.push_back(Poly::term(ring, std::move(mon), ring->field.one()));
  }
  return Ideal(ring, std::move(gens));
}

FuzzReport adjunction_fuzzer(const RingPtr& ring, size_t trials, uint64_t master_seed) {
  FuzzReport report{master_seed, trials, 0, ""};
  uint64_t p = ring->field.p();
  for (size_t n = 0; n < trials; ++n) {
    std::mt19937_64 rng(master_seed + 0x9e3779b97f4a7c15ull * (n + 1));
    Ideal I = random_ideal(ring, rng, 3, 3, 6);
    Ideal J = random_ideal(ring, rng, 3, 3, 6);
    uint64_t q = (rng() % 2 == 0) ? p : p * p;
    bool lhs = bracket_power(J, q).contains(I);
    bool rhs = J.contains(frobenius_root(I, q));
    bool ok = lhs == rhs;
    if (!ok) ++report.failures;
    nlohmann::json row = {
        {"seed", master_seed}, {"trial", n},         {"q", q},
        {"I", ideal_to_json(I)}, {"J", ideal_to_json(J)}, {"lhs", lhs},
        {"rhs", rhs},          {"ok", ok},
    };
    report.jsonl += row.dump() + "\n";
  }
  return report;
}

}  // namespace fjump
