#include "frobenius.hpp"

#include <map>

namespace fjump {

Ideal bracket_power(const Ideal& I, uint64_t q) {
  const RingPtr& ring = I.ring();
  uint64_t e = power_of_p_exponent(q, ring->field.p());
  if (e == 0) return I;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.frobenius(q));
  return Ideal(ring, std::move(gens));
}

Ideal frobenius_root(const Ideal& I, uint64_t q) {
  const RingPtr& ring = I.ring();
  const Field& F = ring->field;
  uint64_t e = power_of_p_exponent(q, F.p());
  if (e == 0) fail_pre("Frobenius root needs q = p^e with e >= 1");
  std::vector<Poly> pool;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    // Group the terms of g by exponent residue mod q; root each class.
    std::map<Monomial, TermMap> classes;
    for (const auto& t : g.terms()) {
      Monomial residue(t.mon.size()), quotient(t.mon.size());
      for (size_t i = 0; i < t.mon.size(); ++i) {
        residue[i] = Exp(t.mon[i] % q);
        quotient[i] = Exp(t.mon[i] / q);
      }
      auto it = classes.find(residue);
      if (it == classes.end())
        it = classes.emplace(std::move(residue), TermMap(MonDescLess{ring.get()})).first;
      // (residue, quotient) is unique per term, so no accumulation happens here.
      it->second.emplace(std::move(quotient), F.frobenius_root(t.c, e));
    }
    for (const auto& [residue, terms] : classes) {
      Poly h = Poly::from_map(ring, terms);
      if (!h.is_zero()) pool.push_back(std::move(h));
    }
  }
  return Ideal(ring, std::move(pool));
}

}  // namespace fjump
