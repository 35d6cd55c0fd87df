#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "poly.hpp"

namespace fjump {

// Reduced Groebner basis of the given generators under the ring's order.
// The zero ideal yields {}, the unit ideal exactly {1}.
std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens);

// Unique remainder of g modulo a basis whose elements are monic.
Poly normal_form(const Poly& g, const std::vector<Poly>& basis);

// num / den with zero remainder; inexactness is an invariant violation.
Poly divide_exact(const Poly& num, const Poly& den);

// Ideal with a lazily computed, write-once reduced Groebner basis cache.
// Copies share the cache; values are immutable once constructed.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal principal(Poly f);
  static Ideal maximal_at_origin(const RingPtr& ring);  // (x_1, ..., x_n)

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& gb() const;

  bool is_zero() const { return gb().empty(); }
  bool is_unit() const;
  bool is_monomial_ideal() const;

  Poly normal_form(const Poly& g) const;
  bool member(const Poly& g) const { return normal_form(g).is_zero(); }
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  Ideal plus(const Ideal& other) const;
  Ideal times(const Poly& f) const;
  Ideal times(const Ideal& other) const;
  Ideal intersect(const Ideal& other) const;
  Ideal colon(const Poly& g) const;
  Ideal colon(const Ideal& other) const;

 private:
  struct GbCell {
    std::mutex mu;
    bool done = false;
    std::vector<Poly> gb;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<GbCell> cell_;
};

}  // namespace fjump
