#include "ideal.hpp"

#include <algorithm>
#include <set>

namespace fjump {

namespace {

// Deterministic total order on polynomials: by leading monomials descending,
// then term by term.
struct PolyLess {
  const Ring* ring;
  bool operator()(const Poly& a, const Poly& b) const {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
      if (int c = ring->order.cmp(ta[i].mon, tb[i].mon)) return c > 0;
      if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
    }
    return ta.size() > tb.size();
  }
};

Poly spoly(const Poly& f, const Poly& g) {
  // f, g monic
  const Monomial& mf = f.lt().mon;
  const Monomial& mg = g.lt().mon;
  Monomial l = mon_lcm(mf, mg);
  return f.mul_term(mon_div(l, mf), f.ring()->field.one()) -
         g.mul_term(mon_div(l, mg), g.ring()->field.one());
}

void subtract_multiple(TermMap& work, const Poly& b, const Monomial& shift, FqElem scale,
                       const Field& F) {
  // work -= scale * x^shift * b
  for (const auto& t : b.terms()) {
    Monomial m = mon_mul(t.mon, shift);
    FqElem prod = F.mul(scale, t.c);
    auto [it, inserted] = work.emplace(std::move(m), F.neg(prod));
    if (!inserted) {
      it->second = F.sub(it->second, prod);
      if (it->second == 0) work.erase(it);
    }
  }
}

// Minimalize + tail-reduce + sort: turns a Groebner basis into the reduced one.
std::vector<Poly> reduce_basis(const RingPtr& ring, std::vector<Poly> basis) {
  std::sort(basis.begin(), basis.end(), PolyLess{ring.get()});
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mon_divides(basis[j].lt().mon, basis[i].lt().mon)) continue;
      // Equal leading monomials: keep the earlier element.
      if (basis[j].lt().mon == basis[i].lt().mon)
        redundant = j < i;
      else
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), PolyLess{ring.get()});
  return reduced;
}

}  // namespace

Poly normal_form(const Poly& g, const std::vector<Poly>& basis) {
  if (g.is_zero() || basis.empty()) return g;
  const RingPtr& ring = g.ring();
  const Field& F = ring->field;
  TermMap work = g.to_map();
  TermMap rem(MonDescLess{ring.get()});
  while (!work.empty()) {
    auto it = work.begin();
    const Poly* divisor = nullptr;
    for (const auto& b : basis) {
      if (mon_divides(b.lt().mon, it->first)) {
        divisor = &b;
        break;
      }
    }
    if (!divisor) {
      rem.emplace(it->first, it->second);
      work.erase(it);
      continue;
    }
    Monomial shift = mon_div(it->first, divisor->lt().mon);
    FqElem scale = F.mul(it->second, F.inv(divisor->lt().c));
    subtract_multiple(work, *divisor, shift, scale, F);
  }
  return Poly::from_map(ring, rem);
}

Poly divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail_internal("exact division by zero");
  const RingPtr& ring = num.ring();
  const Field& F = ring->field;
  TermMap work = num.to_map();
  TermMap quot(MonDescLess{ring.get()});
  FqElem lc_inv = F.inv(den.lt().c);
  while (!work.empty()) {
    auto it = work.begin();
    if (!mon_divides(den.lt().mon, it->first))
      fail_internal("inexact polynomial division: colon invariant violated");
    Monomial shift = mon_div(it->first, den.lt().mon);
    FqElem scale = F.mul(it->second, lc_inv);
    quot.emplace(shift, scale);
    subtract_multiple(work, den, shift, scale, F);
  }
  return Poly::from_map(ring, quot);
}

std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens) {
  std::vector<Poly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    basis.push_back(g.monic());
  }
  if (basis.empty()) return {};
  std::sort(basis.begin(), basis.end(), PolyLess{ring.get()});
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Poly& a, const Poly& b) { return a.equals(b); }),
              basis.end());
  for (const auto& b : basis)
    if (b.is_unit_constant()) return {Poly::constant(ring, ring->field.one())};

  struct PairKey {
    uint64_t deg;
    Monomial lcm;
    size_t i, j;
  };
  auto pair_less = [o = ring.get()](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = o->order.cmp(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<size_t, size_t>> pending;

  auto push_pair = [&](size_t i, size_t j) {
    Monomial l = mon_lcm(basis[i].lt().mon, basis[j].lt().mon);
    queue.insert({mon_deg(l), std::move(l), i, j});
    pending.insert({i, j});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    const Monomial& mi = basis[pk.i].lt().mon;
    const Monomial& mj = basis[pk.j].lt().mon;
    if (mon_coprime(mi, mj)) continue;  // Buchberger's first criterion
    // Chain criterion: some k with LM_k | lcm and both sub-pairs already treated.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!mon_divides(basis[k].lt().mon, pk.lcm)) continue;
      auto sub1 = std::minmax(pk.i, k);
      auto sub2 = std::minmax(pk.j, k);
      if (!pending.count({sub1.first, sub1.second}) && !pending.count({sub2.first, sub2.second}))
        skip = true;
    }
    if (skip) continue;
    Poly r = normal_form(spoly(basis[pk.i], basis[pk.j]), basis);
    if (r.is_zero()) continue;
    if (r.is_unit_constant()) return {Poly::constant(ring, ring->field.one())};
    basis.push_back(r.monic());
    for (size_t t = 0; t + 1 < basis.size(); ++t) push_pair(t, basis.size() - 1);
  }
  return reduce_basis(ring, std::move(basis));
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cell_(std::make_shared<GbCell>()) {
  for (const auto& g : gens_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, ring->field.one());
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::principal(Poly f) {
  RingPtr r = f.ring();
  return Ideal(std::move(r), {std::move(f)});
}

Ideal Ideal::maximal_at_origin(const RingPtr& ring) {
  std::vector<Poly> gens;
  for (size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

const std::vector<Poly>& Ideal::gb() const {
  std::lock_guard<std::mutex> lock(cell_->mu);
  if (!cell_->done) {
    cell_->gb = groebner_basis(ring_, gens_);
    cell_->done = true;
  }
  return cell_->gb;
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_unit_constant();
}

bool Ideal::is_monomial_ideal() const {
  for (const auto& g : gb())
    if (!g.is_monomial()) return false;
  return !gb().empty();
}

Poly Ideal::normal_form(const Poly& g) const {
  require_same_ring(ring_, g.ring());
  return fjump::normal_form(g, gb());
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.gb())
    if (!member(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  const auto& a = gb();
  const auto& b = other.gb();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].equals(b[i])) return false;
  return true;
}

Ideal Ideal::plus(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::times(const Poly& f) const {
  require_same_ring(ring_, f.ring());
  std::vector<Poly> gens;
  for (const auto& g : gens_) gens.push_back(g * f);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::times(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Poly> gens;
  for (const auto& g : gens_)
    for (const auto& h : other.gens_) gens.push_back(g * h);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::intersect(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return zero(ring_);
  if (is_unit()) return Ideal(ring_, other.gb());
  if (other.is_unit()) return Ideal(ring_, gb());
  if (is_monomial_ideal() && other.is_monomial_ideal()) {
    std::vector<Poly> gens;
    for (const auto& a : gb())
      for (const auto& b : other.gb())
        gens.push_back(Poly::term(ring_, mon_lcm(a.lt().mon, b.lt().mon), ring_->field.one()));
    return Ideal(ring_, std::move(gens));
  }
  // Elimination: w*I + (1-w)*J in Ring[w], then the w-free part of the basis.
  RingPtr ext = ring_->with_elim_tag();
  auto lift = [&](const Poly& g) {
    TermMap m(MonDescLess{ext.get()});
    for (const auto& t : g.terms()) {
      Monomial lm(t.mon.size() + 1, 0);
      std::copy(t.mon.begin(), t.mon.end(), lm.begin() + 1);
      m.emplace(std::move(lm), t.c);
    }
    return Poly::from_map(ext, m);
  };
  Poly w = Poly::variable(ext, 0);
  Poly one_minus_w = Poly::constant(ext, ext->field.one()) - w;
  std::vector<Poly> gens;
  for (const auto& g : gb()) gens.push_back(lift(g) * w);
  for (const auto& h : other.gb()) gens.push_back(lift(h) * one_minus_w);
  std::vector<Poly> egb = groebner_basis(ext, std::move(gens));
  std::vector<Poly> result;
  for (const auto& g : egb) {
    bool w_free = true;
    for (const auto& t : g.terms()) w_free = w_free && t.mon[0] == 0;
    if (!w_free) continue;
    TermMap m(MonDescLess{ring_.get()});
    for (const auto& t : g.terms())
      m.emplace(Monomial(t.mon.begin() + 1, t.mon.end()), t.c);
    result.push_back(Poly::from_map(ring_, m));
  }
  return Ideal(ring_, std::move(result));
}

Ideal Ideal::colon(const Poly& g) const {
  require_same_ring(ring_, g.ring());
  if (g.is_zero()) fail_pre("colon by the zero element");
  if (is_zero()) return zero(ring_);
  if (g.is_constant()) return Ideal(ring_, gb());
  if (member(g)) return unit(ring_);
  if (is_monomial_ideal() && g.is_monomial()) {
    std::vector<Poly> gens;
    for (const auto& a : gb()) {
      Monomial m = a.lt().mon;
      for (size_t i = 0; i < m.size(); ++i)
        m[i] = m[i] > g.lt().mon[i] ? m[i] - g.lt().mon[i] : 0;
      gens.push_back(Poly::term(ring_, std::move(m), ring_->field.one()));
    }
    return Ideal(ring_, std::move(gens));
  }
  {
    // If g divides every generator, I = g*H and (g*H : g) = H.
    std::vector<Poly> quotients;
    bool all = true;
    for (const auto& a : gb()) {
      Poly rem = fjump::normal_form(a, {g.monic()});
      if (!rem.is_zero()) {
        all = false;
        break;
      }
      quotients.push_back(divide_exact(a, g));
    }
    if (all) return Ideal(ring_, std::move(quotients));
  }
  Ideal meet = intersect(principal(g));
  std::vector<Poly> gens;
  for (const auto& a : meet.gb()) gens.push_back(divide_exact(a, g));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::colon(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  if (other.is_zero()) return unit(ring_);
  if (other.is_unit()) return Ideal(ring_, gb());
  Ideal acc = unit(ring_);
  bool first = true;
  for (const auto& g : other.gb()) {
    Ideal c = colon(g);
    acc = first ? c : acc.intersect(c);
    first = false;
  }
  return acc;
}

}  // namespace fjump
