#include "fjump.h"

#include <cstring>

#include "fjacobian.hpp"
#include "fjumping.hpp"
#include "jsonio.hpp"

struct fjump_ring {
  fjump::RingPtr ring;
};
struct fjump_poly {
  fjump::Poly poly;
};
struct fjump_ideal {
  fjump::Ideal ideal;
};

namespace {

thread_local std::string g_last_error;

fjump_status status_of(fjump::ErrKind kind) {
  switch (kind) {
    case fjump::ErrKind::parse:
      return FJUMP_ERROR_PARSE;
    case fjump::ErrKind::precondition:
      return FJUMP_ERROR_PRECONDITION;
    case fjump::ErrKind::cap_exceeded:
      return FJUMP_ERROR_CAP_EXCEEDED;
    case fjump::ErrKind::overflow:
      return FJUMP_ERROR_OVERFLOW;
    case fjump::ErrKind::internal:
      return FJUMP_ERROR_INTERNAL;
  }
  return FJUMP_ERROR_INTERNAL;
}

template <typename Fn>
fjump_status guarded(Fn&& fn) {
  try {
    fn();
    return FJUMP_OK;
  } catch (const fjump::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FJUMP_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fjump::ChainOptions chain_options(const fjump_options* opt) {
  fjump::ChainOptions o;
  o.cap = (opt && opt->cap) ? opt->cap : fjump::default_chain_cap();
  o.paranoid = opt && opt->paranoid;
  return o;
}

bool bad_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs)
    if (!p) {
      g_last_error = "null argument";
      return true;
    }
  return false;
}

}  // namespace

extern "C" {

const char* fjump_last_error(void) { return g_last_error.c_str(); }

void fjump_free_string(char* s) { delete[] s; }

fjump_status fjump_ring_parse(const char* text, fjump_ring** out) {
  if (bad_args({text, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ring{fjump::parse_ring(text)}; });
}

void fjump_ring_free(fjump_ring* ring) { delete ring; }

char* fjump_ring_to_string(const fjump_ring* ring) {
  return ring ? dup_string(ring->ring->to_string()) : nullptr;
}

char* fjump_ring_variables(const fjump_ring* ring) {
  if (!ring) return nullptr;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : ring->ring->vars) arr.push_back(v);
  return dup_string(arr.dump());
}

uint64_t fjump_ring_characteristic(const fjump_ring* ring) {
  return ring ? ring->ring->field.p() : 0;
}

fjump_status fjump_poly_parse(const fjump_ring* ring, const char* text, fjump_poly** out) {
  if (bad_args({ring, text, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_poly{fjump::parse_poly(ring->ring, text)}; });
}

void fjump_poly_free(fjump_poly* poly) { delete poly; }

char* fjump_poly_to_string(const fjump_poly* poly) {
  return poly ? dup_string(poly->poly.str()) : nullptr;
}

fjump_status fjump_ideal_parse_json(const fjump_ring* ring, const char* json_generators,
                                    fjump_ideal** out) {
  if (bad_args({ring, json_generators, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = new fjump_ideal{fjump::ideal_from_json(ring->ring, json_generators)}; });
}

void fjump_ideal_free(fjump_ideal* ideal) { delete ideal; }

char* fjump_ideal_to_json(const fjump_ideal* ideal) {
  if (!ideal) return nullptr;
  try {
    return dup_string(fjump::ideal_to_json_string(ideal->ideal));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

fjump_status fjump_ideal_equal(const fjump_ideal* a, const fjump_ideal* b, int* out) {
  if (bad_args({a, b, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = a->ideal.equals(b->ideal) ? 1 : 0; });
}

fjump_status fjump_ideal_is_unit(const fjump_ideal* a, int* out) {
  if (bad_args({a, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = a->ideal.is_unit() ? 1 : 0; });
}

fjump_status fjump_ideal_member(const fjump_ideal* a, const fjump_poly* g, int* out) {
  if (bad_args({a, g, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = a->ideal.member(g->poly) ? 1 : 0; });
}

fjump_status fjump_normal_form(const fjump_ideal* a, const fjump_poly* g, fjump_poly** out) {
  if (bad_args({a, g, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_poly{a->ideal.normal_form(g->poly)}; });
}

fjump_status fjump_groebner_basis(const fjump_ideal* a, fjump_ideal** out) {
  if (bad_args({a, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{fjump::Ideal(a->ideal.ring(), a->ideal.gb())}; });
}

fjump_status fjump_bracket_power(const fjump_ideal* a, uint64_t q, fjump_ideal** out) {
  if (bad_args({a, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{fjump::bracket_power(a->ideal, q)}; });
}

fjump_status fjump_frobenius_root(const fjump_ideal* a, uint64_t q, fjump_ideal** out) {
  if (bad_args({a, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{fjump::frobenius_root(a->ideal, q)}; });
}

fjump_status fjump_colon_poly(const fjump_ideal* a, const fjump_poly* g, fjump_ideal** out) {
  if (bad_args({a, g, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{a->ideal.colon(g->poly)}; });
}

fjump_status fjump_colon_ideal(const fjump_ideal* a, const fjump_ideal* b, fjump_ideal** out) {
  if (bad_args({a, b, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{a->ideal.colon(b->ideal)}; });
}

fjump_status fjump_intersect(const fjump_ideal* a, const fjump_ideal* b, fjump_ideal** out) {
  if (bad_args({a, b, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new fjump_ideal{a->ideal.intersect(b->ideal)}; });
}

fjump_status fjump_tau(const fjump_poly* f, const char* exponent, const fjump_options* opt,
                       fjump_ideal** out) {
  if (bad_args({f, exponent, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    fjump::Rat c = fjump::parse_rational(exponent);
    *out = new fjump_ideal{fjump::tau_general(f->poly, c, chain_options(opt))};
  });
}

fjump_status fjump_tau_minus_epsilon(const fjump_poly* f, const char* alpha,
                                     const fjump_options* opt, fjump_ideal** out) {
  if (bad_args({f, alpha, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    fjump::Alpha a = fjump::parse_alpha(alpha, f->poly.ring()->field.p());
    *out = new fjump_ideal{fjump::tau_minus_epsilon(f->poly, a, chain_options(opt))};
  });
}

fjump_status fjump_is_jumping(const fjump_poly* f, const char* alpha, const fjump_options* opt,
                              int* is_jumping, fjump_ideal** certificate, char** trace_json) {
  if (bad_args({f, alpha, is_jumping, certificate})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    fjump::Alpha a = fjump::parse_alpha(alpha, f->poly.ring()->field.p());
    fjump::JumpDecision dec = fjump::is_fjumping_number(f->poly, a, chain_options(opt));
    *is_jumping = dec.is_jumping ? 1 : 0;
    *certificate = new fjump_ideal{std::move(dec.certificate)};
    if (trace_json) *trace_json = dup_string(fjump::trace_to_json(dec.trace).dump());
  });
}

fjump_status fjump_fedder_fpure(const fjump_poly* f, int* out) {
  if (bad_args({f, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = fjump::fedder_fpure_at_origin(f->poly) ? 1 : 0; });
}

fjump_status fjump_fjacobian(const fjump_poly* f, const fjump_ideal* seed,
                             const fjump_options* opt, fjump_ideal** out, char** trace_json) {
  if (bad_args({f, seed, out})) return FJUMP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    fjump::FjacResult res = fjump::fjacobian_from_seed(f->poly, seed->ideal, chain_options(opt));
    *out = new fjump_ideal{std::move(res.jf)};
    if (trace_json) *trace_json = dup_string(fjump::trace_to_json(res.trace).dump());
  });
}

}  // extern "C"
