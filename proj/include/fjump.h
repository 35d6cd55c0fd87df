/*
 * fjump -- F-singularity toolkit for hypersurfaces over finite fields.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed through these functions; every operation reports a status
 * code and leaves a human-readable message in a thread-local buffer
 * retrievable with fjump_last_error().
 *
 * Conventions:
 *   - Rings are given as text, e.g. "F13[x,y]" or "F3^2:t^2+1[x,y]" (the
 *     extension modulus is a polynomial in the reserved generator t).
 *   - Polynomials are text in the ring's variables: integer coefficients,
 *     "^" powers, "*" optional, "+"/"-", parentheses.
 *   - Ideals serialize as JSON arrays of canonical polynomial strings; the
 *     serialized form is always the reduced Groebner basis, so it is
 *     byte-stable for equal ideals.
 *   - Exponents alpha are "r/d" with d = p^e - 1, or "auto:n/m" with m
 *     coprime to p (e is recovered from the multiplicative order of p mod m).
 *   - Strings returned through char** outputs are heap-allocated; release
 *     them with fjump_free_string().
 */

#ifndef FJUMP_H
#define FJUMP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fjump_status {
  FJUMP_OK = 0,
  FJUMP_ERROR_PARSE = 2,         /* malformed ring / polynomial / exponent text */
  FJUMP_ERROR_PRECONDITION = 3,  /* contract violation (wrong ring, bad seed, ...) */
  FJUMP_ERROR_CAP_EXCEEDED = 4,  /* a stabilizing chain hit its iteration cap */
  FJUMP_ERROR_OVERFLOW = 5,      /* exponent arithmetic left the checked range */
  FJUMP_ERROR_INVALID_ARGUMENT = 6,
  FJUMP_ERROR_INTERNAL = 7
} fjump_status;

typedef struct fjump_ring fjump_ring;
typedef struct fjump_poly fjump_poly;
typedef struct fjump_ideal fjump_ideal;

/* cap = 0 selects the default (FJUMP_CAP from the environment, else 32);
 * paranoid != 0 verifies one extra step after each chain stabilizes. */
typedef struct fjump_options {
  uint32_t cap;
  int paranoid;
} fjump_options;

const char* fjump_last_error(void);
void fjump_free_string(char* s);

/* ---- rings, polynomials, ideals ---- */

fjump_status fjump_ring_parse(const char* text, fjump_ring** out);
void fjump_ring_free(fjump_ring* ring);
char* fjump_ring_to_string(const fjump_ring* ring);
/* JSON array of the ring's variable names, in declaration order. */
char* fjump_ring_variables(const fjump_ring* ring);
uint64_t fjump_ring_characteristic(const fjump_ring* ring);

fjump_status fjump_poly_parse(const fjump_ring* ring, const char* text, fjump_poly** out);
void fjump_poly_free(fjump_poly* poly);
char* fjump_poly_to_string(const fjump_poly* poly);

fjump_status fjump_ideal_parse_json(const fjump_ring* ring, const char* json_generators,
                                    fjump_ideal** out);
void fjump_ideal_free(fjump_ideal* ideal);
char* fjump_ideal_to_json(const fjump_ideal* ideal);
fjump_status fjump_ideal_equal(const fjump_ideal* a, const fjump_ideal* b, int* out);
fjump_status fjump_ideal_is_unit(const fjump_ideal* a, int* out);
fjump_status fjump_ideal_member(const fjump_ideal* a, const fjump_poly* g, int* out);
fjump_status fjump_normal_form(const fjump_ideal* a, const fjump_poly* g, fjump_poly** out);

/* ---- Groebner-level operations ---- */

fjump_status fjump_groebner_basis(const fjump_ideal* a, fjump_ideal** out);
fjump_status fjump_bracket_power(const fjump_ideal* a, uint64_t q, fjump_ideal** out);
fjump_status fjump_frobenius_root(const fjump_ideal* a, uint64_t q, fjump_ideal** out);
fjump_status fjump_colon_poly(const fjump_ideal* a, const fjump_poly* g, fjump_ideal** out);
fjump_status fjump_colon_ideal(const fjump_ideal* a, const fjump_ideal* b, fjump_ideal** out);
fjump_status fjump_intersect(const fjump_ideal* a, const fjump_ideal* b, fjump_ideal** out);

/* ---- F-singularity computations ---- */

/* Generalized test ideal tau(f^c); exponent is "n", "n/d". */
fjump_status fjump_tau(const fjump_poly* f, const char* exponent, const fjump_options* opt,
                       fjump_ideal** out);

/* Left limit tau(f^{alpha - eps}); alpha as in the header comment. */
fjump_status fjump_tau_minus_epsilon(const fjump_poly* f, const char* alpha,
                                     const fjump_options* opt, fjump_ideal** out);

/* F-jumping decision. certificate receives the F-jumping ideal. trace_json,
 * when non-NULL, receives the F-flag as JSON. */
fjump_status fjump_is_jumping(const fjump_poly* f, const char* alpha, const fjump_options* opt,
                              int* is_jumping, fjump_ideal** certificate, char** trace_json);

/* Fedder's criterion for F-purity at the origin. */
fjump_status fjump_fedder_fpure(const fjump_poly* f, int* out);

/* F-Jacobian ideal from a seed (the pullback test ideal of R/fR). */
fjump_status fjump_fjacobian(const fjump_poly* f, const fjump_ideal* seed,
                             const fjump_options* opt, fjump_ideal** out, char** trace_json);

#ifdef __cplusplus
}
#endif

#endif /* FJUMP_H */
