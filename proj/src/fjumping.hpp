#pragma once

#include "testideal.hpp"

namespace fjump {

// The F-flag of f and alpha = r/(p^e - 1): the ascending chain
// I^1 = tau(f^alpha), I^{j+1} = ((I^j)^{[p^e]} : f^r). The chain depends on
// the presentation (r, e); its stable value does not.
FlagTrace fflag(const Poly& f, const Alpha& alpha, const ChainOptions& opt = {});

// Stable value of the F-flag; the unit ideal exactly when alpha is not an
// F-jumping number of f.
Ideal fjumping_ideal(const Poly& f, const Alpha& alpha, const ChainOptions& opt = {});

struct JumpDecision {
  bool is_jumping;
  Ideal certificate;  // the F-jumping ideal itself
  FlagTrace trace;
};
JumpDecision is_fjumping_number(const Poly& f, const Alpha& alpha, const ChainOptions& opt = {});

// Whether I and J generate the same F^e-submodule: some l <= l_max with
// f^{r(1 + p^e + ... + p^{e(l-1)})} J inside I^{[p^{el}]}. Semi-decision:
// false only means "not within l_max". Preconditions are validated:
// I inside J, f^r I inside I^{[p^e]}, f^r J inside J^{[p^e]}.
bool same_fsubmodule(const Ideal& I, const Ideal& J, const Poly& f, const Alpha& alpha,
                     uint32_t l_max);

struct SweepRow {
  int64_t r;
  std::string alpha;
  bool is_jumping;
  Ideal certificate;
};

// is_fjumping_number over alpha = r/(p^e - 1), r = 1 .. p^e - 1.
std::vector<SweepRow> jumping_sweep(const Poly& f, uint32_t e, const ChainOptions& opt = {});

}  // namespace fjump
