#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace fjump {

// Stabilizing chain of ideals from a fixed-point iteration. The chain is
// stored as computed, including the confirming repeat, so the last two
// entries are equal; stable_index is the 1-based position of the first
// occurrence of the stable value.
struct FlagTrace {
  std::vector<Ideal> ideals;
  size_t stable_index = 0;
  std::string step;

  const Ideal& stable() const { return ideals.at(stable_index - 1); }
};

struct ChainOptions {
  uint32_t cap = 32;
  bool paranoid = false;  // verify one extra step after stabilization
};

// Default iteration cap: FJUMP_CAP from the environment, else 32.
uint32_t default_chain_cap();

}  // namespace fjump
