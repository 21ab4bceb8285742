#pragma once

#include <cstdint>
#include <vector>

#include "mopiso/mop.hpp"

namespace mopiso {

struct ExactResult {
  int value = 0;
  std::vector<int> witness;     // lexicographically first optimal set
  std::uint64_t explored = 0;   // candidate sets fully evaluated
};

// Brute-force minimum sizes by subset enumeration in size order, then
// lexicographic order, so the witness is reproducible. Mops larger than
// limit vertices are refused with LimitExceeded. A sound skip rule discards
// candidates that provably cannot work; it never changes value or witness.
ExactResult exact_isolation_number(const Mop& g, int k, int limit = 24);
ExactResult exact_domination_number(const Mop& g, int limit = 24);

}  // namespace mopiso
