#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simfes/matroids.hpp"

namespace simfes {

// alpha-Matroid Parity input: a linear matroid, pairwise-disjoint blocks of
// uniform size alpha, and a target number of blocks q.
struct ParityInstance {
  LinearMatroid matroid;
  std::vector<std::vector<Label>> blocks;
  int q = 0;

  int alpha() const {
    return blocks.empty() ? 0 : static_cast<int>(blocks[0].size());
  }
};

struct ParityResult {
  // Ascending 0-based block indices whose union is independent; empty
  // optional on NO.
  std::optional<std::vector<int>> blocks;
  // On NO, the DP level whose family became empty (diagnostics); -1 when
  // the answer was decided without running that level.
  int empty_level = -1;
};

// Representative-family DP. The seed only matters when rank(matroid)
// exceeds q*alpha: the matroid is then truncated to rank q*alpha by a
// random projection, which (like the elongation) can only under-report
// independence, so YES answers stay exact.
ParityResult solve_parity(const ParityInstance& inst, std::uint64_t seed = 0);

// Exhaustive oracle over q-subsets of blocks in lexicographic order.
// Guard: C(#blocks, q) <= 10^6, otherwise throws.
ParityResult brute_parity(const ParityInstance& inst);

// Validation shared by both solvers; throws "malformed blocks".
void validate_parity(const ParityInstance& inst);

} // namespace simfes
