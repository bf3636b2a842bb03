#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "simfes/ecg.hpp"
#include "simfes/parity.hpp"

namespace simfes {

// Ground element e^j of the parity construction: one copy of edge `edge`
// per color slot j; `fake` iff j is not in col(e).
struct CopyLabel {
  int edge = 0; // 1-based
  int slot = 0; // 1..alpha
  bool fake = false;

  Label encode() const {
    return (static_cast<Label>(edge) << 8) |
           (static_cast<Label>(slot) << 1) | (fake ? 1 : 0);
  }
  static CopyLabel decode(Label l) {
    return {static_cast<int>(l >> 8), static_cast<int>((l >> 1) & 0x7f),
            (l & 1) != 0};
  }
};

// Per-color deletion budgets k'_1..k'_alpha.
using GuessTuple = std::vector<int>;

struct SfesVerdict {
  bool yes = false;
  std::set<int> witness;       // edge ids; verify_sfes holds on YES
  long long guesses_tried = 0; // diagnostics
  int trials_used = 0;
};

struct SolveOptions {
  std::uint64_t seed = 0;
  int trials = 3;
  bool use_kernel = false; // the CLI turns this on by default
  std::uint32_t prime = 2147483647u;
};

// Legal guess tuples in lexicographic order: excess(G,i) <= k'_i <= k,
// k'_i <= |E(G_i)|, and sum(k - k'_i) <= tau.
std::vector<GuessTuple> legal_guess_tuples(const EdgeColoredGraph& g, int k);

// Number of fake copies: sum over edges of (alpha - |col(e)|).
int fake_count(const EdgeColoredGraph& g);

// Parity instance for one guess tuple: direct sum of the k'_i-elongated
// cographic matroids with U_{tau,k'} on the fake copies; blocks are
// Copies(e); target q = k.
ParityInstance build_parity_instance(const EdgeColoredGraph& g, int k,
                                     const GuessTuple& t,
                                     const PrimeField& field,
                                     SplitMix64& rng);

SfesVerdict solve_simfes(const EdgeColoredGraph& g, int k,
                         const SolveOptions& opts = {});

// Exhaustive oracle over edge subsets of size <= k, smallest first,
// lexicographic. Guard: sum_{j<=k} C(m,j) <= 10^6.
SfesVerdict brute_simfes(const EdgeColoredGraph& g, int k);

} // namespace simfes
