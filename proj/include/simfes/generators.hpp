#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simfes/ecg.hpp"

namespace simfes {

// Vertex Cover instance; gen_vc3 requires every vertex degree exactly 3.
struct VCInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int k = 0;
};

// Hitting Set: universe 1..universe, family of subsets, budget k.
struct HSInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

// Partitioned Hitting Set: each family holds pairwise-disjoint subsets.
struct PHSInstance {
  int universe = 0;
  std::vector<std::vector<std::vector<int>>> families;
  int k = 0;
};

struct GenOutput {
  EdgeColoredGraph graph;
  int k = 0;                          // transported budget
  std::vector<std::string> comments;  // vertex-name map for the ECG file
};

// Subdivide-twice + 3-matching + mirrored copy construction with alpha = 3;
// transported budget k' = k + |E|.
GenOutput gen_vc3(const VCInstance& inst);

// One monochromatic cycle per set threading its element edges in index
// order; alpha = |sets|, budget unchanged.
GenOutput gen_hs(const HSInstance& inst);

// As gen_hs with one cycle per set, sets of a family sharing its color.
GenOutput gen_phs(const PHSInstance& inst);

// Seed-deterministic random multigraph with loops and random nonempty
// color sets.
EdgeColoredGraph gen_random(int n, int m, int alpha, std::uint64_t seed);

} // namespace simfes
