#pragma once

#include <cstdint>
#include <set>

#include "simfes/ecg.hpp"
#include "simfes/parity.hpp"

namespace simfes {

struct MaxSimVerdict {
  bool yes = false;
  std::set<int> witness; // edge ids forming a simultaneous forest, size q
};

struct MaxSimOptions {
  std::uint64_t seed = 0;
  std::uint32_t prime = 2147483647u;
};

// Exact per-color forest check of an edge subset.
bool simultaneous_forest_check(const EdgeColoredGraph& g,
                               const std::set<int>& f);

// Decision: is there a simultaneous forest with exactly q edges?
// Reduction to alpha-matroid parity on graphic matroids plus an identity
// block for the fake copies.
MaxSimVerdict solve_maxsim(const EdgeColoredGraph& g, int q,
                           const MaxSimOptions& opts = {});

// Largest q with a YES answer, by binary search over the decision
// procedure; fills *witness_out when given.
int max_sim_forest_size(const EdgeColoredGraph& g,
                        const MaxSimOptions& opts = {},
                        std::set<int>* witness_out = nullptr);

} // namespace simfes
