#pragma once

#include <functional>
#include <string>
#include <vector>

#include "simfes/ecg.hpp"

namespace simfes {

enum class KernelVerdict { kYes, kNo, kReduced };

struct TraceStep {
  int rule = 0; // 1..6 = reduction rules, 7 = signature collapse
  std::string note;
};

// Called after every applied step with the instance as it then stands.
using KernelObserver =
    std::function<void(const EdgeColoredGraph&, int k, const TraceStep&)>;

struct KernelResult {
  KernelVerdict verdict = KernelVerdict::kReduced;
  EdgeColoredGraph reduced; // final instance (possibly empty on YES/NO)
  int k_reduced = 0;
  std::vector<TraceStep> trace;
  // Original ids of the loop edges rule 3 committed to the solution.
  std::vector<int> forced_edges;
  // Per reduced edge (id-1): an original edge id whose deletion covers it.
  std::vector<int> kernel_edge_origin;
  int kernel_vertices = 0;
};

// Rules 1-6 applied exhaustively; after any change the scan restarts from
// rule 1. Rule 3 deletes the loop edge itself and decrements k (the vertex
// then falls to rule 4 once isolated).
KernelResult apply_rules(const EdgeColoredGraph& g, int k,
                         const KernelObserver& obs = nullptr);

// Full pipeline: rules 1-6, then (when `signature`) the per-color
// path-signature collapse with rules re-applied after every removal.
// Returns NO when some color keeps more than k excess edges.
KernelResult kernelize(const EdgeColoredGraph& g, int k,
                       bool signature = true,
                       const KernelObserver& obs = nullptr);

} // namespace simfes
