#include "simfes/maxsim_solver.hpp"

#include <stdexcept>

#include "simfes/simfes_solver.hpp"

namespace simfes {

bool simultaneous_forest_check(const EdgeColoredGraph& g,
                               const std::set<int>& f) {
  for (int id : f) {
    if (id < 1 || id > g.m()) {
      throw std::invalid_argument("unknown edge id " + std::to_string(id));
    }
  }
  std::set<int> kept_out;
  for (int id = 1; id <= g.m(); ++id) {
    if (!f.count(id)) kept_out.insert(id);
  }
  // G[F_i] acyclic for every i is the same as G_i - (E \ F) acyclic
  return verify_sfes(g, kept_out);
}

MaxSimVerdict solve_maxsim(const EdgeColoredGraph& g, int q,
                           const MaxSimOptions& opts) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  MaxSimVerdict out;
  if (q == 0) {
    out.yes = true;
    return out;
  }
  if (q > g.m()) return out;
  int forest_bound = 0; // sum over colors of (n - eta_i)
  for (int i = 1; i <= g.alpha; ++i) {
    forest_bound += g.n - components(color_subgraph(g, i));
  }
  if (q > forest_bound) return out;

  const PrimeField field(opts.prime);
  std::vector<LinearMatroid> parts;
  for (int i = 1; i <= g.alpha; ++i) {
    LinearMatroid gm = graphic(color_subgraph(g, i), field);
    std::vector<Label> labs;
    labs.reserve(gm.labels.size());
    for (Label l : gm.labels) {
      labs.push_back(CopyLabel{static_cast<int>(l), i, false}.encode());
    }
    parts.emplace_back(field, gm.A, std::move(labs));
  }
  std::vector<Label> fakes;
  for (int e = 1; e <= g.m(); ++e) {
    std::uint32_t cols = g.edges[static_cast<std::size_t>(e - 1)].colors;
    for (int j = 1; j <= g.alpha; ++j) {
      if (!(cols & (1u << (j - 1)))) {
        fakes.push_back(CopyLabel{e, j, true}.encode());
      }
    }
  }
  // U_{tau,tau} is free: fake copies never constrain the choice
  parts.push_back(uniform(fakes.size(), fakes.size(), field, &fakes));

  ParityInstance inst{direct_sum(parts), {}, q};
  for (int e = 1; e <= g.m(); ++e) {
    std::uint32_t cols = g.edges[static_cast<std::size_t>(e - 1)].colors;
    std::vector<Label> block;
    for (int j = 1; j <= g.alpha; ++j) {
      bool fake = !(cols & (1u << (j - 1)));
      block.push_back(CopyLabel{e, j, fake}.encode());
    }
    inst.blocks.push_back(std::move(block));
  }
  ParityResult pr = solve_parity(inst, opts.seed);
  if (!pr.blocks) return out;
  out.yes = true;
  for (int b : *pr.blocks) out.witness.insert(b + 1);
  if (!simultaneous_forest_check(g, out.witness)) {
    throw std::logic_error("maxsim witness failed the exact check");
  }
  return out;
}

int max_sim_forest_size(const EdgeColoredGraph& g, const MaxSimOptions& opts,
                        std::set<int>* witness_out) {
  int lo = 0, hi = g.m();
  int forest_bound = 0;
  for (int i = 1; i <= g.alpha; ++i) {
    forest_bound += g.n - components(color_subgraph(g, i));
  }
  hi = std::min(hi, forest_bound);
  std::set<int> best;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    MaxSimVerdict v = solve_maxsim(g, mid, opts);
    if (v.yes) {
      lo = mid;
      best = std::move(v.witness);
    } else {
      hi = mid - 1;
    }
  }
  if (witness_out) *witness_out = std::move(best);
  return lo;
}

} // namespace simfes
