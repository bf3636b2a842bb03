#include "simfes/simfes_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "simfes/kernelizer.hpp"

namespace simfes {

int fake_count(const EdgeColoredGraph& g) {
  int tau = 0;
  for (const auto& e : g.edges) {
    tau += g.alpha - static_cast<int>(colors_of_mask(e.colors).size());
  }
  return tau;
}

std::vector<GuessTuple> legal_guess_tuples(const EdgeColoredGraph& g, int k) {
  const int alpha = g.alpha;
  std::vector<int> lo(static_cast<std::size_t>(alpha)),
      hi(static_cast<std::size_t>(alpha));
  for (int i = 1; i <= alpha; ++i) {
    Multigraph h = color_subgraph(g, i);
    int mi = static_cast<int>(h.edges.size());
    lo[static_cast<std::size_t>(i - 1)] = mi - g.n + components(h);
    hi[static_cast<std::size_t>(i - 1)] = std::min(k, mi);
  }
  std::vector<GuessTuple> out;
  for (int i = 0; i < alpha; ++i) {
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) {
      return out; // some color cannot fit its budget
    }
  }
  const int tau = fake_count(g);
  GuessTuple t = lo;
  for (;;) {
    int fake_budget = 0;
    for (int i = 0; i < alpha; ++i) {
      fake_budget += k - t[static_cast<std::size_t>(i)];
    }
    if (fake_budget <= tau) out.push_back(t);
    int pos = alpha - 1;
    while (pos >= 0 &&
           t[static_cast<std::size_t>(pos)] == hi[static_cast<std::size_t>(pos)]) {
      t[static_cast<std::size_t>(pos)] = lo[static_cast<std::size_t>(pos)];
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

ParityInstance build_parity_instance(const EdgeColoredGraph& g, int k,
                                     const GuessTuple& t,
                                     const PrimeField& field,
                                     SplitMix64& rng) {
  const int alpha = g.alpha;
  if (static_cast<int>(t.size()) != alpha) {
    throw std::invalid_argument("guess tuple arity mismatch");
  }
  int fake_budget = 0;
  std::vector<LinearMatroid> parts;
  parts.reserve(static_cast<std::size_t>(alpha) + 1);
  for (int i = 1; i <= alpha; ++i) {
    const int budget = t[static_cast<std::size_t>(i - 1)];
    Multigraph h = color_subgraph(g, i);
    if (budget > k || budget > static_cast<int>(h.edges.size())) {
      throw std::invalid_argument("guess tuple out of range");
    }
    fake_budget += k - budget;
    LinearMatroid cog = cographic(h, field);
    std::vector<Label> labs;
    labs.reserve(cog.labels.size());
    for (Label l : cog.labels) {
      labs.push_back(CopyLabel{static_cast<int>(l), i, false}.encode());
    }
    LinearMatroid named(field, cog.A, std::move(labs));
    parts.push_back(elongation(named, static_cast<std::size_t>(budget), rng));
  }
  std::vector<Label> fakes;
  for (int e = 1; e <= g.m(); ++e) {
    std::uint32_t cols = g.edges[static_cast<std::size_t>(e - 1)].colors;
    for (int j = 1; j <= alpha; ++j) {
      if (!(cols & (1u << (j - 1)))) {
        fakes.push_back(CopyLabel{e, j, true}.encode());
      }
    }
  }
  if (fake_budget > static_cast<int>(fakes.size())) {
    throw std::invalid_argument("guess tuple exceeds the fake supply");
  }
  parts.push_back(uniform(fakes.size(), static_cast<std::size_t>(fake_budget),
                          field, &fakes));
  ParityInstance inst{direct_sum(parts), {}, k};
  for (int e = 1; e <= g.m(); ++e) {
    std::uint32_t cols = g.edges[static_cast<std::size_t>(e - 1)].colors;
    std::vector<Label> block;
    block.reserve(static_cast<std::size_t>(alpha));
    for (int j = 1; j <= alpha; ++j) {
      bool fake = !(cols & (1u << (j - 1)));
      block.push_back(CopyLabel{e, j, fake}.encode());
    }
    inst.blocks.push_back(std::move(block));
  }
  return inst;
}

namespace {

void check_witness(const EdgeColoredGraph& g, int k,
                   const std::set<int>& witness) {
  if (static_cast<int>(witness.size()) > k || !verify_sfes(g, witness)) {
    throw std::logic_error("solver produced an invalid witness");
  }
}

} // namespace

SfesVerdict solve_simfes(const EdgeColoredGraph& g, int k,
                         const SolveOptions& opts) {
  SfesVerdict out;
  if (k < 0) return out;

  if (opts.use_kernel) {
    KernelResult kr = kernelize(g, k, true);
    if (kr.verdict == KernelVerdict::kNo) return out;
    if (kr.verdict == KernelVerdict::kYes) {
      out.yes = true;
      out.witness.insert(kr.forced_edges.begin(), kr.forced_edges.end());
      check_witness(g, k, out.witness);
      return out;
    }
    SolveOptions raw = opts;
    raw.use_kernel = false;
    SfesVerdict inner = solve_simfes(kr.reduced, kr.k_reduced, raw);
    out.guesses_tried = inner.guesses_tried;
    out.trials_used = inner.trials_used;
    if (!inner.yes) return out;
    out.yes = true;
    for (int id : inner.witness) {
      out.witness.insert(
          kr.kernel_edge_origin[static_cast<std::size_t>(id - 1)]);
    }
    out.witness.insert(kr.forced_edges.begin(), kr.forced_edges.end());
    check_witness(g, k, out.witness);
    return out;
  }

  for (int i = 1; i <= g.alpha; ++i) {
    if (excess(g, i) > k) return out; // NO without any parity call
  }
  if (k >= g.m()) {
    out.yes = true;
    for (int e = 1; e <= g.m(); ++e) out.witness.insert(e);
    check_witness(g, k, out.witness);
    return out;
  }

  const PrimeField field(opts.prime);
  const std::vector<GuessTuple> tuples = legal_guess_tuples(g, k);
  const int trials = std::max(1, opts.trials);
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t sweep_seed =
        mix_seed(opts.seed, static_cast<std::uint64_t>(trial));
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      ++out.guesses_tried;
      SplitMix64 rng(mix_seed(sweep_seed, ti));
      ParityInstance inst =
          build_parity_instance(g, k, tuples[ti], field, rng);
      ParityResult pr = solve_parity(inst, mix_seed(sweep_seed, ti ^ 0x9e37ull));
      if (pr.blocks) {
        out.yes = true;
        out.trials_used = trial + 1;
        for (int b : *pr.blocks) out.witness.insert(b + 1);
        check_witness(g, k, out.witness);
        return out;
      }
    }
    out.trials_used = trial + 1;
  }
  return out;
}

SfesVerdict brute_simfes(const EdgeColoredGraph& g, int k) {
  SfesVerdict out;
  if (k < 0) return out;
  const int m = g.m();
  const int kk = std::min(k, m);
  std::uint64_t total = 0;
  for (int j = 0; j <= kk; ++j) {
    total += binom(static_cast<std::uint64_t>(m),
                   static_cast<std::uint64_t>(j));
    if (total > 1000000ull) {
      throw std::runtime_error("instance too large for oracle");
    }
  }
  for (int size = 0; size <= kk; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
      std::set<int> cand(idx.begin(), idx.end());
      if (verify_sfes(g, cand)) {
        out.yes = true;
        out.witness = std::move(cand);
        return out;
      }
      if (size == 0) break;
      int a = size - 1;
      while (a >= 0 && idx[static_cast<std::size_t>(a)] == m - size + a + 1) {
        --a;
      }
      if (a < 0) break;
      ++idx[static_cast<std::size_t>(a)];
      for (int b = a + 1; b < size; ++b) {
        idx[static_cast<std::size_t>(b)] =
            idx[static_cast<std::size_t>(b - 1)] + 1;
      }
    }
  }
  return out;
}

} // namespace simfes
