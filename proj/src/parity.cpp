#include "simfes/parity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "simfes/repfam.hpp"
#include "simfes/rng.hpp"
#include "simfes/rowkernels.hpp"

namespace simfes {

void validate_parity(const ParityInstance& inst) {
  if (inst.q < 0) throw std::invalid_argument("malformed blocks: q < 0");
  const std::size_t alpha =
      inst.blocks.empty() ? 0 : inst.blocks[0].size();
  std::set<Label> seen;
  for (const auto& b : inst.blocks) {
    if (b.empty() || b.size() != alpha) {
      throw std::invalid_argument("malformed blocks: uneven block sizes");
    }
    for (Label l : b) {
      inst.matroid.column_of(l); // throws on unknown labels
      if (!seen.insert(l).second) {
        throw std::invalid_argument("malformed blocks: blocks overlap");
      }
    }
  }
}

namespace {

// Column echelon of one DP member, flat storage so copies stay cheap.
// Stored vectors keep zeros before their pivot and a unit pivot.
struct MemberState {
  std::vector<std::uint32_t> data; // count x dim
  std::vector<std::int16_t> pivot_slot; // dim entries, -1 = free
  std::size_t count = 0;
  std::vector<int> witness;

  explicit MemberState(std::size_t dim)
      : pivot_slot(dim, static_cast<std::int16_t>(-1)) {}

  bool add_column(const PrimeField& f, const std::uint32_t* col,
                  std::size_t dim, std::vector<std::uint32_t>& scratch) {
    scratch.assign(col, col + dim);
    std::size_t x = 0;
    for (;;) {
      while (x < dim && scratch[x] == 0) ++x;
      if (x == dim) return false;
      std::int16_t slot = pivot_slot[x];
      if (slot < 0) break;
      kernels::addmul_row(scratch.data() + x,
                          data.data() + static_cast<std::size_t>(slot) * dim + x,
                          f.neg(scratch[x]), dim - x, f.p);
      ++x;
    }
    kernels::scale_row(scratch.data() + x, f.inv(scratch[x]), dim - x, f.p);
    pivot_slot[x] = static_cast<std::int16_t>(count);
    data.insert(data.end(), scratch.begin(), scratch.end());
    ++count;
    return true;
  }
};

FMatrix truncate_matrix(const PrimeField& f, const FMatrix& a,
                        std::size_t target_rows, std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x74727563ull));
  for (int attempt = 0; attempt < 5; ++attempt) {
    FMatrix out(target_rows, a.cols);
    for (std::size_t i = 0; i < target_rows; ++i) {
      for (std::size_t k = 0; k < a.rows; ++k) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.below(f.p));
        if (c) {
          kernels::addmul_row(out.row_ptr(i), a.row_ptr(k), c, a.cols, f.p);
        }
      }
    }
    if (rank(f, out) == target_rows) return out;
  }
  throw std::runtime_error("truncation sampling failed");
}

} // namespace

ParityResult solve_parity(const ParityInstance& inst, std::uint64_t seed) {
  validate_parity(inst);
  const int q = inst.q;
  if (q == 0) return {std::vector<int>{}, -1};
  const std::size_t block_count = inst.blocks.size();
  if (static_cast<std::size_t>(q) > block_count) return {std::nullopt, 0};
  const std::size_t alpha = inst.blocks[0].size();
  const std::uint64_t need = static_cast<std::uint64_t>(q) * alpha;
  if (need > inst.matroid.rank()) return {std::nullopt, 0};

  const PrimeField& f = inst.matroid.field;
  // Random truncation to rank q*alpha keeps the DP's wedge dimension at
  // C(q*alpha, j*alpha); one-sided like the elongation sampling.
  FMatrix A = (inst.matroid.rank() > need)
                  ? truncate_matrix(f, inst.matroid.A,
                                    static_cast<std::size_t>(need), seed)
                  : inst.matroid.A;
  const std::size_t r = A.rows;

  std::vector<std::vector<std::size_t>> bcols(block_count);
  std::vector<std::vector<std::vector<std::uint32_t>>> bvecs(block_count);
  for (std::size_t b = 0; b < block_count; ++b) {
    for (Label l : inst.blocks[b]) {
      bcols[b].push_back(inst.matroid.column_of(l));
    }
    std::sort(bcols[b].begin(), bcols[b].end());
    for (std::size_t c : bcols[b]) bvecs[b].push_back(A.column(c));
  }

  std::vector<std::uint32_t> scratch;
  std::vector<MemberState> cur;
  cur.emplace_back(r);

  for (int j = 1; j <= q; ++j) {
    const bool last = (j == q);
    const std::uint64_t cap = binom(r, static_cast<std::uint64_t>(j) * alpha);
    std::vector<MemberState> next;
    for (const MemberState& member : cur) {
      const int bmin = member.witness.empty() ? 0 : member.witness.back() + 1;
      const int bmax = static_cast<int>(block_count) - (q - j);
      for (int b = bmin; b < bmax; ++b) {
        MemberState cand = member;
        bool ok = true;
        for (const auto& col : bvecs[static_cast<std::size_t>(b)]) {
          if (!cand.add_column(f, col.data(), r, scratch)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        cand.witness.push_back(b);
        if (last) return {std::move(cand.witness), -1};
        next.push_back(std::move(cand));
      }
    }
    if (last) return {std::nullopt, q};
    if (next.empty()) return {std::nullopt, j};
    if (next.size() > cap) {
      // extensions outgrew the wedge dimension: prune to a representative
      // subfamily (candidates are already in witness-lex order)
      std::vector<std::vector<std::size_t>> member_cols(next.size());
      for (std::size_t i = 0; i < next.size(); ++i) {
        for (int b : next[i].witness) {
          auto& mc = member_cols[i];
          mc.insert(mc.end(), bcols[static_cast<std::size_t>(b)].begin(),
                    bcols[static_cast<std::size_t>(b)].end());
        }
        std::sort(member_cols[i].begin(), member_cols[i].end());
      }
      std::vector<std::size_t> keep =
          detail::representative_select(member_cols, f, A);
      std::vector<MemberState> pruned;
      pruned.reserve(keep.size());
      for (std::size_t i : keep) pruned.push_back(std::move(next[i]));
      next = std::move(pruned);
    }
    cur = std::move(next);
  }
  return {std::nullopt, q}; // not reached; levels handle all exits
}

ParityResult brute_parity(const ParityInstance& inst) {
  validate_parity(inst);
  const int q = inst.q;
  if (q == 0) return {std::vector<int>{}, -1};
  const std::size_t block_count = inst.blocks.size();
  if (static_cast<std::size_t>(q) > block_count) return {std::nullopt, 0};
  if (binom(block_count, static_cast<std::uint64_t>(q)) > 1000000ull) {
    throw std::runtime_error("instance too large for oracle");
  }
  const PrimeField& f = inst.matroid.field;
  std::vector<int> idx(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::vector<std::size_t> cols;
    for (int b : idx) {
      for (Label l : inst.blocks[static_cast<std::size_t>(b)]) {
        cols.push_back(inst.matroid.column_of(l));
      }
    }
    if (rank_of_columns(f, inst.matroid.A, cols) == cols.size()) {
      return {idx, -1};
    }
    // next q-subset in lexicographic order
    int a = q - 1;
    while (a >= 0 &&
           idx[static_cast<std::size_t>(a)] ==
               static_cast<int>(block_count) - q + a) {
      --a;
    }
    if (a < 0) break;
    ++idx[static_cast<std::size_t>(a)];
    for (int b2 = a + 1; b2 < q; ++b2) {
      idx[static_cast<std::size_t>(b2)] = idx[static_cast<std::size_t>(b2 - 1)] + 1;
    }
  }
  return {std::nullopt, q};
}

} // namespace simfes
