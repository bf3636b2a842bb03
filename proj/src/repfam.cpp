#include "simfes/repfam.hpp"

#include <algorithm>
#include <stdexcept>

namespace simfes {

namespace detail {

std::vector<std::size_t> representative_select(
    const std::vector<std::vector<std::size_t>>& member_cols,
    const PrimeField& f, const FMatrix& a) {
  std::vector<std::size_t> kept;
  if (member_cols.empty()) return kept;
  const std::size_t s = member_cols[0].size();
  const std::uint64_t dim = binom(a.rows, s);
  EchelonBasis basis(f, static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < member_cols.size(); ++i) {
    if (basis.full()) break;
    if (basis.try_insert(wedge_vector(f, a, member_cols[i]))) {
      kept.push_back(i);
    }
  }
  return kept;
}

} // namespace detail

WitnessedFamily representative(const WitnessedFamily& fam,
                               const LinearMatroid& m) {
  if (fam.empty()) return {};
  const std::size_t s = fam[0].set.size();
  if (s > m.rank()) throw std::invalid_argument("malformed family");

  WitnessedFamily sorted = fam;
  std::sort(sorted.begin(), sorted.end(),
            [](const WitnessedMember& a, const WitnessedMember& b) {
              return a.witness < b.witness;
            });

  std::vector<std::vector<std::size_t>> member_cols(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].set.size() != s) {
      throw std::invalid_argument("malformed family");
    }
    auto& cols = member_cols[i];
    cols.reserve(s);
    for (Label l : sorted[i].set) cols.push_back(m.column_of(l));
    std::sort(cols.begin(), cols.end());
    if (rank_of_columns(m.field, m.A, cols) != s) {
      throw std::invalid_argument("malformed family");
    }
  }

  WitnessedFamily out;
  for (std::size_t i : detail::representative_select(member_cols, m.field, m.A)) {
    out.push_back(sorted[i]);
  }
  return out;
}

} // namespace simfes
