#pragma once

#include <vector>

#include "simfes/matroids.hpp"

namespace simfes {

// One DP member: an independent set S (uniform size across the family) and
// the ids of the blocks it was assembled from.
struct WitnessedMember {
  std::vector<Label> set;
  std::vector<int> witness; // ascending block ids
};

using WitnessedFamily = std::vector<WitnessedMember>;

// (r-s)-representative subfamily of a family of independent s-sets in m,
// r = rank(m): for every B with |B| <= r-s, if some input member extends
// disjointly to an independent set with B, some output member does too.
// Members are sorted by witness lexicographic order, mapped to wedge
// vectors, and kept greedily while linearly independent; output size is
// at most C(r, s). Throws "malformed family" on dependent or odd-sized
// members.
WitnessedFamily representative(const WitnessedFamily& fam,
                               const LinearMatroid& m);

namespace detail {
// Selection core shared with the parity DP: members must already be sorted
// and independent; returns the kept indices in order. `a` must have full
// row rank.
std::vector<std::size_t> representative_select(
    const std::vector<std::vector<std::size_t>>& member_cols,
    const PrimeField& f, const FMatrix& a);
} // namespace detail

} // namespace simfes
