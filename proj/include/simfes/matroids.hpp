#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "simfes/ecg.hpp"
#include "simfes/ffield.hpp"
#include "simfes/rng.hpp"

namespace simfes {

using Label = std::int64_t;

// Linear matroid: full-row-rank matrix over F_p with one labeled column per
// ground element. Immutable after construction.
struct LinearMatroid {
  PrimeField field;
  FMatrix A;                 // rank(A) == A.rows
  std::vector<Label> labels; // one per column, pairwise distinct

  LinearMatroid(PrimeField f, FMatrix mat, std::vector<Label> labs);

  std::size_t rank() const { return A.rows; }
  std::size_t ground_size() const { return labels.size(); }
  std::size_t column_of(Label l) const;
  bool has_label(Label l) const { return col_of_.count(l) != 0; }

private:
  std::unordered_map<Label, std::size_t> col_of_;
};

// Forest matroid of H via the signed incidence matrix, row-reduced.
// Column set independent iff the corresponding edges form a forest.
// Labels are the edge ids of H.
LinearMatroid graphic(const Multigraph& h, const PrimeField& f);

// Dual matroid; labels keep their original column order.
LinearMatroid dual(const LinearMatroid& m);

// dual(graphic(H)): independent iff deletion preserves the component count.
LinearMatroid cographic(const Multigraph& h, const PrimeField& f);

// U_{tau,r} as an r x tau Vandermonde matrix on points 1..tau.
// Labels default to 0..tau-1 unless given.
LinearMatroid uniform(std::size_t tau, std::size_t r, const PrimeField& f,
                      const std::vector<Label>* labels = nullptr);

// l-elongation by stacking l - rank(m) random rows; verifies the rank and
// resamples up to 5 times. Randomness is one-sided: a set independent in
// the true elongation may come out dependent, never the reverse.
LinearMatroid elongation(const LinearMatroid& m, std::size_t l,
                         SplitMix64& rng);

LinearMatroid direct_sum(const std::vector<LinearMatroid>& ms);

bool is_independent(const LinearMatroid& m, const std::vector<Label>& set);

} // namespace simfes
