#include "simfes/matroids.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simfes {

LinearMatroid::LinearMatroid(PrimeField f, FMatrix mat,
                             std::vector<Label> labs)
    : field(f), A(std::move(mat)), labels(std::move(labs)) {
  if (A.cols != labels.size()) {
    throw std::invalid_argument("one label per column required");
  }
  col_of_.reserve(labels.size());
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (!col_of_.emplace(labels[j], j).second) {
      throw std::invalid_argument("duplicate ground label");
    }
  }
}

std::size_t LinearMatroid::column_of(Label l) const {
  auto it = col_of_.find(l);
  if (it == col_of_.end()) {
    throw std::invalid_argument("unknown label " + std::to_string(l));
  }
  return it->second;
}

LinearMatroid graphic(const Multigraph& h, const PrimeField& f) {
  FMatrix inc(static_cast<std::size_t>(h.n), h.edges.size());
  std::vector<Label> labels(h.edges.size());
  for (std::size_t j = 0; j < h.edges.size(); ++j) {
    const auto& e = h.edges[j];
    labels[j] = e.id;
    if (e.u != e.v) { // a loop keeps a zero column (circuit of size one)
      int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      inc.at(static_cast<std::size_t>(lo - 1), j) = 1;
      inc.at(static_cast<std::size_t>(hi - 1), j) = f.p - 1;
    }
  }
  StandardForm sf = standard_form(f, std::move(inc));
  return LinearMatroid(f, std::move(sf.mat), std::move(labels));
}

LinearMatroid dual(const LinearMatroid& m) {
  const PrimeField& f = m.field;
  StandardForm sf = standard_form(f, m.A);
  const std::size_t r = sf.mat.rows;
  const std::size_t n = m.A.cols;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : sf.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> nonpivot;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) nonpivot.push_back(c);
  }
  // B[:, nonpivot] = I, B[:, pivot] = -D^T where D = R[:, nonpivot];
  // original column order is restored so labels never move.
  FMatrix B(n - r, n);
  for (std::size_t i = 0; i < nonpivot.size(); ++i) {
    B.at(i, nonpivot[i]) = 1;
  }
  for (std::size_t i = 0; i < nonpivot.size(); ++i) {
    for (std::size_t a = 0; a < r; ++a) {
      B.at(i, sf.pivot_cols[a]) = f.neg(sf.mat.at(a, nonpivot[i]));
    }
  }
  return LinearMatroid(f, std::move(B), m.labels);
}

LinearMatroid cographic(const Multigraph& h, const PrimeField& f) {
  return dual(graphic(h, f));
}

LinearMatroid uniform(std::size_t tau, std::size_t r, const PrimeField& f,
                      const std::vector<Label>* labels) {
  if (r > tau) throw std::invalid_argument("uniform matroid needs r <= tau");
  if (f.p <= tau) {
    throw std::invalid_argument("field size must exceed the ground size");
  }
  FMatrix A(r, tau);
  for (std::size_t j = 0; j < tau; ++j) {
    std::uint32_t x = static_cast<std::uint32_t>(j + 1); // distinct, nonzero
    std::uint32_t pw = 1;
    for (std::size_t i = 0; i < r; ++i) {
      A.at(i, j) = pw;
      pw = f.mul(pw, x);
    }
  }
  std::vector<Label> labs;
  if (labels) {
    labs = *labels;
    if (labs.size() != tau) {
      throw std::invalid_argument("label count mismatch");
    }
  } else {
    labs.resize(tau);
    for (std::size_t j = 0; j < tau; ++j) labs[j] = static_cast<Label>(j);
  }
  return LinearMatroid(f, std::move(A), std::move(labs));
}

LinearMatroid elongation(const LinearMatroid& m, std::size_t l,
                         SplitMix64& rng) {
  if (l < m.rank() || l > m.ground_size()) {
    throw std::invalid_argument("elongation rank out of range");
  }
  if (l == m.rank()) return m;
  const PrimeField& f = m.field;
  for (int attempt = 0; attempt < 5; ++attempt) {
    FMatrix A(l, m.A.cols);
    std::copy(m.A.a.begin(), m.A.a.end(), A.a.begin());
    for (std::size_t i = m.rank(); i < l; ++i) {
      for (std::size_t j = 0; j < A.cols; ++j) {
        A.at(i, j) = static_cast<std::uint32_t>(rng.below(f.p));
      }
    }
    if (rank(f, A) == l) {
      return LinearMatroid(f, std::move(A), m.labels);
    }
  }
  throw std::runtime_error("elongation sampling failed");
}

LinearMatroid direct_sum(const std::vector<LinearMatroid>& ms) {
  if (ms.empty()) throw std::invalid_argument("empty direct sum");
  const PrimeField& f = ms[0].field;
  std::size_t rows = 0, cols = 0;
  for (const auto& m : ms) {
    if (m.field.p != f.p) throw std::invalid_argument("field mismatch");
    rows += m.rank();
    cols += m.ground_size();
  }
  FMatrix A(rows, cols);
  std::vector<Label> labels;
  labels.reserve(cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < m.A.rows; ++i) {
      for (std::size_t j = 0; j < m.A.cols; ++j) {
        A.at(r0 + i, c0 + j) = m.A.at(i, j);
      }
    }
    labels.insert(labels.end(), m.labels.begin(), m.labels.end());
    r0 += m.A.rows;
    c0 += m.A.cols;
  }
  return LinearMatroid(f, std::move(A), std::move(labels)); // ctor rejects label clashes
}

bool is_independent(const LinearMatroid& m, const std::vector<Label>& set) {
  std::vector<std::size_t> cols;
  cols.reserve(set.size());
  for (Label l : set) cols.push_back(m.column_of(l));
  return rank_of_columns(m.field, m.A, cols) == cols.size();
}

} // namespace simfes
