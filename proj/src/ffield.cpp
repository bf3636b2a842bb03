#include "simfes/ffield.hpp"

#include <stdexcept>
#include <string>

#include "simfes/rowkernels.hpp"

namespace simfes {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (p <= 2 || p > 2147483647u) {
    throw std::invalid_argument("field modulus must be an odd prime < 2^31");
  }
  if (!is_prime_u32(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p;
  std::uint32_t b = a % p;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p == 0) throw std::domain_error("division by zero");
  return pow(a, p - 2);
}

std::vector<std::uint32_t> FMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

std::size_t rank(const PrimeField& f, FMatrix m) {
  std::size_t rr = 0;
  for (std::size_t c = 0; c < m.cols && rr < m.rows; ++c) {
    // partial pivoting by lowest row index
    std::size_t piv = rr;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rr) {
      for (std::size_t j = c; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(rr, j));
    }
    std::uint32_t ipiv = f.inv(m.at(rr, c));
    for (std::size_t i = rr + 1; i < m.rows; ++i) {
      std::uint32_t v = m.at(i, c);
      if (v == 0) continue;
      std::uint32_t coef = f.neg(f.mul(v, ipiv));
      kernels::addmul_row(m.row_ptr(i) + c, m.row_ptr(rr) + c, coef,
                          m.cols - c, f.p);
    }
    ++rr;
  }
  return rr;
}

std::size_t rank_of_columns(const PrimeField& f, const FMatrix& m,
                            const std::vector<std::size_t>& cols) {
  FMatrix sub(m.rows, cols.size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      sub.at(r, j) = m.at(r, cols[j]);
    }
  }
  return rank(f, std::move(sub));
}

StandardForm standard_form(const PrimeField& f, FMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < m.cols && rr < m.rows; ++c) {
    std::size_t piv = rr;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rr) {
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(rr, j));
    }
    std::uint32_t ipiv = f.inv(m.at(rr, c));
    kernels::scale_row(m.row_ptr(rr), ipiv, m.cols, f.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rr) continue;
      std::uint32_t v = m.at(i, c);
      if (v == 0) continue;
      kernels::addmul_row(m.row_ptr(i), m.row_ptr(rr), f.neg(v), m.cols, f.p);
    }
    pivots.push_back(c);
    ++rr;
  }
  FMatrix out(rr, m.cols);
  std::copy(m.a.begin(), m.a.begin() + rr * m.cols, out.a.begin());
  return {std::move(out), std::move(pivots)};
}

bool EchelonBasis::try_insert(std::vector<std::uint32_t> v) {
  if (v.size() != dim_) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  if (pivot_to_row_.empty()) pivot_to_row_.assign(dim_, -1);
  std::size_t x = 0;
  for (;;) {
    while (x < dim_ && v[x] == 0) ++x;
    if (x == dim_) return false;
    std::int64_t ri = pivot_to_row_[x];
    if (ri < 0) break;
    const auto& row = rows_[static_cast<std::size_t>(ri)];
    kernels::addmul_row(v.data() + x, row.data() + x, f_.neg(v[x]), dim_ - x,
                        f_.p);
    ++x; // v[x] is now zero and earlier coordinates were untouched
  }
  kernels::scale_row(v.data() + x, f_.inv(v[x]), dim_ - x, f_.p);
  pivot_to_row_[x] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(x);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> max_independent_subset(
    const PrimeField& f, const std::vector<std::vector<std::uint32_t>>& vecs) {
  std::vector<std::size_t> kept;
  if (vecs.empty()) return kept;
  std::size_t dim = vecs[0].size();
  for (const auto& v : vecs) {
    if (v.size() != dim) {
      throw std::invalid_argument("vectors of unequal length");
    }
  }
  EchelonBasis basis(f, dim);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (basis.full()) break;
    if (basis.try_insert(vecs[i])) kept.push_back(i);
  }
  return kept;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i);
    t /= i; // exact: r already contains C(n-k+i-1, i-1) * ... divisibility
    if (t > kBinomCap) return kBinomCap;
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

SubsetRanker::SubsetRanker(unsigned r, unsigned t) : r_(r), t_(t) {
  count_ = binom(r, t);
  prefix_.assign(t, std::vector<std::uint64_t>(r + 1, 0));
  for (unsigned a = 0; a < t; ++a) {
    for (unsigned x = 0; x < r; ++x) {
      // completions when slot a takes value x: choose t-1-a from above x
      prefix_[a][x + 1] = prefix_[a][x] + binom(r - 1 - x, t - 1 - a);
    }
  }
}

std::uint64_t SubsetRanker::rank(const std::vector<unsigned>& subset) const {
  std::uint64_t rk = 0;
  unsigned prev = 0; // lower bound (exclusive start) for slot values
  for (unsigned a = 0; a < t_; ++a) {
    rk += prefix_[a][subset[a]] - prefix_[a][prev];
    prev = subset[a] + 1;
  }
  return rk;
}

namespace {

bool next_subset(std::vector<unsigned>& I, unsigned r) {
  unsigned t = static_cast<unsigned>(I.size());
  for (unsigned a = t; a-- > 0;) {
    if (I[a] != r - t + a) {
      ++I[a];
      for (unsigned b = a + 1; b < t; ++b) I[b] = I[b - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

std::vector<std::uint32_t> wedge_vector(const PrimeField& f, const FMatrix& A,
                                        const std::vector<std::size_t>& S) {
  const std::size_t r = A.rows;
  const std::size_t s = S.size();
  if (s > r) throw std::invalid_argument("set larger than rank");
  if (binom(r, s) > (1ull << 26)) {
    throw std::length_error("wedge vector too large");
  }
  std::vector<std::uint32_t> prev = {1 % f.p}; // t = 0: empty determinant
  SubsetRanker prev_ranker(static_cast<unsigned>(r), 0);
  std::vector<unsigned> J(s);
  for (std::size_t t = 1; t <= s; ++t) {
    std::vector<std::uint32_t> col = A.column(S[t - 1]);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(
        binom(r, t)), 0);
    std::vector<unsigned> I(t);
    for (unsigned a = 0; a < t; ++a) I[a] = a;
    std::size_t idx = 0;
    do {
      std::uint32_t acc = 0;
      for (unsigned a = 0; a < t; ++a) {
        std::uint32_t coef = col[I[a]];
        if (coef == 0) continue;
        // J = I minus slot a; the ranker only reads the first t-1 slots
        for (unsigned b = 0, w = 0; b < t; ++b) {
          if (b != a) J[w++] = I[b];
        }
        std::uint32_t term = f.mul(coef, prev[prev_ranker.rank(J)]);
        // cofactor sign (-1)^(t-1-a) for expansion along the last column
        acc = ((t - 1 - a) & 1) ? f.sub(acc, term) : f.add(acc, term);
      }
      cur[idx++] = acc;
    } while (next_subset(I, static_cast<unsigned>(r)));
    prev = std::move(cur);
    prev_ranker = SubsetRanker(static_cast<unsigned>(r),
                               static_cast<unsigned>(t));
  }
  return prev;
}

} // namespace simfes
