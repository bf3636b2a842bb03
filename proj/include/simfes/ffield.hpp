#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace simfes {

// Prime field F_p. p < 2^31 so that products of two residues fit in a
// 64-bit word before reduction.
struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime = 2147483647u);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Multiplicative inverse; throws on a == 0 ("division by zero").
  std::uint32_t inv(std::uint32_t a) const;
};

bool is_prime_u32(std::uint32_t n);

// Dense row-major matrix of residues in [0, p).
struct FMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  FMatrix() = default;
  FMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  std::uint32_t* row_ptr(std::size_t r) { return a.data() + r * cols; }
  const std::uint32_t* row_ptr(std::size_t r) const {
    return a.data() + r * cols;
  }
  std::vector<std::uint32_t> column(std::size_t c) const;
  bool operator==(const FMatrix&) const = default;
};

std::size_t rank(const PrimeField& f, FMatrix m);
std::size_t rank_of_columns(const PrimeField& f, const FMatrix& m,
                            const std::vector<std::size_t>& cols);

// Row-reduced form: rank(m) rows, no zero rows, identity on the pivot
// columns. Column dependencies of the input are preserved.
struct StandardForm {
  FMatrix mat;
  std::vector<std::size_t> pivot_cols;
};
StandardForm standard_form(const PrimeField& f, FMatrix m);

// Incremental Gaussian basis for fixed-dimension vectors. Stored rows keep
// the invariant "pivot = first nonzero coordinate, normalized to 1, zeros
// before it", so insertion reduces coordinates in ascending order.
class EchelonBasis {
public:
  EchelonBasis(const PrimeField& f, std::size_t dim) : f_(f), dim_(dim) {}

  // Absorbs v and returns true iff v is independent of the current span.
  bool try_insert(std::vector<std::uint32_t> v);
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  bool full() const { return rows_.size() == dim_; }

private:
  PrimeField f_;
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_to_row_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Greedy maximal independent subfamily, in ascending index order.
std::vector<std::size_t> max_independent_subset(
    const PrimeField& f, const std::vector<std::vector<std::uint32_t>>& vecs);

// Saturating binomial coefficient (caps at kBinomCap).
inline constexpr std::uint64_t kBinomCap = 1ull << 62;
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// Lex rank of t-subsets of [0, r). Table-driven so a rank query is O(t).
class SubsetRanker {
public:
  SubsetRanker(unsigned r, unsigned t);
  std::uint64_t rank(const std::vector<unsigned>& subset) const;
  std::uint64_t count() const { return count_; }

private:
  unsigned r_, t_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint64_t>> prefix_; // [slot][x]
};

// All coordinates det(A[I, S]) over row subsets I of size |S|, in lex order
// of I. Zero vector iff the columns S are linearly dependent.
std::vector<std::uint32_t> wedge_vector(const PrimeField& f, const FMatrix& A,
                                        const std::vector<std::size_t>& S);

} // namespace simfes
