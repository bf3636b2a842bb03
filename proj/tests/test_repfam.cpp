#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "simfes/repfam.hpp"

using namespace simfes;

namespace {

const PrimeField kF(2147483647u);

LinearMatroid free2_with_sum() {
  // columns (1,0), (0,1), (1,1) labeled a=0, b=1, c=2
  FMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(0, 2) = 1;
  m.at(1, 2) = 1;
  return LinearMatroid(kF, m, {0, 1, 2});
}

std::vector<std::vector<Label>> independent_subsets(const LinearMatroid& m,
                                                    std::size_t size) {
  std::vector<std::vector<Label>> out;
  const std::size_t n = m.ground_size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    std::vector<Label> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(m.labels[i]);
    }
    if (is_independent(m, s)) out.push_back(std::move(s));
  }
  return out;
}

WitnessedFamily family_of_all(const LinearMatroid& m, std::size_t size) {
  WitnessedFamily fam;
  int w = 0;
  for (auto& s : independent_subsets(m, size)) {
    fam.push_back({s, {w++}});
  }
  return fam;
}

bool extends(const LinearMatroid& m, const std::vector<Label>& s,
             const std::vector<Label>& b) {
  for (Label x : b) {
    if (std::find(s.begin(), s.end(), x) != s.end()) return false;
  }
  std::vector<Label> u = s;
  u.insert(u.end(), b.begin(), b.end());
  return is_independent(m, u);
}

// exhaustive check of the representative-family contract
void check_representative(const LinearMatroid& m) {
  const std::size_t r = m.rank();
  const std::size_t n = m.ground_size();
  for (std::size_t s = 0; s <= r; ++s) {
    WitnessedFamily fam = family_of_all(m, s);
    WitnessedFamily rep = representative(fam, m);
    CHECK(rep.size() <= binom(r, s));
    CHECK(rep.size() <= fam.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > r - s) continue;
      std::vector<Label> b;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) b.push_back(m.labels[i]);
      }
      bool any_in = false, any_out = false;
      for (const auto& mem : fam) any_in = any_in || extends(m, mem.set, b);
      for (const auto& mem : rep) any_out = any_out || extends(m, mem.set, b);
      CHECK(any_in == any_out);
    }
  }
}

} // namespace

TEST_CASE("families of bases keep one member") {
  LinearMatroid m = free2_with_sum();
  WitnessedFamily fam = family_of_all(m, 2);
  CHECK(fam.size() == 3); // {a,b},{a,c},{b,c}
  WitnessedFamily rep = representative(fam, m);
  CHECK(rep.size() == 1);
}

TEST_CASE("duplicate direction is dropped") {
  LinearMatroid m = free2_with_sum();
  WitnessedFamily fam = {{{0}, {0}}, {{1}, {1}}, {{2}, {2}}};
  WitnessedFamily rep = representative(fam, m);
  REQUIRE(rep.size() == 2); // third wedge vector is the sum of the first two
  CHECK(rep[0].set == std::vector<Label>{0});
  CHECK(rep[1].set == std::vector<Label>{1});
}

TEST_CASE("empty family maps to empty") {
  LinearMatroid m = free2_with_sum();
  CHECK(representative({}, m).empty());
}

TEST_CASE("malformed families are rejected") {
  LinearMatroid m = free2_with_sum();
  CHECK_THROWS(representative({{{0, 1}, {0}}, {{2}, {1}}}, m)); // sizes differ
  CHECK_THROWS(representative({{{0, 1, 2}, {0}}}, m)); // dependent member
}

TEST_CASE("selection is deterministic and witness-sorted") {
  LinearMatroid m = free2_with_sum();
  WitnessedFamily fam = {{{2}, {5}}, {{0}, {3}}, {{1}, {4}}};
  WitnessedFamily rep1 = representative(fam, m);
  WitnessedFamily rep2 = representative(fam, m);
  REQUIRE(rep1.size() == 2);
  CHECK(rep1[0].witness == std::vector<int>{3});
  CHECK(rep1[1].witness == std::vector<int>{4});
  CHECK(rep1[0].set == rep2[0].set);
  CHECK(rep1[1].set == rep2[1].set);
}

TEST_CASE("representative property, graphic and cographic matroids") {
  SplitMix64 rng(31);
  for (int round = 0; round < 12; ++round) {
    int n = 2 + static_cast<int>(rng.below(3));
    int mm = 1 + static_cast<int>(rng.below(6));
    Multigraph h;
    h.n = n;
    for (int i = 1; i <= mm; ++i) {
      h.edges.push_back({1 + static_cast<int>(rng.below(n)),
                         1 + static_cast<int>(rng.below(n)), i});
    }
    check_representative(graphic(h, kF));
    check_representative(cographic(h, kF));
  }
}

TEST_CASE("representative property, uniform and random matroids") {
  for (std::size_t tau = 1; tau <= 6; ++tau) {
    for (std::size_t r = 0; r <= std::min<std::size_t>(tau, 4); ++r) {
      check_representative(uniform(tau, r, kF));
    }
  }
  SplitMix64 rng(37);
  for (int round = 0; round < 10; ++round) {
    std::size_t rows = 1 + rng.below(4);
    std::size_t cols = rows + rng.below(6 - rows + 1);
    FMatrix raw(rows, cols);
    for (auto& x : raw.a) x = static_cast<std::uint32_t>(rng.below(5));
    StandardForm sf = standard_form(kF, raw);
    if (sf.mat.rows == 0) continue;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < cols; ++i) {
      labels.push_back(static_cast<Label>(i));
    }
    check_representative(LinearMatroid(kF, sf.mat, labels));
  }
}
