#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "simfes/generators.hpp"
#include "simfes/matroids.hpp"

using namespace simfes;

namespace {

const PrimeField kF(2147483647u);

Multigraph triangle() {
  Multigraph h;
  h.n = 3;
  h.edges = {{1, 2, 1}, {2, 3, 2}, {3, 1, 3}};
  return h;
}

Multigraph random_multigraph(SplitMix64& rng, int n, int m) {
  Multigraph h;
  h.n = n;
  for (int i = 1; i <= m; ++i) {
    h.edges.push_back({1 + static_cast<int>(rng.below(n)),
                       1 + static_cast<int>(rng.below(n)), i});
  }
  return h;
}

// forest test by union-find, the defining oracle for graphic independence
bool forms_forest(const Multigraph& h, const std::vector<Label>& ids) {
  Multigraph sub;
  sub.n = h.n;
  for (const auto& e : h.edges) {
    for (Label id : ids) {
      if (e.id == id) sub.edges.push_back(e);
    }
  }
  return is_acyclic(sub);
}

int components_without(const Multigraph& h, const std::set<Label>& ids) {
  Multigraph sub;
  sub.n = h.n;
  for (const auto& e : h.edges) {
    if (!ids.count(e.id)) sub.edges.push_back(e);
  }
  return components(sub);
}

std::vector<std::vector<Label>> all_subsets(const std::vector<Label>& all) {
  std::vector<std::vector<Label>> out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Label> s;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1u << i)) s.push_back(all[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

TEST_CASE("graphic matroid basics") {
  Multigraph tree;
  tree.n = 4;
  tree.edges = {{1, 2, 1}, {2, 3, 2}, {2, 4, 3}};
  LinearMatroid m = graphic(tree, kF);
  CHECK(m.rank() == 3);
  CHECK(is_independent(m, {1, 2, 3}));

  LinearMatroid tri = graphic(triangle(), kF);
  CHECK(tri.rank() == 2);
  CHECK(is_independent(tri, {1, 2}));
  CHECK(is_independent(tri, {1, 3}));
  CHECK_FALSE(is_independent(tri, {1, 2, 3}));

  Multigraph loop;
  loop.n = 1;
  loop.edges = {{1, 1, 1}};
  LinearMatroid lm = graphic(loop, kF);
  CHECK(lm.rank() == 0);
  CHECK_FALSE(is_independent(lm, {1})); // loops are circuits
  CHECK(is_independent(lm, {}));        // axiom (I1)
}

TEST_CASE("graphic equals the forest oracle exhaustively") {
  SplitMix64 rng(1);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng.below(5));
    int m = static_cast<int>(rng.below(6));
    Multigraph h = random_multigraph(rng, n, m);
    LinearMatroid gm = graphic(h, kF);
    std::vector<Label> ids;
    for (const auto& e : h.edges) ids.push_back(e.id);
    for (const auto& s : all_subsets(ids)) {
      CHECK(is_independent(gm, s) == forms_forest(h, s));
    }
  }
}

TEST_CASE("dual is an involution and flips ranks") {
  SplitMix64 rng(2);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = 1 + static_cast<int>(rng.below(5));
    Multigraph h = random_multigraph(rng, n, m);
    LinearMatroid gm = graphic(h, kF);
    LinearMatroid dd = dual(dual(gm));
    CHECK(dd.rank() == gm.rank());
    CHECK(dd.labels == gm.labels);
    std::vector<Label> ids;
    for (const auto& e : h.edges) ids.push_back(e.id);
    for (const auto& s : all_subsets(ids)) {
      CHECK(is_independent(dd, s) == is_independent(gm, s));
    }
  }
  // free matroid on 3 elements
  FMatrix id3(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = 1;
  LinearMatroid free3(kF, id3, {10, 20, 30});
  LinearMatroid d = dual(free3);
  CHECK(d.rank() == 0);
  CHECK_FALSE(is_independent(d, {10}));
  LinearMatroid back = dual(d);
  CHECK(back.rank() == 3);
  CHECK(is_independent(back, {10, 20, 30}));
}

TEST_CASE("cographic: triangle has rank 1; bridges are dependent") {
  LinearMatroid cog = cographic(triangle(), kF);
  CHECK(cog.rank() == 1);
  for (Label e : {1, 2, 3}) CHECK(is_independent(cog, {e}));
  CHECK_FALSE(is_independent(cog, {1, 2}));

  Multigraph bridge;
  bridge.n = 4;
  bridge.edges = {{1, 2, 1}, {2, 3, 2}, {3, 1, 3}, {3, 4, 4}};
  LinearMatroid cb = cographic(bridge, kF);
  CHECK_FALSE(is_independent(cb, {4})); // bridges are cographic loops

  Multigraph withloop;
  withloop.n = 2;
  withloop.edges = {{1, 2, 1}, {1, 1, 2}};
  LinearMatroid cl = cographic(withloop, kF);
  CHECK(is_independent(cl, {2})); // loop deletion never disconnects
  CHECK(cl.rank() == 1);
}

TEST_CASE("cographic equals the component-count oracle exhaustively") {
  SplitMix64 rng(3);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = static_cast<int>(rng.below(6));
    Multigraph h = random_multigraph(rng, n, m);
    LinearMatroid cog = cographic(h, kF);
    int eta = components(h);
    std::vector<Label> ids;
    for (const auto& e : h.edges) ids.push_back(e.id);
    for (const auto& s : all_subsets(ids)) {
      std::set<Label> del(s.begin(), s.end());
      CHECK(is_independent(cog, s) == (components_without(h, del) == eta));
    }
  }
}

TEST_CASE("uniform matroid") {
  LinearMatroid u50 = uniform(5, 0, kF);
  CHECK(u50.rank() == 0);
  CHECK(is_independent(u50, {}));
  CHECK_FALSE(is_independent(u50, {0}));

  LinearMatroid u33 = uniform(3, 3, kF);
  CHECK(is_independent(u33, {0, 1, 2}));

  LinearMatroid u42 = uniform(4, 2, kF);
  for (Label a = 0; a < 4; ++a) {
    for (Label b = a + 1; b < 4; ++b) CHECK(is_independent(u42, {a, b}));
  }
  for (Label a = 0; a < 4; ++a) {
    for (Label b = a + 1; b < 4; ++b) {
      for (Label c = b + 1; c < 4; ++c) {
        CHECK_FALSE(is_independent(u42, {a, b, c}));
      }
    }
  }
  CHECK_THROWS(uniform(3, 4, kF));
  CHECK_THROWS(uniform(10, 2, PrimeField(7))); // field too small
}

TEST_CASE("elongation ranks and the basis law on the triangle") {
  LinearMatroid cog = cographic(triangle(), kF);
  SplitMix64 rng(7);
  CHECK_THROWS(elongation(cog, 0, rng)); // below rank
  CHECK_THROWS(elongation(cog, 4, rng)); // above ground size

  LinearMatroid same = elongation(cog, 1, rng);
  CHECK(same.rank() == 1);

  LinearMatroid el2 = elongation(cog, 2, rng);
  CHECK(el2.rank() == 2);
  // B of size 2 is a basis iff triangle minus B is acyclic (always here)
  Multigraph tri = triangle();
  for (Label a = 1; a <= 3; ++a) {
    for (Label b = a + 1; b <= 3; ++b) {
      bool basis = is_independent(el2, {a, b});
      Multigraph rest;
      rest.n = 3;
      for (const auto& e : tri.edges) {
        if (e.id != a && e.id != b) rest.edges.push_back(e);
      }
      CHECK(basis == is_acyclic(rest));
    }
  }
  LinearMatroid el3 = elongation(cog, 3, rng);
  CHECK(el3.rank() == 3);
  CHECK(is_independent(el3, {1, 2, 3}));
}

TEST_CASE("elongated cographic basis law on random graphs") {
  SplitMix64 rng(11);
  int checked = 0;
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng.below(5));
    int m = 1 + static_cast<int>(rng.below(8));
    Multigraph h = random_multigraph(rng, n, m);
    LinearMatroid cog = cographic(h, kF);
    for (std::size_t l = cog.rank(); l <= h.edges.size(); ++l) {
      LinearMatroid el = elongation(cog, l, rng);
      CHECK(el.rank() == l);
      for (std::uint32_t mask = 0; mask < (1u << h.edges.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != l) continue;
        std::vector<Label> b;
        Multigraph rest;
        rest.n = h.n;
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
          if (mask & (1u << i)) {
            b.push_back(h.edges[i].id);
          } else {
            rest.edges.push_back(h.edges[i]);
          }
        }
        bool basis = is_independent(el, b);
        bool acyclic = is_acyclic(rest);
        // basis => acyclic must never fail; the converse only by random
        // collision, which reseeding must clear
        if (basis) CHECK(acyclic);
        if (acyclic && !basis) {
          SplitMix64 rng2(mix_seed(999, round));
          LinearMatroid el2 = elongation(cog, l, rng2);
          CHECK(is_independent(el2, b));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("direct sum") {
  FMatrix id2(2, 2);
  id2.at(0, 0) = id2.at(1, 1) = 1;
  FMatrix id3(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = 1;
  LinearMatroid a(kF, id2, {1, 2});
  LinearMatroid b(kF, id3, {3, 4, 5});
  LinearMatroid s = direct_sum({a, b});
  CHECK(s.rank() == 5);
  CHECK(is_independent(s, {1, 2, 3, 4, 5}));
  LinearMatroid single = direct_sum({a});
  CHECK(single.rank() == a.rank());
  CHECK(single.labels == a.labels);
  LinearMatroid clash(kF, id2, {1, 9});
  CHECK_THROWS(direct_sum({a, clash}));
  LinearMatroid otherfield(PrimeField(7), id2, {7, 8});
  CHECK_THROWS(direct_sum({a, otherfield}));
}

TEST_CASE("direct sum independence decomposes componentwise") {
  LinearMatroid tri = graphic(triangle(), kF);
  LinearMatroid u42 = uniform(4, 2, kF, nullptr);
  std::vector<Label> relabel = {10, 11, 12, 13};
  LinearMatroid u = uniform(4, 2, kF, &relabel);
  LinearMatroid s = direct_sum({tri, u});
  CHECK(s.rank() == 4);
  std::vector<Label> all = {1, 2, 3, 10, 11, 12, 13};
  for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
    std::vector<Label> sub, left, right;
    for (std::size_t i = 0; i < 7; ++i) {
      if (!(mask & (1u << i))) continue;
      sub.push_back(all[i]);
      (all[i] < 10 ? left : right).push_back(all[i]);
    }
    CHECK(is_independent(s, sub) ==
          (is_independent(tri, left) && is_independent(u, right)));
  }
}

TEST_CASE("is_independent rejects unknown labels") {
  LinearMatroid tri = graphic(triangle(), kF);
  CHECK_THROWS(is_independent(tri, {99}));
  CHECK_FALSE(is_independent(tri, {1, 2, 3})); // above rank
}

TEST_CASE("equal seeds give bit-identical elongations") {
  LinearMatroid cog = cographic(triangle(), kF);
  SplitMix64 r1(123), r2(123);
  LinearMatroid a = elongation(cog, 3, r1);
  LinearMatroid b = elongation(cog, 3, r2);
  CHECK(a.A == b.A);
}
