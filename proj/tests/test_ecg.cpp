#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simfes/ecg.hpp"
#include "simfes/generators.hpp"
#include "simfes/rng.hpp"
#include "support/oracles.hpp"

using namespace simfes;

namespace {

EdgeColoredGraph triangle(std::uint32_t colors) {
  EdgeColoredGraph g;
  g.n = 3;
  g.alpha = 3;
  g.edges = {{1, 2, colors}, {2, 3, colors}, {3, 1, colors}};
  return g;
}

} // namespace

TEST_CASE("parse: triangle") {
  EdgeColoredGraph g = parse_ecg("p ecg 3 3 1\ne 1 2 1\ne 2 3 1\ne 3 1 1\n");
  CHECK(g.n == 3);
  CHECK(g.alpha == 1);
  CHECK(g.m() == 3);
  CHECK(g.edges[0].u == 1);
  CHECK(g.edges[0].colors == 1u);
}

TEST_CASE("parse: loop with two colors") {
  EdgeColoredGraph g = parse_ecg("p ecg 1 1 2\ne 1 1 1,2\n");
  CHECK(g.edges[0].u == g.edges[0].v);
  CHECK(g.edges[0].colors == 0x3u);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_ecg("p ecg 3 1 1\ne 1 4 1\n"), ParseError);
  try {
    parse_ecg("c comment\np ecg 3 1 1\ne 1 4 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS(parse_ecg("e 1 2 1\n"));              // edge before header
  CHECK_THROWS(parse_ecg("p ecg 2 1 2\ne 1 2 3\n")); // color > alpha
  CHECK_THROWS(parse_ecg("p ecg 2 1 2\ne 1 2 2,1\n")); // not ascending
  CHECK_THROWS(parse_ecg("p ecg 2 1 2\n"));          // missing edges
  CHECK_THROWS(parse_ecg("p ecg 2 0 2\ne 1 2 1\n")); // too many edges
  CHECK_THROWS(parse_ecg("p ecg 2 1 2\ne 1 2\n"));   // missing color list
  CHECK_THROWS(parse_ecg("p ecg 2 1 2\np ecg 2 1 2\ne 1 2 1\n"));
}

TEST_CASE("comments and blank lines are ignored") {
  EdgeColoredGraph g =
      parse_ecg("# hello\nc also a comment\n\np ecg 2 1 1\ne 1 2 1\n");
  CHECK(g.m() == 1);
}

TEST_CASE("write/parse round trip on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    EdgeColoredGraph g = gen_random(1 + seed % 6, static_cast<int>(seed % 9),
                                    1 + seed % 3, seed);
    CHECK(parse_ecg(write_ecg(g)) == g);
  }
}

TEST_CASE("color subgraph") {
  EdgeColoredGraph g;
  g.n = 2;
  g.alpha = 3;
  g.edges = {{1, 2, 0x3u}}; // colors {1,2}
  CHECK(color_subgraph(g, 1).edges.size() == 1);
  CHECK(color_subgraph(g, 2).edges.size() == 1);
  CHECK(color_subgraph(g, 3).edges.empty());
  CHECK(color_subgraph(g, 3).n == 2);
  CHECK_THROWS(color_subgraph(g, 4));
  CHECK_THROWS(color_subgraph(g, 0));
  EdgeColoredGraph tri = triangle(0x2u);
  CHECK(color_subgraph(tri, 2).edges.size() == 3);
}

TEST_CASE("components") {
  Multigraph h;
  h.n = 4;
  CHECK(components(h) == 4);
  h.edges = {{1, 2, 1}, {2, 3, 2}};
  CHECK(components(h) == 2);
  Multigraph tri;
  tri.n = 4;
  tri.edges = {{1, 2, 1}, {2, 3, 2}, {3, 1, 3}};
  CHECK(components(tri) == 2);
}

TEST_CASE("acyclicity under the multigraph convention") {
  Multigraph loop;
  loop.n = 1;
  loop.edges = {{1, 1, 1}};
  CHECK_FALSE(is_acyclic(loop)); // a self-loop is a cycle
  Multigraph par;
  par.n = 2;
  par.edges = {{1, 2, 1}, {1, 2, 2}};
  CHECK_FALSE(is_acyclic(par)); // a double edge is a cycle
  Multigraph tree;
  tree.n = 4;
  tree.edges = {{1, 2, 1}, {2, 3, 2}, {2, 4, 3}};
  CHECK(is_acyclic(tree));
}

TEST_CASE("excess") {
  EdgeColoredGraph tri = triangle(0x1u);
  CHECK(excess(tri, 1) == 1); // 3 - 3 + 1
  CHECK(excess(tri, 2) == 0); // color 2 is empty, a forest
  EdgeColoredGraph two;
  two.n = 6;
  two.alpha = 1;
  two.edges = {{1, 2, 1}, {2, 3, 1}, {3, 1, 1},
               {4, 5, 1}, {5, 6, 1}, {6, 4, 1}};
  CHECK(excess(two, 1) == 2); // 6 - 6 + 2
}

TEST_CASE("cycle edges") {
  Multigraph path;
  path.n = 3;
  path.edges = {{1, 2, 1}, {2, 3, 2}};
  CHECK(cycle_edges(path).empty());

  Multigraph tri_pendant;
  tri_pendant.n = 4;
  tri_pendant.edges = {{1, 2, 1}, {2, 3, 2}, {3, 1, 3}, {3, 4, 4}};
  CHECK(cycle_edges(tri_pendant) == std::set<int>{1, 2, 3});

  Multigraph loop;
  loop.n = 2;
  loop.edges = {{1, 1, 1}, {1, 2, 2}};
  CHECK(cycle_edges(loop) == std::set<int>{1});
}

TEST_CASE("cycle edges match brute-force cycle enumeration") {
  SplitMix64 rng(3);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng.below(5));
    int m = static_cast<int>(rng.below(9));
    Multigraph h;
    h.n = n;
    for (int i = 1; i <= m; ++i) {
      h.edges.push_back({1 + static_cast<int>(rng.below(n)),
                         1 + static_cast<int>(rng.below(n)), i});
    }
    std::set<int> expect;
    for (const auto& cyc : oracles::all_cycles(h)) {
      expect.insert(cyc.begin(), cyc.end());
    }
    CHECK(cycle_edges(h) == expect);
  }
}

TEST_CASE("acyclicity iff zero excess per color") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    EdgeColoredGraph g = gen_random(1 + seed % 5, static_cast<int>(seed % 8),
                                    1 + seed % 3, seed);
    for (int c = 1; c <= g.alpha; ++c) {
      CHECK((excess(g, c) == 0) == is_acyclic(color_subgraph(g, c)));
    }
  }
}

TEST_CASE("verify_sfes") {
  EdgeColoredGraph tri = triangle(0x1u);
  CHECK(verify_sfes(tri, {1}));
  CHECK(verify_sfes(tri, {2}));
  CHECK_FALSE(verify_sfes(tri, {}));
  CHECK_THROWS(verify_sfes(tri, {9}));

  EdgeColoredGraph loop;
  loop.n = 1;
  loop.alpha = 2;
  loop.edges = {{1, 1, 0x3u}};
  CHECK(verify_sfes(loop, {1}));
  CHECK_FALSE(verify_sfes(loop, {}));
}
