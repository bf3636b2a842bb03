#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace simfes {

// Color sets are bitmasks over colors 1..alpha (bit c-1 for color c).
inline constexpr int kMaxAlpha = 30;

std::uint32_t full_color_mask(int alpha);
std::vector<int> colors_of_mask(std::uint32_t mask);

// Edge-colored multigraph. Vertices are 1..n; loops and parallel edges are
// allowed; edge ids are the 1-based positions in `edges`.
struct EdgeColoredGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    std::uint32_t colors = 0; // nonempty subset of [alpha]
    bool operator==(const Edge&) const = default;
  };

  int n = 0;
  int alpha = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const EdgeColoredGraph&) const = default;
};

// Uncolored multigraph view; edges keep the ids of the parent graph.
struct Multigraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int id = 0; // 1-based id in the parent EdgeColoredGraph
  };

  int n = 0;
  std::vector<Edge> edges;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

EdgeColoredGraph parse_ecg(const std::string& text);
std::string write_ecg(const EdgeColoredGraph& g);

// G_i: all vertices, and exactly the edges whose color set contains i.
Multigraph color_subgraph(const EdgeColoredGraph& g, int color);

// Number of connected components (isolated vertices count).
int components(const Multigraph& h);

// No cycle under the multigraph convention: a loop is a cycle and a
// parallel pair is a cycle.
bool is_acyclic(const Multigraph& h);

// k_i = |E(G_i)| - n + eta_i: minimum deletions that make G_i a forest.
int excess(const EdgeColoredGraph& g, int color);

// Edges lying on at least one cycle: loops plus all non-bridge edges.
std::set<int> cycle_edges(const Multigraph& h);

// Exact check: G_i - F acyclic for every color i.
bool verify_sfes(const EdgeColoredGraph& g, const std::set<int>& deleted);

} // namespace simfes
