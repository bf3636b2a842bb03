#include "simfes/ecg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace simfes {

std::uint32_t full_color_mask(int alpha) {
  return alpha == 0 ? 0u : ((1u << alpha) - 1u);
}

std::vector<int> colors_of_mask(std::uint32_t mask) {
  std::vector<int> out;
  for (int c = 1; mask; ++c, mask >>= 1) {
    if (mask & 1u) out.push_back(c);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

long parse_int_token(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return v;
}

} // namespace

EdgeColoredGraph parse_ecg(const std::string& text) {
  EdgeColoredGraph g;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long want_m = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    char c0 = line[first];
    if (c0 == '#' || c0 == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string fmt;
      std::string ntok, mtok, atok, extra;
      if (!(ls >> fmt >> ntok >> mtok >> atok) || (ls >> extra)) {
        throw ParseError(line_no, "malformed header");
      }
      if (fmt != "ecg") throw ParseError(line_no, "unknown format '" + fmt + "'");
      long n = parse_int_token(ntok, line_no, "vertex count");
      want_m = parse_int_token(mtok, line_no, "edge count");
      long alpha = parse_int_token(atok, line_no, "color count");
      if (n < 0 || want_m < 0) throw ParseError(line_no, "negative size");
      if (alpha < 0 || alpha > kMaxAlpha) {
        throw ParseError(line_no, "alpha out of supported range 0.." +
                                      std::to_string(kMaxAlpha));
      }
      g.n = static_cast<int>(n);
      g.alpha = static_cast<int>(alpha);
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (static_cast<long>(g.edges.size()) >= want_m) {
        throw ParseError(line_no, "more than " + std::to_string(want_m) +
                                      " edge lines");
      }
      std::string utok, vtok, ctok, extra;
      if (!(ls >> utok >> vtok >> ctok) || (ls >> extra)) {
        throw ParseError(line_no, "malformed edge line");
      }
      long u = parse_int_token(utok, line_no, "vertex");
      long v = parse_int_token(vtok, line_no, "vertex");
      if (u < 1 || u > g.n || v < 1 || v > g.n) {
        throw ParseError(line_no, "vertex out of range 1.." +
                                      std::to_string(g.n));
      }
      EdgeColoredGraph::Edge e;
      e.u = static_cast<int>(u);
      e.v = static_cast<int>(v);
      long prev = 0;
      std::istringstream cs(ctok);
      std::string item;
      while (std::getline(cs, item, ',')) {
        long c = parse_int_token(item, line_no, "color");
        if (c < 1 || c > g.alpha) {
          throw ParseError(line_no, "color " + std::to_string(c) +
                                        " outside 1.." +
                                        std::to_string(g.alpha));
        }
        if (c <= prev) {
          throw ParseError(line_no, "colors not strictly ascending");
        }
        prev = c;
        e.colors |= 1u << (c - 1);
      }
      if (e.colors == 0) throw ParseError(line_no, "empty color list");
      g.edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<long>(g.edges.size()) != want_m) {
    throw ParseError(line_no, "expected " + std::to_string(want_m) +
                                  " edges, got " +
                                  std::to_string(g.edges.size()));
  }
  return g;
}

std::string write_ecg(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "p ecg " << g.n << ' ' << g.edges.size() << ' ' << g.alpha << '\n';
  for (const auto& e : g.edges) {
    out << "e " << e.u << ' ' << e.v << ' ';
    bool first = true;
    for (int c : colors_of_mask(e.colors)) {
      if (!first) out << ',';
      out << c;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Multigraph color_subgraph(const EdgeColoredGraph& g, int color) {
  if (color < 1 || color > g.alpha) {
    throw std::invalid_argument("color " + std::to_string(color) +
                                " out of range");
  }
  Multigraph h;
  h.n = g.n;
  std::uint32_t bit = 1u << (color - 1);
  for (int id = 1; id <= g.m(); ++id) {
    const auto& e = g.edges[id - 1];
    if (e.colors & bit) h.edges.push_back({e.u, e.v, id});
  }
  return h;
}

int components(const Multigraph& h) {
  UnionFind uf(h.n + 1);
  int comps = h.n;
  for (const auto& e : h.edges) {
    if (e.u != e.v && uf.unite(e.u, e.v)) --comps;
  }
  return comps;
}

bool is_acyclic(const Multigraph& h) {
  UnionFind uf(h.n + 1);
  for (const auto& e : h.edges) {
    if (e.u == e.v || !uf.unite(e.u, e.v)) return false;
  }
  return true;
}

int excess(const EdgeColoredGraph& g, int color) {
  Multigraph h = color_subgraph(g, color);
  return static_cast<int>(h.edges.size()) - g.n + components(h);
}

std::set<int> cycle_edges(const Multigraph& h) {
  std::set<int> out;
  // adjacency over non-loop edges; loops are cycles by themselves
  std::vector<std::vector<std::pair<int, int>>> adj(h.n + 1);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.u == e.v) {
      out.insert(e.id);
      continue;
    }
    adj[e.u].push_back({e.v, static_cast<int>(i)});
    adj[e.v].push_back({e.u, static_cast<int>(i)});
  }
  std::vector<int> disc(h.n + 1, 0), low(h.n + 1, 0);
  std::vector<bool> is_bridge(h.edges.size(), false);
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int s = 1; s <= h.n; ++s) {
    if (disc[s] != 0) continue;
    std::vector<Frame> stack;
    disc[s] = low[s] = ++timer;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next < adj[fr.v].size()) {
        auto [to, ei] = adj[fr.v][fr.next++];
        if (ei == fr.parent_edge) continue;
        if (disc[to] == 0) {
          disc[to] = low[to] = ++timer;
          stack.push_back({to, ei, 0});
        } else {
          low[fr.v] = std::min(low[fr.v], disc[to]);
        }
      } else {
        const int done_v = fr.v;
        const int done_pe = fr.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done_v]);
          if (low[done_v] > disc[up.v]) {
            is_bridge[static_cast<std::size_t>(done_pe)] = true;
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.u != e.v && !is_bridge[i]) out.insert(e.id);
  }
  return out;
}

bool verify_sfes(const EdgeColoredGraph& g, const std::set<int>& deleted) {
  for (int id : deleted) {
    if (id < 1 || id > g.m()) {
      throw std::invalid_argument("unknown edge id " + std::to_string(id));
    }
  }
  for (int c = 1; c <= g.alpha; ++c) {
    std::uint32_t bit = 1u << (c - 1);
    UnionFind uf(g.n + 1);
    for (int id = 1; id <= g.m(); ++id) {
      const auto& e = g.edges[id - 1];
      if (!(e.colors & bit) || deleted.count(id)) continue;
      if (e.u == e.v || !uf.unite(e.u, e.v)) return false;
    }
  }
  return true;
}

} // namespace simfes
