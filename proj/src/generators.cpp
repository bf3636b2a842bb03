#include "simfes/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "simfes/rng.hpp"

namespace simfes {

namespace {

void check_elements(int universe, const std::vector<int>& sorted_set) {
  if (sorted_set.size() < 2) {
    throw std::invalid_argument("set of size < 2 unsupported");
  }
  for (std::size_t i = 0; i < sorted_set.size(); ++i) {
    if (sorted_set[i] < 1 || sorted_set[i] > universe) {
      throw std::invalid_argument("element out of universe");
    }
    if (i > 0 && sorted_set[i] == sorted_set[i - 1]) {
      throw std::invalid_argument("duplicate element in a set");
    }
  }
}

// Emits one monochromatic cycle threading the element edges of `elems`
// (sorted ascending) with color `t`. Element i owns vertices v_i = 2i-1
// and w_i = 2i; connector vertices are appended to `g`.
void emit_cycle(EdgeColoredGraph& g, std::vector<std::string>& comments,
                const std::vector<int>& elems, int t) {
  const std::uint32_t bit = 1u << (t - 1);
  auto connect = [&](int from, int to) {
    int s = ++g.n;
    std::ostringstream name;
    name << "# v" << s << " = s_{" << from << "," << to << "," << t << "}";
    comments.push_back(name.str());
    g.edges.push_back({2 * from, s, bit});     // {w_from, s}
    g.edges.push_back({s, 2 * to - 1, bit});   // {s, v_to}
  };
  for (std::size_t j = 0; j + 1 < elems.size(); ++j) {
    connect(elems[j], elems[j + 1]);
  }
  // close the cycle from the largest-index element back to the smallest
  connect(elems.back(), elems.front());
}

} // namespace

GenOutput gen_vc3(const VCInstance& inst) {
  const int n = inst.n;
  const int m = static_cast<int>(inst.edges.size());
  if (inst.k < 0 || inst.k > n) {
    throw std::invalid_argument("budget must lie in 0..|V|");
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : inst.edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw std::invalid_argument("vertex out of range");
    }
    if (a == b) throw std::invalid_argument("loops not allowed");
    degree[static_cast<std::size_t>(a)] += 1;
    degree[static_cast<std::size_t>(b)] += 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 3) {
      throw std::invalid_argument("input graph is not cubic");
    }
  }

  // Subdivision vertex ids: edge ei gives x_{a,b} = n+2ei+1 (stub side of
  // a) and x_{b,a} = n+2ei+2. Starred copies live at id + N.
  const int N = n + 2 * m;
  auto x_near = [&](int ei, bool first_endpoint) {
    return n + 2 * ei + (first_endpoint ? 1 : 2);
  };

  // 3-matching: per original vertex (ascending), its three stubs get
  // colors 1,2,3 in neighbor-id order; ties broken by edge index.
  std::map<std::pair<int, int>, int> stub_color; // (vertex, ei) -> color
  for (int v = 1; v <= n; ++v) {
    std::vector<std::pair<int, int>> stubs; // (neighbor, ei)
    for (int ei = 0; ei < m; ++ei) {
      const auto& [a, b] = inst.edges[static_cast<std::size_t>(ei)];
      if (a == v) stubs.push_back({b, ei});
      if (b == v) stubs.push_back({a, ei});
    }
    std::sort(stubs.begin(), stubs.end());
    for (int c = 0; c < 3; ++c) {
      stub_color[{v, stubs[static_cast<std::size_t>(c)].second}] = c + 1;
    }
  }

  // M_c holds Ghat edges as vertex pairs; stubs first, then the
  // subdivision edges on their unused color.
  std::vector<std::vector<std::pair<int, int>>> matching(4);
  for (int v = 1; v <= n; ++v) {
    for (int ei = 0; ei < m; ++ei) {
      auto it = stub_color.find({v, ei});
      if (it == stub_color.end()) continue;
      const auto& [a, b] = inst.edges[static_cast<std::size_t>(ei)];
      int x = x_near(ei, a == v);
      matching[static_cast<std::size_t>(it->second)].push_back({v, x});
    }
  }
  for (int ei = 0; ei < m; ++ei) {
    const auto& [a, b] = inst.edges[static_cast<std::size_t>(ei)];
    int ca = stub_color.at({a, ei});
    int cb = stub_color.at({b, ei});
    int free_color = 0;
    for (int c = 1; c <= 3; ++c) {
      if (c != ca && c != cb) {
        free_color = c;
        break;
      }
    }
    if (free_color == 0) {
      throw std::logic_error("no free color for a subdivision edge");
    }
    matching[static_cast<std::size_t>(free_color)].push_back(
        {x_near(ei, true), x_near(ei, false)});
  }
  // matching property: within a color class all edges pairwise disjoint
  for (int c = 1; c <= 3; ++c) {
    std::set<int> seen;
    for (const auto& [u, v] : matching[static_cast<std::size_t>(c)]) {
      if (!seen.insert(u).second || !seen.insert(v).second) {
        throw std::logic_error("matching classes are not disjoint");
      }
    }
  }

  GenOutput out;
  out.k = inst.k + m;
  out.graph.n = 2 * N;
  out.graph.alpha = 3;
  for (int ei = 0; ei < m; ++ei) {
    const auto& [a, b] = inst.edges[static_cast<std::size_t>(ei)];
    std::ostringstream c1, c2;
    c1 << "# v" << x_near(ei, true) << " = x_{" << a << "," << b << "}";
    c2 << "# v" << x_near(ei, false) << " = x_{" << b << "," << a << "}";
    out.comments.push_back(c1.str());
    out.comments.push_back(c2.str());
  }
  out.comments.push_back("# v* = v + " + std::to_string(N) +
                         " for every vertex v of the subdivided graph");
  for (int w = 1; w <= N; ++w) {
    out.graph.edges.push_back({w, w + N, 0x7u}); // spine, colors {1,2,3}
  }
  for (int c = 1; c <= 3; ++c) {
    for (const auto& [u, v] : matching[static_cast<std::size_t>(c)]) {
      std::uint32_t bit = 1u << (c - 1);
      out.graph.edges.push_back({u, v, bit});
      out.graph.edges.push_back({u + N, v + N, bit});
    }
  }
  return out;
}

GenOutput gen_hs(const HSInstance& inst) {
  const int alpha = static_cast<int>(inst.sets.size());
  if (alpha > kMaxAlpha) throw std::invalid_argument("too many sets");
  if (inst.k < 0) throw std::invalid_argument("negative budget");
  std::vector<std::vector<int>> sets = inst.sets;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    check_elements(inst.universe, s);
  }

  GenOutput out;
  out.k = inst.k;
  out.graph.alpha = alpha;
  out.graph.n = 2 * inst.universe;
  for (int i = 1; i <= inst.universe; ++i) {
    std::uint32_t mask = 0;
    for (int t = 0; t < alpha; ++t) {
      if (std::binary_search(sets[static_cast<std::size_t>(t)].begin(),
                             sets[static_cast<std::size_t>(t)].end(), i)) {
        mask |= 1u << t;
      }
    }
    std::ostringstream name;
    name << "# v" << (2 * i - 1) << ",v" << (2 * i) << " = v_" << i << ",w_"
         << i;
    out.comments.push_back(name.str());
    if (mask) out.graph.edges.push_back({2 * i - 1, 2 * i, mask});
  }
  for (int t = 0; t < alpha; ++t) {
    emit_cycle(out.graph, out.comments, sets[static_cast<std::size_t>(t)],
               t + 1);
  }
  return out;
}

GenOutput gen_phs(const PHSInstance& inst) {
  const int alpha = static_cast<int>(inst.families.size());
  if (alpha > kMaxAlpha) throw std::invalid_argument("too many families");
  if (inst.k < 0) throw std::invalid_argument("negative budget");
  std::vector<std::vector<std::vector<int>>> fams = inst.families;
  for (auto& fam : fams) {
    std::set<int> used;
    for (auto& s : fam) {
      std::sort(s.begin(), s.end());
      check_elements(inst.universe, s);
      for (int e : s) {
        if (!used.insert(e).second) {
          throw std::invalid_argument("sets within a family overlap");
        }
      }
    }
  }

  GenOutput out;
  out.k = inst.k;
  out.graph.alpha = alpha;
  out.graph.n = 2 * inst.universe;
  for (int i = 1; i <= inst.universe; ++i) {
    std::uint32_t mask = 0;
    for (int t = 0; t < alpha; ++t) {
      for (const auto& s : fams[static_cast<std::size_t>(t)]) {
        if (std::binary_search(s.begin(), s.end(), i)) {
          mask |= 1u << t;
          break;
        }
      }
    }
    std::ostringstream name;
    name << "# v" << (2 * i - 1) << ",v" << (2 * i) << " = v_" << i << ",w_"
         << i;
    out.comments.push_back(name.str());
    if (mask) out.graph.edges.push_back({2 * i - 1, 2 * i, mask});
  }
  for (int t = 0; t < alpha; ++t) {
    for (const auto& s : fams[static_cast<std::size_t>(t)]) {
      emit_cycle(out.graph, out.comments, s, t + 1);
    }
  }
  return out;
}

EdgeColoredGraph gen_random(int n, int m, int alpha, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (alpha < 0 || alpha > kMaxAlpha) {
    throw std::invalid_argument("alpha out of range");
  }
  if (m > 0 && alpha == 0) {
    throw std::invalid_argument("edges need at least one color");
  }
  EdgeColoredGraph g;
  g.n = n;
  g.alpha = alpha;
  SplitMix64 rng(seed);
  const std::uint64_t mask_count = (1ull << alpha) - 1;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    std::uint32_t colors =
        static_cast<std::uint32_t>(rng.below(mask_count) + 1);
    g.edges.push_back({u, v, colors});
  }
  return g;
}

} // namespace simfes
