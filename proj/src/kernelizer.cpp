#include "simfes/kernelizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simfes {

namespace {

struct KEdge {
  int u;
  int v;
  std::uint32_t colors;
  int uid;
};

struct KState {
  int alpha = 0;
  int n0 = 0;
  std::vector<char> vertex_alive; // 1-based
  std::vector<KEdge> edges;       // live edges, stable order
  int k = 0;
  std::vector<int> parent; // uid -> parent uid, 0 for originals
  int next_uid = 1;
  std::vector<int> forced; // uids rule 3 committed to the solution

  int resolve(int uid) const {
    while (parent[static_cast<std::size_t>(uid)] != 0) {
      uid = parent[static_cast<std::size_t>(uid)];
    }
    return uid;
  }

  int alive_count() const {
    int c = 0;
    for (int v = 1; v <= n0; ++v) c += vertex_alive[static_cast<std::size_t>(v)] ? 1 : 0;
    return c;
  }

  Multigraph color_graph(int color) const {
    Multigraph h;
    h.n = n0;
    std::uint32_t bit = 1u << (color - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].colors & bit) {
        h.edges.push_back({edges[i].u, edges[i].v, static_cast<int>(i) + 1});
      }
    }
    return h;
  }

  // Live instance with alive vertices renumbered 1..n'.
  EdgeColoredGraph snapshot(std::vector<int>* origin = nullptr) const {
    EdgeColoredGraph g;
    g.alpha = alpha;
    std::vector<int> remap(static_cast<std::size_t>(n0) + 1, 0);
    for (int v = 1; v <= n0; ++v) {
      if (vertex_alive[static_cast<std::size_t>(v)]) {
        remap[static_cast<std::size_t>(v)] = ++g.n;
      }
    }
    if (origin) origin->clear();
    for (const auto& e : edges) {
      g.edges.push_back({remap[static_cast<std::size_t>(e.u)],
                         remap[static_cast<std::size_t>(e.v)], e.colors});
      if (origin) origin->push_back(resolve(e.uid));
    }
    return g;
  }
};

KState make_state(const EdgeColoredGraph& g, int k) {
  KState st;
  st.alpha = g.alpha;
  st.n0 = g.n;
  st.vertex_alive.assign(static_cast<std::size_t>(g.n) + 1, 1);
  st.k = k;
  st.parent.assign(static_cast<std::size_t>(g.m()) + 1, 0);
  st.next_uid = g.m() + 1;
  for (int id = 1; id <= g.m(); ++id) {
    const auto& e = g.edges[static_cast<std::size_t>(id - 1)];
    st.edges.push_back({e.u, e.v, e.colors, id});
  }
  return st;
}

void notify(const KState& st, const KernelObserver& obs, const TraceStep& step,
            std::vector<TraceStep>& trace) {
  trace.push_back(step);
  if (obs) obs(st.snapshot(), st.k, step);
}

// Applies the first applicable rule of 3..6; rules 1 and 2 are verdicts and
// are handled by the caller. Returns false at the fixed point.
bool apply_one_rule(KState& st, const KernelObserver& obs,
                    std::vector<TraceStep>& trace) {
  // Rule 3: a self-loop is a cycle only its own deletion can break; delete
  // the loop edge and spend one unit of budget.
  for (std::size_t i = 0; i < st.edges.size(); ++i) {
    if (st.edges[i].u == st.edges[i].v) {
      std::ostringstream note;
      note << "loop at vertex " << st.edges[i].u << " deleted, k "
           << st.k << " -> " << st.k - 1;
      st.forced.push_back(st.edges[i].uid);
      st.edges.erase(st.edges.begin() + static_cast<std::ptrdiff_t>(i));
      st.k -= 1;
      notify(st, obs, {3, note.str()}, trace);
      return true;
    }
  }
  // Rule 4: drop isolated vertices.
  {
    std::vector<char> touched(static_cast<std::size_t>(st.n0) + 1, 0);
    for (const auto& e : st.edges) {
      touched[static_cast<std::size_t>(e.u)] = 1;
      touched[static_cast<std::size_t>(e.v)] = 1;
    }
    for (int v = 1; v <= st.n0; ++v) {
      if (st.vertex_alive[static_cast<std::size_t>(v)] &&
          !touched[static_cast<std::size_t>(v)]) {
        st.vertex_alive[static_cast<std::size_t>(v)] = 0;
        std::ostringstream note;
        note << "isolated vertex " << v << " removed";
        notify(st, obs, {4, note.str()}, trace);
        return true;
      }
    }
  }
  // Rule 5: strip color i from an edge lying on no cycle of G_i.
  for (int c = 1; c <= st.alpha; ++c) {
    Multigraph h = st.color_graph(c);
    if (h.edges.empty()) continue;
    std::set<int> cyc = cycle_edges(h);
    for (const auto& he : h.edges) {
      if (cyc.count(he.id)) continue;
      std::size_t idx = static_cast<std::size_t>(he.id - 1);
      st.edges[idx].colors &= ~(1u << (c - 1));
      std::ostringstream note;
      note << "color " << c << " stripped from edge {" << he.u << ","
           << he.v << "}";
      bool erased = false;
      if (st.edges[idx].colors == 0) {
        st.edges.erase(st.edges.begin() + static_cast<std::ptrdiff_t>(idx));
        note << ", edge deleted";
        erased = true;
      }
      (void)erased;
      notify(st, obs, {5, note.str()}, trace);
      return true;
    }
  }
  // Rule 6: contract a total-degree-2 vertex; its two incident edges carry
  // the same single color at this point (rule 5 fixed point).
  {
    std::vector<int> total(static_cast<std::size_t>(st.n0) + 1, 0);
    for (const auto& e : st.edges) {
      int w = static_cast<int>(colors_of_mask(e.colors).size());
      total[static_cast<std::size_t>(e.u)] += w;
      total[static_cast<std::size_t>(e.v)] += w; // loop counts twice
    }
    for (int v = 1; v <= st.n0; ++v) {
      if (!st.vertex_alive[static_cast<std::size_t>(v)] ||
          total[static_cast<std::size_t>(v)] != 2) {
        continue;
      }
      std::vector<std::size_t> inc;
      for (std::size_t i = 0; i < st.edges.size(); ++i) {
        if (st.edges[i].u == v || st.edges[i].v == v) inc.push_back(i);
      }
      if (inc.empty()) continue; // total degree 2 needs incident edges
      if (inc.size() != 2) {
        throw std::logic_error("rule 6: expected exactly two incident edges");
      }
      const KEdge e1 = st.edges[inc[0]];
      const KEdge e2 = st.edges[inc[1]];
      if (e1.colors != e2.colors) {
        throw std::logic_error("rule 6: incident color sets differ");
      }
      int x = (e1.u == v) ? e1.v : e1.u;
      int y = (e2.u == v) ? e2.v : e2.u;
      KEdge merged{x, y, e1.colors, st.next_uid++};
      st.parent.push_back(e1.uid);
      st.edges.erase(st.edges.begin() + static_cast<std::ptrdiff_t>(inc[1]));
      st.edges.erase(st.edges.begin() + static_cast<std::ptrdiff_t>(inc[0]));
      st.edges.push_back(merged);
      st.vertex_alive[static_cast<std::size_t>(v)] = 0;
      std::ostringstream note;
      note << "degree-2 vertex " << v << " contracted into edge {" << x
           << "," << y << "}";
      notify(st, obs, {6, note.str()}, trace);
      return true;
    }
  }
  return false;
}

// Rules 1..6 to the fixed point; fills verdict on rules 1/2.
KernelVerdict run_rules(KState& st, const KernelObserver& obs,
                        std::vector<TraceStep>& trace) {
  for (;;) {
    if (st.k < 0) {
      notify(st, obs, {1, "k below zero: NO"}, trace);
      return KernelVerdict::kNo;
    }
    bool all_acyclic = true;
    for (int c = 1; c <= st.alpha && all_acyclic; ++c) {
      all_acyclic = is_acyclic(st.color_graph(c));
    }
    if (all_acyclic) {
      notify(st, obs, {2, "every color class acyclic: YES"}, trace);
      return KernelVerdict::kYes;
    }
    if (!apply_one_rule(st, obs, trace)) return KernelVerdict::kReduced;
  }
}

struct SignatureData {
  bool no_instance = false;
  int bad_color = 0;
  std::vector<int> d_vertices;
  // per vertex in D: its signature (sorted multiset of path-id sets)
  std::map<int, std::vector<std::vector<int>>> signature;
};

SignatureData build_signature_data(const KState& st) {
  SignatureData out;
  const std::size_t m = st.edges.size();
  std::vector<std::vector<int>> paths_of_edge(m);

  std::vector<char> in_u(static_cast<std::size_t>(st.n0) + 1, 0);
  std::vector<std::vector<int>> deg(
      static_cast<std::size_t>(st.alpha) + 1,
      std::vector<int>(static_cast<std::size_t>(st.n0) + 1, 0));

  // per-color spanning forest by edge order; X_i = non-forest edges
  for (int c = 1; c <= st.alpha; ++c) {
    Multigraph h = st.color_graph(c);
    std::vector<int> uf(static_cast<std::size_t>(st.n0) + 1);
    for (int v = 0; v <= st.n0; ++v) uf[static_cast<std::size_t>(v)] = v;
    auto find = [&uf](int x) {
      while (uf[static_cast<std::size_t>(x)] != x) {
        uf[static_cast<std::size_t>(x)] =
            uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        x = uf[static_cast<std::size_t>(x)];
      }
      return x;
    };
    int excess_edges = 0;
    for (const auto& he : h.edges) {
      // a loop lands on the same cell twice, contributing 2
      deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(he.u)] += 1;
      deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(he.v)] += 1;
      int a = find(he.u), b = find(he.v);
      if (a == b) {
        ++excess_edges;
        in_u[static_cast<std::size_t>(he.u)] = 1;
        in_u[static_cast<std::size_t>(he.v)] = 1;
      } else {
        uf[static_cast<std::size_t>(a)] = b;
      }
    }
    if (excess_edges > st.k) {
      out.no_instance = true;
      out.bad_color = c;
      return out;
    }
  }

  // T: leaf or degree >= 3 in some color class
  std::vector<char> in_t(static_cast<std::size_t>(st.n0) + 1, 0);
  for (int v = 1; v <= st.n0; ++v) {
    for (int c = 1; c <= st.alpha; ++c) {
      int d = deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
      if (d == 1 || d >= 3) {
        in_t[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }

  std::vector<std::vector<char>> in_d(
      static_cast<std::size_t>(st.alpha) + 1,
      std::vector<char>(static_cast<std::size_t>(st.n0) + 1, 0));
  for (int v = 1; v <= st.n0; ++v) {
    if (!st.vertex_alive[static_cast<std::size_t>(v)] ||
        in_t[static_cast<std::size_t>(v)] || in_u[static_cast<std::size_t>(v)]) {
      continue;
    }
    bool any = false;
    for (int c = 1; c <= st.alpha; ++c) {
      if (deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] == 2) {
        in_d[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
        any = true;
      }
    }
    if (any) out.d_vertices.push_back(v);
  }
  if (out.d_vertices.empty()) return out;

  // maximal paths per color with internal vertices in D_i
  int next_path = 0;
  for (int c = 1; c <= st.alpha; ++c) {
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(
        static_cast<std::size_t>(st.n0) + 1);
    std::uint32_t bit = 1u << (c - 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(st.edges[i].colors & bit)) continue;
      adj[static_cast<std::size_t>(st.edges[i].u)].push_back(
          {st.edges[i].v, i});
      adj[static_cast<std::size_t>(st.edges[i].v)].push_back(
          {st.edges[i].u, i});
    }
    std::vector<char> done(static_cast<std::size_t>(st.n0) + 1, 0);
    for (int v : out.d_vertices) {
      if (!in_d[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] ||
          done[static_cast<std::size_t>(v)]) {
        continue;
      }
      // walk both directions through D_i-internal vertices
      int path_id = next_path++;
      std::vector<std::size_t> path_edges;
      for (int dir = 0; dir < 2; ++dir) {
        std::size_t via =
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(dir)]
                .second;
        int nxt =
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(dir)]
                .first;
        path_edges.push_back(via);
        while (in_d[static_cast<std::size_t>(c)][static_cast<std::size_t>(nxt)]) {
          done[static_cast<std::size_t>(nxt)] = 1;
          // the unique continuation out of `nxt` other than `via`
          std::size_t nvia = via;
          int nnxt = nxt;
          for (const auto& [to, ei] : adj[static_cast<std::size_t>(nxt)]) {
            if (ei != via) {
              nvia = ei;
              nnxt = to;
              break;
            }
          }
          via = nvia;
          nxt = nnxt;
          path_edges.push_back(via);
        }
      }
      done[static_cast<std::size_t>(v)] = 1;
      for (std::size_t ei : path_edges) {
        paths_of_edge[ei].push_back(path_id);
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    std::sort(paths_of_edge[i].begin(), paths_of_edge[i].end());
  }
  for (int v : out.d_vertices) {
    std::vector<std::vector<int>> sig;
    for (std::size_t i = 0; i < m; ++i) {
      if (st.edges[i].u == v || st.edges[i].v == v) {
        sig.push_back(paths_of_edge[i]);
      }
    }
    std::sort(sig.begin(), sig.end());
    out.signature[v] = std::move(sig);
  }
  return out;
}

// One signature collapse; returns false when no class admits one.
bool signature_collapse(KState& st, const KernelObserver& obs,
                        std::vector<TraceStep>& trace,
                        const SignatureData& data) {
  std::map<std::vector<std::vector<int>>, std::vector<int>> classes;
  for (int v : data.d_vertices) {
    classes[data.signature.at(v)].push_back(v);
  }
  std::set<std::pair<int, int>> adjacent;
  for (const auto& e : st.edges) {
    adjacent.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  for (const auto& [sig, verts] : classes) {
    if (verts.size() < 3) continue;
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        int keep = verts[a], drop = verts[b];
        if (adjacent.count({std::min(keep, drop), std::max(keep, drop)})) {
          continue;
        }
        // splice the dropped vertex out of each color-i path through it
        std::vector<KEdge> spliced;
        for (int c = 1; c <= st.alpha; ++c) {
          std::uint32_t bit = 1u << (c - 1);
          std::vector<std::size_t> inc;
          for (std::size_t i = 0; i < st.edges.size(); ++i) {
            if (!(st.edges[i].colors & bit)) continue;
            if (st.edges[i].u == drop || st.edges[i].v == drop) {
              inc.push_back(i);
            }
          }
          if (inc.empty()) continue;
          if (inc.size() != 2) {
            throw std::logic_error("signature collapse: degree not 2");
          }
          const KEdge& e1 = st.edges[inc[0]];
          const KEdge& e2 = st.edges[inc[1]];
          int x = (e1.u == drop) ? e1.v : e1.u;
          int y = (e2.u == drop) ? e2.v : e2.u;
          KEdge ne{x, y, bit, st.next_uid++};
          st.parent.push_back(e1.uid);
          spliced.push_back(ne);
        }
        std::vector<KEdge> rest;
        for (const auto& e : st.edges) {
          if (e.u != drop && e.v != drop) rest.push_back(e);
        }
        st.edges = std::move(rest);
        for (const auto& ne : spliced) st.edges.push_back(ne);
        st.vertex_alive[static_cast<std::size_t>(drop)] = 0;
        std::ostringstream note;
        note << "signature class of size " << verts.size() << ": vertex "
             << drop << " removed (kept " << keep << ")";
        notify(st, obs, {7, note.str()}, trace);
        return true;
      }
    }
    std::ostringstream note;
    note << "collapse skipped: class of size " << verts.size()
         << " has no non-adjacent pair";
    trace.push_back({7, note.str()});
  }
  return false;
}

KernelResult finish(KState& st, KernelVerdict verdict,
                    std::vector<TraceStep> trace) {
  KernelResult out;
  out.verdict = verdict;
  out.trace = std::move(trace);
  out.k_reduced = st.k;
  out.reduced = st.snapshot(&out.kernel_edge_origin);
  out.kernel_vertices = out.reduced.n;
  std::set<int> forced;
  for (int uid : st.forced) forced.insert(st.resolve(uid));
  out.forced_edges.assign(forced.begin(), forced.end());
  return out;
}

} // namespace

KernelResult apply_rules(const EdgeColoredGraph& g, int k,
                         const KernelObserver& obs) {
  KState st = make_state(g, k);
  std::vector<TraceStep> trace;
  KernelVerdict verdict = run_rules(st, obs, trace);
  return finish(st, verdict, std::move(trace));
}

KernelResult kernelize(const EdgeColoredGraph& g, int k, bool signature,
                       const KernelObserver& obs) {
  KState st = make_state(g, k);
  std::vector<TraceStep> trace;
  KernelVerdict verdict = run_rules(st, obs, trace);
  while (verdict == KernelVerdict::kReduced && signature) {
    SignatureData data = build_signature_data(st);
    if (data.no_instance) {
      std::ostringstream note;
      note << "color " << data.bad_color << " keeps more than k excess "
           << "edges: NO";
      notify(st, obs, {7, note.str()}, trace);
      verdict = KernelVerdict::kNo;
      break;
    }
    if (!signature_collapse(st, obs, trace, data)) break;
    verdict = run_rules(st, obs, trace);
  }
  return finish(st, verdict, std::move(trace));
}

} // namespace simfes
