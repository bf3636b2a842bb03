#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simfes/generators.hpp"
#include "simfes/kernelizer.hpp"
#include "simfes/maxsim_solver.hpp"
#include "simfes/simfes_solver.hpp"

using nlohmann::json;
using namespace simfes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

struct Output {
  std::ofstream file;
  bool to_file = false;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    to_file = true;
    return file.good();
  }
  std::ostream& stream() { return to_file ? file : std::cout; }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in.good()) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int load_instance(const std::string& path, EdgeColoredGraph& g) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "cannot read " << path << "\n";
    return kExitUsage;
  }
  try {
    g = parse_ecg(text);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

void print_verdict(std::ostream& os, bool yes, const std::set<int>& witness) {
  if (!yes) {
    os << "NO\n";
    return;
  }
  os << "YES\n";
  for (int id : witness) os << "d " << id << '\n';
}

void write_gen(Output& out, const GenOutput& gen) {
  for (const auto& line : gen.comments) out.stream() << line << '\n';
  out.stream() << "# k = " << gen.k << '\n';
  out.stream() << write_ecg(gen.graph);
}

VCInstance builtin_cubic(const std::string& name, int k) {
  VCInstance inst;
  inst.k = k;
  if (name == "k4") {
    inst.n = 4;
    inst.edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  } else if (name == "k33") {
    inst.n = 6;
    inst.edges = {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5},
                  {2, 6}, {3, 4}, {3, 5}, {3, 6}};
  } else if (name == "prism") {
    inst.n = 6;
    inst.edges = {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6},
                  {6, 4}, {1, 4}, {2, 5}, {3, 6}};
  } else if (name == "cube") {
    inst.n = 8;
    inst.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7},
                  {7, 8}, {8, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
  } else if (name == "mobius8") {
    inst.n = 8;
    inst.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                  {7, 8}, {8, 1}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
  } else {
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
  }
  return inst;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous feedback edge set toolkit"};
  app.require_subcommand(1);

  std::string input, output, witness_path, json_path, graph_name = "";
  int k = 0, q = -1, n = 10, m = 12, alpha = 2, count = 10, trials = 3;
  std::uint64_t seed = 0;
  std::uint32_t prime = 2147483647u;
  bool no_kernel = false, oracle = false, no_signature = false;

  auto* solve = app.add_subcommand("solve", "decide Sim-FES");
  solve->add_option("input", input)->required();
  solve->add_option("--k", k)->required();
  solve->add_option("--seed", seed);
  solve->add_option("--prime", prime);
  solve->add_option("--trials", trials);
  solve->add_flag("--no-kernel", no_kernel);
  solve->add_flag("--oracle", oracle);
  solve->add_option("--output", output);

  auto* maxsim = app.add_subcommand("maxsim", "max simultaneous forest");
  maxsim->add_option("input", input)->required();
  maxsim->add_option("--q", q);
  maxsim->add_option("--seed", seed);
  maxsim->add_option("--prime", prime);
  maxsim->add_option("--output", output);

  auto* kern = app.add_subcommand("kernelize", "preprocess an instance");
  kern->add_option("input", input)->required();
  kern->add_option("--k", k)->required();
  kern->add_flag("--no-signature", no_signature);
  kern->add_option("--output", output);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gvc = gen->add_subcommand("vc3", "vertex cover reduction");
  gvc->add_option("--json", json_path);
  gvc->add_option("--graph", graph_name);
  gvc->add_option("--k", k);
  gvc->add_option("--output", output);
  auto* ghs = gen->add_subcommand("hs", "hitting set reduction");
  ghs->add_option("--json", json_path)->required();
  ghs->add_option("--output", output);
  auto* gphs = gen->add_subcommand("phs", "partitioned hitting set reduction");
  gphs->add_option("--json", json_path)->required();
  gphs->add_option("--output", output);
  auto* grnd = gen->add_subcommand("random", "random multigraph");
  grnd->add_option("--n", n);
  grnd->add_option("--m", m);
  grnd->add_option("--alpha", alpha);
  grnd->add_option("--seed", seed);
  grnd->add_option("--output", output);

  auto* verify = app.add_subcommand("verify", "check a witness file");
  verify->add_option("input", input)->required();
  verify->add_option("--witness", witness_path)->required();
  verify->add_option("--k", k)->required();

  auto* bench = app.add_subcommand("bench", "seeded corpus benchmark");
  bench->add_option("--count", count);
  bench->add_option("--n", n);
  bench->add_option("--m", m);
  bench->add_option("--alpha", alpha);
  bench->add_option("--k", k);
  bench->add_option("--seed", seed);
  bench->add_flag("--no-kernel", no_kernel);
  bench->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  if (!out.open(output)) {
    std::cerr << "cannot write " << output << "\n";
    return kExitUsage;
  }

  try {
    if (*solve) {
      EdgeColoredGraph g;
      if (int rc = load_instance(input, g)) return rc;
      SolveOptions opts;
      opts.seed = seed;
      opts.trials = trials;
      opts.prime = prime;
      opts.use_kernel = !no_kernel;
      if (static_cast<std::uint64_t>(prime) <=
          static_cast<std::uint64_t>(g.m()) * std::max(1, g.alpha)) {
        std::cerr << "prime must exceed the parity ground-set size\n";
        return kExitUsage;
      }
      SfesVerdict v = solve_simfes(g, k, opts);
      print_verdict(out.stream(), v.yes, v.witness);
      if (oracle) {
        SfesVerdict b = brute_simfes(g, k);
        if (b.yes != v.yes) {
          std::cerr << "oracle mismatch: solver says "
                    << (v.yes ? "YES" : "NO") << ", oracle says "
                    << (b.yes ? "YES" : "NO") << "\n";
          return kExitMismatch;
        }
      }
    } else if (*maxsim) {
      EdgeColoredGraph g;
      if (int rc = load_instance(input, g)) return rc;
      MaxSimOptions opts;
      opts.seed = seed;
      opts.prime = prime;
      if (q >= 0) {
        MaxSimVerdict v = solve_maxsim(g, q, opts);
        print_verdict(out.stream(), v.yes, v.witness);
      } else {
        std::set<int> w;
        int best = max_sim_forest_size(g, opts, &w);
        out.stream() << "MAX " << best << '\n';
        for (int id : w) out.stream() << "d " << id << '\n';
      }
    } else if (*kern) {
      EdgeColoredGraph g;
      if (int rc = load_instance(input, g)) return rc;
      KernelResult kr = kernelize(g, k, !no_signature);
      out.stream() << "# trace:\n";
      for (const auto& step : kr.trace) {
        out.stream() << "# rule " << step.rule << ": " << step.note << '\n';
      }
      const char* verdict = kr.verdict == KernelVerdict::kYes   ? "YES"
                            : kr.verdict == KernelVerdict::kNo ? "NO"
                                                                : "REDUCED";
      out.stream() << "# verdict: " << verdict << '\n';
      out.stream() << "# k' = " << kr.k_reduced << '\n';
      out.stream() << write_ecg(kr.reduced);
    } else if (*gvc) {
      VCInstance inst;
      if (!json_path.empty()) {
        std::string text;
        if (!read_file(json_path, text)) {
          std::cerr << "cannot read " << json_path << "\n";
          return kExitUsage;
        }
        json j = json::parse(text);
        inst.n = j.at("n").get<int>();
        inst.k = j.at("k").get<int>();
        for (const auto& e : j.at("edges")) {
          inst.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        }
      } else if (!graph_name.empty()) {
        inst = builtin_cubic(graph_name, k);
      } else {
        std::cerr << "gen vc3 needs --json or --graph\n";
        return kExitUsage;
      }
      write_gen(out, gen_vc3(inst));
    } else if (*ghs) {
      std::string text;
      if (!read_file(json_path, text)) {
        std::cerr << "cannot read " << json_path << "\n";
        return kExitUsage;
      }
      json j = json::parse(text);
      HSInstance inst;
      inst.universe = j.at("universe").get<int>();
      inst.k = j.at("k").get<int>();
      for (const auto& s : j.at("sets")) {
        inst.sets.push_back(s.get<std::vector<int>>());
      }
      write_gen(out, gen_hs(inst));
    } else if (*gphs) {
      std::string text;
      if (!read_file(json_path, text)) {
        std::cerr << "cannot read " << json_path << "\n";
        return kExitUsage;
      }
      json j = json::parse(text);
      PHSInstance inst;
      inst.universe = j.at("universe").get<int>();
      inst.k = j.at("k").get<int>();
      for (const auto& fam : j.at("families")) {
        std::vector<std::vector<int>> f;
        for (const auto& s : fam) f.push_back(s.get<std::vector<int>>());
        inst.families.push_back(std::move(f));
      }
      write_gen(out, gen_phs(inst));
    } else if (*grnd) {
      EdgeColoredGraph g = gen_random(n, m, alpha, seed);
      out.stream() << write_ecg(g);
    } else if (*verify) {
      EdgeColoredGraph g;
      if (int rc = load_instance(input, g)) return rc;
      std::string text;
      if (!read_file(witness_path, text)) {
        std::cerr << "cannot read " << witness_path << "\n";
        return kExitUsage;
      }
      std::set<int> w;
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind != "d") continue;
        int id;
        if (ls >> id) w.insert(id);
      }
      bool ok = static_cast<int>(w.size()) <= k;
      try {
        ok = ok && verify_sfes(g, w);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        ok = false;
      }
      out.stream() << (ok ? "OK" : "FAIL") << '\n';
      if (!ok) return kExitMismatch;
    } else if (*bench) {
      out.stream() << "instance,n,m,alpha,k,answer,millis,kernel_vertices\n";
      int max_kernel = 0;
      double max_c = 0.0;
      for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        EdgeColoredGraph g = gen_random(n, m, alpha, s);
        KernelResult kr = kernelize(g, k, true);
        SolveOptions opts;
        opts.seed = s;
        opts.prime = prime;
        opts.use_kernel = !no_kernel;
        auto t0 = std::chrono::steady_clock::now();
        SfesVerdict v = solve_simfes(g, k, opts);
        auto t1 = std::chrono::steady_clock::now();
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                .count();
        out.stream() << "rnd-" << s << ',' << g.n << ',' << g.m() << ','
                     << alpha << ',' << k << ',' << (v.yes ? "YES" : "NO")
                     << ',' << ms << ',' << kr.kernel_vertices << '\n';
        max_kernel = std::max(max_kernel, kr.kernel_vertices);
        double ka = static_cast<double>(k) * alpha;
        if (ka > 1.0 && kr.kernel_vertices > 1) {
          double c = std::log(static_cast<double>(kr.kernel_vertices)) /
                     (alpha * std::log(ka));
          max_c = std::max(max_c, c);
        }
      }
      out.stream() << "# size-audit: max kernel vertices " << max_kernel
                   << ", measured c = " << max_c
                   << " for the bound (k*alpha)^(c*alpha)\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
