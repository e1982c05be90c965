// patternforge: detect, reduce, verify, bench, generate.
// Exit codes: 0 found / pass, 1 absent / fail, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/harness.hpp"
#include "patternforge/io.hpp"
#include "patternforge/minors.hpp"
#include "patternforge/reductions.hpp"

using namespace pf;

namespace {

constexpr int kExitError = 2;

// "complement(X)" is accepted as a synonym for "co-X".
Pattern parse_pattern(std::string name) {
  const std::string pre = "complement(";
  if (name.rfind(pre, 0) == 0 && name.back() == ')') name = "co-" + name.substr(pre.size(), name.size() - pre.size() - 1);
  return catalog_lookup(name);
}

std::string display(const Pattern& p) {
  std::string s = p.label();
  if (s.rfind("co-", 0) == 0 && s.size() > 4) return "complement(" + s.substr(3) + ")";
  return s;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + item + "' in list '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::array<int, 4> parse_sizes4(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() == 1) v.assign(4, v[0]);
  if (v.size() != 4) throw InputError("expected one or four part sizes, got '" + s + "'");
  for (int x : v)
    if (x < 0) throw InputError("part sizes must be non-negative");
  return {v[0], v[1], v[2], v[3]};
}

void print_result(std::ostream& out, const DetectionResult& r) {
  if (r.present()) {
    out << "FOUND " << r.found->pattern;
    for (int v : r.found->vertices) out << ' ' << v;
    out << '\n';
    return;
  }
  out << "ABSENT";
  if (r.certificate) {
    out << " certificate " << to_string(r.certificate->kind);
    for (const auto& part : r.certificate->parts) {
      out << " {";
      for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i];
      out << '}';
    }
  }
  out << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  return f;
}

// Struct of flag values shared by subcommand callbacks.
struct Args {
  // detect
  std::string graph;
  std::vector<std::string> pair;
  std::string pattern;
  std::string mode = "induced";
  bool oracle = false;
  std::uint64_t seed = 1;
  // reduce
  std::string reduce_kind;
  std::vector<std::string> set;
  bool exhaustive = false;
  std::string out;
  std::size_t max_instances = 1000;
  // verify
  std::string verify_target;
  std::size_t trials = 200;
  int nmax = 9;
  int exhaustive_n = 0;
  std::string sizes;
  std::string densities;
  // bench
  std::string bench_target;
  std::string model = "c4free";
  int bench_trials = 3;
  // generate
  std::string gen_model;
  int n = 0;
  int t = 0;
  double p = -1;  // unset: 0.5, or 0 for hg-planted
  std::string parts;
};

int run_detect(const Args& a) {
  Graph g = read_edge_list_file(a.graph);
  std::vector<Pattern> patterns;
  if (!a.pair.empty()) {
    for (const auto& s : a.pair) patterns.push_back(parse_pattern(s));
  } else {
    patterns.push_back(parse_pattern(a.pattern));
  }
  bool induced = a.mode == "induced";
  DetectionResult r = a.oracle ? brute_force_detect_any(g, patterns, induced) : detect_auto(g, patterns, induced);
  print_result(std::cout, r);
  return r.present() ? 0 : 1;
}

void write_instances(const Args& a, const std::vector<ReductionInstance>& insts) {
  if (a.out.empty()) return;
  if (insts.size() == 1) {
    auto f = open_out(a.out);
    write_instance(f, insts[0]);
    return;
  }
  for (std::size_t i = 0; i < insts.size(); ++i) {
    auto f = open_out(a.out + "." + std::to_string(i));
    write_instance(f, insts[i]);
  }
}

std::vector<ReductionInstance> gather(const std::function<std::size_t(const std::function<bool(const ReductionInstance&)>&)>& each,
                                      std::size_t cap) {
  std::vector<ReductionInstance> v;
  bool over = false;
  each([&](const ReductionInstance& inst) {
    if (v.size() == cap) {
      over = true;
      return false;
    }
    v.push_back(inst);
    return true;
  });
  if (over) throw CapacityError("instance count exceeds --max-instances=" + std::to_string(cap));
  return v;
}

int run_reduce(const Args& a) {
  const std::string& kind = a.reduce_kind;
  if (kind == "hc4") {
    std::ifstream in(a.graph);
    if (!in) throw InputError("cannot open '" + a.graph + "'");
    Hypergraph4P3U hg;
    try {
      hg = read_hypergraph(in);
    } catch (const InputError& e) {
      throw InputError(a.graph + ": " + std::string(e.what()));
    }
    HyperC4Reduction red = build_hyperclique_c4_reduction(hg);
    if (!a.out.empty()) {
      auto f = open_out(a.out);
      f << "# hc4 gadget; origin lines give band i and the pair (x, y) in V_i x V_{i+1}\n";
      for (std::size_t v = 0; v < red.origin.size(); ++v)
        f << "# origin " << v << ' ' << red.origin[v].band << ' ' << red.origin[v].x << ' ' << red.origin[v].y << '\n';
      write_edge_list(f, red.out);
    }
    std::cout << "vertices " << red.out.n() << " edges " << red.out.m() << '\n';
    std::cout << "GUARANTEE: H has 4-hyperclique <=> G' has induced C4\n";
    return 0;
  }
  Graph g = read_edge_list_file(a.graph);
  CoreMode mode;
  mode.exhaustive = a.exhaustive;
  mode.seed = a.seed;
  if (kind == "set") {
    if (a.set.empty()) throw InputError("reduce set: --set is required");
    std::vector<Pattern> s;
    for (const auto& x : a.set) s.push_back(parse_pattern(x));
    SetRepresentative rep = choose_set_representative(s);
    auto insts = gather([&](const auto& visit) { return for_each_set_instance(g, s, mode, visit); }, a.max_instances);
    write_instances(a, insts);
    std::cout << "representative " << display(rep.h) << " core " << display(rep.core) << " instances " << insts.size()
              << '\n';
    std::cout << "GUARANTEE: G has " << display(rep.core) << " subgraph <=> some G* has " << display(rep.h)
              << " subgraph\n";
    return 0;
  }
  if (a.pattern.empty()) throw InputError("reduce " + kind + ": --pattern is required");
  Pattern h = parse_pattern(a.pattern);
  if (kind == "psi") {
    CliqueMinor cm = max_clique_minor(h);
    ReductionInstance inst = build_psi_reduction(g, h, cm.witness);
    write_instances(a, {inst});
    std::cout << "parts " << inst.out.k << " vertices " << inst.out.graph.n() << " edges " << inst.out.graph.m()
              << " work " << inst.params.work << '\n';
    std::cout << "GUARANTEE: G has " << cm.eta << "-clique <=> G* has colorful " << display(h) << '\n';
    return 0;
  }
  if (kind == "core") {
    CoreResult core = compute_core(h);
    auto insts = gather([&](const auto& visit) { return for_each_core_instance(g, h, mode, visit); }, a.max_instances);
    write_instances(a, insts);
    std::cout << "core " << display(core.core) << " instances " << insts.size() << '\n';
    std::cout << "GUARANTEE: G has " << display(core.core) << " subgraph <=> some G* has " << display(h) << " subgraph\n";
    return 0;
  }
  if (kind == "pathcycle") {
    PathCycleReduction red = build_pathcycle_reduction(g, h);
    write_instances(a, {red.instance});
    std::cout << "parts " << red.instance.out.k << " vertices " << red.instance.out.graph.n() << " edges "
              << red.instance.out.graph.m() << '\n';
    std::cout << "GUARANTEE: G has " << red.t_prime << "-clique <=> G* has " << display(h) << " subgraph\n";
    return 0;
  }
  throw InputError("unknown reduction '" + kind + "' (psi, core, pathcycle, set, hc4)");
}

int run_verify(const Args& a, const CLI::App& cmd) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.trials = a.trials;
  opt.nmax = a.nmax;
  if (a.exhaustive_n > 0) opt.exhaustive_n = a.exhaustive_n;
  if (!a.sizes.empty()) opt.sizes = parse_int_list(a.sizes);
  if (!a.densities.empty()) {
    opt.densities.clear();
    std::stringstream ss(a.densities);
    std::string item;
    while (std::getline(ss, item, ',')) opt.densities.push_back(std::stod(item));
  }
  bool trials_set = cmd.count("--trials") > 0, nmax_set = cmd.count("--nmax") > 0;
  const std::string& k = a.verify_target;
  std::vector<VerificationReport> reports;
  if (k == "psi") {
    reports.push_back(verify_psi(opt, default_psi_patterns()));
  } else if (k == "core" || k == "set") {
    if (!trials_set) opt.trials = 100;
    if (!nmax_set) opt.nmax = 6;
    reports.push_back(k == "core" ? verify_core(opt, default_core_patterns()) : verify_set(opt, default_pattern_sets()));
  } else if (k == "pathcycle") {
    reports.push_back(verify_pathcycle(opt, default_pathcycle_patterns()));
  } else if (k == "hc4") {
    reports.push_back(verify_hc4(opt));
  } else {
    auto dets = resolve_detectors(k);
    if (dets.empty()) throw InputError("unknown verification target '" + k + "'");
    for (const DetectorEntry* d : dets) {
      VerifyOptions o = opt;
      if (o.exhaustive_n && *o.exhaustive_n < d->min_n) {
        std::cout << "SKIP " << d->name << " (needs n >= " << d->min_n << ")\n";
        continue;
      }
      reports.push_back(verify_detector(*d, o));
    }
  }
  bool pass = true;
  VerificationReport total;
  total.kind = "total";
  for (const auto& r : reports) {
    std::cout << format_report(r);
    pass = pass && r.pass();
    total.merge(r);
  }
  if (reports.size() > 1) std::cout << format_report(total, 0);
  return pass ? 0 : 1;
}

int run_bench_cmd(const Args& a) {
  const DetectorEntry* d = find_detector(a.bench_target);
  if (!d) throw InputError("unknown detector '" + a.bench_target + "'");
  std::vector<int> sizes = parse_int_list(a.sizes.empty() ? "1000,2000,4000" : a.sizes);
  BenchResult b = run_bench(*d, sizes, a.model, a.bench_trials, a.seed);
  std::cout << format_bench(b);
  return 0;
}

int run_generate(Args a) {
  std::ostringstream buf;
  if (a.p == -1) a.p = a.gen_model == "hg-planted" ? 0.0 : 0.5;
  const std::string& m = a.gen_model;
  if (m == "gnp" || m == "planted-clique" || m == "c4free") {
    if (a.n < 0) throw InputError("--n must be non-negative");
    if (m != "c4free" && (a.p < 0 || a.p > 1)) throw InputError("--p must lie in [0,1]");
    Graph g;
    if (m == "gnp") g = gnp(a.n, a.p, a.seed);
    else if (m == "c4free") g = c4free(a.n, a.seed);
    else {
      if (a.t < 0 || a.t > a.n) throw InputError("--t must lie in [0, n]");
      g = planted_clique(a.n, a.t, a.p, a.seed);
    }
    write_edge_list(buf, g);
  } else if (m == "hg-random" || m == "hg-planted") {
    if (a.p < 0 || a.p > 1) throw InputError("--p must lie in [0,1]");
    auto sizes = parse_sizes4(a.parts);
    if (m == "hg-random") {
      write_hypergraph(buf, hg_random(sizes, a.p, a.seed));
    } else {
      PlantedHypergraph ph = hg_planted(sizes, a.p, a.seed);
      buf << "# planted " << ph.planted[0] << ' ' << ph.planted[1] << ' ' << ph.planted[2] << ' ' << ph.planted[3]
          << '\n';
      write_hypergraph(buf, ph.hg);
    }
  } else {
    throw InputError("unknown model '" + m + "' (gnp, planted-clique, c4free, hg-random, hg-planted)");
  }
  if (a.out.empty()) {
    std::cout << buf.str();
  } else {
    auto f = open_out(a.out);
    f << buf.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patternforge: pattern detection, reductions and their oracle checks"};
  app.require_subcommand(1);
  Args a;

  auto* det = app.add_subcommand("detect", "Detect a pattern or a pair of patterns in a graph");
  det->add_option("--graph", a.graph, "Edge-list file")->required();
  auto* pair_opt = det->add_option("--pair", a.pair, "Two pattern names")->expected(2);
  auto* pat_opt = det->add_option("--pattern", a.pattern, "One pattern name");
  pair_opt->excludes(pat_opt);
  det->add_option("--mode", a.mode, "induced or noninduced")->check(CLI::IsMember({"induced", "noninduced"}));
  det->add_flag("--oracle", a.oracle, "Use the brute-force oracle");
  det->add_option("--seed", a.seed, "Seed (detectors are deterministic; accepted for scripting)");

  auto* red = app.add_subcommand("reduce", "Build a reduction instance");
  red->add_option("kind", a.reduce_kind, "psi, core, pathcycle, set or hc4")->required();
  red->add_option("--graph", a.graph, "Host edge list (hypergraph file for hc4)")->required();
  red->add_option("--pattern", a.pattern, "Pattern name");
  red->add_option("--set", a.set, "Pattern names for the set reduction");
  red->add_option("--seed", a.seed, "Color-coding seed");
  red->add_flag("--exhaustive", a.exhaustive, "Enumerate every host coloring");
  red->add_option("--out", a.out, "Output file (multiple instances get .0, .1, ... suffixes)");
  red->add_option("--max-instances", a.max_instances, "Refuse to write more instances than this");

  auto* ver = app.add_subcommand("verify", "Run an oracle-equivalence suite");
  ver->add_option("target", a.verify_target, "psi, core, pathcycle, set, hc4, a detector or a detector group")
      ->required();
  ver->add_option("--trials", a.trials, "Random trials");
  ver->add_option("--nmax", a.nmax, "Largest random host");
  ver->add_option("--seed", a.seed, "Base seed");
  ver->add_option("--exhaustive-n", a.exhaustive_n, "Detectors: every graph on K vertices; core/set: hosts up to K");
  ver->add_option("--sizes", a.sizes, "Detector trial sizes, comma separated");
  ver->add_option("--densities", a.densities, "Detector trial edge probabilities, comma separated");

  auto* ben = app.add_subcommand("bench", "Time a detector and fit a log-log slope");
  ben->add_option("detector", a.bench_target, "Detector name")->required();
  ben->add_option("--sizes", a.sizes, "Comma-separated n values");
  ben->add_option("--model", a.model, "gnp:<p>, sparse:<d> or c4free");
  ben->add_option("--trials", a.bench_trials, "Graphs per size");
  ben->add_option("--seed", a.seed, "Base seed");

  auto* gen = app.add_subcommand("generate", "Generate a seeded instance");
  gen->add_option("model", a.gen_model, "gnp, planted-clique, c4free, hg-random or hg-planted")->required();
  gen->add_option("--n", a.n, "Vertices");
  gen->add_option("--t", a.t, "Planted clique size");
  gen->add_option("--p", a.p, "Edge or hyperedge probability");
  gen->add_option("--parts", a.parts, "Hypergraph part sizes: one value or four comma separated");
  gen->add_option("--seed", a.seed, "Seed");
  gen->add_option("--out", a.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*det) {
      if (a.pair.empty() && a.pattern.empty()) throw InputError("detect: give --pair A B or --pattern X");
      return run_detect(a);
    }
    if (*red) return run_reduce(a);
    if (*ver) return run_verify(a, *ver);
    if (*ben) return run_bench_cmd(a);
    if (*gen) return run_generate(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
