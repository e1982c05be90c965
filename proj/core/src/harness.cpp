#include "patternforge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/minors.hpp"
#include "patternforge/random.hpp"
#include "patternforge/reductions.hpp"

namespace pf {

int harness_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("PATTERNFORGE_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
  }
  return hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(harness_threads()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first;
  std::mutex mu;
  auto work = [&] {
    for (;;) {
      if (stop) return;
      std::size_t i = next++;
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

void VerificationReport::merge(const VerificationReport& o) {
  trials += o.trials;
  mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  oracle_seconds += o.oracle_seconds;
  detector_seconds += o.detector_seconds;
}

std::string format_report(const VerificationReport& r, std::size_t max_lines) {
  std::ostringstream os;
  os << (r.pass() ? "PASS " : "FAIL ") << r.kind << " trials=" << r.trials << " mismatches=" << r.mismatches.size()
     << std::fixed << std::setprecision(3) << " oracle=" << r.oracle_seconds << "s detector=" << r.detector_seconds
     << "s\n";
  for (std::size_t i = 0; i < r.mismatches.size() && i < max_lines; ++i)
    os << "  mismatch seed=" << r.mismatches[i].seed << ": " << r.mismatches[i].description << "\n";
  if (r.mismatches.size() > max_lines) os << "  ... " << r.mismatches.size() - max_lines << " more\n";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  os << "]";
  return os.str();
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Per-trial outcome, collected by index so reports do not depend on
// scheduling.
struct Slot {
  std::optional<Mismatch> mismatch;
  double oracle = 0;
  double detector = 0;
};

VerificationReport collect(std::string kind, std::vector<Slot>& slots) {
  VerificationReport r;
  r.kind = std::move(kind);
  r.trials = slots.size();
  for (auto& s : slots) {
    r.oracle_seconds += s.oracle;
    r.detector_seconds += s.detector;
    if (s.mismatch) r.mismatches.push_back(std::move(*s.mismatch));
  }
  return r;
}

// Runs `trial(i, slot)` for each index; exceptions become mismatches.
VerificationReport run_trials(std::string kind, std::size_t count, const std::function<std::uint64_t(std::size_t)>& seed_of,
                              const std::function<void(std::size_t, Slot&)>& trial) {
  std::vector<Slot> slots(count);
  parallel_for(count, [&](std::size_t i) {
    try {
      trial(i, slots[i]);
    } catch (const std::exception& e) {
      slots[i].mismatch = Mismatch{seed_of(i), std::string("exception: ") + e.what()};
    }
  });
  return collect(std::move(kind), slots);
}

Pattern make_pattern(const std::string& name, int n, const std::vector<Edge>& edges) {
  return {graph_from_edges(n, edges), name};
}

Pattern pair_pattern(const std::string& a) { return catalog_lookup(a); }

std::vector<DetectorEntry> build_registry() {
  std::vector<DetectorEntry> r;
  auto pats = [](std::initializer_list<const char*> names) {
    std::vector<Pattern> v;
    for (const char* n : names) v.push_back(catalog_lookup(n));
    return v;
  };
  r.push_back({"noninduced_c4", pats({"C4"}), false, 0,
               [](const Graph& g, const DetectOptions&) { return noninduced_c4(g); }});
  r.push_back({"c4_or_triangle", pats({"C4", "K3"}), true, 0,
               [](const Graph& g, const DetectOptions& o) { return detect_c4_or_triangle(g, o); }});
  r.push_back({"c4_or_diamond", pats({"C4", "diamond"}), true, 0,
               [](const Graph& g, const DetectOptions& o) { return detect_c4_or_diamond(g, o); }});
  r.push_back({"c4_or_k4", pats({"C4", "K4"}), true, 0,
               [](const Graph& g, const DetectOptions& o) { return detect_c4_or_k4(g, o); }});
  r.push_back({"c4_or_paw", pats({"C4", "paw"}), true, 0,
               [](const Graph& g, const DetectOptions& o) { return detect_c4_or_paw(g, o); }});
  r.push_back({"c4_or_coclaw", pats({"C4", "co-claw"}), true, 0,
               [](const Graph& g, const DetectOptions& o) { return detect_c4_or_coclaw(g, o); }});
  r.push_back({"k4_or_i4", pats({"K4", "I4"}), true, 31,
               [](const Graph& g, const DetectOptions&) { return detect_k4_or_i4(g); }});
  const char* three[] = {"K3", "P3", "co-P3", "I3"};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Pattern a = pair_pattern(three[i]), b = pair_pattern(three[j]);
      std::vector<Pattern> ps{a};
      if (j != i) ps.push_back(b);
      r.push_back({std::string("pair3:") + three[i] + "," + three[j], ps, true, 0,
                   [a, b](const Graph& g, const DetectOptions& o) { return detect_pair_3node(g, a, b, o); }});
    }
  for (auto [a, b] : {std::pair{"K4", "I4"}, {"diamond", "co-diamond"}, {"paw", "co-paw"}, {"claw", "co-claw"},
                      {"C4", "2K2"}, {"P4", "P4"}}) {
    Pattern h = catalog_lookup(a);
    std::vector<Pattern> ps{h};
    if (std::string(a) != b) ps.push_back(catalog_lookup(b));
    r.push_back({std::string("hcomp:") + a, ps, true, 0,
                 [h](const Graph& g, const DetectOptions& o) { return detect_h_or_complement(g, h, o); }});
  }
  return r;
}

// Catalog name of a pattern with at most 4 vertices, by isomorphism.
std::optional<std::string> small_name(const Pattern& p) {
  static const std::vector<Pattern> known = [] {
    std::vector<Pattern> v;
    for (const char* n : {"K3", "P3", "co-P3", "I3", "C4", "K4", "I4", "diamond", "co-diamond", "paw", "co-paw", "claw",
                          "co-claw", "2K2", "P4"})
      v.push_back(catalog_lookup(n));
    return v;
  }();
  if (p.size() < 3 || p.size() > 4) return std::nullopt;
  for (const auto& k : known)
    if (k.size() == p.size() && k.graph.m() == p.graph.m() && is_isomorphic(p.graph, k.graph)) return *k.name;
  return std::nullopt;
}

}  // namespace

const std::vector<DetectorEntry>& detector_registry() {
  static const std::vector<DetectorEntry> r = build_registry();
  return r;
}

const DetectorEntry* find_detector(const std::string& name) {
  std::string key = name.rfind("detect_", 0) == 0 ? name.substr(7) : name;
  for (const auto& d : detector_registry())
    if (d.name == key) return &d;
  return nullptr;
}

std::vector<const DetectorEntry*> resolve_detectors(const std::string& name) {
  std::vector<const DetectorEntry*> out;
  auto prefixed = [&](const std::string& p) {
    for (const auto& d : detector_registry())
      if (d.name.rfind(p, 0) == 0) out.push_back(&d);
  };
  if (name == "all") {
    for (const auto& d : detector_registry()) out.push_back(&d);
  } else if (name == "detect_pair_3node" || name == "pair3") {
    prefixed("pair3:");
  } else if (name == "detect_h_or_complement" || name == "hcomp") {
    prefixed("hcomp:");
  } else if (name == "detect_c4_or_triangleH" || name == "c4_or_triangleH") {
    for (const char* n : {"c4_or_diamond", "c4_or_k4", "c4_or_paw", "c4_or_coclaw"}) out.push_back(find_detector(n));
  } else if (const DetectorEntry* d = find_detector(name)) {
    out.push_back(d);
  }
  return out;
}

DetectionResult detect_auto(const Graph& g, const std::vector<Pattern>& patterns, bool induced, const DetectOptions& opt,
                            std::string* used) {
  if (patterns.empty()) throw InputError("detect: no patterns given");
  auto pick = [&](const std::string& name) -> const DetectorEntry* {
    if (used) *used = name;
    return find_detector(name);
  };
  std::vector<std::string> names;
  for (const auto& p : patterns) {
    auto n = small_name(p);
    if (!n) {
      names.clear();
      break;
    }
    names.push_back(*n);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (!induced) {
    if (names == std::vector<std::string>{"C4"}) return pick("noninduced_c4")->run(g, opt);
  } else if (!names.empty()) {
    if (names.size() == 2 && names[0] == "C4") {
      for (auto [other, det] : {std::pair{"K3", "c4_or_triangle"}, {"diamond", "c4_or_diamond"}, {"K4", "c4_or_k4"},
                                {"paw", "c4_or_paw"}, {"co-claw", "c4_or_coclaw"}})
        if (names[1] == other) return pick(det)->run(g, opt);
    }
    bool all3 = std::all_of(patterns.begin(), patterns.end(), [](const Pattern& p) { return p.size() == 3; });
    if (all3 && names.size() <= 2) {
      const Pattern& a = patterns[0];
      const Pattern& b = patterns.size() > 1 ? patterns[1] : patterns[0];
      if (used) *used = "pair3";
      return detect_pair_3node(g, a, b, opt);
    }
    bool all4 = std::all_of(patterns.begin(), patterns.end(), [](const Pattern& p) { return p.size() == 4; });
    if (all4 && names.size() <= 2) {
      const Pattern& h = patterns[0];
      Pattern co{complement(h.graph), std::nullopt};
      bool family = names.size() == 1 ? is_isomorphic(h.graph, co.graph).has_value()
                                      : is_isomorphic(patterns.back().graph, co.graph).has_value();
      if (family) {
        try {
          auto r = detect_h_or_complement(g, h, opt);
          if (used) *used = "hcomp:" + names[0];
          return r;
        } catch (const InputError&) {
          // not one of the handled families
        }
      }
    }
  }
  if (used) *used = "brute_force";
  return brute_force_detect_any(g, patterns, induced);
}

std::string check_detection(const Graph& g, const DetectorEntry& d, const DetectionResult& r, bool oracle_present) {
  if (r.present() != oracle_present)
    return std::string("detector ") + (r.present() ? "found " + r.found->pattern : "absent") + ", oracle " +
           (oracle_present ? "present" : "absent");
  if (r.present()) {
    const Witness& w = *r.found;
    if (w.induced != d.induced) return "witness has wrong inducedness";
    auto it = std::find_if(d.patterns.begin(), d.patterns.end(), [&](const Pattern& p) { return p.label() == w.pattern; });
    if (it == d.patterns.end()) return "witness names unexpected pattern " + w.pattern;
    if (!verify_witness(g, *it, w)) return "witness " + w.pattern + " {" + vec_str(w.vertices) + "} does not verify";
  } else if (r.certificate && !verify_certificate(g, *r.certificate)) {
    return "certificate " + to_string(r.certificate->kind) + " does not verify";
  }
  return {};
}

VerificationReport verify_detector(const DetectorEntry& d, const VerifyOptions& opt) {
  std::vector<Graph> exhaustive;
  if (opt.exhaustive_n) {
    if (*opt.exhaustive_n < d.min_n)
      throw InputError(d.name + " needs at least " + std::to_string(d.min_n) + " vertices");
    exhaustive = all_graphs(*opt.exhaustive_n);
  }
  if (!opt.exhaustive_n && (opt.sizes.empty() || opt.densities.empty()))
    throw InputError("verify: sizes and densities must be non-empty");
  std::size_t count = opt.exhaustive_n ? exhaustive.size() : opt.trials;
  auto seed_of = [&](std::size_t i) { return opt.exhaustive_n ? static_cast<std::uint64_t>(i) : mix_seed(opt.seed, i); };
  return run_trials(d.name, count, seed_of, [&](std::size_t i, Slot& slot) {
    Graph g;
    if (opt.exhaustive_n) {
      g = exhaustive[i];
    } else {
      int n = std::max(opt.sizes[i % opt.sizes.size()], d.min_n);
      double p = opt.densities[(i / opt.sizes.size()) % opt.densities.size()];
      g = gnp(n, p, seed_of(i));
    }
    auto t0 = Clock::now();
    DetectionResult r = d.run(g, opt.detect);
    slot.detector = seconds_since(t0);
    t0 = Clock::now();
    bool truth = brute_force_detect_any(g, d.patterns, d.induced).present();
    slot.oracle = seconds_since(t0);
    std::string err = check_detection(g, d, r, truth);
    if (!err.empty()) slot.mismatch = Mismatch{seed_of(i), err + " on " + describe(g)};
  });
}

std::vector<Pattern> default_psi_patterns() {
  std::vector<Pattern> v;
  for (const char* n : {"C4", "diamond", "paw", "C6", "co-C6"}) v.push_back(catalog_lookup(n));
  return v;
}

std::vector<Pattern> default_core_patterns() {
  std::vector<Pattern> v;
  for (const char* n : {"P3", "C4", "paw", "diamond", "C6"}) v.push_back(catalog_lookup(n));
  v.push_back(make_pattern("bowtie", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  v.push_back(make_pattern("C4+2pendants", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}}));
  return v;
}

std::vector<Pattern> default_pathcycle_patterns() {
  std::vector<Pattern> v;
  for (const char* n : {"co-P5", "co-P6", "co-P7", "co-P8", "co-C6", "co-C8"}) v.push_back(catalog_lookup(n));
  return v;
}

std::vector<std::vector<Pattern>> default_pattern_sets() {
  auto c = [](const char* n) { return catalog_lookup(n); };
  Pattern bowtie = make_pattern("bowtie", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  return {{c("C4"), c("C6")}, {c("paw"), c("diamond")}, {c("P3"), c("C4")}, {bowtie, c("diamond")}, {c("P4"), c("paw")}};
}

VerificationReport verify_psi(const VerifyOptions& opt, const std::vector<Pattern>& patterns) {
  if (patterns.empty()) throw InputError("verify psi: no patterns");
  std::vector<CliqueMinor> minors;
  for (const auto& h : patterns) minors.push_back(max_clique_minor(h));
  auto seed_of = [&](std::size_t i) { return mix_seed(opt.seed, i); };
  return run_trials("psi", opt.trials, seed_of, [&](std::size_t i, Slot& slot) {
    std::size_t pi = i % patterns.size();
    const Pattern& h = patterns[pi];
    int t = minors[pi].eta;
    Rng rng(seed_of(i));
    int n = rng.range(1, std::max(1, opt.nmax));
    double p = 0.3 + 0.6 * rng.uniform01();
    Graph g = gnp(n, p, rng.next());
    auto t0 = Clock::now();
    bool truth = static_cast<int>(max_clique_set(g).size()) >= t;
    slot.oracle = seconds_since(t0);
    t0 = Clock::now();
    ReductionInstance inst = build_psi_reduction(g, h, minors[pi].witness);
    DetectionResult r = brute_force_colorful(inst.out, h);
    slot.detector = seconds_since(t0);
    std::string where = " for " + h.label() + " t=" + std::to_string(t) + " on " + describe(g);
    if (!is_H_partite(inst.out, h)) {
      slot.mismatch = Mismatch{seed_of(i), "instance is not H-partite" + where};
    } else if (r.present() != truth) {
      slot.mismatch = Mismatch{seed_of(i), std::string("colorful ") + (r.present() ? "present" : "absent") +
                                               ", clique " + (truth ? "present" : "absent") + where};
    } else if (r.present()) {
      std::vector<int> clique = extract_clique_psi(inst, r.found->vertices);
      std::vector<int> s = clique;
      std::sort(s.begin(), s.end());
      bool ok = static_cast<int>(s.size()) == t && std::adjacent_find(s.begin(), s.end()) == s.end();
      for (std::size_t a = 0; ok && a < s.size(); ++a)
        for (std::size_t b = a + 1; ok && b < s.size(); ++b) ok = g.has_edge(s[a], s[b]);
      if (!ok) slot.mismatch = Mismatch{seed_of(i), "decoded vertices {" + vec_str(clique) + "} are not a clique" + where};
    }
  });
}

namespace {

// Hosts for the core and set suites: every graph up to `exhaustive_n`
// vertices, then `trials` random graphs on nmax vertices.
struct HostList {
  std::vector<Graph> graphs;
  std::vector<std::uint64_t> seeds;
};

HostList core_hosts(const VerifyOptions& opt) {
  HostList h;
  int upto = opt.exhaustive_n.value_or(5);
  for (int n = 1; n <= upto; ++n)
    for (auto& g : all_graphs(n)) {
      h.seeds.push_back(h.graphs.size());
      h.graphs.push_back(std::move(g));
    }
  for (std::size_t i = 0; i < opt.trials; ++i) {
    Rng rng(mix_seed(opt.seed, i));
    double p = 0.2 + 0.6 * rng.uniform01();
    h.seeds.push_back(mix_seed(opt.seed, i));
    h.graphs.push_back(gnp(opt.nmax, p, rng.next()));
  }
  return h;
}

void check_core_like(const Graph& g, const Pattern& h, const Pattern& core, std::uint64_t seed,
                     const std::function<std::size_t(const std::function<bool(const ReductionInstance&)>&)>& each,
                     Slot& slot) {
  auto t0 = Clock::now();
  bool truth = brute_force_detect(g, core, false).present();
  slot.oracle = seconds_since(t0);
  t0 = Clock::now();
  bool found = false, partite = true;
  each([&](const ReductionInstance& inst) {
    if (!is_H_partite(inst.out, h)) {
      partite = false;
      return false;
    }
    found = brute_force_detect(inst.out.graph, h, false).present();
    return !found;
  });
  slot.detector = seconds_since(t0);
  std::string where = " for " + h.label() + " (core " + core.label() + ") on " + describe(g);
  if (!partite)
    slot.mismatch = Mismatch{seed, "instance is not H-partite" + where};
  else if (found != truth)
    slot.mismatch = Mismatch{seed, std::string("instances ") + (found ? "contain" : "avoid") + " h, core " +
                                       (truth ? "present" : "absent") + where};
}

}  // namespace

VerificationReport verify_core(const VerifyOptions& opt, const std::vector<Pattern>& patterns) {
  if (patterns.empty()) throw InputError("verify core: no patterns");
  HostList hosts = core_hosts(opt);
  std::vector<Pattern> cores;
  for (const auto& h : patterns) cores.push_back(compute_core(h).core);
  std::size_t np = patterns.size();
  auto seed_of = [&](std::size_t i) { return hosts.seeds[i / np]; };
  return run_trials("core", hosts.graphs.size() * np, seed_of, [&](std::size_t i, Slot& slot) {
    const Graph& g = hosts.graphs[i / np];
    const Pattern& h = patterns[i % np];
    check_core_like(g, h, cores[i % np], seed_of(i),
                    [&](const auto& visit) { return for_each_core_instance(g, h, CoreMode{}, visit); }, slot);
  });
}

VerificationReport verify_set(const VerifyOptions& opt, const std::vector<std::vector<Pattern>>& sets) {
  if (sets.empty()) throw InputError("verify set: no pattern sets");
  HostList hosts = core_hosts(opt);
  std::vector<SetRepresentative> reps;
  for (const auto& s : sets) reps.push_back(choose_set_representative(s));
  std::size_t ns = sets.size();
  auto seed_of = [&](std::size_t i) { return hosts.seeds[i / ns]; };
  return run_trials("set", hosts.graphs.size() * ns, seed_of, [&](std::size_t i, Slot& slot) {
    const Graph& g = hosts.graphs[i / ns];
    const auto& s = sets[i % ns];
    const SetRepresentative& rep = reps[i % ns];
    check_core_like(g, rep.h, rep.core, seed_of(i),
                    [&](const auto& visit) { return for_each_set_instance(g, s, CoreMode{}, visit); }, slot);
  });
}

VerificationReport verify_pathcycle(const VerifyOptions& opt, const std::vector<Pattern>& patterns) {
  if (patterns.empty()) throw InputError("verify pathcycle: no patterns");
  auto seed_of = [&](std::size_t i) { return mix_seed(opt.seed, i); };
  return run_trials("pathcycle", opt.trials, seed_of, [&](std::size_t i, Slot& slot) {
    const Pattern& h = patterns[i % patterns.size()];
    Rng rng(seed_of(i));
    int n = rng.range(1, std::max(1, opt.nmax));
    double p = 0.3 + 0.6 * rng.uniform01();
    Graph g = gnp(n, p, rng.next());
    auto t0 = Clock::now();
    PathCycleReduction red = build_pathcycle_reduction(g, h);
    DetectionResult r = brute_force_detect(red.instance.out.graph, h, false);
    slot.detector = seconds_since(t0);
    t0 = Clock::now();
    bool truth = static_cast<int>(max_clique_set(g).size()) >= red.t_prime;
    slot.oracle = seconds_since(t0);
    std::string where = " for " + h.label() + " t'=" + std::to_string(red.t_prime) + " on " + describe(g);
    if (!is_H_partite(red.instance.out, h))
      slot.mismatch = Mismatch{seed_of(i), "instance is not H-partite" + where};
    else if (r.present() != truth)
      slot.mismatch = Mismatch{seed_of(i), std::string("h ") + (r.present() ? "present" : "absent") + ", clique " +
                                               (truth ? "present" : "absent") + where};
  });
}

namespace {

std::string describe(const Hypergraph4P3U& hg) {
  std::ostringstream os;
  os << "sizes=" << hg.sizes[0] << "," << hg.sizes[1] << "," << hg.sizes[2] << "," << hg.sizes[3] << " edges=[";
  bool first = true;
  for (const auto& e : hg.edges) {
    os << (first ? "" : " ");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << e[j].part << ":" << e[j].index;
    first = false;
  }
  os << "]";
  return os.str();
}

void check_hc4(const Hypergraph4P3U& hg, std::uint64_t seed, Slot& slot) {
  static const Pattern c4 = catalog_lookup("C4");
  auto t0 = Clock::now();
  bool truth = find_hyperclique(hg).has_value();
  slot.oracle = seconds_since(t0);
  t0 = Clock::now();
  HyperC4Reduction red = build_hyperclique_c4_reduction(hg);
  DetectionResult r = brute_force_detect(red.out, c4, true);
  slot.detector = seconds_since(t0);
  if (r.present() != truth) {
    slot.mismatch = Mismatch{seed, std::string("induced C4 ") + (r.present() ? "present" : "absent") + ", hyperclique " +
                                       (truth ? "present" : "absent") + " on " + describe(hg)};
    return;
  }
  if (r.present()) extract_hyperclique(red, r.found->vertices, &hg);
}

// All triples (one vertex from each of three distinct parts).
std::vector<Hyperedge> triple_slots(const std::array<int, 4>& sizes) {
  std::vector<Hyperedge> out;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<int, 3> ps{};
    for (int p = 0, j = 0; p < 4; ++p)
      if (p != skip) ps[j++] = p;
    for (int a = 0; a < sizes[ps[0]]; ++a)
      for (int b = 0; b < sizes[ps[1]]; ++b)
        for (int c = 0; c < sizes[ps[2]]; ++c) out.push_back({HyperVertex{ps[0], a}, {ps[1], b}, {ps[2], c}});
  }
  return out;
}

}  // namespace

VerificationReport verify_hc4(const VerifyOptions& opt, const HyperVerifyOptions& hopt) {
  // Small instances: (size vector, edge mask) pairs.
  struct Small {
    std::array<int, 4> sizes;
    std::uint64_t mask;
  };
  std::vector<Small> small;
  std::vector<std::vector<Hyperedge>> slot_lists;
  std::vector<std::size_t> owner;
  for (int code = 0; code < 16; ++code) {
    std::array<int, 4> sizes{};
    for (int p = 0; p < 4; ++p) sizes[p] = 1 + ((code >> p) & 1);
    auto slots = triple_slots(sizes);
    std::size_t li = slot_lists.size();
    slot_lists.push_back(slots);
    if (static_cast<int>(slots.size()) <= hopt.exhaustive_slots) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
        small.push_back({sizes, m});
        owner.push_back(li);
      }
    } else {
      Rng rng(mix_seed(opt.seed ^ 0x5151, static_cast<std::uint64_t>(code)));
      for (std::size_t s = 0; s < hopt.sampled; ++s) {
        small.push_back({sizes, rng.next() & ((std::uint64_t{1} << slots.size()) - 1)});
        owner.push_back(li);
      }
    }
  }
  std::size_t total = small.size() + opt.trials;
  auto seed_of = [&](std::size_t i) {
    return i < small.size() ? static_cast<std::uint64_t>(i) : mix_seed(opt.seed, i - small.size());
  };
  return run_trials("hc4", total, seed_of, [&](std::size_t i, Slot& slot) {
    Hypergraph4P3U hg;
    if (i < small.size()) {
      hg.sizes = small[i].sizes;
      const auto& slots = slot_lists[owner[i]];
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (small[i].mask >> s & 1) hg.add_edge(slots[s][0], slots[s][1], slots[s][2]);
    } else {
      Rng rng(seed_of(i));
      std::array<int, 4> sizes{};
      for (auto& s : sizes) s = rng.range(1, 5);
      double p = 0.2 + 0.7 * rng.uniform01();
      hg = rng.bernoulli(0.5) ? hg_planted(sizes, p, rng.next()).hg : hg_random(sizes, p, rng.next());
    }
    check_hc4(hg, seed_of(i), slot);
  });
}

Graph generate_model(const std::string& model, int n, std::uint64_t seed) {
  auto param = [&](const std::string& prefix) -> std::optional<double> {
    if (model.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = model.substr(prefix.size());
    char* end = nullptr;
    double v = std::strtod(rest.c_str(), &end);
    if (rest.empty() || *end != '\0') throw InputError("bad model parameter in '" + model + "'");
    return v;
  };
  if (model == "c4free") return c4free(n, seed);
  if (auto p = param("gnp:")) {
    if (*p < 0 || *p > 1) throw InputError("gnp probability must lie in [0,1]");
    return gnp(n, *p, seed);
  }
  if (auto d = param("sparse:")) {
    if (*d < 0) throw InputError("sparse degree must be non-negative");
    return gnp(n, n > 1 ? std::min(1.0, *d / (n - 1)) : 0.0, seed);
  }
  throw InputError("unknown model '" + model + "' (expected gnp:<p>, sparse:<d> or c4free)");
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows)
    if (r.n > 0 && r.median_seconds > 0) pts.emplace_back(std::log(r.n), std::log(r.median_seconds));
  if (pts.size() < 2) return 0;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) mx += x, my += y;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
  return sxx > 0 ? sxy / sxx : 0;
}

BenchResult run_bench(const DetectorEntry& d, const std::vector<int>& sizes, const std::string& model, int trials,
                      std::uint64_t seed, const DetectOptions& opt) {
  if (trials < 1) throw InputError("bench: trials must be positive");
  BenchResult b{d.name, model, {}, 0};
  for (int n : sizes) {
    if (n < d.min_n) throw InputError(d.name + " needs at least " + std::to_string(d.min_n) + " vertices");
    std::vector<double> times;
    for (int t = 0; t < trials; ++t) {
      Graph g = generate_model(model, n, mix_seed(seed, static_cast<std::uint64_t>(n) * 1000003u + t));
      auto t0 = Clock::now();
      DetectionResult r = d.run(g, opt);
      times.push_back(seconds_since(t0));
      (void)r;
    }
    std::sort(times.begin(), times.end());
    std::size_t k = times.size();
    double med = k % 2 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
    b.rows.push_back({n, med, k});
  }
  b.slope = loglog_slope(b.rows);
  return b;
}

std::string format_bench(const BenchResult& b) {
  std::ostringstream os;
  os << "detector " << b.detector << " model " << b.model << "\n";
  os << std::setw(8) << "n" << std::setw(16) << "median_s" << std::setw(8) << "trials" << "\n";
  for (const auto& r : b.rows)
    os << std::setw(8) << r.n << std::setw(16) << std::scientific << std::setprecision(4) << r.median_seconds
       << std::defaultfloat << std::setw(8) << r.trials << "\n";
  os << "log-log slope " << std::fixed << std::setprecision(3) << b.slope << std::defaultfloat << "\n";
  for (const auto& r : b.rows)
    os << "@bench," << b.detector << "," << b.model << "," << r.n << "," << std::scientific << std::setprecision(6)
       << r.median_seconds << std::defaultfloat << "\n";
  os << "@slope," << b.detector << "," << b.model << "," << std::fixed << std::setprecision(4) << b.slope
     << std::defaultfloat << "\n";
  return os.str();
}

}  // namespace pf
