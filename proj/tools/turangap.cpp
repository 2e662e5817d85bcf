// Command-line front door for the toolkit: graph construction, exact and
// bounded subgraph comparison, peeling and homomorphism replays, and the
// analytic verifiers. Output files carry a deterministic "report" body and
// a separate "envelope" (timestamp, version, command line), so repeated
// runs with the same flags and seed differ only inside the envelope.
// Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "turangap/constructions.hpp"
#include "turangap/errors.hpp"
#include "turangap/graph.hpp"
#include "turangap/graph_io.hpp"
#include "turangap/homomorphism.hpp"
#include "turangap/krfree_solvers.hpp"
#include "turangap/lemma_verify.hpp"
#include "turangap/partition_solvers.hpp"
#include "turangap/peeling.hpp"
#include "turangap/rational.hpp"
#include "turangap/wheel.hpp"

namespace {

using nlohmann::json;
using namespace turangap;

constexpr const char* kVersion = "0.1.0";
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 64;

void apply_thread_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("TURANGAP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) omp_set_num_threads(n);
  }
#endif
}

// temp + rename so readers never observe a half-written file
void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw GraphError("cannot write " + tmp);
    f << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw GraphError("cannot move " + tmp + " into place");
}

void write_graph_atomic(const Graph& g, const std::string& path) {
  bool g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
  atomic_write(path, g6 ? to_graph6(g) + "\n" : to_edge_list(g));
}

json with_envelope(json report, const std::string& command) {
  char buf[32] = "";
  std::time_t now = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return json{{"envelope",
               {{"created_utc", buf}, {"version", kVersion}, {"command", command}}},
              {"report", std::move(report)}};
}

void write_report(const std::string& path, json report, const std::string& cmd) {
  atomic_write(path, with_envelope(std::move(report), cmd).dump(2) + "\n");
}

json graph_stats(const Graph& g) {
  std::vector<long long> hist(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++hist[std::size_t(g.degree(v))];
  while (!hist.empty() && hist.back() == 0) hist.pop_back();
  return json{{"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"min_degree", g.min_degree()},
              {"degree_histogram", hist}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

void print_report_table(const LemmaReport& rep) {
  std::cout << "lemma: " << rep.lemma << "\n";
  std::cout << std::left << std::setw(62) << "claim" << std::right
            << std::setw(16) << "computed" << std::setw(16) << "reference"
            << std::setw(10) << "tol" << "  verdict\n";
  for (const CheckResult& c : rep.checks) {
    std::cout << std::left << std::setw(62) << c.claim << std::right
              << std::setw(16) << std::setprecision(9) << c.computed
              << std::setw(16) << c.reference << std::setw(10)
              << std::setprecision(2) << c.tolerance << "  "
              << (c.pass ? "pass" : c.conclusive ? "FAIL" : "inconclusive")
              << "\n";
  }
  std::cout << (rep.all_pass() && rep.all_conclusive()
                    ? "all checks pass\n"
                    : !rep.all_conclusive() ? "some checks inconclusive\n"
                                            : "SOME CHECKS FAIL\n");
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family, sizes, apex, theta = "1/8", out, spec_file;
  int d = 2, n = 0, k = 2, r = 4;
  std::uint64_t seed = 0;
  bool quasirandom = false;
};

BlowupSpec blowup_from_args(const ConstructArgs& a) {
  std::vector<int> sizes = parse_int_list(a.sizes);
  if (sizes.size() != 5) throw GraphError("--sizes needs exactly 5 entries");
  BlowupSpec spec;
  std::copy(sizes.begin(), sizes.end(), spec.part_sizes.begin());
  spec.theta = parse_rational(a.theta);
  spec.seed = a.seed;
  spec.mode = a.quasirandom ? ThetaMode::Quasirandom : ThetaMode::SeededRandom;
  return spec;
}

// Dispatch on the stored spec object; the same path serves --spec-file, so
// sidecars round-trip by construction.
struct Built {
  Graph graph;
  json spec;
  std::vector<int> part_of;  // empty when the family has no part structure
};

Built build_from_spec(const json& spec) {
  std::string family = spec.at("family").get<std::string>();
  if (family == "F") return {make_F(spec.at("d").get<int>()), spec, {}};
  if (family == "turan")
    return {make_turan(spec.at("n").get<int>(), spec.at("k").get<int>()), spec, {}};
  if (family == "petersen") return {families::petersen(), spec, {}};
  if (family == "cycle") return {families::cycle(spec.at("n").get<int>()), spec, {}};
  if (family == "complete")
    return {families::complete(spec.at("n").get<int>()), spec, {}};
  if (family == "blowup") {
    PartitionedGraph pg = make_pentagon_blowup(blowup_spec_from_json(spec.at("blowup")));
    return {std::move(pg.graph), spec, std::move(pg.part_of)};
  }
  if (family == "G4") {
    PartitionedGraph pg = make_G4(blowup_spec_from_json(spec.at("blowup")),
                                  spec.at("apex").get<int>());
    return {std::move(pg.graph), spec, std::move(pg.part_of)};
  }
  if (family == "Gr") {
    PartitionedGraph pg = make_Gr(recursive_spec_from_json(spec.at("recursive")));
    return {std::move(pg.graph), spec, std::move(pg.part_of)};
  }
  throw GraphError("unknown family: " + family);
}

json spec_from_args(const ConstructArgs& a) {
  if (a.family == "F") return {{"family", "F"}, {"d", a.d}};
  if (a.family == "turan") return {{"family", "turan"}, {"n", a.n}, {"k", a.k}};
  if (a.family == "petersen") return {{"family", "petersen"}};
  if (a.family == "cycle") return {{"family", "cycle"}, {"n", a.n}};
  if (a.family == "complete") return {{"family", "complete"}, {"n", a.n}};
  if (a.family == "blowup")
    return {{"family", "blowup"}, {"blowup", to_json(blowup_from_args(a))}};
  if (a.family == "G4")
    return {{"family", "G4"},
            {"blowup", to_json(blowup_from_args(a))},
            {"apex", a.apex.empty() ? 0 : std::stoi(a.apex)}};
  if (a.family == "Gr") {
    RecursiveSpec spec;
    spec.r = a.r;
    spec.base = blowup_from_args(a);
    spec.apex_sizes = parse_int_list(a.apex);
    return {{"family", "Gr"}, {"recursive", to_json(spec)}};
  }
  throw GraphError("unknown family: " + a.family);
}

int cmd_construct(const ConstructArgs& a, const std::string& cmdline) {
  json spec;
  if (!a.spec_file.empty()) {
    std::ifstream f(a.spec_file);
    if (!f) throw GraphError("cannot open " + a.spec_file);
    json doc = json::parse(f);
    spec = doc.contains("report") ? doc["report"]["spec"] : doc["spec"];
  } else {
    spec = spec_from_args(a);
  }
  Built b = build_from_spec(spec);
  write_graph_atomic(b.graph, a.out);
  json report = {{"spec", b.spec}, {"stats", graph_stats(b.graph)}};
  if (!b.part_of.empty()) report["parts"] = b.part_of;
  write_report(a.out + ".json", report, cmdline);
  std::cout << "wrote " << a.out << ": n=" << b.graph.vertex_count()
            << " e=" << b.graph.edge_count()
            << " min_degree=" << b.graph.min_degree() << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// gap

struct GapArgs {
  std::string graph_file, out;
  int r = 3, restarts = 32;
  std::uint64_t seed = 0;
  bool exact_only = false;
};

int cmd_gap(const GapArgs& a, const std::string& cmdline) {
  if (a.r < 3) throw GraphError("--r must be at least 3");
  Graph g = read_graph_file(a.graph_file);
  const int n = g.vertex_count(), k = a.r - 1;
  json report = {{"r", a.r}, {"stats", graph_stats(g)}};

  // min-degree ratio against the two analytic thresholds
  Rational ratio = n > 0 ? Rational(g.min_degree(), n) : Rational(0);
  Rational lower(3 * a.r - 4, 3 * a.r - 1);
  json thresholds = {{"delta_over_n", to_string(ratio)},
                     {"partite_lower", to_string(lower)},
                     {"delta_above_lower", ratio > lower}};
  if (a.r >= 4) {
    Rational upper = Rational(4 * (3 * a.r - 7) * (a.r - 1) + 1,
                              4 * (a.r - 2) * (3 * a.r - 4));
    thresholds["upper_bound"] = to_string(upper);
  }
  report["thresholds"] = thresholds;

  bool partite_exact = n <= kcut_cap(k);
  long long partite_value = 0;
  if (partite_exact) {
    PartitionCertificate c = max_kcut_exact(g, k);
    partite_value = c.value;
    report["partite"] = {{"mode", "exact"},
                         {"value", c.value},
                         {"solver", c.solver},
                         {"assignment", c.assignment}};
  } else if (a.exact_only) {
    std::cerr << "exact mode refused: n=" << n << " exceeds the k=" << k
              << " cut cap " << kcut_cap(k) << "\n";
    return kExitFail;
  } else {
    PartitionCertificate c = max_kcut_local(g, k, a.seed, a.restarts);
    partite_value = c.value;
    report["partite"] = {{"mode", "lower-bound"},
                         {"value", c.value},
                         {"solver", c.solver},
                         {"assignment", c.assignment}};
  }

  bool krfree_exact = true;
  long long krfree_value = 0;
  if (!clique_exists(g, a.r)) {
    krfree_value = g.edge_count();
    report["krfree"] = {{"mode", "exact"},
                        {"value", krfree_value},
                        {"solver", "clique-free"}};
  } else if (n <= krfree_cap(a.r)) {
    EdgeSubsetCertificate c = max_krfree_exact(g, a.r);
    krfree_value = c.value;
    report["krfree"] = {{"mode", "exact"},
                        {"value", c.value},
                        {"solver", c.solver},
                        {"kept_edges", c.kept_edges}};
  } else if (a.exact_only) {
    std::cerr << "exact mode refused: n=" << n << " exceeds the r=" << a.r
              << " deletion cap " << krfree_cap(a.r) << "\n";
    return kExitFail;
  } else {
    // any (r-1)-partition is K_r-free, so the cut value bounds from below;
    // the full edge count bounds from above
    krfree_exact = false;
    report["krfree"] = {{"mode", "bounds"},
                        {"lower", partite_value},
                        {"upper", g.edge_count()}};
  }

  if (partite_exact && krfree_exact) {
    report["equal"] = partite_value == krfree_value;
    krfree_value = std::max(krfree_value, partite_value);
  }
  if (!a.out.empty()) write_report(a.out, report, cmdline);

  std::cout << "n=" << n << " e=" << g.edge_count() << " r=" << a.r
            << " delta/n=" << to_string(ratio) << "\n";
  std::cout << "largest " << k << "-partite: " << partite_value
            << (partite_exact ? "" : " (lower bound)") << "\n";
  if (krfree_exact)
    std::cout << "largest K_" << a.r << "-free: " << krfree_value << " ("
              << (partite_exact && partite_value == krfree_value ? "equal"
                                                                 : "strictly larger")
              << ")\n";
  else
    std::cout << "largest K_" << a.r << "-free: in [" << partite_value << ", "
              << g.edge_count() << "] (bounds only)\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// experiment-delta4

struct ExperimentArgs {
  std::string theta = "1/8", out, csv;
  int n = 0, sweep_to = 0, restarts = 32;
  std::uint64_t seed = 0;
  bool quasirandom = false;
};

json delta4_record(int n, const ExperimentArgs& a) {
  std::vector<int> sizes = suggest_sizes(4, n);
  BlowupSpec spec;
  std::copy_n(sizes.begin(), 5, spec.part_sizes.begin());
  spec.theta = parse_rational(a.theta);
  spec.seed = a.seed;
  spec.mode = a.quasirandom ? ThetaMode::Quasirandom : ThetaMode::SeededRandom;
  PartitionedGraph pg = make_G4(spec, sizes[5]);
  const Graph& g = pg.graph;

  bool exact = g.vertex_count() <= krfree_cap(4);
  json results = {{"exact", exact}};
  if (exact) {
    PartitionCertificate c = max_kcut_exact(g, 3);
    EdgeSubsetCertificate f = max_krfree_exact(g, 4);
    results["partite"] = {{"mode", "exact"}, {"value", c.value}};
    results["krfree"] = {{"mode", "exact"}, {"value", f.value}};
    results["strictly_less"] = c.value < f.value;
    results["equal"] = c.value == f.value;
  } else {
    PartitionCertificate grd = greedy_partition(g, 3);
    PartitionCertificate loc = max_kcut_local(g, 3, a.seed, a.restarts);
    long long best = std::max(grd.value, loc.value);
    results["partite"] = {{"mode", "lower-bound"},
                          {"greedy", grd.value},
                          {"local", loc.value},
                          {"value", best}};
    results["krfree"] = {{"mode", "lower-bound"},
                         {"value", best},
                         {"note", "any 3-partition is K_4-free"}};
  }

  // The cross-edge certificate survives exactly when no distance-two edge
  // closes a K_4 through the apex; record the witness when one does.
  try {
    EdgeSubsetCertificate pc = krfree_from_parts(g, pg.part_of, 4);
    results["parts_certificate"] = {{"valid", true}, {"value", pc.value}};
  } catch (const CliqueSurvives& e) {
    results["parts_certificate"] = {{"valid", false}, {"witness", e.witness}};
  }

  Rational cap = Rational(184, 605) * n * n;
  PeelTrace tr = peel(g, Rational(8, 11));
  return json{
      {"experiment", "delta4-comparison"},
      {"id", "delta4-n" + std::to_string(n) + "-seed" + std::to_string(a.seed)},
      {"spec", {{"family", "G4"}, {"blowup", to_json(spec)}, {"apex", sizes[5]}}},
      {"sizes", sizes},
      {"stats", graph_stats(g)},
      {"results", results},
      {"reference",
       {{"coefficient", "184/605"},
        {"value", to_string(cap)},
        {"value_double", to_double(cap)}}},
      {"peel",
       {{"gamma", "8/11"},
        {"deleted", static_cast<long long>(tr.deleted.size())},
        {"final_n", tr.final_graph.vertex_count()},
        {"final_min_degree", tr.final_graph.min_degree()},
        {"alpha", to_string(tr.alpha)}}}};
}

// One row per n; empty cells where a value does not apply in bound mode.
std::string delta4_csv(const std::vector<json>& records) {
  std::string out =
      "n,edges,min_degree,mode,partite,krfree,parts_certificate_valid,"
      "parts_certificate_value,reference,strict_gap\n";
  for (const json& r : records) {
    const json& res = r.at("results");
    bool exact = res.at("exact").get<bool>();
    const json& pc = res.at("parts_certificate");
    bool valid = pc.at("valid").get<bool>();
    char ref[32];
    std::snprintf(ref, sizeof ref, "%.6g",
                  r.at("reference").at("value_double").get<double>());
    out += std::to_string(r.at("stats").at("n").get<int>()) + ',';
    out += std::to_string(r.at("stats").at("edges").get<long long>()) + ',';
    out += std::to_string(r.at("stats").at("min_degree").get<int>()) + ',';
    out += exact ? "exact," : "bound,";
    out += std::to_string(res.at("partite").at("value").get<long long>()) + ',';
    out += std::to_string(res.at("krfree").at("value").get<long long>()) + ',';
    out += valid ? "1," : "0,";
    if (valid) out += std::to_string(pc.at("value").get<long long>());
    out += ',';
    out += ref;
    out += ',';
    if (exact) out += res.at("strictly_less").get<bool>() ? "1" : "0";
    out += '\n';
  }
  return out;
}

int cmd_experiment_delta4(const ExperimentArgs& a, const std::string& cmdline) {
  int hi = std::max(a.n, a.sweep_to);
  std::vector<json> records;
  for (int n = a.n; n <= hi; ++n) {
    records.push_back(delta4_record(n, a));
    const json& res = records.back()["results"];
    std::cout << "n=" << n << " e="
              << records.back()["stats"]["edges"].get<long long>();
    if (res["exact"].get<bool>())
      std::cout << " exact: 3-partite " << res["partite"]["value"]
                << ", K_4-free " << res["krfree"]["value"]
                << (res["strictly_less"].get<bool>() ? " (strict gap)"
                                                     : " (no gap)");
    else
      std::cout << " bound mode: 3-partite >= " << res["partite"]["value"];
    std::cout << ", reference "
              << records.back()["reference"]["value_double"].get<double>()
              << "\n";
  }
  if (!a.csv.empty()) atomic_write(a.csv, delta4_csv(records));
  json report = records.size() == 1
                    ? std::move(records.front())
                    : json{{"experiment", "delta4-sweep"}, {"runs", records}};
  if (!a.out.empty()) write_report(a.out, report, cmdline);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// peel

struct PeelArgs {
  std::string graph_file, gamma = "5/8", out;
};

int cmd_peel(const PeelArgs& a, const std::string& cmdline) {
  Graph g = read_graph_file(a.graph_file);
  Rational gamma = parse_rational(a.gamma);
  PeelTrace tr = peel(g, gamma);
  json steps = json::array();
  for (const PeelStep& s : tr.deleted)
    steps.push_back({{"vertex", s.vertex}, {"degree", s.degree}, {"size", s.size}});
  json report = {{"gamma", to_string(gamma)},
                 {"stats", graph_stats(g)},
                 {"steps", steps},
                 {"final_n", tr.final_graph.vertex_count()},
                 {"final_edges", tr.final_graph.edge_count()},
                 {"final_min_degree", tr.final_graph.min_degree()},
                 {"final_labels", tr.final_labels},
                 {"final_graph6", to_graph6(tr.final_graph)},
                 {"alpha", to_string(tr.alpha)}};
  if (!a.out.empty()) write_report(a.out, report, cmdline);
  std::cout << "peeled " << tr.deleted.size() << " of " << g.vertex_count()
            << " vertices at gamma=" << to_string(gamma) << "; survivor has n="
            << tr.final_graph.vertex_count()
            << " min_degree=" << tr.final_graph.min_degree()
            << " alpha=" << to_string(tr.alpha) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// hom

struct HomArgs {
  std::string source, target, out;
  int r = 3, d = 2;
  bool degree_check = false;
};

int cmd_hom(const HomArgs& a, const std::string& cmdline) {
  Graph g = read_graph_file(a.source);
  if (a.degree_check) {
    DegreeHypothesisReport rep = check_degree_hypothesis(g, a.r, a.d);
    if (!a.out.empty()) write_report(a.out, to_json(rep), cmdline);
    std::cout << "n=" << rep.n << " K_" << a.r + 1 << "-free=" << rep.krfree
              << " min_degree=" << rep.min_degree << " threshold="
              << to_string(rep.threshold) << " hypothesis_met="
              << rep.hypothesis_met << " map_found=" << rep.map_found << "\n";
    if (rep.bug_flag) {
      std::cerr << "hypothesis met but no colouring found\n";
      return kExitFail;
    }
    return kExitPass;
  }
  if (a.target.empty()) throw GraphError("hom needs a target graph or --degree-check");
  Graph h = read_graph_file(a.target);
  std::optional<HomomorphismMap> m = find_homomorphism(g, h);
  json report = {{"source_n", g.vertex_count()},
                 {"target_n", h.vertex_count()},
                 {"found", m.has_value()}};
  if (m) report["map"] = m->map;
  if (!a.out.empty()) write_report(a.out, report, cmdline);
  if (m) {
    std::cout << "homomorphism found:";
    for (int v : m->map) std::cout << " " << v;
    std::cout << "\n";
    return kExitPass;
  }
  std::cout << "no homomorphism\n";
  return kExitFail;
}

// ---------------------------------------------------------------------------
// verify

int finish_verify(const LemmaReport& rep, const std::string& out,
                  const std::string& cmdline) {
  print_report_table(rep);
  if (!out.empty()) write_report(out, to_json(rep), cmdline);
  return rep.exit_code();
}

// Single-point wheel-density check: the search value must respect the
// closed-form ceiling, and at the feasibility limit it must attain it.
LemmaReport verify_minlemma(int d, const Rational& gamma, int restarts,
                            std::uint64_t seed) {
  LemmaReport rep;
  rep.lemma = "wheel-density";
  Rational limit = wheel_gamma_limit(d);
  bool feasible = wheel_feasible(d, gamma);
  rep.checks.push_back(make_check("polytope feasibility matches the closed-form limit",
                                  feasible == (gamma <= limit) ? 1.0 : 0.0, 1.0,
                                  0.0, CheckKind::kAbsDiff));
  if (!feasible) return rep;
  Rational cap = d == 2 ? bound_d2(gamma) : bound_general(d, gamma);
  WheelMaxResult res = wheel_max(d, gamma, restarts, seed);
  rep.checks.push_back(make_check("best search value stays under the ceiling",
                                  res.value, to_double(cap) + 1e-6, 0.0,
                                  CheckKind::kLess));
  rep.checks.push_back(make_check("search point keeps every neighbourhood sum feasible",
                                  res.min_neighborhood_sum,
                                  to_double(gamma) - 1e-9, 0.0,
                                  CheckKind::kGreater));
  if (gamma == limit)
    rep.checks.push_back(make_check("forced configuration attains the ceiling",
                                    res.value, to_double(cap), 1e-9,
                                    CheckKind::kAbsDiff));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  std::string cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline += ' ';
    cmdline += argv[i];
  }

  CLI::App app{"extremal subgraph toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int rc = kExitPass;

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a graph family instance and write it with a spec sidecar");
  construct->add_option("--family", ca.family,
                        "F | turan | petersen | cycle | complete | blowup | G4 | Gr");
  construct->add_option("--spec-file", ca.spec_file,
                        "rebuild from a construct sidecar instead of flags");
  construct->add_option("--d", ca.d, "regularity parameter for family F");
  construct->add_option("--n", ca.n, "vertex count (turan, cycle, complete)");
  construct->add_option("--k", ca.k, "part count (turan)");
  construct->add_option("--r", ca.r, "clique order parameter (Gr)");
  construct->add_option("--sizes", ca.sizes, "five comma-separated part sizes");
  construct->add_option("--apex", ca.apex,
                        "apex part size (G4) or comma list, one per apex part (Gr)");
  construct->add_option("--theta", ca.theta, "distance-two edge density");
  construct->add_option("--seed", ca.seed, "seed for seeded-random theta edges");
  construct->add_flag("--quasirandom", ca.quasirandom,
                      "stride pattern instead of seeded-random theta edges");
  construct->add_option("--out", ca.out, "output path (.g6 = graph6, else edge list)")
      ->required();
  construct->callback([&] { rc = cmd_construct(ca, cmdline); });

  GapArgs ga;
  CLI::App* gap = app.add_subcommand(
      "gap", "largest (r-1)-partite vs largest K_r-free subgraph of one graph");
  gap->add_option("graph", ga.graph_file, "graph file (.g6 or edge list)")->required();
  gap->add_option("--r", ga.r, "forbidden clique order (default 3)");
  gap->add_flag("--exact", ga.exact_only, "refuse instead of degrading to bounds");
  gap->add_option("--restarts", ga.restarts, "local-search restarts in bound mode");
  gap->add_option("--seed", ga.seed, "local-search seed in bound mode");
  gap->add_option("--out", ga.out, "write the JSON report here");
  gap->callback([&] { rc = cmd_gap(ga, cmdline); });

  ExperimentArgs ea;
  CLI::App* expd4 = app.add_subcommand(
      "experiment-delta4",
      "build G_4 at apportioned sizes and compare the two subgraph maxima");
  expd4->add_option("--n", ea.n, "total vertex count")->required();
  expd4->add_option("--sweep-to", ea.sweep_to,
                    "run every n up to this value and emit a table");
  expd4->add_option("--theta", ea.theta, "distance-two edge density");
  expd4->add_option("--seed", ea.seed, "construction and search seed");
  expd4->add_flag("--quasirandom", ea.quasirandom, "stride-pattern theta edges");
  expd4->add_option("--restarts", ea.restarts, "local-search restarts in bound mode");
  expd4->add_option("--out", ea.out, "write the experiment record here");
  expd4->add_option("--csv", ea.csv, "write the sweep table as CSV here");
  expd4->callback([&] { rc = cmd_experiment_delta4(ea, cmdline); });

  PeelArgs pa;
  CLI::App* peel_cmd = app.add_subcommand(
      "peel", "min-degree peeling at threshold gamma with a full trace");
  peel_cmd->add_option("graph", pa.graph_file, "graph file")->required();
  peel_cmd->add_option("--gamma", pa.gamma, "peel threshold (default 5/8)");
  peel_cmd->add_option("--out", pa.out, "write the trace JSON here");
  peel_cmd->callback([&] { rc = cmd_peel(pa, cmdline); });

  HomArgs ha;
  CLI::App* hom = app.add_subcommand(
      "hom", "find a homomorphism, or test the min-degree colouring hypothesis");
  hom->add_option("source", ha.source, "source graph file")->required();
  hom->add_option("target", ha.target, "target graph file");
  hom->add_flag("--degree-check", ha.degree_check,
                "test K_{r+1}-freeness + min-degree threshold, then colour into "
                "the d-wheel with r-2 hubs");
  hom->add_option("--r", ha.r, "clique parameter for --degree-check");
  hom->add_option("--d", ha.d, "wheel parameter for --degree-check");
  hom->add_option("--out", ha.out, "write the JSON report here");
  hom->callback([&] { rc = cmd_hom(ha, cmdline); });

  CLI::App* verify = app.add_subcommand("verify", "run an analytic verifier");
  verify->require_subcommand(1);
  std::string vout;

  LllParams lp;
  CLI::App* vlll = verify->add_subcommand(
      "lll", "threshold-curve analysis: range, identity, ceiling comparison");
  vlll->add_option("--delta", lp.delta, "min-degree ratio (default 0.9415)");
  vlll->add_option("--epsilon", lp.epsilon, "curve offset (default 1e-6)");
  vlll->add_option("--grid-step", lp.grid_step, "certification grid step");
  vlll->add_option("--out", vout, "write the report JSON here");
  vlll->callback([&] { rc = finish_verify(verify_lll(lp), vout, cmdline); });

  int rmax = 200;
  CLI::App* vupper = verify->add_subcommand(
      "upper", "closing inequality of the general bound, exact rationals");
  vupper->add_option("--rmax", rmax, "check every r in 4..rmax");
  vupper->add_option("--out", vout, "write the report JSON here");
  vupper->callback(
      [&] { rc = finish_verify(verify_general_upper(rmax), vout, cmdline); });

  std::string weak_ns = "100,1000,10000";
  CLI::App* vweak = verify->add_subcommand(
      "weak", "endpoint analysis of the fallback quadratic");
  vweak->add_option("--n", weak_ns, "comma-separated n values");
  vweak->add_option("--out", vout, "write the report JSON here");
  vweak->callback([&] {
    rc = finish_verify(verify_weak_bound(parse_ll_list(weak_ns)), vout, cmdline);
  });

  std::string cond_gamma = "8/13";
  CLI::App* vcond = verify->add_subcommand(
      "conditions", "per-d density ceilings against the wheel machinery");
  vcond->add_option("--gamma", cond_gamma, "evaluation point (default 8/13)");
  vcond->add_option("--out", vout, "write the report JSON here");
  vcond->callback([&] {
    rc = finish_verify(verify_condition_of_d(parse_rational(cond_gamma)), vout,
                       cmdline);
  });

  int md = 2, mrestarts = 64;
  std::uint64_t mseed = 0;
  std::string mgamma = "5/8";
  CLI::App* vmin = verify->add_subcommand(
      "minlemma", "wheel-density search at one (d, gamma) against its ceiling");
  vmin->add_option("--d", md, "wheel parameter");
  vmin->add_option("--gamma", mgamma, "degree threshold");
  vmin->add_option("--restarts", mrestarts, "ascent restarts");
  vmin->add_option("--seed", mseed, "ascent seed");
  vmin->add_option("--out", vout, "write the report JSON here");
  vmin->callback([&] {
    rc = finish_verify(
        verify_minlemma(md, parse_rational(mgamma), mrestarts, mseed), vout,
        cmdline);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return rc;
}
