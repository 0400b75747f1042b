#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indsub/bundle.hpp"
#include "indsub/congest.hpp"
#include "indsub/decomposition.hpp"
#include "indsub/diamond_listing.hpp"
#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/oracles.hpp"
#include "indsub/random.hpp"
#include "indsub/reports.hpp"
#include "indsub/twoparty.hpp"

using namespace indsub;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

// Either a meta.json path or "0,1,5".
VertexSubset parse_alice(const std::string& text) {
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") return read_alice_side(text);
  std::vector<VertexId> ids;
  for (std::size_t v : parse_list(text)) ids.push_back(static_cast<VertexId>(v));
  return VertexSubset(std::move(ids));
}

// --- family options shared by gen-family and verify-family ------------------

struct FamilyOptions {
  std::string kind;
  std::size_t n = 2;
  std::size_t k = 0;
  std::size_t ell = 1;
  std::size_t m = 0;
  std::optional<std::uint64_t> seed;
  bool no_hubs = false;
  std::string wiring = "auto";

  void attach(CLI::App* sub, bool kind_required) {
    auto* opt = sub->add_option("family", kind, "c4 | ck | c8l | diamond")
                    ->check(CLI::IsMember({"c4", "ck", "c8l", "diamond"}));
    if (kind_required) opt->required();
    sub->add_option("--n", n, "size parameter (diamond: a perfect square)");
    sub->add_option("--k", k, "cycle length for ck");
    sub->add_option("--ell", ell, "code length for c8l");
    sub->add_option("--m", m, "padding for c8l");
    sub->add_option("--seed", seed, "fixture seed (required for diamond)");
    sub->add_flag("--no-hubs", no_hubs, "c8l without the c_A/c_B hub vertices");
    sub->add_option("--wiring", wiring, "ck wiring")->check(CLI::IsMember({"auto", "cliques"}));
  }

  FamilyParams params() const {
    FamilyParams p;
    p.kind = family_kind_from_string(kind);
    p.n = n;
    p.k = k;
    p.ell = ell;
    p.m = m;
    p.seed = seed;
    p.hubs = !no_hubs;
    p.wiring = wiring == "cliques" ? CkWiring::kCliques : CkWiring::kAuto;
    if (p.kind == FamilyKind::kCkSubdivided && k == 0) throw InputError("ck needs --k");
    return p;
  }
};

// Graph plus sides, from --bundle or --graph/--alice.
struct Loaded {
  Graph graph;
  std::optional<VertexSubset> alice;
  std::optional<Bundle> bundle;
};

Loaded load_input(const std::string& bundle_dir, const std::string& graph_path, const std::string& alice) {
  Loaded in;
  if (!bundle_dir.empty()) {
    in.bundle = read_bundle(bundle_dir);
    in.graph = in.bundle->instance.graph;
    in.alice = in.bundle->instance.va;
  } else if (!graph_path.empty()) {
    in.graph = read_graph_file(graph_path);
  } else {
    throw InputError("give --bundle or --graph");
  }
  if (!alice.empty()) in.alice = parse_alice(alice);
  if (in.alice) in.graph.check_subset(*in.alice);
  return in;
}

std::size_t cut_size(const Graph& g, const VertexSubset& alice) {
  return crossing_edges(g, side_mask(g.vertex_count(), alice)).size();
}

// --- gen-family --------------------------------------------------------------

struct GenOptions {
  FamilyOptions family;
  std::string x, y, out;
  std::vector<std::size_t> shared;
};

int cmd_gen(const GenOptions& o) {
  FamilyParams p = o.family.params();
  DiamondFixture fix;
  FamilySpec spec = make_family_spec(p, &fix);
  const std::size_t k = spec.input_bits;
  InputPair in = InputPair::zeros(k);
  if (!o.x.empty()) in.x = from_hex(o.x, k);
  if (!o.y.empty()) in.y = from_hex(o.y, k);
  for (std::size_t i : o.shared) {
    if (i >= k) throw InputError("--shared index " + std::to_string(i) + " >= K = " + std::to_string(k));
    in.x[i] = true;
    in.y[i] = true;
  }
  FamilyInstance inst = spec.build(in);
  write_bundle(o.out, inst, in);

  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "gen-family";
  j["family"] = nlohmann::ordered_json::parse(meta_json_text(inst))["family"];
  j["out"] = o.out;
  j["vertices"] = inst.graph.vertex_count();
  j["edges"] = inst.graph.edge_count();
  j["input_bits"] = k;
  j["cut_edges"] = inst.cut_edges.size();
  j["x"] = to_hex(in.x);
  j["y"] = to_hex(in.y);
  j["disj"] = disj(in.x, in.y);
  if (auto d = diameter(inst.graph)) {
    j["diameter"] = *d;
  } else {
    j["diameter"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

// --- verify-family -----------------------------------------------------------

struct VerifyOptions {
  FamilyOptions family;
  std::string bundle;
  std::size_t samples = 500;
  std::uint64_t sample_seed = 1;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  bool no_designed = false;
  std::string mutate;
  std::string report;
};

int cmd_verify(const VerifyOptions& o) {
  FamilyParams p;
  std::optional<Bundle> bundle;
  if (!o.bundle.empty()) {
    bundle = read_bundle(o.bundle);
    p = family_params_from_tag(bundle->instance.tag);
  } else {
    if (o.family.kind.empty()) throw InputError("give a family or --bundle");
    p = o.family.params();
  }
  DiamondFixture fix;
  FamilySpec spec = make_family_spec(p, &fix);
  if (bundle) {
    // The stored instance must be what the builder produces for its inputs.
    FamilyInstance rebuilt = spec.build(bundle->inputs);
    if (!(rebuilt.graph == bundle->instance.graph) || rebuilt.va != bundle->instance.va) {
      std::cerr << "bundle graph differs from the builder's output for its inputs\n";
      return kVerifyFailed;
    }
  }
  if (o.mutate == "drop-matching-edge") {
    auto build = spec.build;
    spec.build = [build](const InputPair& in) {
      FamilyInstance inst = build(in);
      if (!inst.cut_edges.empty()) remove_edge(inst, inst.cut_edges.front());
      return inst;
    };
    spec.name += "+drop-matching-edge";
  }
  SweepOptions sweep;
  sweep.samples = o.samples;
  sweep.seed = o.sample_seed;
  sweep.exhaustive_limit = o.exhaustive_limit;
  sweep.include_designed = !o.no_designed;
  FamilyReport report = verify_family_conditions(spec, sweep);
  write_text(o.report, family_report_json(p, sweep, report,
                                          p.kind == FamilyKind::kDiamond ? &fix : nullptr, o.mutate));
  if (!report.ok()) {
    const ConditionViolation& v = report.violations.front();
    std::cerr << "condition " << v.condition << " violated at x=" << to_hex(v.input.x)
              << " y=" << to_hex(v.input.y);
    if (v.witness) std::cerr << " witness=" << v.witness->to_string();
    std::cerr << ": " << v.detail << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

// --- run-congest ---------------------------------------------------------------

struct CongestOptions {
  std::string bundle, graph, alice, program = "naive-c4", stats_out;
  unsigned bandwidth = 0;
  std::size_t max_rounds = 100000;
  std::uint64_t seed = 0;
  bool reduction = false;
};

int cmd_congest(const CongestOptions& o) {
  Loaded in = load_input(o.bundle, o.graph, o.alice);
  auto program = program_by_name(o.program);
  SimConfig cfg;
  cfg.bandwidth_bits = o.bandwidth;
  cfg.max_rounds = o.max_rounds;
  cfg.seed = o.seed;
  const std::size_t cut = in.alice ? cut_size(in.graph, *in.alice) : 0;
  int code = kOk;
  if (o.reduction) {
    if (!in.bundle) throw InputError("--reduction needs --bundle");
    FamilySpec spec = make_family_spec(family_params_from_tag(in.bundle->instance.tag));
    auto predicate = [&spec](const FamilyInstance& inst) { return spec.predicate(inst).has_value(); };
    ReductionResult red = congest_reduction(in.bundle->instance, *program, cfg, predicate);
    write_text(o.stats_out, run_stats_json(program->name(), cfg, red.stats, cut, &red));
    if (!red.validated) code = kVerifyFailed;
    if (!cut_traffic_bound_check(red.stats, cut, cfg).ok) code = kVerifyFailed;
    return code;
  }
  RunOptions opts;
  opts.alice_side = in.alice;
  RunStats stats = run(in.graph, *program, cfg, opts);
  write_text(o.stats_out, run_stats_json(program->name(), cfg, stats, cut, nullptr));
  if (in.alice && !cut_traffic_bound_check(stats, cut, cfg).ok) code = kVerifyFailed;
  return code;
}

// --- run-protocol ----------------------------------------------------------------

struct ProtocolOptions {
  std::string bundle, graph, alice, protocol = "diamond", out;
  bool check_oracle = false;
  bool limitation = false;
};

int cmd_protocol(const ProtocolOptions& o) {
  Loaded in = load_input(o.bundle, o.graph, o.alice);
  if (!in.alice) throw InputError("run-protocol needs the Alice side (--alice or --bundle)");
  const std::size_t n = in.graph.vertex_count();
  const std::size_t cut = cut_size(in.graph, *in.alice);
  if (o.limitation) {
    write_text(o.out, limitation_json(limitation_bound_report(n, cut, o.protocol)));
    return kOk;
  }
  ListingResult res;
  std::optional<std::vector<VertexSubset>> oracle;
  if (o.protocol == "diamond") {
    res = diamond_listing_protocol(in.graph, *in.alice);
    if (o.check_oracle) oracle = list_induced_diamonds(in.graph);
  } else if (o.protocol.rfind("cycles:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(o.protocol.substr(7));
    } catch (const std::logic_error&) {
      throw InputError("bad protocol '" + o.protocol + "'");
    }
    res = cycle_listing_protocol(in.graph, *in.alice, k);
    if (o.check_oracle) oracle = list_induced_cycles(in.graph, k);
  } else {
    throw InputError("--protocol must be 'diamond' or 'cycles:k'");
  }
  write_text(o.out, listing_protocol_json(o.protocol, n, cut, res, oracle));
  if (oracle && res.all() != *oracle) return kVerifyFailed;
  return res.transcript.payload_bits() <= res.payload_bound ? kOk : kVerifyFailed;
}

// --- run-diamond-listing -----------------------------------------------------------

struct ListingOptions {
  std::string bundle, graph, delta = "5/6", epsilon = "1/2", stats_out;
  bool check_oracle = false;
  bool spectral_split = false;
  std::uint64_t min_degree_divisor = 4;
  unsigned bandwidth = 0;
  std::uint64_t seed = 0;
};

int cmd_listing(const ListingOptions& o) {
  Loaded in = load_input(o.bundle, o.graph, "");
  ListingParams lp;
  lp.delta = Fraction::parse(o.delta);
  lp.epsilon = Fraction::parse(o.epsilon);
  lp.decomposition.delta = lp.delta;
  lp.decomposition.min_degree_divisor = o.min_degree_divisor;
  lp.decomposition.spectral_split = o.spectral_split;
  lp.decomposition.seed = o.seed;
  lp.sim.bandwidth_bits = o.bandwidth;
  lp.sim.seed = o.seed;
  Decomposition dec = expander_decompose(in.graph, lp.decomposition);
  DiamondListingResult res = list_induced_diamonds_congest(in.graph, dec, lp);
  std::optional<std::vector<VertexSubset>> oracle;
  if (o.check_oracle) oracle = list_induced_diamonds(in.graph);
  write_text(o.stats_out, diamond_listing_json(in.graph, dec, lp, res, oracle));
  if (!validate_decomposition(in.graph, dec).empty()) return kVerifyFailed;
  if (oracle && *oracle != res.diamonds) return kVerifyFailed;
  return kOk;
}

// --- bench -----------------------------------------------------------------------

struct BenchOptions {
  std::string suite = "cycle-protocol", ns = "16,32,48,64", out, delta = "5/6", epsilon = "1/2";
  std::uint64_t seed = 0;
  std::size_t k = 4;
  std::size_t repeats = 3;
  double density = 0.15;
};

Graph random_graph(std::size_t n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng.coin(p)) b.add_edge(i, j);
    }
  }
  return b.build();
}

VertexSubset random_half(std::size_t n, Rng& rng) {
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < n; ++v) {
    if (rng.coin(0.5)) ids.push_back(v);
  }
  return VertexSubset(std::move(ids));
}

template <typename F>
double millis(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const BenchOptions& o) {
  std::ostringstream csv;
  csv << "schema_version,suite,n,params,repeat,rounds,charged_rounds,cut_edges,payload_bits,bound,ratio,"
         "oracle_ms\n";
  auto row = [&](std::size_t n, const std::string& params, std::size_t rep, std::size_t rounds,
                 double charged, std::size_t cut, std::uint64_t bits, std::uint64_t bound, double ms) {
    double ratio = bound == 0 ? 0.0 : static_cast<double>(bits) / static_cast<double>(bound);
    csv << kReportSchemaVersion << "," << o.suite << "," << n << ",\"" << params << "\"," << rep << ","
        << rounds << "," << charged << "," << cut << "," << bits << "," << bound << "," << ratio << ","
        << ms << "\n";
  };
  for (std::size_t n : parse_list(o.ns)) {
    for (std::size_t rep = 0; rep < o.repeats; ++rep) {
      Rng rng(mix_seed(o.seed, n * 1000 + rep));
      if (o.suite == "cycle-protocol" || o.suite == "diamond-protocol") {
        Graph g = random_graph(n, o.density, rng);
        VertexSubset alice = random_half(n, rng);
        bool cycles = o.suite == "cycle-protocol";
        ListingResult res = cycles ? cycle_listing_protocol(g, alice, o.k) : diamond_listing_protocol(g, alice);
        double ms = millis([&] { cycles ? list_induced_cycles(g, o.k) : list_induced_diamonds(g); });
        std::string params = "density=" + std::to_string(o.density) + (cycles ? ";k=" + std::to_string(o.k) : "") +
                             ";seed=" + std::to_string(o.seed);
        row(n, params, rep, 0, 0, cut_size(g, alice), res.transcript.payload_bits(), res.payload_bound, ms);
      } else if (o.suite == "diamond-listing") {
        Graph g = random_graph(n, o.density, rng);
        ListingParams lp;
        lp.delta = Fraction::parse(o.delta);
        lp.epsilon = Fraction::parse(o.epsilon);
        DiamondListingResult res = list_induced_diamonds_congest(g, lp);
        double ms = millis([&] { list_induced_diamonds(g); });
        std::string params = "density=" + std::to_string(o.density) + ";delta=" + lp.delta.to_string() +
                             ";epsilon=" + lp.epsilon.to_string() + ";seed=" + std::to_string(o.seed);
        row(n, params, rep, res.stats.measured_rounds, res.stats.charged_simulation_rounds, 0, 0, 0, ms);
      } else if (o.suite == "reduction") {
        FamilySpec spec = c4_family_spec(n);
        InputPair in = InputPair::zeros(spec.input_bits);
        for (std::size_t i = 0; i < spec.input_bits; ++i) {
          in.x[i] = rng.coin(0.3);
          in.y[i] = rng.coin(0.3);
        }
        FamilyInstance inst = spec.build(in);
        auto program = naive_c4_program();
        ReductionResult red;
        double ms = millis([&] {
          red = congest_reduction(inst, *program, {}, [&](const FamilyInstance& i) {
            return spec.predicate(i).has_value();
          });
        });
        CutBoundCheck check = cut_traffic_bound_check(red.stats, inst.cut_edges.size(), {});
        row(n, "family=c4;seed=" + std::to_string(o.seed), rep, red.stats.rounds_used, 0,
            inst.cut_edges.size(), red.stats.total_cut_bits, check.bound, ms);
      } else {
        throw InputError("unknown suite '" + o.suite + "'");
      }
    }
  }
  write_text(o.out, csv.str());
  return kOk;
}

// --- report --------------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& files) {
  bool all_ok = true;
  for (const std::string& path : files) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    if (j.value("schema_version", 0) != kReportSchemaVersion) {
      throw InputError(path + ": unsupported schema_version");
    }
    std::string cmd = j.value("command", "?");
    bool ok = true;
    std::ostringstream line;
    line << path << "  " << cmd;
    if (cmd == "verify-family") {
      const auto& r = j.at("result");
      ok = r.at("ok").get<bool>();
      line << "  " << r.at("name").get<std::string>() << "  pairs=" << r.at("pairs_checked")
           << "  violations=" << r.at("violation_count");
      if (j.contains("fixture")) line << "  |P_A|/n^2=" << j["fixture"]["good_pair_fraction"];
    } else if (cmd == "run-diamond-listing") {
      line << "  n=" << j["graph"]["n"] << "  diamonds=" << j["diamonds"]["count"]
           << "  measured_rounds=" << j["measured_rounds"]
           << "  charged_rounds=" << j["charged_simulation"]["rounds"];
      if (j.contains("oracle")) {
        ok = j["oracle"]["match"].get<bool>();
        line << "  oracle_match=" << j["oracle"]["match"];
      }
    } else if (cmd == "run-protocol") {
      ok = j.at("within_bound").get<bool>();
      if (j.contains("oracle")) ok = ok && j["oracle"]["match"].get<bool>();
      line << "  " << j["parameters"]["protocol"].get<std::string>() << "  bits="
           << j["transcript"]["payload_bits"] << "/" << j["payload_bound"];
    } else if (cmd == "run-congest") {
      ok = j["cut_bound"]["ok"].get<bool>() || j["cut_bound"]["cut_edges"] == 0;
      line << "  rounds=" << j["run"]["rounds_used"] << "  cut_bits=" << j["run"]["total_cut_bits"];
      if (j.contains("reduction")) {
        ok = ok && j["reduction"]["validated"].get<bool>();
        line << "  disj=" << j["reduction"]["disj_answer"];
      }
    } else if (cmd == "limitation-report") {
      line << "  " << j["target"].get<std::string>() << "  ceiling=" << j["round_ceiling"];
    }
    line << "  " << (ok ? "OK" : "FAIL");
    std::cout << line.str() << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced subgraph lower-bound families, CONGEST simulation and listing protocols"};
  app.require_subcommand(1);
  std::string budget;
  app.add_option("--work-budget", budget, "max enumeration steps (overrides INDSUB_WORK_BUDGET)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-family", "build G(x,y) and write an instance bundle");
  gen.family.attach(gen_cmd, true);
  gen_cmd->add_option("--x", gen.x, "Alice's input, hex");
  gen_cmd->add_option("--y", gen.y, "Bob's input, hex");
  gen_cmd->add_option("--shared", gen.shared, "set x_i = y_i = 1 for these bit indices");
  gen_cmd->add_option("--out", gen.out, "bundle directory")->required();

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify-family", "check the lower-bound family conditions over a sweep");
  ver.family.attach(ver_cmd, false);
  ver_cmd->add_option("--bundle", ver.bundle, "take the family from a bundle and re-check it");
  ver_cmd->add_option("--samples", ver.samples, "random pairs when not exhaustive");
  ver_cmd->add_option("--sample-seed", ver.sample_seed, "seed for sampled pairs");
  ver_cmd->add_option("--exhaustive-limit", ver.exhaustive_limit, "sweep all pairs when 4^K <= this");
  ver_cmd->add_flag("--no-designed", ver.no_designed, "skip the designed pairs in sampled sweeps");
  ver_cmd->add_option("--mutate", ver.mutate, "negative control")->check(CLI::IsMember({"drop-matching-edge"}));
  ver_cmd->add_option("--report", ver.report, "JSON report path (default stdout)");

  CongestOptions con;
  auto* con_cmd = app.add_subcommand("run-congest", "run a node program in the CONGEST simulator");
  con_cmd->add_option("--bundle", con.bundle, "instance bundle");
  con_cmd->add_option("--graph", con.graph, "graph file");
  con_cmd->add_option("--alice,--cut", con.alice, "Alice side: meta.json or comma list");
  con_cmd->add_option("--program", con.program, "output-one | silent | naive-c4 | flood:<v>");
  con_cmd->add_option("--bandwidth", con.bandwidth, "bits per edge per round (0 = 2*ceil(log2 n))");
  con_cmd->add_option("--max-rounds", con.max_rounds);
  con_cmd->add_option("--seed", con.seed);
  con_cmd->add_flag("--reduction", con.reduction, "wrap the run as a two-party protocol (needs --bundle)");
  con_cmd->add_option("--stats-out", con.stats_out, "JSON path (default stdout)");

  ProtocolOptions pro;
  auto* pro_cmd = app.add_subcommand("run-protocol", "two-party listing protocol in the vertex-partition model");
  pro_cmd->add_option("--bundle", pro.bundle, "instance bundle");
  pro_cmd->add_option("--graph", pro.graph, "graph file");
  pro_cmd->add_option("--alice,--partition", pro.alice, "Alice side: meta.json or comma list");
  pro_cmd->add_option("--protocol", pro.protocol, "diamond | cycles:k");
  pro_cmd->add_flag("--check-oracle", pro.check_oracle, "compare the union with brute force");
  pro_cmd->add_flag("--limitation", pro.limitation, "print the round ceiling instead of running");
  pro_cmd->add_option("--out", pro.out, "JSON path (default stdout)");

  ListingOptions lst;
  auto* lst_cmd = app.add_subcommand("run-diamond-listing", "distributed induced diamond listing");
  lst_cmd->add_option("--bundle", lst.bundle, "instance bundle");
  lst_cmd->add_option("--graph", lst.graph, "graph file");
  lst_cmd->add_option("--delta", lst.delta, "cluster degree exponent");
  lst_cmd->add_option("--epsilon", lst.epsilon, "heavy threshold exponent");
  lst_cmd->add_option("--min-degree-divisor", lst.min_degree_divisor);
  lst_cmd->add_flag("--spectral-split", lst.spectral_split, "split low-conductance components");
  lst_cmd->add_option("--bandwidth", lst.bandwidth);
  lst_cmd->add_option("--seed", lst.seed);
  lst_cmd->add_flag("--check-oracle", lst.check_oracle);
  lst_cmd->add_option("--stats-out", lst.stats_out, "JSON path (default stdout)");

  BenchOptions ben;
  auto* ben_cmd = app.add_subcommand("bench", "parameter sweep, CSV out");
  ben_cmd->add_option("--suite", ben.suite)
      ->check(CLI::IsMember({"cycle-protocol", "diamond-protocol", "diamond-listing", "reduction"}));
  ben_cmd->add_option("--n", ben.ns, "comma-separated sizes");
  ben_cmd->add_option("--seed", ben.seed)->required();
  ben_cmd->add_option("--k", ben.k);
  ben_cmd->add_option("--density", ben.density);
  ben_cmd->add_option("--delta", ben.delta);
  ben_cmd->add_option("--epsilon", ben.epsilon);
  ben_cmd->add_option("--repeats", ben.repeats);
  ben_cmd->add_option("--out", ben.out, "CSV path (default stdout)");

  std::vector<std::string> report_files;
  auto* rep_cmd = app.add_subcommand("report", "summarise JSON reports; exit 1 if any failed");
  rep_cmd->add_option("files", report_files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!budget.empty()) setenv("INDSUB_WORK_BUDGET", budget.c_str(), 1);
    if (*gen_cmd) return cmd_gen(gen);
    if (*ver_cmd) return cmd_verify(ver);
    if (*con_cmd) return cmd_congest(con);
    if (*pro_cmd) return cmd_protocol(pro);
    if (*lst_cmd) return cmd_listing(lst);
    if (*ben_cmd) return cmd_bench(ben);
    if (*rep_cmd) return cmd_report(report_files);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kBudget;
  } catch (const ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
