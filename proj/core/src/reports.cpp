#include "indsub/reports.hpp"

#include <algorithm>

#include <json.hpp>

#include "indsub/errors.hpp"

namespace indsub {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json subset_json(const VertexSubset& s) {
  ordered_json arr = ordered_json::array();
  for (VertexId v : s) arr.push_back(v);
  return arr;
}

ordered_json family_json(const FamilyParams& p) {
  ordered_json j;
  j["kind"] = to_string(p.kind);
  j["n"] = p.n;
  if (p.kind == FamilyKind::kCkSubdivided) {
    j["k"] = p.k;
    j["wiring"] = p.wiring == CkWiring::kCliques ? "cliques" : "auto";
  }
  if (p.kind == FamilyKind::kC8l) {
    j["ell"] = p.ell;
    j["m"] = p.m;
    j["hubs"] = p.hubs;
  }
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

ordered_json run_json(const RunStats& s) {
  ordered_json j;
  j["rounds_used"] = s.rounds_used;
  j["last_send_round"] = s.last_send_round;
  j["timed_out"] = s.timed_out;
  j["bandwidth_bits"] = s.bandwidth_bits;
  j["total_messages"] = s.total_messages;
  j["total_bits"] = s.total_bits;
  j["total_cut_bits"] = s.total_cut_bits;
  return j;
}

ordered_json transcript_json(const Transcript& t) {
  ordered_json j;
  j["payload_bits"] = t.payload_bits();
  j["framing_bits"] = t.framing_bits();
  j["bits_a_to_b"] = t.bits_a_to_b;
  j["bits_b_to_a"] = t.bits_b_to_a;
  j["framing_a_to_b"] = t.framing_a_to_b;
  j["framing_b_to_a"] = t.framing_b_to_a;
  j["messages"] = t.messages.size();
  return j;
}

}  // namespace

FamilyParams family_params_from_tag(const FamilyTag& tag) {
  FamilyParams p;
  p.kind = tag.kind;
  p.n = tag.n;
  p.k = tag.k;
  p.ell = tag.ell;
  p.m = tag.m;
  p.seed = tag.seed;
  p.hubs = tag.variant != "no-hubs";
  p.wiring = tag.variant == "cliques" ? CkWiring::kCliques : CkWiring::kAuto;
  return p;
}

FamilySpec make_family_spec(const FamilyParams& p, DiamondFixture* fixture) {
  switch (p.kind) {
    case FamilyKind::kC4:
      return c4_family_spec(p.n);
    case FamilyKind::kCkSubdivided:
      return ck_family_spec(p.n, p.k, p.wiring);
    case FamilyKind::kC8l:
      return c8l_family_spec(p.n, p.ell, p.m, p.hubs);
    case FamilyKind::kDiamond: {
      if (!p.seed) throw InputError("the diamond family is randomised: --seed is required");
      DiamondFixture fix = build_diamond_fixture(p.n, *p.seed);
      FamilySpec spec = diamond_family_spec(fix);
      if (fixture != nullptr) *fixture = std::move(fix);
      return spec;
    }
  }
  throw InputError("unknown family");
}

std::string family_report_json(const FamilyParams& params, const SweepOptions& sweep,
                               const FamilyReport& report, const DiamondFixture* fixture,
                               const std::string& mutation) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "verify-family";
  j["family"] = family_json(params);
  if (!mutation.empty()) j["mutation"] = mutation;
  j["sweep"] = {{"samples", sweep.samples},
                {"seed", sweep.seed},
                {"exhaustive_limit", sweep.exhaustive_limit},
                {"designed_pairs", sweep.include_designed}};
  if (fixture != nullptr) {
    const double n = static_cast<double>(fixture->n);
    j["fixture"] = {{"requested_seed", fixture->requested_seed},
                    {"seed", fixture->seed},
                    {"seeds_rejected", fixture->seeds_rejected},
                    {"good_pairs", fixture->good_pairs.size()},
                    {"good_pair_fraction", static_cast<double>(fixture->good_pairs.size()) / (n * n)},
                    {"quadruples", fixture->quadruples.size()}};
  }
  ordered_json r;
  r["name"] = report.family;
  r["input_bits"] = report.input_bits;
  r["exhaustive"] = report.exhaustive;
  r["pairs_checked"] = report.pairs_checked;
  r["predicate_true"] = report.predicate_true;
  r["disj_zero"] = report.disj_zero;
  r["ok"] = report.ok();
  r["violation_count"] = report.violations.size();
  ordered_json vs = ordered_json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < 20; ++i) {
    const ConditionViolation& v = report.violations[i];
    ordered_json e;
    e["condition"] = v.condition;
    e["x"] = to_hex(v.input.x);
    e["y"] = to_hex(v.input.y);
    e["witness"] = v.witness ? subset_json(*v.witness) : ordered_json(nullptr);
    e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  r["violations"] = std::move(vs);
  j["result"] = std::move(r);
  return dump(j);
}

std::string diamond_listing_json(const Graph& g, const Decomposition& dec, const ListingParams& params,
                                 const DiamondListingResult& result,
                                 const std::optional<std::vector<VertexSubset>>& oracle) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "run-diamond-listing";
  j["parameters"] = {{"delta", params.delta.to_string()},
                     {"epsilon", params.epsilon.to_string()},
                     {"bandwidth_bits", params.sim.bandwidth_bits},
                     {"max_rounds", params.sim.max_rounds},
                     {"seed", params.sim.seed},
                     {"min_degree_divisor", params.decomposition.min_degree_divisor},
                     {"spectral_split", params.decomposition.spectral_split},
                     {"split_conductance", params.decomposition.split_conductance},
                     {"decomposition_seed", params.decomposition.seed},
                     {"charge_constant", params.charge_constant}};
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};

  ordered_json d;
  d["levels"] = dec.level_count;
  d["max_levels"] = dec.max_levels;
  d["clusters"] = dec.clusters.size();
  d["min_degree"] = dec.min_degree;
  d["es_cap"] = dec.es_cap;
  d["max_es_degree"] = dec.max_es_degree();
  d["em_edges"] = dec.em_edges().size();
  d["es_edges"] = dec.es_edges().size();
  ordered_json cl = ordered_json::array();
  for (const Cluster& c : dec.clusters) {
    cl.push_back({{"level", c.level},
                  {"index", c.index},
                  {"leader", c.leader},
                  {"members", c.members.size()},
                  {"edges", c.edges.size()},
                  {"conductance_estimate", c.conductance}});
  }
  d["cluster_list"] = std::move(cl);
  d["problems"] = validate_decomposition(g, dec);
  j["decomposition"] = std::move(d);

  const DiamondListingStats& s = result.stats;
  ordered_json phases = ordered_json::array();
  for (const PhaseStats& p : s.phases) {
    ordered_json e = run_json(p.run);
    e["name"] = p.name;
    e["emitted"] = p.listed;
    phases.push_back(std::move(e));
  }
  j["phases"] = std::move(phases);
  j["measured_rounds"] = s.measured_rounds;
  j["charged_simulation"] = {{"t", s.t_rounds},
                             {"per_cluster", s.charge_per_cluster},
                             {"levels", s.charged_levels},
                             {"rounds", s.charged_simulation_rounds}};
  j["caps"] = {{"max_gathered_edges", s.max_gathered_edges},
               {"gathered_cap", s.gathered_cap},
               {"max_query_list", s.max_query_list},
               {"query_cap", s.query_cap},
               {"heavy_pairs", s.heavy_pairs},
               {"query_rounds", s.query_rounds}};
  ordered_json tags = ordered_json::object();
  for (const auto& [t, c] : s.tag_counts) tags[t] = c;
  j["diamonds"] = {{"count", result.diamonds.size()}, {"by_tag", std::move(tags)}};
  if (oracle) {
    std::vector<VertexSubset> missing;
    std::set_difference(oracle->begin(), oracle->end(), result.diamonds.begin(), result.diamonds.end(),
                        std::back_inserter(missing));
    std::vector<VertexSubset> extra;
    std::set_difference(result.diamonds.begin(), result.diamonds.end(), oracle->begin(), oracle->end(),
                        std::back_inserter(extra));
    ordered_json miss = ordered_json::array();
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) miss.push_back(subset_json(missing[i]));
    j["oracle"] = {{"count", oracle->size()},
                   {"match", missing.empty() && extra.empty()},
                   {"uncovered", missing.size()},
                   {"spurious", extra.size()},
                   {"uncovered_examples", std::move(miss)}};
  }
  return dump(j);
}

std::string run_stats_json(const std::string& program, const SimConfig& config, const RunStats& stats,
                           std::size_t cut_size, const ReductionResult* reduction) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "run-congest";
  j["parameters"] = {{"program", program},
                     {"bandwidth_bits", config.bandwidth_bits},
                     {"max_rounds", config.max_rounds},
                     {"seed", config.seed}};
  j["run"] = run_json(stats);
  j["decision"] = stats.decision();
  ordered_json per_round = ordered_json::array();
  for (auto b : stats.per_round_cut_bits) per_round.push_back(b);
  j["per_round_cut_bits"] = std::move(per_round);
  CutBoundCheck check = cut_traffic_bound_check(stats, cut_size, config);
  j["cut_bound"] = {{"cut_edges", cut_size},
                    {"ok", check.ok},
                    {"bound", check.bound},
                    {"measured", check.measured},
                    {"slack", check.slack}};
  if (reduction != nullptr) {
    j["reduction"] = {{"disj_answer", reduction->disj_answer},
                      {"expected_disj", reduction->expected_disj},
                      {"validated", reduction->validated},
                      {"answer_bits", reduction->answer_bits},
                      {"transcript", transcript_json(reduction->transcript)},
                      {"payload_equals_cut_bits",
                       reduction->transcript.payload_bits() == reduction->stats.total_cut_bits}};
  }
  return dump(j);
}

std::string listing_protocol_json(const std::string& protocol, std::size_t n, std::size_t cut,
                                  const ListingResult& result,
                                  const std::optional<std::vector<VertexSubset>>& oracle) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "run-protocol";
  j["parameters"] = {{"protocol", protocol}, {"n", n}, {"cut_edges", cut}};
  j["transcript"] = transcript_json(result.transcript);
  j["payload_bound"] = result.payload_bound;
  const bool within = result.transcript.payload_bits() <= result.payload_bound;
  j["within_bound"] = within;
  j["slack"] = within ? result.payload_bound - result.transcript.payload_bits() : 0;
  j["shortcut"] = result.shortcut;
  ordered_json a = ordered_json::array();
  for (const auto& s : result.a_list) a.push_back(subset_json(s));
  ordered_json b = ordered_json::array();
  for (const auto& s : result.b_list) b.push_back(subset_json(s));
  j["a_list"] = std::move(a);
  j["b_list"] = std::move(b);
  std::vector<VertexSubset> all = result.all();
  j["listed"] = all.size();
  if (oracle) j["oracle"] = {{"count", oracle->size()}, {"match", all == *oracle}};
  return dump(j);
}

std::string limitation_json(const LimitationReport& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "limitation-report";
  j["target"] = r.target;
  j["n"] = r.n;
  j["cut_edges"] = r.cut;
  j["protocol_bits"] = r.protocol_bits;
  j["log_n"] = r.log_n;
  j["round_ceiling"] = r.ceiling;
  j["growth"] = r.growth;
  j["degenerate"] = r.degenerate;
  j["arithmetic"] = r.arithmetic;
  j["note"] = r.note;
  return dump(j);
}

}  // namespace indsub
