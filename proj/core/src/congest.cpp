#include "indsub/congest.hpp"

#include <algorithm>

#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/random.hpp"

namespace indsub {

unsigned default_bandwidth(std::size_t n) { return 2 * id_width(n); }

bool RunStats::decision() const {
  return std::any_of(node_outputs.begin(), node_outputs.end(),
                     [](const std::optional<bool>& o) { return o.value_or(false); });
}

bool RunStats::all_decided() const {
  return std::all_of(node_outputs.begin(), node_outputs.end(),
                     [](const std::optional<bool>& o) { return o.has_value(); });
}

Engine::Engine(const Graph& g, const NodeProgram& program, SimConfig config, RunOptions options)
    : graph_(g), config_(config), options_(std::move(options)) {
  const std::size_t n = g.vertex_count();
  bandwidth_ = config_.bandwidth_bits != 0 ? config_.bandwidth_bits : default_bandwidth(n);
  if (options_.alice_side) g.check_subset(*options_.alice_side);
  processes_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    NodeInfo info;
    info.id = v;
    auto nb = g.neighbors(v);
    info.neighbors.assign(nb.begin(), nb.end());
    info.n = n;
    info.bandwidth_bits = bandwidth_;
    info.seed = mix_seed(config_.seed, v);
    processes_.push_back(program.spawn(info));
  }
}

RunStats Engine::run() {
  const std::size_t n = graph_.vertex_count();
  RunStats stats;
  stats.bandwidth_bits = bandwidth_;
  stats.node_outputs.assign(n, std::nullopt);
  std::vector<char> alice;
  if (options_.alice_side) alice = side_mask(n, *options_.alice_side);

  std::vector<std::vector<Message>> inboxes(n);
  std::vector<std::vector<Message>> next(n);
  std::vector<VertexId> used_dst;
  bool in_flight = false;

  for (std::size_t round = 1;; ++round) {
    if (round > config_.max_rounds) {
      stats.timed_out = true;
      break;
    }
    stats.rounds_used = round;
    std::uint64_t cut_bits = 0;
    bool sent_any = false;
    for (VertexId v = 0; v < n; ++v) {
      StepResult res = processes_[v]->step(round, inboxes[v]);
      if (res.output) {
        auto& slot = stats.node_outputs[v];
        if (slot && *slot != *res.output) {
          throw ProtocolError("node " + std::to_string(v) + " changed its output in round " +
                              std::to_string(round));
        }
        slot = res.output;
      }
      used_dst.clear();
      for (Message& m : res.outbox) {
        m.src = v;
        const std::string where = "round " + std::to_string(round) + ", edge (" +
                                  std::to_string(v) + "," + std::to_string(m.dst) + ")";
        if (m.dst >= n || !graph_.has_edge(v, m.dst)) {
          throw ProtocolError(where + ": send to a non-neighbour");
        }
        if (m.payload.size() > bandwidth_) {
          throw ProtocolError(where + ": payload of " + std::to_string(m.payload.size()) +
                              " bits exceeds bandwidth " + std::to_string(bandwidth_));
        }
        if (std::find(used_dst.begin(), used_dst.end(), m.dst) != used_dst.end()) {
          throw ProtocolError(where + ": second message on the same edge");
        }
        used_dst.push_back(m.dst);
        ++stats.total_messages;
        stats.total_bits += m.payload.size();
        sent_any = true;
        if (!alice.empty() && alice[v] != alice[m.dst]) {
          cut_bits += m.payload.size();
          if (options_.on_cut_message) options_.on_cut_message(round, m);
        }
        next[m.dst].push_back(std::move(m));
      }
    }
    if (!alice.empty()) {
      stats.per_round_cut_bits.push_back(cut_bits);
      stats.total_cut_bits += cut_bits;
    }
    if (sent_any) stats.last_send_round = round;
    in_flight = sent_any;
    for (VertexId v = 0; v < n; ++v) {
      inboxes[v].clear();
      std::swap(inboxes[v], next[v]);
      // Deterministic inbox order regardless of sender stepping order.
      std::sort(inboxes[v].begin(), inboxes[v].end(),
                [](const Message& a, const Message& b) { return a.src < b.src; });
    }
    if (!in_flight && stats.all_decided()) break;
  }
  return stats;
}

RunStats run(const Graph& g, const NodeProgram& program, const SimConfig& config, RunOptions options) {
  Engine engine(g, program, config, std::move(options));
  return engine.run();
}

CutBoundCheck cut_traffic_bound_check(const RunStats& stats, std::size_t cut_size,
                                      const SimConfig& config) {
  CutBoundCheck check;
  const std::uint64_t b = config.bandwidth_bits != 0 ? config.bandwidth_bits : stats.bandwidth_bits;
  check.bound = static_cast<std::uint64_t>(stats.rounds_used) * 2 * cut_size * b;
  check.measured = stats.total_cut_bits;
  check.ok = check.measured <= check.bound;
  check.slack = check.ok ? check.bound - check.measured : 0;
  return check;
}

}  // namespace indsub
