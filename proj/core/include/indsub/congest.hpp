#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indsub/bits.hpp"
#include "indsub/graph.hpp"

namespace indsub {

// Bits of one edge-id payload: 2 * ceil(log2 n).
unsigned default_bandwidth(std::size_t n);

struct SimConfig {
  unsigned bandwidth_bits = 0;  // 0 picks default_bandwidth(n)
  std::size_t max_rounds = 100000;
  std::uint64_t seed = 0;
};

struct Message {
  VertexId src = 0;
  VertexId dst = 0;
  BitBuffer payload;
};

// What a node knows when it starts.
struct NodeInfo {
  VertexId id = 0;
  std::vector<VertexId> neighbors;  // sorted
  std::size_t n = 0;
  unsigned bandwidth_bits = 0;
  std::uint64_t seed = 0;  // private stream, derived from (config seed, id)
};

struct StepResult {
  std::vector<Message> outbox;  // src is filled in by the engine
  std::optional<bool> output;
};

// One node's state machine. step() is called once per round with the
// messages its neighbours sent in the previous round.
class NodeProcess {
 public:
  virtual ~NodeProcess() = default;
  virtual StepResult step(std::size_t round, const std::vector<Message>& inbox) = 0;
};

class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const = 0;
};

struct RunStats {
  std::size_t rounds_used = 0;      // steps executed
  std::size_t last_send_round = 0;  // last round in which any message was sent
  bool timed_out = false;           // max_rounds hit with undecided nodes or traffic in flight
  unsigned bandwidth_bits = 0;
  std::vector<std::uint64_t> per_round_cut_bits;  // index r-1 holds round r
  std::uint64_t total_cut_bits = 0;
  std::uint64_t total_messages = 0;
  std::uint64_t total_bits = 0;
  std::vector<std::optional<bool>> node_outputs;

  // Yes iff some node output 1.
  bool decision() const;
  bool all_decided() const;
};

struct RunOptions {
  // When set, bits on messages between this side and its complement are counted.
  std::optional<VertexSubset> alice_side;
  // Called for every message crossing the bipartition, in send order.
  std::function<void(std::size_t round, const Message&)> on_cut_message;
};

// Lock-step execution. Nodes are stepped in id order; messages sent in round
// r are delivered to step r+1. Stops once every node has output and nothing
// is in flight, or after max_rounds. Bandwidth and adjacency violations throw
// ProtocolError.
class Engine {
 public:
  Engine(const Graph& g, const NodeProgram& program, SimConfig config, RunOptions options = {});

  RunStats run();

  unsigned bandwidth_bits() const noexcept { return bandwidth_; }

 private:
  const Graph& graph_;
  SimConfig config_;
  RunOptions options_;
  unsigned bandwidth_;
  std::vector<std::unique_ptr<NodeProcess>> processes_;
};

RunStats run(const Graph& g, const NodeProgram& program, const SimConfig& config,
             RunOptions options = {});

struct CutBoundCheck {
  bool ok = false;
  std::uint64_t bound = 0;  // rounds * 2 * |cut| * bandwidth
  std::uint64_t measured = 0;
  std::uint64_t slack = 0;  // bound - measured when ok
};
CutBoundCheck cut_traffic_bound_check(const RunStats& stats, std::size_t cut_size,
                                      const SimConfig& config);

// --- programs -----------------------------------------------------------------

// Everyone outputs 1 in round 1.
std::unique_ptr<NodeProgram> output_one_program();
// Everyone outputs 0 in round 1 and never sends.
std::unique_ptr<NodeProgram> silent_program();
// The source outputs 1 and sends a 1-bit token; others output 1 on first
// receipt and forward it to neighbours that did not just send it to them.
std::unique_ptr<NodeProgram> flood_program(VertexId source);

// Every node sends its whole set of known ids (an n-bit mask) each round for
// `rounds` rounds. After round r a node must know exactly its radius-(r-1)
// ball; the final masks land in *knowledge (indexed by node).
std::unique_ptr<NodeProgram> causality_probe_program(
    std::size_t rounds, std::shared_ptr<std::vector<BitString>> knowledge);

// Streams degree then one neighbour id per round to every neighbour; once all
// neighbour lists are in, v outputs 1 iff it sees u, w in N(v), u !~ w, and
// t in N(u) ∩ N(w) \ N[v].
std::unique_ptr<NodeProgram> naive_c4_program();

// "output-one", "silent", "flood:<source>", "naive-c4".
std::unique_ptr<NodeProgram> program_by_name(const std::string& name);

}  // namespace indsub
