#include "indsub/diamond_listing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "indsub/errors.hpp"
#include "indsub/oracles.hpp"

namespace indsub {

namespace {

bool contains_sorted(const std::vector<VertexId>& v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// What one node holds. The decomposition part is its local input; the rest
// is filled in by messages it receives.
struct NodeMemory {
  std::vector<VertexId> nbrs;      // sorted
  std::vector<int> edge_cluster;   // parallel to nbrs, -1 for E_s
  std::vector<VertexId> sparse;    // E_s-neighbours
  std::vector<int> memberships;    // sorted cluster ids

  std::vector<std::vector<int>> nbr_memberships;   // parallel to nbrs
  std::vector<std::vector<VertexId>> nbr_sparse;   // parallel to nbrs
  // cluster -> heavy sender -> part of its neighbourhood
  std::map<int, std::map<VertexId, std::vector<VertexId>>> gathered;
  std::size_t gathered_edges = 0;
  // cluster -> light sender -> N(sender) ∩ C
  std::map<int, std::map<VertexId, std::vector<VertexId>>> light_lists;

  struct Candidate {
    VertexId u, c1, c2;
  };
  std::vector<Candidate> candidates;
  std::vector<std::vector<VertexId>> queries_in;  // parallel to nbrs: c2 ids asked by that nbr
  std::set<std::pair<VertexId, VertexId>> confirmed;  // (c1, c2) known to be edges

  std::size_t index_of(VertexId w) const {
    return static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), w) - nbrs.begin());
  }
  bool adjacent(VertexId w) const { return contains_sorted(nbrs, w); }
  bool member_of(int c) const { return std::binary_search(memberships.begin(), memberships.end(), c); }
  // N(v) ∩ C, from neighbours' announced memberships.
  std::vector<VertexId> neighbours_in(int c) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (std::binary_search(nbr_memberships[i].begin(), nbr_memberships[i].end(), c)) out.push_back(nbrs[i]);
    }
    return out;
  }
};

struct Context {
  const Graph& g;
  const Decomposition& dec;
  std::size_t n = 0;
  Fraction epsilon;
  Fraction gather_exp;  // 2 - epsilon
  unsigned id_bits = 1;
  unsigned cluster_bits = 1;
  std::vector<NodeMemory> memory;
  std::vector<std::pair<VertexSubset, const char*>> emitted;
  std::size_t heavy_pairs = 0;
  std::size_t max_query = 0;

  Context(const Graph& graph, const Decomposition& d, Fraction eps)
      : g(graph), dec(d), n(graph.vertex_count()), epsilon(eps) {
    gather_exp = Fraction{2 * eps.den - eps.num, eps.den};
    id_bits = id_width(n);
    cluster_bits = id_width(std::max<std::size_t>(1, d.clusters.size()));
    memory.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      NodeMemory& m = memory[v];
      auto nb = g.neighbors(v);
      m.nbrs.assign(nb.begin(), nb.end());
      for (VertexId w : m.nbrs) {
        int c = d.cluster_of(Edge(v, w));
        m.edge_cluster.push_back(c);
        if (c < 0) {
          m.sparse.push_back(w);
        } else {
          m.memberships.push_back(c);
        }
      }
      std::sort(m.memberships.begin(), m.memberships.end());
      m.memberships.erase(std::unique(m.memberships.begin(), m.memberships.end()), m.memberships.end());
      m.nbr_memberships.resize(m.nbrs.size());
      m.nbr_sparse.resize(m.nbrs.size());
      m.queries_in.resize(m.nbrs.size());
    }
  }

  bool heavy(std::size_t count) const { return exceeds_power(count, n, epsilon); }
  void emit(std::vector<VertexId> s, const char* tag) { emitted.emplace_back(VertexSubset(std::move(s)), tag); }
};

using Records = std::vector<std::vector<std::uint64_t>>;  // one list per neighbour

// Sends a sequence of stages over per-neighbour bit streams. Each stage's
// stream to a neighbour is a count followed by fixed-width records; a stage's
// outgoing records may depend on everything received in earlier stages.
class StagedProcess : public NodeProcess {
 public:
  StagedProcess(const NodeInfo& info, Context& ctx, std::vector<unsigned> record_bits)
      : info_(info),
        ctx_(ctx),
        mem_(ctx.memory[info.id]),
        record_bits_(std::move(record_bits)),
        count_bits_(id_width(info.n * info.n + 1)),
        out_(info.neighbors.size()),
        out_pos_(info.neighbors.size(), 0),
        in_(info.neighbors.size()),
        in_pos_(info.neighbors.size(), 0) {}

  StepResult step(std::size_t, const std::vector<Message>& inbox) override {
    StepResult res;
    if (decided_) return res;
    if (!started_) {
      started_ = true;
      queue_stage(0);
    }
    for (const Message& m : inbox) in_[mem_.index_of(m.src)].append(m.payload);
    drain_incoming();
    bool pending = false;
    for (std::size_t i = 0; i < out_.size(); ++i) {
      std::size_t left = out_[i].size() - out_pos_[i];
      std::size_t k = std::min<std::size_t>(left, info_.bandwidth_bits);
      if (k == 0) continue;
      Message msg;
      msg.dst = info_.neighbors[i];
      msg.payload.append(out_[i], out_pos_[i], k);
      out_pos_[i] += k;
      pending |= out_pos_[i] < out_[i].size();
      res.outbox.push_back(std::move(msg));
    }
    if (recv_stage_ == record_bits_.size() && !pending) {
      decided_ = true;
      res.output = finish();
    }
    return res;
  }

 protected:
  virtual Records outgoing(std::size_t stage) = 0;
  virtual void incoming(std::size_t stage, Records records) = 0;
  virtual bool finish() = 0;

  NodeInfo info_;
  Context& ctx_;
  NodeMemory& mem_;

 private:
  void queue_stage(std::size_t stage) {
    Records recs = outgoing(stage);
    recs.resize(out_.size());
    for (std::size_t i = 0; i < out_.size(); ++i) {
      out_[i].push(recs[i].size(), count_bits_);
      for (std::uint64_t r : recs[i]) out_[i].push(r, record_bits_[stage]);
    }
  }

  void drain_incoming() {
    while (recv_stage_ < record_bits_.size()) {
      const unsigned width = record_bits_[recv_stage_];
      if (parsed_.empty()) parsed_.assign(in_.size(), std::nullopt);
      bool complete = true;
      for (std::size_t i = 0; i < in_.size(); ++i) {
        if (parsed_[i]) continue;
        BitReader r(in_[i], in_pos_[i]);
        if (!r.can_read(count_bits_)) {
          complete = false;
          continue;
        }
        std::uint64_t count = r.read(count_bits_);
        if (!r.can_read(count * width)) {
          complete = false;
          continue;
        }
        std::vector<std::uint64_t> recs;
        recs.reserve(count);
        for (std::uint64_t j = 0; j < count; ++j) recs.push_back(r.read(width));
        in_pos_[i] = r.position();
        parsed_[i] = std::move(recs);
      }
      if (!complete) return;
      Records recs;
      for (auto& p : parsed_) recs.push_back(std::move(*p));
      parsed_.clear();
      incoming(recv_stage_, std::move(recs));
      ++recv_stage_;
      if (recv_stage_ < record_bits_.size()) queue_stage(recv_stage_);
    }
  }

  std::vector<unsigned> record_bits_;
  unsigned count_bits_;
  std::vector<BitBuffer> out_;
  std::vector<std::size_t> out_pos_;
  std::vector<BitBuffer> in_;
  std::vector<std::size_t> in_pos_;
  std::vector<std::optional<std::vector<std::uint64_t>>> parsed_;
  std::size_t recv_stage_ = 0;
  bool started_ = false;
  bool decided_ = false;
};

class FactoryProgram : public NodeProgram {
 public:
  using Factory = std::function<std::unique_ptr<NodeProcess>(const NodeInfo&)>;
  FactoryProgram(std::string name, Factory f) : name_(std::move(name)), factory_(std::move(f)) {}
  std::string name() const override { return name_; }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const override { return factory_(info); }

 private:
  std::string name_;
  Factory factory_;
};

// Everyone tells its neighbours which clusters it belongs to.
class MembershipProcess : public StagedProcess {
 public:
  MembershipProcess(const NodeInfo& info, Context& ctx)
      : StagedProcess(info, ctx, {ctx.cluster_bits}) {}

 protected:
  Records outgoing(std::size_t) override {
    std::vector<std::uint64_t> mine(mem_.memberships.begin(), mem_.memberships.end());
    return Records(mem_.nbrs.size(), mine);
  }
  void incoming(std::size_t, Records recs) override {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      mem_.nbr_memberships[i].assign(recs[i].begin(), recs[i].end());
      std::sort(mem_.nbr_memberships[i].begin(), mem_.nbr_memberships[i].end());
    }
  }
  bool finish() override { return false; }
};

// Each node sends its E_s edges to all neighbours, then lists the all-E_s
// diamonds in which it is a degree-2 vertex: only such a vertex can see the
// missing edge.
class SparseProcess : public StagedProcess {
 public:
  SparseProcess(const NodeInfo& info, Context& ctx) : StagedProcess(info, ctx, {ctx.id_bits}) {}

 protected:
  Records outgoing(std::size_t) override {
    std::vector<std::uint64_t> mine(mem_.sparse.begin(), mem_.sparse.end());
    return Records(mem_.nbrs.size(), mine);
  }
  void incoming(std::size_t, Records recs) override {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      mem_.nbr_sparse[i].assign(recs[i].begin(), recs[i].end());
    }
  }
  bool finish() override {
    const VertexId v = info_.id;
    bool found = false;
    const auto& s = mem_.sparse;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& sa = mem_.nbr_sparse[mem_.index_of(s[i])];
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!contains_sorted(sa, s[j])) continue;
        const auto& sb = mem_.nbr_sparse[mem_.index_of(s[j])];
        for (VertexId d : intersect(sa, sb)) {
          if (d == v || mem_.adjacent(d)) continue;
          ctx_.emit({v, s[i], s[j], d}, kTagSparse);
          found = true;
        }
      }
    }
    return found;
  }
};

// C-heavy nodes spread N(v) over their C-neighbours in ascending id order.
class HeavyProcess : public StagedProcess {
 public:
  HeavyProcess(const NodeInfo& info, Context& ctx)
      : StagedProcess(info, ctx, {ctx.cluster_bits + ctx.id_bits}) {}

 protected:
  Records outgoing(std::size_t) override {
    Records recs(mem_.nbrs.size());
    std::set<int> seen;
    for (const auto& ms : mem_.nbr_memberships) seen.insert(ms.begin(), ms.end());
    for (int c : seen) {
      if (mem_.member_of(c)) continue;
      std::vector<VertexId> targets = mem_.neighbours_in(c);
      if (!ctx_.heavy(targets.size())) continue;
      ++ctx_.heavy_pairs;
      const std::size_t k = targets.size();
      const std::size_t q = mem_.nbrs.size() / k;
      const std::size_t r = mem_.nbrs.size() % k;
      std::size_t next = 0;
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t size = q + (j < r ? 1 : 0);
        auto& out = recs[mem_.index_of(targets[j])];
        for (std::size_t t = 0; t < size; ++t) {
          out.push_back((static_cast<std::uint64_t>(c) << ctx_.id_bits) | mem_.nbrs[next++]);
        }
      }
    }
    return recs;
  }
  void incoming(std::size_t, Records recs) override {
    const std::uint64_t mask = (std::uint64_t{1} << ctx_.id_bits) - 1;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      for (std::uint64_t rec : recs[i]) {
        int c = static_cast<int>(rec >> ctx_.id_bits);
        if (!mem_.member_of(c)) throw InternalError("neighbourhood batch sent to a non-member");
        mem_.gathered[c][mem_.nbrs[i]].push_back(static_cast<VertexId>(rec & mask));
        ++mem_.gathered_edges;
      }
    }
    if (exceeds_power(mem_.gathered_edges, ctx_.n, ctx_.gather_exp)) {
      throw ProtocolError("node " + std::to_string(info_.id) + " gathered " +
                          std::to_string(mem_.gathered_edges) + " edges, above n^(2-eps)");
    }
  }
  bool finish() override { return false; }
};

// Stage 0: C-light nodes announce N(u) ∩ C. Stage 1: queries to c1. Stage 2:
// answers.
class LightProcess : public StagedProcess {
 public:
  LightProcess(const NodeInfo& info, Context& ctx)
      : StagedProcess(info, ctx, {ctx.cluster_bits + ctx.id_bits, ctx.id_bits, ctx.id_bits}) {}

 protected:
  Records outgoing(std::size_t stage) override {
    Records recs(mem_.nbrs.size());
    if (stage == 0) {
      std::vector<std::uint64_t> mine;
      for (int c : light_clusters()) {
        for (VertexId w : mem_.neighbours_in(c)) {
          mine.push_back((static_cast<std::uint64_t>(c) << ctx_.id_bits) | w);
        }
      }
      return Records(mem_.nbrs.size(), mine);
    }
    if (stage == 1) {
      std::map<VertexId, std::set<VertexId>> to_send;
      for (int c : light_clusters()) {
        for (auto& [c1, list] : build_queries(c)) to_send[c1].insert(list.begin(), list.end());
      }
      for (auto& [c1, list] : to_send) {
        recs[mem_.index_of(c1)].assign(list.begin(), list.end());
      }
      return recs;
    }
    // Answer with the queried pairs that are edges at this node.
    for (std::size_t i = 0; i < mem_.nbrs.size(); ++i) {
      for (VertexId c2 : mem_.queries_in[i]) {
        if (mem_.adjacent(c2)) recs[i].push_back(c2);
      }
    }
    return recs;
  }

  void incoming(std::size_t stage, Records recs) override {
    const std::uint64_t mask = (std::uint64_t{1} << ctx_.id_bits) - 1;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      for (std::uint64_t rec : recs[i]) {
        if (stage == 0) {
          mem_.light_lists[static_cast<int>(rec >> ctx_.id_bits)][mem_.nbrs[i]].push_back(
              static_cast<VertexId>(rec & mask));
        } else if (stage == 1) {
          mem_.queries_in[i].push_back(static_cast<VertexId>(rec));
        } else {
          mem_.confirmed.emplace(mem_.nbrs[i], static_cast<VertexId>(rec));
        }
      }
    }
  }

  bool finish() override {
    bool found = false;
    for (const auto& cand : mem_.candidates) {
      if (!mem_.confirmed.count({cand.c1, cand.c2})) continue;
      ctx_.emit({info_.id, cand.u, cand.c1, cand.c2}, kTagLight);
      found = true;
    }
    return found;
  }

 private:
  // Clusters C with v outside C and 1 <= |N(v) ∩ C| <= n^eps.
  std::vector<int> light_clusters() const {
    std::set<int> seen;
    for (const auto& ms : mem_.nbr_memberships) seen.insert(ms.begin(), ms.end());
    std::vector<int> out;
    for (int c : seen) {
      if (mem_.member_of(c)) continue;
      if (!ctx_.heavy(mem_.neighbours_in(c).size())) out.push_back(c);
    }
    return out;
  }

  // L1 and L2 for cluster c; returns Q_{v,c1} keyed by c1.
  std::map<VertexId, std::set<VertexId>> build_queries(int c) {
    const VertexId v = info_.id;
    const std::vector<VertexId> nc = mem_.neighbours_in(c);
    std::map<VertexId, std::set<VertexId>> q;
    // L1: u in N(v) is C-light, c1 in N(v) ∩ N(u), c2 in N(v) \ N(u). Keeping
    // c2 inside N(v) ∩ C is what bounds Q_{v,c1} by n^eps.
    if (auto it = mem_.light_lists.find(c); it != mem_.light_lists.end()) {
      for (const auto& [u, lu] : it->second) {
        for (VertexId c1 : lu) {
          if (!contains_sorted(nc, c1)) continue;
          for (VertexId c2 : nc) {
            if (c2 == c1 || contains_sorted(lu, c2)) continue;
            mem_.candidates.push_back({u, c1, c2});
            q[c1].insert(c2);
          }
        }
      }
    }
    // L2: u not in N(v), c1, c2 in N(v) ∩ N(u), the four u/v-c edges in E_s.
    for (std::size_t i = 0; i < nc.size(); ++i) {
      if (!contains_sorted(mem_.sparse, nc[i])) continue;
      const auto& s1 = mem_.nbr_sparse[mem_.index_of(nc[i])];
      for (std::size_t j = i + 1; j < nc.size(); ++j) {
        if (!contains_sorted(mem_.sparse, nc[j])) continue;
        const auto& s2 = mem_.nbr_sparse[mem_.index_of(nc[j])];
        for (VertexId u : intersect(s1, s2)) {
          if (u == v || mem_.adjacent(u)) continue;
          mem_.candidates.push_back({u, nc[i], nc[j]});
          q[nc[i]].insert(nc[j]);
        }
      }
    }
    for (const auto& [c1, list] : q) {
      ctx_.max_query = std::max(ctx_.max_query, list.size());
      if (ctx_.heavy(list.size())) {
        throw ProtocolError("node " + std::to_string(v) + ": query list for c1 = " +
                            std::to_string(c1) + " has " + std::to_string(list.size()) +
                            " entries, above n^eps");
      }
    }
    return q;
  }
};

class Listing {
 public:
  Listing(const Graph& g, const Decomposition& dec, const ListingParams& params)
      : params_(params), ctx_(g, dec, params.epsilon) {
    if (params.epsilon.num == 0 || params.epsilon.num >= params.epsilon.den) {
      throw InputError("epsilon must satisfy 0 < epsilon < 1, got " + params.epsilon.to_string());
    }
    if (dec.n != g.vertex_count()) throw InputError("decomposition belongs to a different graph");
  }

  void membership() { run_phase<MembershipProcess>("membership"); }
  void sparse() { run_phase<SparseProcess>("sparse"); }
  void light() { run_phase<LightProcess>("light"); }

  void heavy() {
    run_phase<HeavyProcess>("heavy");
    cluster_listing();
    const double n = static_cast<double>(ctx_.n);
    const double d = params_.delta.value();
    const double e = params_.epsilon.value();
    std::size_t t = 0;
    while (t * t < ctx_.n) ++t;
    std::set<std::size_t> levels;
    for (const Cluster& c : ctx_.dec.clusters) levels.insert(c.level);
    stats_.t_rounds = t;
    stats_.charge_per_cluster =
        params_.charge_constant * (std::pow(n, 2 - d - e) + static_cast<double>(t) * std::pow(n, 2 - 2 * d));
    stats_.charged_levels = levels.size();
    stats_.charged_simulation_rounds = stats_.charge_per_cluster * static_cast<double>(levels.size());
    for (const NodeMemory& m : ctx_.memory) stats_.max_gathered_edges = std::max(stats_.max_gathered_edges, m.gathered_edges);
  }

  DiamondListingResult result(const std::set<std::string>& keep_tags) {
    DiamondListingResult out;
    for (auto& [s, tag] : ctx_.emitted) {
      if (!is_induced_diamond(ctx_.g, s)) {
        throw InternalError("phase '" + std::string(tag) + "' emitted a non-diamond " + s.to_string());
      }
      if (!keep_tags.count(tag)) continue;
      auto& tags = out.tags[s];
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
    }
    for (auto& [s, tags] : out.tags) {
      std::sort(tags.begin(), tags.end());
      out.diamonds.push_back(s);
      for (const auto& t : tags) ++stats_.tag_counts[t];
    }
    for (auto& p : stats_.phases) {
      stats_.measured_rounds += p.run.rounds_used;
    }
    stats_.heavy_pairs = ctx_.heavy_pairs;
    stats_.max_query_list = ctx_.max_query;
    stats_.gathered_cap = floor_power(ctx_.n, ctx_.gather_exp);
    stats_.query_cap = floor_power(ctx_.n, params_.epsilon);
    out.stats = stats_;
    return out;
  }

 private:
  template <typename Process>
  void run_phase(const std::string& name) {
    const std::size_t before = ctx_.emitted.size();
    Context& ctx = ctx_;
    FactoryProgram program(name, [&ctx](const NodeInfo& info) {
      return std::make_unique<Process>(info, ctx);
    });
    PhaseStats ps;
    ps.name = name;
    ps.run = run(ctx_.g, program, params_.sim);
    if (ps.run.timed_out) {
      throw ProtocolError("phase '" + name + "' did not finish within " +
                          std::to_string(params_.sim.max_rounds) + " rounds");
    }
    if (name == "light") stats_.query_rounds = ps.run.rounds_used;
    ps.listed = ctx_.emitted.size() - before;
    stats_.phases.push_back(std::move(ps));
  }

  // Stand-in for the congested-clique simulation: cluster C lists over the
  // union of what its members hold, accepting a diamond only when every one
  // of its six vertex pairs is decided by that knowledge.
  void cluster_listing() {
    const Decomposition& dec = ctx_.dec;
    for (std::size_t ci = 0; ci < dec.clusters.size(); ++ci) {
      const Cluster& cl = dec.clusters[ci];
      const int c = static_cast<int>(ci);
      GraphBuilder known(ctx_.n);
      std::set<VertexId> heavy;
      for (VertexId m : cl.members) {
        const NodeMemory& mem = ctx_.memory[m];
        for (VertexId w : mem.nbrs) known.add_edge(m, w);
        if (auto it = mem.gathered.find(c); it != mem.gathered.end()) {
          for (const auto& [h, part] : it->second) {
            heavy.insert(h);
            for (VertexId w : part) known.add_edge(h, w);
          }
        }
      }
      auto decided = [&](VertexId a, VertexId b) {
        return cl.members.contains(a) || cl.members.contains(b) || heavy.count(a) || heavy.count(b);
      };
      auto cluster_edge = [&](VertexId a, VertexId b) {
        if (!cl.members.contains(a)) return false;
        const NodeMemory& mem = ctx_.memory[a];
        std::size_t i = mem.index_of(b);
        return i < mem.nbrs.size() && mem.nbrs[i] == b && mem.edge_cluster[i] == c;
      };
      for (const VertexSubset& s : list_induced_diamonds(known.build())) {
        bool all_decided = true;
        bool has_cluster_edge = false;
        bool has_heavy = false;
        for (std::size_t i = 0; i < 4; ++i) {
          has_heavy |= heavy.count(s[i]) > 0;
          for (std::size_t j = i + 1; j < 4; ++j) {
            all_decided &= decided(s[i], s[j]);
            has_cluster_edge |= cluster_edge(s[i], s[j]);
          }
        }
        if (!all_decided || !has_cluster_edge) continue;
        ctx_.emit({s[0], s[1], s[2], s[3]}, has_heavy ? kTagHeavy : kTagCluster);
      }
    }
  }

  ListingParams params_;
  Context ctx_;
  DiamondListingStats stats_;
};

}  // namespace

DiamondListingResult sparse_phase(const Graph& g, const Decomposition& dec, const ListingParams& params) {
  Listing l(g, dec, params);
  l.sparse();
  return l.result({kTagSparse});
}

DiamondListingResult heavy_phase(const Graph& g, const Decomposition& dec, const ListingParams& params) {
  Listing l(g, dec, params);
  l.membership();
  l.heavy();
  return l.result({kTagHeavy, kTagCluster});
}

DiamondListingResult light_phase(const Graph& g, const Decomposition& dec, const ListingParams& params) {
  Listing l(g, dec, params);
  l.membership();
  l.sparse();
  l.light();
  return l.result({kTagLight});
}

DiamondListingResult list_induced_diamonds_congest(const Graph& g, const Decomposition& dec,
                                                   const ListingParams& params) {
  Listing l(g, dec, params);
  l.membership();
  l.sparse();
  l.heavy();
  l.light();
  return l.result({kTagSparse, kTagHeavy, kTagCluster, kTagLight});
}

DiamondListingResult list_induced_diamonds_congest(const Graph& g, const ListingParams& params) {
  DecompositionParams dp = params.decomposition;
  dp.delta = params.delta;
  Decomposition dec = expander_decompose(g, dp);
  return list_induced_diamonds_congest(g, dec, params);
}

}  // namespace indsub
