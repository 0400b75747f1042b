#include <gtest/gtest.h>

#include <indsub/congest.hpp>
#include <indsub/errors.hpp>
#include <indsub/families.hpp>
#include <indsub/oracles.hpp>
#include <indsub/twoparty.hpp>

#include <cmath>

#include "support.hpp"

namespace indsub {
namespace {

using testing::random_graph;
using testing::random_side;

void expect_counters_consistent(const Transcript& t) {
  std::uint64_t ab = 0, ba = 0, fab = 0, fba = 0;
  for (const auto& m : t.messages) {
    (m.from == Party::kAlice ? ab : ba) += m.payload.size();
    (m.from == Party::kAlice ? fab : fba) += m.framing.size();
  }
  EXPECT_EQ(ab, t.bits_a_to_b);
  EXPECT_EQ(ba, t.bits_b_to_a);
  EXPECT_EQ(fab, t.framing_a_to_b);
  EXPECT_EQ(fba, t.framing_b_to_a);
}

std::size_t cut_size(const Graph& g, const VertexSubset& va) {
  return crossing_edges(g, side_mask(g.vertex_count(), va)).size();
}

TEST(PartyView, HoldsOnlyOwnAndCutEdges) {
  Graph g = random_graph(30, 0.3, 2);
  VertexSubset va = random_side(30, 3);
  for (Party side : {Party::kAlice, Party::kBob}) {
    PartyView view = make_party_view(g, va, side);
    for (const Edge& e : view.known_edges) EXPECT_TRUE(view.owns(e.u) || view.owns(e.v));
    std::size_t expect = 0;
    for (const Edge& e : g.edges()) expect += view.owns(e.u) || view.owns(e.v);
    EXPECT_EQ(view.known_edges.size(), expect);
    EXPECT_EQ(view.cut_edges.size(), cut_size(g, va));
  }
}

TEST(CycleProtocol, MatchesOracle) {
  Rng rng(8);
  for (int t = 0; t < 24; ++t) {
    std::size_t n = 20 + rng.below(25);
    double p = std::vector<double>{0.05, 0.15, 0.3}[t % 3];
    Graph g = random_graph(n, p, rng.next());
    VertexSubset va = random_side(n, rng.next());
    for (std::size_t k = 3; k <= 7; ++k) {
      ListingResult r = cycle_listing_protocol(g, va, k);
      ASSERT_EQ(r.all(), list_induced_cycles(g, k)) << "t=" << t << " k=" << k;
      ASSERT_EQ(r.payload_bound, cycle_protocol_bound(n, cut_size(g, va)));
      ASSERT_LE(r.transcript.payload_bits(), r.payload_bound);
      // each side lists only cycles it holds enough of
      for (const auto& c : r.a_list) {
        std::size_t mine = 0;
        for (VertexId v : c) mine += va.contains(v);
        ASSERT_GE(2 * mine, k);
      }
      expect_counters_consistent(r.transcript);
    }
  }
}

TEST(CycleProtocol, EmptyCut) {
  // two components, one per side
  Graph g = random_graph(20, 0.4, 4);
  GraphBuilder b(20);
  for (const Edge& e : g.edges())
    if ((e.u < 10) == (e.v < 10)) b.add_edge(e.u, e.v);
  Graph split = b.build();
  VertexSubset va{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (std::size_t k = 3; k <= 7; ++k) {
    ListingResult r = cycle_listing_protocol(split, va, k);
    EXPECT_EQ(r.transcript.payload_bits(), 0u);
    EXPECT_EQ(r.payload_bound, 0u);
    for (const auto& c : r.a_list) EXPECT_LT(c[c.size() - 1], 10u);
    for (const auto& c : r.b_list) EXPECT_GE(c[0], 10u);
    EXPECT_EQ(r.all(), list_induced_cycles(split, k));
  }
}

TEST(CycleProtocol, C4FamilyIff) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    BitString x(9), y(9);
    for (int i = 0; i < 9; ++i) {
      x[i] = rng.coin(0.3);
      y[i] = rng.coin(0.3);
    }
    FamilyInstance inst = build_c4_family(3, {x, y});
    ListingResult r = cycle_listing_protocol(inst.graph, inst.va, 4);
    EXPECT_EQ(r.all().empty(), disj(x, y) == 1);
  }
}

TEST(CycleProtocol, RejectsLongCycles) {
  Graph g = random_graph(10, 0.3, 1);
  EXPECT_THROW(cycle_listing_protocol(g, VertexSubset{0, 1}, 8), InputError);
  EXPECT_THROW(cycle_listing_protocol(g, VertexSubset{0, 1}, 2), InputError);
}

TEST(DiamondProtocol, MatchesOracle) {
  Rng rng(9);
  bool saw_heavy = false;
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 20 + rng.below(45);
    double p = std::vector<double>{0.1, 0.2, 0.35}[t % 3];
    Graph g = random_graph(n, p, rng.next());
    VertexSubset va = random_side(n, rng.next());
    ListingResult r = diamond_listing_protocol(g, va);
    ASSERT_EQ(r.all(), list_induced_diamonds(g)) << "t=" << t;
    ASSERT_LE(r.transcript.payload_bits(), r.payload_bound);
    ASSERT_EQ(r.payload_bound, diamond_protocol_bound(n, cut_size(g, va)));
    expect_counters_consistent(r.transcript);
    for (const auto& m : r.transcript.messages) saw_heavy |= m.from == Party::kAlice && !m.payload.empty();
  }
  EXPECT_TRUE(saw_heavy);
}

TEST(DiamondProtocol, LightBranch) {
  // dense Alice side, few cut edges: most of V'_A is light
  bool saw_light = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    GraphBuilder b(40);
    for (VertexId u = 0; u < 40; ++u)
      for (VertexId v = u + 1; v < 40; ++v) {
        double p = v < 25 ? 0.7 : (u >= 25 ? 0.5 : 0.04);
        if (rng.coin(p)) b.add_edge(u, v);
      }
    Graph g = b.build();
    std::vector<VertexId> a(25);
    for (VertexId i = 0; i < 25; ++i) a[i] = i;
    ListingResult r = diamond_listing_protocol(g, VertexSubset(a));
    ASSERT_FALSE(r.shortcut);
    ASSERT_EQ(r.all(), list_induced_diamonds(g)) << seed;
    ASSERT_LE(r.transcript.payload_bits(), r.payload_bound);
    for (const auto& m : r.transcript.messages) saw_light |= m.from == Party::kBob && !m.payload.empty();
  }
  EXPECT_TRUE(saw_light);
}

TEST(DiamondProtocol, Shortcut) {
  // complete bipartite cut of 64 = 16^{3/2} edges plus some internal edges
  GraphBuilder b(16);
  for (VertexId a = 0; a < 8; ++a)
    for (VertexId v = 8; v < 16; ++v) b.add_edge(a, v);
  b.add_edge(0, 1);
  b.add_edge(9, 10);
  b.add_edge(2, 3);
  Graph g = b.build();
  VertexSubset va{0, 1, 2, 3, 4, 5, 6, 7};
  ListingResult r = diamond_listing_protocol(g, va);
  EXPECT_TRUE(r.shortcut);
  EXPECT_EQ(r.all(), list_induced_diamonds(g));
  EXPECT_LE(r.transcript.payload_bits(), r.payload_bound);
  EXPECT_EQ(r.transcript.bits_b_to_a, 0u);
}

TEST(DiamondProtocol, EmptyBobSide) {
  Graph g = random_graph(30, 0.25, 12);
  GraphBuilder b(30);
  for (const Edge& e : g.edges())
    if (e.u < 20) b.add_edge(e.u, e.v);  // no edge with both ends >= 20
  Graph h = b.build();
  std::vector<VertexId> a(20);
  for (VertexId i = 0; i < 20; ++i) a[i] = i;
  ListingResult r = diamond_listing_protocol(h, VertexSubset(a));
  EXPECT_EQ(r.all(), list_induced_diamonds(h));
  for (const auto& m : r.transcript.messages)
    if (m.from == Party::kBob && m.label.find("light") != std::string::npos) EXPECT_TRUE(m.payload.empty());
}

TEST(DiamondProtocol, FamilySharedIndex) {
  DiamondFixture fix = build_diamond_fixture(4, 3);
  const std::size_t K = fix.quadruples.size();
  ASSERT_GT(K, 0u);
  for (std::size_t k = 0; k < K; ++k) {
    auto x = testing::bits_at(K, {k});
    FamilyInstance inst = build_diamond_family(fix, {x, x});
    ListingResult r = diamond_listing_protocol(inst.graph, inst.va);
    bool two_two = false;
    for (const auto& d : r.all()) {
      std::size_t on_a = 0;
      for (VertexId v : d) on_a += inst.va.contains(v);
      two_two |= on_a == 2;
    }
    EXPECT_TRUE(two_two);
    EXPECT_EQ(r.all(), list_induced_diamonds(inst.graph));
  }
}

TEST(DiamondProtocol, HeavyThreshold) {
  // deg_B > deg_A / sqrt(n), exactly
  EXPECT_TRUE(is_heavy(1, 3, 16));   // 1 > 0.75
  EXPECT_FALSE(is_heavy(1, 4, 16));  // 1 > 1 fails
  EXPECT_TRUE(is_heavy(2, 4, 16));
  EXPECT_FALSE(is_heavy(0, 0, 9));
  EXPECT_FALSE(is_heavy(1, 5, 20));  // 1 > 5/sqrt(20) = 1.118 fails
}

TEST(Bounds, Formulas) {
  EXPECT_EQ(cycle_protocol_bound(16, 3), 4u * 4 * 16 * 3);
  EXPECT_EQ(diamond_protocol_bound(16, 3), 12u * 4 * 4 * 3);
  // floor(12 * 3 * sqrt(10) * 5) = floor(569.21...)
  EXPECT_EQ(diamond_protocol_bound(10, 5), static_cast<std::uint64_t>(std::floor(12 * 4 * std::sqrt(10.0) * 5)));
  EXPECT_EQ(cycle_protocol_bound(16, 0), 0u);
}

bool has_c4(const FamilyInstance& inst) { return !list_induced_cycles(inst.graph, 4).empty(); }

TEST(Reduction, NaiveC4AllPairs) {
  for (std::uint64_t xs = 0; xs < 16; ++xs)
    for (std::uint64_t ys = 0; ys < 16; ++ys) {
      BitString x(4), y(4);
      for (int i = 0; i < 4; ++i) {
        x[i] = xs >> i & 1;
        y[i] = ys >> i & 1;
      }
      FamilyInstance inst = build_c4_family(2, {x, y});
      ReductionResult r = congest_reduction(inst, *naive_c4_program(), {}, has_c4);
      ASSERT_TRUE(r.validated);
      ASSERT_EQ(r.disj_answer, disj(x, y));
      ASSERT_EQ(r.transcript.payload_bits(), r.stats.total_cut_bits);
      ASSERT_EQ(r.answer_bits, 1u);
      ASSERT_TRUE(cut_traffic_bound_check(r.stats, inst.cut_edges.size(), {}).ok);
      expect_counters_consistent(r.transcript);
    }
}

TEST(Reduction, SilentProgramIsFlagged) {
  auto x = testing::bits_at(4, {2});
  FamilyInstance inst = build_c4_family(2, {x, x});
  ReductionResult r = congest_reduction(inst, *silent_program(), {}, has_c4);
  EXPECT_EQ(r.expected_disj, 0);
  EXPECT_EQ(r.disj_answer, 1);
  EXPECT_FALSE(r.validated);
  EXPECT_EQ(r.transcript.payload_bits(), 0u);
}

// Sends one bit more than the bandwidth in round 1.
class Oversized : public NodeProgram {
 public:
  std::string name() const override { return "oversized"; }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const override {
    struct P : NodeProcess {
      NodeInfo info;
      StepResult step(std::size_t, const std::vector<Message>&) override {
        StepResult r;
        Message m;
        m.dst = info.neighbors.front();
        for (unsigned i = 0; i <= info.bandwidth_bits; ++i) m.payload.push_bit(false);
        r.outbox.push_back(std::move(m));
        return r;
      }
    };
    auto p = std::make_unique<P>();
    p->info = info;
    return p;
  }
};

TEST(Reduction, BandwidthViolationPropagates) {
  FamilyInstance inst = build_c4_family(2, InputPair::zeros(4));
  EXPECT_THROW(congest_reduction(inst, Oversized(), {}, has_c4), ProtocolError);
}

TEST(Limitation, Reports) {
  LimitationReport c = limitation_bound_report(1024, 50, "cycles:5");
  EXPECT_EQ(c.growth, "n·polylog(n)");
  EXPECT_EQ(c.protocol_bits, cycle_protocol_bound(1024, 50));
  EXPECT_DOUBLE_EQ(c.ceiling, static_cast<double>(c.protocol_bits) / (50.0 * 10));
  EXPECT_FALSE(c.degenerate);
  LimitationReport d = limitation_bound_report(1024, 50, "diamond");
  EXPECT_EQ(d.growth, "sqrt(n)·polylog(n)");
  EXPECT_LT(d.ceiling, c.ceiling);
  LimitationReport z = limitation_bound_report(1024, 0, "diamond");
  EXPECT_TRUE(z.degenerate);
  EXPECT_EQ(z.ceiling, 0.0);
  EXPECT_THROW(limitation_bound_report(100, 5, "cycles:8"), InputError);
  EXPECT_THROW(limitation_bound_report(100, 5, "triangle"), InputError);
}

}  // namespace
}  // namespace indsub
