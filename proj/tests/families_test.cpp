#include <gtest/gtest.h>

#include <indsub/bundle.hpp>
#include <indsub/errors.hpp>
#include <indsub/families.hpp>
#include <indsub/oracles.hpp>

#include <filesystem>

#include "support.hpp"

namespace indsub {
namespace {

using testing::bits_at;

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

TEST(C4Family, Shape) {
  FamilyInstance inst = build_c4_family(3, InputPair::zeros(9));
  EXPECT_EQ(inst.graph.vertex_count(), 12u);
  EXPECT_EQ(inst.cut_edges.size(), 6u);
  EXPECT_TRUE(list_induced_cycles(inst.graph, 4).empty());
  EXPECT_EQ(inst.va.size() + inst.vb.size(), 12u);
  EXPECT_THROW(build_c4_family(3, InputPair::zeros(4)), InputError);
}

TEST(C4Family, SharedAndDisjoint) {
  auto x = bits_at(9, {pair_index(3, 2, 0)});
  EXPECT_FALSE(list_induced_cycles(build_c4_family(3, {x, x}).graph, 4).empty());
  FamilyInstance d = build_c4_family(2, {from_binary("1000"), from_binary("0001")});
  EXPECT_TRUE(list_induced_cycles(d.graph, 4).empty());
}

TEST(C4Family, PairIndexLayout) {
  EXPECT_EQ(pair_index(3, 0, 0), 0u);
  EXPECT_EQ(pair_index(3, 2, 0), 2u);
  EXPECT_EQ(pair_index(3, 0, 1), 3u);
  EXPECT_THROW(pair_index(3, 3, 0), InputError);
}

TEST(CkFamily, ShapeAndExamples) {
  FamilyInstance five = build_ck_subdivided_family(2, 5, {from_binary("0001"), from_binary("0001")});
  EXPECT_EQ(five.graph.vertex_count(), 10u);
  EXPECT_FALSE(list_induced_cycles(five.graph, 5).empty());
  FamilyInstance seven = build_ck_subdivided_family(2, 7, {from_binary("1000"), from_binary("0100")});
  EXPECT_TRUE(list_induced_cycles(seven.graph, 7).empty());
  // top paths get ceil((k-4)/2) internal vertices, bottom floor((k-4)/2)
  for (std::size_t k = 5; k <= 9; ++k) {
    FamilyInstance inst = build_ck_subdivided_family(3, k, InputPair::zeros(9));
    EXPECT_EQ(inst.graph.vertex_count(), 12 + 3 * (k - 4));
    EXPECT_EQ(inst.cut_edges.size(), 6u);
  }
  EXPECT_THROW(build_ck_subdivided_family(2, 4, InputPair::zeros(4)), InputError);
}

TEST(CkFamily, CliquesBreakOddK) {
  // x_{1,1} = x_{1,2} = 1 and y = 0: with B2 a clique, odd k closes a cycle
  // through b2^1 b2^2 although the inputs are disjoint.
  InputPair in{bits_at(4, {pair_index(2, 0, 0), pair_index(2, 0, 1)}), zero_bits(4)};
  EXPECT_TRUE(list_induced_cycles(build_ck_subdivided_family(2, 5, in).graph, 5).empty());
  auto bad = build_ck_subdivided_family(2, 5, in, CkWiring::kCliques);
  EXPECT_FALSE(list_induced_cycles(bad.graph, 5).empty());
}

// Smallest a with a^ell >= n * ell^ell, by counting up.
std::size_t alphabet_by_search(std::size_t n, std::size_t ell) {
  for (std::size_t a = 1;; ++a) {
    long double lhs = 1, rhs = static_cast<long double>(n);
    for (std::size_t i = 0; i < ell; ++i) {
      lhs *= static_cast<long double>(a);
      rhs *= static_cast<long double>(ell);
    }
    if (lhs >= rhs) return a;
  }
}

TEST(CodeAssignment, Examples) {
  CodeAssignment one = make_code_assignment(4, 1);
  EXPECT_EQ(one.alphabet, 4u);
  EXPECT_EQ(one.codes, (std::vector<std::vector<std::size_t>>{{1}, {2}, {3}, {4}}));
  CodeAssignment two = make_code_assignment(4, 2);
  EXPECT_EQ(two.alphabet, 4u);
  EXPECT_EQ(two.codes, (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
  CodeAssignment three = make_code_assignment(8, 3);
  EXPECT_EQ(three.alphabet, 6u);
  EXPECT_GE(binomial(6, 3), 8u);
  EXPECT_EQ(colex_unrank(0, 3), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(colex_unrank(3, 3), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(colex_unrank(4, 3), (std::vector<std::size_t>{1, 2, 5}));
}

TEST(CodeAssignment, AlphabetMatchesSearch) {
  for (std::size_t n = 1; n <= 300; ++n) {
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      ASSERT_EQ(code_alphabet_size(n, ell), alphabet_by_search(n, ell)) << n << " " << ell;
      CodeAssignment c = make_code_assignment(n, ell);
      std::set<std::vector<std::size_t>> distinct(c.codes.begin(), c.codes.end());
      ASSERT_EQ(distinct.size(), n);
      for (const auto& code : c.codes) {
        ASSERT_EQ(code.size(), ell);
        ASSERT_TRUE(std::is_sorted(code.begin(), code.end()));
        ASSERT_LE(code.back(), c.alphabet);
      }
    }
  }
}

TEST(C8lFamily, Examples) {
  auto shared = bits_at(4, {0});
  EXPECT_FALSE(list_induced_cycles(build_c8l_family(2, 1, 0, {shared, shared}).graph, 8).empty());
  FamilyInstance disjoint = build_c8l_family(2, 1, 0, {from_binary("1000"), from_binary("0100")}, false);
  EXPECT_TRUE(list_induced_cycles(disjoint.graph, 8).empty());
  EXPECT_THROW(build_c8l_family(2, 1, 8, InputPair::zeros(4)), InputError);
  EXPECT_THROW(build_c8l_family(2, 0, 0, InputPair::zeros(4)), InputError);
}

TEST(C8lFamily, CutSizeMatchesMeasured) {
  EXPECT_EQ(cut_size_c8l(2, 1, 0), 5u);
  EXPECT_EQ(cut_size_c8l(16, 2, 0), 17u);
  for (std::size_t n : {2, 3, 4, 8, 16})
    for (std::size_t ell : {1, 2, 3})
      for (std::size_t m : {0, 1, 2, 5}) {
        FamilyInstance inst = build_c8l_family(n, ell, m, InputPair::zeros(n * n));
        ASSERT_EQ(inst.cut_edges.size(), cut_size_c8l(n, ell, m)) << n << " " << ell << " " << m;
        ASSERT_EQ(inst.cut_edges.size(), 2 * code_alphabet_size(n, ell) + 1);
      }
}

TEST(C8lFamily, HublessEllOneLooksLikeCk8) {
  for (std::uint64_t s = 0; s < 16; ++s) {
    InputPair in{bits_at(4, {s & 3}), bits_at(4, {(s >> 2) & 3})};
    Graph a = build_c8l_family(2, 1, 0, in, false).graph;
    Graph b = build_ck_subdivided_family(2, 8, in).graph;
    EXPECT_EQ(a.edge_count(), b.edge_count());
    EXPECT_EQ(degree_sequence(a), degree_sequence(b));
  }
}

// c_A joins two Alice cut vertices, so Bob alone can close an induced C8.
TEST(C8lFamily, HubsAdmitOneSidedCycle) {
  const std::size_t n = 2;
  InputPair in{zero_bits(4), bits_at(4, {pair_index(n, 0, 0)})};
  FamilyInstance inst = build_c8l_family(n, 1, 0, in);
  VertexSubset witness{testing::vertex_by_label(inst, "c_A"),   testing::vertex_by_label(inst, "u_A^{1}"),
                       testing::vertex_by_label(inst, "u_B^{1}"), testing::vertex_by_label(inst, "b1^{1,1}"),
                       testing::vertex_by_label(inst, "b2^{1,1}"), testing::vertex_by_label(inst, "b2^{2,1}"),
                       testing::vertex_by_label(inst, "l_B^{2}"), testing::vertex_by_label(inst, "l_A^{2}")};
  EXPECT_TRUE(is_induced_cycle(inst.graph, witness, 8));
  EXPECT_EQ(disj(in.x, in.y), 1);
  EXPECT_FALSE(check_block_counts(inst, witness).ok());
  FamilyInstance bare = build_c8l_family(n, 1, 0, in, false);
  EXPECT_TRUE(list_induced_cycles(bare.graph, 8).empty());
}

TEST(C8lFamily, HublessCyclesBalanced) {
  for (std::uint64_t xs = 0; xs < 16; ++xs) {
    for (std::uint64_t ys = 0; ys < 16; ++ys) {
      BitString x(4), y(4);
      for (int i = 0; i < 4; ++i) {
        x[i] = xs >> i & 1;
        y[i] = ys >> i & 1;
      }
      FamilyInstance inst = build_c8l_family(2, 1, 0, {x, y}, false);
      auto cycles = list_induced_cycles(inst.graph, 8);
      ASSERT_EQ(cycles.empty(), disj(x, y) == 1);
      for (const auto& cycle : cycles) {
        BlockCountReport r = check_block_counts(inst, cycle);
        ASSERT_TRUE(r.ok()) << r.violations.front();
      }
    }
  }
}

TEST(C8lFamily, HublessPaddedIff) {
  for (std::size_t m = 1; m <= 7; ++m) {
    FamilyReport r = verify_family_conditions(c8l_family_spec(2, 1, m, false), {});
    EXPECT_EQ(r.pairs_checked, 256u) << "m=" << m;
    EXPECT_TRUE(r.ok()) << "m=" << m;
  }
}

TEST(C8lFamily, BlockCountsRejectForeignSets) {
  FamilyInstance inst = build_c8l_family(2, 1, 0, InputPair::zeros(4));
  BlockCountReport r = check_block_counts(inst, VertexSubset{0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_FALSE(r.ok());
  FamilyInstance c4 = build_c4_family(2, InputPair::zeros(4));
  EXPECT_FALSE(check_block_counts(c4, VertexSubset{0, 1, 2, 3}).ok());
}

TEST(C8lFamily, DiameterThreeWithHubs) {
  for (std::size_t n : {2, 4})
    for (std::size_t ell : {1, 2}) {
      FamilyInstance inst = build_c8l_family(n, ell, 0, InputPair::zeros(n * n));
      EXPECT_EQ(diameter(inst.graph), 3u) << n << " " << ell;
    }
}

TEST(DiamondFixture, GoodPairsHaveOneCommonNeighbour) {
  for (std::uint64_t seed : {1, 2, 3}) {
    DiamondFixture fix = build_diamond_fixture(16, seed);
    EXPECT_EQ(fix.graph.vertex_count(), 48u);
    // own count over B, not the library helper
    std::set<Edge> expect;
    for (VertexId a = 0; a < 16; ++a)
      for (VertexId b = a + 1; b < 16; ++b) {
        int common = 0;
        for (VertexId w = 16; w < 32; ++w) common += fix.graph.has_edge(a, w) && fix.graph.has_edge(b, w);
        if (common == 1) expect.insert(Edge(a, b));
      }
    EXPECT_EQ(std::set<Edge>(fix.good_pairs.begin(), fix.good_pairs.end()), expect);
    auto counts = common_neighbour_counts(fix);
    for (const Edge& e : fix.good_pairs) EXPECT_EQ(counts.at(e), 1u);
    EXPECT_EQ(fix.astar.size(), 8u);
    for (const Quadruple& q : fix.quadruples) {
      EXPECT_TRUE(fix.astar.contains(q.a1));
      EXPECT_FALSE(fix.astar.contains(q.a2));
      EXPECT_EQ(q.b2, fix.b_prime(q.a1));
    }
  }
}

TEST(DiamondFixture, EdgeCounts) {
  DiamondFixture fix = build_diamond_fixture(4, 7);
  EXPECT_EQ(fix.graph.vertex_count(), 12u);
  std::size_t ab = 0, abp = 0;
  for (const Edge& e : fix.graph.edges()) {
    if (e.u < 4 && e.v >= 4 && e.v < 8) ++ab;
    if (e.u < 4 && e.v >= 8) ++abp;
  }
  EXPECT_EQ(ab, 8u);
  EXPECT_EQ(abp, 4u);
  EXPECT_THROW(build_diamond_fixture(5, 1), InputError);
  EXPECT_THROW(build_diamond_fixture(1, 1), InputError);
}

TEST(DiamondFamily, SharedIndexInducesItsQuadruple) {
  DiamondFixture fix = build_diamond_fixture(16, 11);
  const std::size_t K = fix.quadruples.size();
  ASSERT_GT(K, 0u);
  FamilyInstance zero = build_diamond_family(fix, InputPair::zeros(K));
  EXPECT_EQ(zero.graph, fix.graph);
  EXPECT_FALSE(has_22_diamond(zero));
  for (std::size_t k = 0; k < K; ++k) {
    auto x = bits_at(K, {k});
    FamilyInstance inst = build_diamond_family(fix, {x, x});
    const Quadruple& q = fix.quadruples[k];
    EXPECT_TRUE(is_induced_diamond(inst.graph, VertexSubset{q.a1, q.a2, q.b1, q.b2}));
    EXPECT_TRUE(has_22_diamond(inst));
    EXPECT_EQ(inst.cut_edges.size(), 16u * 4 + 16);
  }
  EXPECT_THROW(build_diamond_family(fix, InputPair::zeros(K + 1)), InputError);
}

TEST(DiamondFamily, DisjointSupportsHaveNo22Diamond) {
  DiamondFixture fix = build_diamond_fixture(16, 5);
  const std::size_t K = fix.quadruples.size();
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    BitString x(K), y(K);
    for (std::size_t i = 0; i < K; ++i) {
      bool on = rng.coin(0.5);
      (rng.coin(0.5) ? x : y)[i] = on;
    }
    EXPECT_FALSE(has_22_diamond(build_diamond_family(fix, {x, y})));
  }
}

TEST(DiamondFamily, Deterministic) {
  DiamondFixture a = build_diamond_fixture(16, 42);
  DiamondFixture b = build_diamond_fixture(16, 42);
  EXPECT_EQ(to_canonical_text(a.graph), to_canonical_text(b.graph));
  EXPECT_EQ(a.quadruples, b.quadruples);
  auto in = InputPair::zeros(a.quadruples.size());
  EXPECT_EQ(meta_json_text(build_diamond_family(a, in)), meta_json_text(build_diamond_family(b, in)));
}

TEST(Bundle, RoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "indsub_bundle_test";
  std::filesystem::remove_all(dir);
  auto x = bits_at(9, {1, 4}), y = bits_at(9, {4});
  FamilyInstance inst = build_c4_family(3, {x, y});
  write_bundle(dir.string(), inst, {x, y});
  Bundle back = read_bundle(dir.string());
  EXPECT_EQ(back.instance.graph, inst.graph);
  EXPECT_EQ(back.instance.va, inst.va);
  EXPECT_EQ(back.instance.cut_edges, inst.cut_edges);
  EXPECT_EQ(back.instance.labels, inst.labels);
  EXPECT_EQ(back.instance.tag, inst.tag);
  EXPECT_EQ(back.inputs.x, x);
  EXPECT_EQ(back.inputs.y, y);
  EXPECT_EQ(read_alice_side((dir / "meta.json").string()), inst.va);

  // tamper with the graph: the stored cut no longer matches
  write_graph_file((dir / "graph.txt").string(), build_c4_family(3, InputPair::zeros(9)).graph);
  EXPECT_NO_THROW(read_bundle(dir.string()));
  Graph extra = [&] {
    GraphBuilder b(12);
    for (const Edge& e : inst.graph.edges()) b.add_edge(e.u, e.v);
    b.add_edge(inst.va[0], inst.vb[inst.vb.size() - 1]);
    return b.build();
  }();
  write_graph_file((dir / "graph.txt").string(), extra);
  EXPECT_THROW(read_bundle(dir.string()), InputError);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_bundle(dir.string()), InputError);
}

TEST(FamilyConditions, C4PassesExhaustively) {
  FamilyReport r = verify_family_conditions(c4_family_spec(2), {});
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.pairs_checked, 256u);
  EXPECT_EQ(r.disj_zero, 256u - 81u);
  EXPECT_EQ(r.predicate_true, r.disj_zero);
  EXPECT_TRUE(r.ok());
}

TEST(FamilyConditions, HublessC8lEllOnePasses) {
  FamilyReport r = verify_family_conditions(c8l_family_spec(2, 1, 0, false), {});
  EXPECT_TRUE(r.ok()) << r.violations.front().detail;
}

TEST(FamilyConditions, DroppedMatchingEdgeIsCaught) {
  FamilySpec spec = c4_family_spec(2);
  auto build = spec.build;
  spec.build = [build](const InputPair& in) {
    FamilyInstance inst = build(in);
    remove_edge(inst, inst.cut_edges.front());
    return inst;
  };
  FamilyReport r = verify_family_conditions(spec, {});
  ASSERT_FALSE(r.ok());
  for (const auto& v : r.violations) EXPECT_EQ(v.condition, 4);
}

TEST(FamilyConditions, InputDependentCutIsCaught) {
  FamilySpec spec = c4_family_spec(2);
  auto build = spec.build;
  spec.build = [build](const InputPair& in) {
    FamilyInstance inst = build(in);
    if (in.x[0]) remove_edge(inst, inst.cut_edges.front());
    return inst;
  };
  SweepOptions o;
  o.exhaustive_limit = 0;
  o.samples = 40;
  FamilyReport r = verify_family_conditions(spec, o);
  EXPECT_FALSE(r.exhaustive);
  bool saw_cut = false;
  for (const auto& v : r.violations) saw_cut |= v.condition == 1;
  EXPECT_TRUE(saw_cut);
}

TEST(FamilyConditions, SweepIsDeterministic) {
  SweepOptions o;
  o.exhaustive_limit = 0;
  o.samples = 30;
  o.seed = 5;
  auto a = sweep_pairs(9, o), b = sweep_pairs(9, o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].y, b[i].y);
  }
  // designed pairs include every singleton intersection
  std::size_t singles = 0;
  for (const auto& p : a) {
    std::size_t both = 0;
    for (std::size_t i = 0; i < 9; ++i) both += p.x[i] && p.y[i];
    singles += both == 1 && std::count(p.x.begin(), p.x.end(), true) == 1;
  }
  EXPECT_GE(singles, 9u);
}

}  // namespace
}  // namespace indsub
