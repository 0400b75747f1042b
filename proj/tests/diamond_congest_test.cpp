#include <gtest/gtest.h>

#include <indsub/decomposition.hpp>
#include <indsub/diamond_listing.hpp>
#include <indsub/errors.hpp>
#include <indsub/families.hpp>
#include <indsub/oracles.hpp>

#include <cmath>

#include "support.hpp"

namespace indsub {
namespace {

using testing::clique;
using testing::random_graph;

std::vector<Edge> edges_of(const Graph& g, const VertexSubset& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) out.emplace_back(s[i], s[j]);
  return out;
}

std::vector<VertexSubset> filter(const std::vector<VertexSubset>& all,
                                 const std::function<bool(const VertexSubset&)>& keep) {
  std::vector<VertexSubset> out;
  for (const auto& d : all)
    if (keep(d)) out.push_back(d);
  return out;
}

bool includes(const std::vector<VertexSubset>& big, const std::vector<VertexSubset>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void expect_tags_cover(const DiamondListingResult& r, const std::vector<VertexSubset>& oracle) {
  EXPECT_EQ(r.diamonds, oracle);
  for (const auto& d : oracle) {
    auto it = r.tags.find(d);
    ASSERT_TRUE(it != r.tags.end() && !it->second.empty()) << d.to_string();
  }
  std::size_t tagged = 0;
  for (const auto& [tag, count] : r.stats.tag_counts) tagged += count;
  EXPECT_GE(tagged, oracle.size());
}

void expect_caps(const DiamondListingStats& s) {
  EXPECT_LE(s.max_gathered_edges, s.gathered_cap);
  EXPECT_LE(s.max_query_list, s.query_cap);
}

TEST(Fraction, ParseAndPowers) {
  EXPECT_EQ(Fraction::parse("5/6"), (Fraction{5, 6}));
  EXPECT_EQ(Fraction::parse("1"), (Fraction{1, 1}));
  Fraction half = Fraction::parse("0.5");
  EXPECT_DOUBLE_EQ(half.value(), 0.5);
  EXPECT_THROW(Fraction::parse("abc"), InputError);
  EXPECT_THROW(Fraction::parse("1/0"), InputError);
  EXPECT_THROW(Fraction::parse(""), InputError);
  // 64^{5/6} = 32 exactly
  EXPECT_FALSE(exceeds_power(32, 64, {5, 6}));
  EXPECT_TRUE(exceeds_power(33, 64, {5, 6}));
  EXPECT_EQ(floor_power(64, {5, 6}), 32u);
  EXPECT_EQ(floor_power(10, {1, 2}), 3u);
  EXPECT_EQ(floor_power(100, {3, 2}), 1000u);
  for (std::uint64_t n = 2; n < 300; ++n) {
    std::uint64_t f = floor_power(n, {1, 2});
    ASSERT_LE(f * f, n);
    ASSERT_GT((f + 1) * (f + 1), n);
    ASSERT_FALSE(exceeds_power(f, n, {1, 2}));
  }
}

TEST(Decomposition, EmptyGraph) {
  Decomposition d = expander_decompose(Graph(10, std::vector<Edge>{}));
  EXPECT_TRUE(d.clusters.empty());
  EXPECT_TRUE(d.edges.empty());
  EXPECT_TRUE(validate_decomposition(Graph(10, std::vector<Edge>{}), d).empty());
}

TEST(Decomposition, TwoCliques) {
  GraphBuilder b(64);
  for (VertexId u = 0; u < 64; ++u)
    for (VertexId v = u + 1; v < 64; ++v)
      if ((u < 32) == (v < 32)) b.add_edge(u, v);
  Graph g = b.build();
  EXPECT_EQ(min_cluster_degree(64, {}), 8u);
  Decomposition d = expander_decompose(g);
  ASSERT_EQ(d.clusters.size(), 2u);
  EXPECT_TRUE(d.es_edges().empty());
  EXPECT_EQ(d.clusters[0].members.size(), 32u);
  EXPECT_EQ(d.clusters[0].leader, 0u);
  EXPECT_EQ(d.clusters[1].leader, 32u);
  EXPECT_TRUE(validate_decomposition(g, d).empty());
  EXPECT_EQ(d.cluster_of(Edge(0, 1)), 0);
  EXPECT_EQ(d.cluster_of(Edge(40, 50)), 1);
  EXPECT_THROW(d.cluster_of(Edge(0, 40)), InputError);
}

TEST(Decomposition, RandomGraphsValidate) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = random_graph(128, 0.05, seed);
    Decomposition d = expander_decompose(g);
    auto problems = validate_decomposition(g, d);
    EXPECT_TRUE(problems.empty()) << problems.front();
    EXPECT_EQ(d.em_edges().size() + d.es_edges().size(), g.edge_count());
    EXPECT_LE(static_cast<double>(d.max_es_degree()), d.es_cap);
  }
  for (bool split : {false, true}) {
    Graph g = random_graph(96, 0.2, 3);
    DecompositionParams p;
    p.spectral_split = split;
    Decomposition d = expander_decompose(g, p);
    EXPECT_TRUE(validate_decomposition(g, d).empty());
    EXPECT_FALSE(d.clusters.empty());
    for (const Cluster& c : d.clusters) {
      EXPECT_GE(c.conductance, 0.0);
      EXPECT_LE(c.conductance, 1.0);
    }
  }
}

TEST(Decomposition, BadParameters) {
  DecompositionParams p;
  p.delta = {0, 1};
  EXPECT_THROW(expander_decompose(clique(5), p), InputError);
  p.delta = {7, 6};
  EXPECT_THROW(expander_decompose(clique(5), p), InputError);
  p.delta = {5, 6};
  p.min_degree_divisor = 0;
  EXPECT_THROW(expander_decompose(clique(5), p), InputError);
}

TEST(Decomposition, FromPartsErrors) {
  Graph g = clique(6);
  EXPECT_THROW(decomposition_from_parts(g, {}, {{1, {{0, 1}}}, {2, {{0, 1}}}}), InputError);
  EXPECT_THROW(decomposition_from_parts(g, {}, {{1, {{0, 1}}}, {1, {{1, 2}}}}), InputError);
  EXPECT_NO_THROW(decomposition_from_parts(g, {}, {{1, {{0, 1}}}, {2, {{1, 2}}}}));
  EXPECT_THROW(decomposition_from_parts(Graph(4, {{0, 1}}), {}, {{1, {{2, 3}}}}), InputError);
  Decomposition d = decomposition_from_parts(g, {}, {{1, {{0, 1}}}});
  EXPECT_EQ(d.es_edges().size(), 14u);
  // a one-edge cluster is far below the degree floor
  EXPECT_FALSE(validate_decomposition(random_graph(30, 0.3, 1), [] {
                 Graph h = random_graph(30, 0.3, 1);
                 return decomposition_from_parts(h, {}, {{1, {h.edges()[0]}}});
               }()).empty());
}

TEST(Listing, AllSparseDecomposition) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = random_graph(40, 0.2, seed);
    Decomposition d = decomposition_from_parts(g, {}, {});
    auto oracle = list_induced_diamonds(g);
    DiamondListingResult sparse = sparse_phase(g, d);
    EXPECT_EQ(sparse.diamonds, oracle);
    DiamondListingResult all = list_induced_diamonds_congest(g, d);
    expect_tags_cover(all, oracle);
    for (const auto& [s, tags] : all.tags) EXPECT_EQ(tags, std::vector<std::string>{kTagSparse});
    EXPECT_EQ(all.stats.charged_levels, 0u);
    EXPECT_EQ(all.stats.charged_simulation_rounds, 0.0);
  }
}

TEST(Listing, EmptySparseSet) {
  Graph g = random_graph(30, 0.3, 5);
  Decomposition d = decomposition_from_parts(g, {}, {{1, std::vector<Edge>(g.edges().begin(), g.edges().end())}});
  EXPECT_TRUE(d.es_edges().empty());
  EXPECT_TRUE(sparse_phase(g, d).diamonds.empty());
  expect_tags_cover(list_induced_diamonds_congest(g, d), list_induced_diamonds(g));
}

TEST(Listing, ClusterWithExternalHeavyHub) {
  // vertices 0..38 form one cluster, 39 is outside and touches 20 of them
  Graph base = random_graph(39, 0.5, 17);
  GraphBuilder b(40);
  for (const Edge& e : base.edges()) b.add_edge(e.u, e.v);
  for (VertexId v = 0; v < 39; v += 2) b.add_edge(39, v);
  Graph g = b.build();
  Decomposition d =
      decomposition_from_parts(g, {}, {{1, std::vector<Edge>(base.edges().begin(), base.edges().end())}});
  auto oracle = list_induced_diamonds(g);
  DiamondListingResult heavy = heavy_phase(g, d);
  EXPECT_EQ(heavy.diamonds, oracle);
  EXPECT_EQ(heavy.stats.heavy_pairs, 1u);
  for (const auto& dmd : oracle) {
    const auto& tags = heavy.tags.at(dmd);
    EXPECT_EQ(tags.front(), dmd.contains(39) ? kTagHeavy : kTagCluster) << dmd.to_string();
  }
  // 20 neighbours gathered through 20 C-neighbours, one each
  EXPECT_LE(heavy.stats.max_gathered_edges, heavy.stats.gathered_cap);
  expect_tags_cover(list_induced_diamonds_congest(g, d), oracle);
}

TEST(Listing, NoHeavyNodesMeansNoHeavyTags) {
  Graph g = random_graph(36, 0.25, 2);
  Decomposition d = decomposition_from_parts(g, {}, {});
  DiamondListingResult h = heavy_phase(g, d);
  EXPECT_TRUE(h.diamonds.empty());
  EXPECT_EQ(h.stats.heavy_pairs, 0u);
}

TEST(Listing, SixVertexLightInstance) {
  // cluster triangle 0-1-2; u = 3, v = 4 adjacent and light; 5 hangs off 2 and 4
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 0}, {3, 1}, {4, 0}, {5, 4}, {5, 2}});
  Decomposition d = decomposition_from_parts(g, {}, {{1, {{0, 1}, {1, 2}, {0, 2}}}});
  auto oracle = list_induced_diamonds(g);
  // frozen from the oracle: {0,1,2,3} (missing 2-3) and {0,1,3,4} (missing 1-4)
  ASSERT_EQ(oracle, (std::vector<VertexSubset>{{0, 1, 2, 3}, {0, 1, 3, 4}}));
  DiamondListingResult light = light_phase(g, d);
  EXPECT_EQ(light.diamonds, (std::vector<VertexSubset>{{0, 1, 3, 4}}));
  DiamondListingResult all = list_induced_diamonds_congest(g, d);
  expect_tags_cover(all, oracle);
  EXPECT_EQ(all.tags.at(VertexSubset{0, 1, 3, 4}), std::vector<std::string>{kTagLight});
  EXPECT_EQ(all.tags.at(VertexSubset{0, 1, 2, 3}), std::vector<std::string>{kTagCluster});
  expect_caps(all.stats);
}

TEST(Listing, MixedRandomPhasesMatchFilters) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = random_graph(96, 0.2, 100 + seed);
    Decomposition d = expander_decompose(g);
    auto oracle = list_induced_diamonds(g);
    auto all_sparse = filter(oracle, [&](const VertexSubset& s) {
      for (const Edge& e : edges_of(g, s))
        if (!d.is_sparse(e)) return false;
      return true;
    });
    EXPECT_EQ(sparse_phase(g, d).diamonds, all_sparse);
    DiamondListingResult full = list_induced_diamonds_congest(g, d);
    expect_tags_cover(full, oracle);
    expect_caps(full.stats);
    EXPECT_TRUE(includes(oracle, heavy_phase(g, d).diamonds));
    EXPECT_TRUE(includes(oracle, light_phase(g, d).diamonds));
  }
}

TEST(Listing, MultiLevelHandBuilt) {
  // two overlapping dense blocks placed on different levels
  Graph g = random_graph(40, 0.35, 8);
  std::vector<ClusterPart> parts(2);
  parts[0].level = 1;
  parts[1].level = 2;
  for (const Edge& e : g.edges()) {
    if (e.v < 20) parts[0].edges.push_back(e);
    else if (e.u >= 15 && e.v < 35) parts[1].edges.push_back(e);
  }
  for (const char* eps : {"1/4", "1/2", "3/4"}) {
    ListingParams p;
    p.epsilon = Fraction::parse(eps);
    Decomposition d = decomposition_from_parts(g, p.decomposition, parts);
    DiamondListingResult r = list_induced_diamonds_congest(g, d, p);
    expect_tags_cover(r, list_induced_diamonds(g));
    expect_caps(r.stats);
    EXPECT_EQ(r.stats.charged_levels, 2u);
  }
}

TEST(Listing, TriangleFreeIsEmpty) {
  Rng rng(3);
  GraphBuilder b(60);
  for (VertexId u = 0; u < 30; ++u)
    for (VertexId v = 30; v < 60; ++v)
      if (rng.coin(0.3)) b.add_edge(u, v);
  Graph g = b.build();
  DiamondListingResult r = list_induced_diamonds_congest(g);
  EXPECT_TRUE(r.diamonds.empty());
  EXPECT_TRUE(r.tags.empty());
}

TEST(Listing, PlantedFamilyDiamond) {
  DiamondFixture fix = build_diamond_fixture(16, 21);
  const std::size_t K = fix.quadruples.size();
  ASSERT_GT(K, 2u);
  auto x = testing::bits_at(K, {2});
  FamilyInstance inst = build_diamond_family(fix, {x, x});
  DiamondListingResult r = list_induced_diamonds_congest(inst.graph);
  const Quadruple& q = fix.quadruples[2];
  VertexSubset planted{q.a1, q.a2, q.b1, q.b2};
  EXPECT_TRUE(std::binary_search(r.diamonds.begin(), r.diamonds.end(), planted));
  EXPECT_EQ(r.diamonds, list_induced_diamonds(inst.graph));
}

TEST(Listing, ChargeIdentity) {
  Graph g = random_graph(128, 0.1, 4);
  ListingParams p;
  p.charge_constant = 2.0;
  DiamondListingResult r = list_induced_diamonds_congest(g, p);
  const double n = 128;
  const std::size_t t = static_cast<std::size_t>(std::ceil(std::sqrt(n)));
  EXPECT_EQ(r.stats.t_rounds, t);
  double expect = 2.0 * (std::pow(n, 2 - 5.0 / 6 - 0.5) + t * std::pow(n, 2 - 2 * 5.0 / 6));
  EXPECT_NEAR(r.stats.charge_per_cluster, expect, 1e-9 * expect);
  EXPECT_DOUBLE_EQ(r.stats.charged_simulation_rounds, r.stats.charged_levels * r.stats.charge_per_cluster);
  EXPECT_EQ(r.stats.gathered_cap, floor_power(128, {3, 2}));
  EXPECT_EQ(r.stats.query_cap, floor_power(128, {1, 2}));
  std::size_t measured = 0;
  for (const auto& ph : r.stats.phases) measured += ph.run.rounds_used;
  EXPECT_EQ(r.stats.measured_rounds, measured);
}

TEST(Listing, EpsilonRange) {
  ListingParams p;
  p.epsilon = {1, 1};
  EXPECT_THROW(list_induced_diamonds_congest(clique(5), p), InputError);
  p.epsilon = {0, 1};
  EXPECT_THROW(list_induced_diamonds_congest(clique(5), p), InputError);
}

TEST(Listing, Deterministic) {
  Graph g = random_graph(64, 0.2, 6);
  DiamondListingResult a = list_induced_diamonds_congest(g);
  DiamondListingResult b = list_induced_diamonds_congest(g);
  EXPECT_EQ(a.diamonds, b.diamonds);
  EXPECT_EQ(a.tags, b.tags);
  EXPECT_EQ(a.stats.measured_rounds, b.stats.measured_rounds);
}

}  // namespace
}  // namespace indsub
