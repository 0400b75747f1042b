#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/oracles.hpp"
#include "indsub/random.hpp"
#include "instance_assembler.hpp"

namespace indsub {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct FixtureGraph {
  Graph graph;
  std::vector<Edge> good_pairs;
};

// A–B' matching plus one uniformly random bijection A_i -> B_j per block pair.
FixtureGraph random_fixture_graph(std::size_t n, std::size_t s, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder builder(3 * n);
  for (std::size_t v = 0; v < n; ++v) {
    builder.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(2 * n + v));
  }
  std::vector<std::size_t> perm(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      rng.shuffle(perm);
      for (std::size_t k = 0; k < s; ++k) {
        builder.add_edge(static_cast<VertexId>(i * s + k),
                         static_cast<VertexId>(n + j * s + perm[k]));
      }
    }
  }
  FixtureGraph out{builder.build(), {}};
  std::vector<VertexId> common;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId a2 = a + 1; a2 < n; ++a2) {
      auto na = out.graph.neighbors(a);
      auto nb = out.graph.neighbors(a2);
      common.clear();
      std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
      if (common.size() == 1) out.good_pairs.emplace_back(a, a2);
    }
  }
  return out;
}

}  // namespace

std::size_t DiamondFixture::side() const { return exact_sqrt(n); }

DiamondFixture build_diamond_fixture(std::size_t n, std::uint64_t seed,
                                     DiamondFixtureOptions options) {
  const std::size_t s = exact_sqrt(n);
  if (n < 4 || s * s != n) {
    throw InputError("diamond fixture needs a perfect square n >= 4, got " + std::to_string(n));
  }
  DiamondFixture fix;
  fix.n = n;
  fix.requested_seed = seed;

  const double min_good = options.min_good_pair_fraction * static_cast<double>(n) * static_cast<double>(n);
  FixtureGraph base;
  std::uint64_t used = seed;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt >= options.max_seed_attempts) {
      throw ResourceError("diamond fixture: no seed in [" + std::to_string(seed) + ", " +
                              std::to_string(seed + attempt) + ") reached the good-pair threshold",
                          attempt);
    }
    used = seed + attempt;
    base = random_fixture_graph(n, s, used);
    if (static_cast<double>(base.good_pairs.size()) >= min_good) break;
    ++fix.seeds_rejected;
  }
  fix.seed = used;
  fix.graph = std::move(base.graph);
  fix.good_pairs = std::move(base.good_pairs);

  // Random half A*, drawn from a stream separate from the bijections.
  Rng rng(mix_seed(used, 0xA57A5));
  std::vector<VertexId> a_ids(n);
  std::iota(a_ids.begin(), a_ids.end(), VertexId{0});
  rng.shuffle(a_ids);
  a_ids.resize(n / 2);
  fix.astar = VertexSubset(a_ids);

  // A pair enters H iff exactly one endpoint is in A*; that endpoint is a_{k,1}.
  // A pair whose B-side edge (b1, b2) was already claimed is skipped: two
  // quadruples sharing it would let y_k' = 1 complete h_k without y_k.
  std::set<Edge> claimed_b_edges;
  std::vector<Quadruple> quads;
  for (const Edge& pair : fix.good_pairs) {
    bool u_in = fix.astar.contains(pair.u);
    bool v_in = fix.astar.contains(pair.v);
    if (u_in == v_in) continue;
    Quadruple q;
    q.a1 = u_in ? pair.u : pair.v;
    q.a2 = u_in ? pair.v : pair.u;
    auto n1 = fix.graph.neighbors(q.a1);
    auto n2 = fix.graph.neighbors(q.a2);
    std::vector<VertexId> common;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(common));
    if (common.size() != 1) throw InternalError("good pair without a unique common neighbour");
    q.b1 = common.front();
    q.b2 = fix.b_prime(q.a1);
    if (!claimed_b_edges.insert(Edge(q.b1, q.b2)).second) continue;
    quads.push_back(q);
  }
  std::sort(quads.begin(), quads.end(), [](const Quadruple& l, const Quadruple& r) {
    return std::pair(l.a1, l.a2) < std::pair(r.a1, r.a2);
  });
  fix.quadruples = std::move(quads);
  return fix;
}

std::map<Edge, std::size_t> common_neighbour_counts(const DiamondFixture& fix) {
  std::map<Edge, std::size_t> counts;
  for (VertexId a = 0; a < fix.n; ++a) {
    for (VertexId a2 = a + 1; a2 < fix.n; ++a2) {
      std::size_t c = 0;
      for (VertexId w : fix.graph.neighbors(a)) {
        if (fix.graph.has_edge(a2, w)) ++c;
      }
      counts[Edge(a, a2)] = c;
    }
  }
  return counts;
}

FamilyInstance build_diamond_family(const DiamondFixture& fix, const InputPair& in) {
  const std::size_t k_bits = fix.quadruples.size();
  if (in.x.size() != k_bits || in.y.size() != k_bits) {
    throw InputError("diamond family: inputs must have K = |H| = " + std::to_string(k_bits) +
                     " bits, got |x| = " + std::to_string(in.x.size()) +
                     ", |y| = " + std::to_string(in.y.size()));
  }
  const std::size_t n = fix.n;
  const std::size_t s = fix.side();
  detail::InstanceAssembler a;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      a.add("A", "a_" + std::to_string(i + 1) + "^" + std::to_string(j + 1), static_cast<int>(i), true);
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      a.add("B", "b_" + std::to_string(i + 1) + "^" + std::to_string(j + 1), static_cast<int>(i), false);
    }
  }
  for (std::size_t t = 0; t < n; ++t) a.add("B'", "b'_" + std::to_string(t + 1), -1, false);
  for (const Edge& e : fix.graph.edges()) a.edge(e.u, e.v);
  for (std::size_t k = 0; k < k_bits; ++k) {
    const Quadruple& q = fix.quadruples[k];
    if (in.x[k]) a.edge(q.a1, q.a2);
    if (in.y[k]) a.edge(q.b1, q.b2);
  }
  return a.finish(FamilyTag{FamilyKind::kDiamond, n, 4, 0, 0, fix.seed, {}}, k_bits);
}

std::optional<VertexSubset> find_22_diamond(const FamilyInstance& inst) {
  for (const VertexSubset& d : list_induced_diamonds(inst.graph)) {
    std::size_t on_a = 0;
    for (VertexId v : d) on_a += inst.va.contains(v) ? 1 : 0;
    if (on_a == 2) return d;
  }
  return std::nullopt;
}

bool has_22_diamond(const FamilyInstance& inst) { return find_22_diamond(inst).has_value(); }

}  // namespace indsub
