#include "indsub/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numeric>

#include "indsub/errors.hpp"
#include "indsub/random.hpp"

namespace indsub {

namespace {

using Wide = unsigned __int128;
constexpr Wide kSaturated = ~Wide{0} >> 1;

Wide power_saturating(std::uint64_t base, std::uint64_t exp) {
  Wide result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

struct Adjacency {
  // (neighbour, edge position) per vertex
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> out;

  Adjacency(std::size_t n, const std::vector<Edge>& edges) : out(n) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out[edges[i].u].emplace_back(edges[i].v, i);
      out[edges[i].v].emplace_back(edges[i].u, i);
    }
  }
};

// Repeatedly strips vertices of active degree in (0, d_min). Returns the
// stripped edges.
std::vector<std::size_t> peel(const Adjacency& adj, std::vector<char>& active, std::size_t d_min) {
  const std::size_t n = adj.out.size();
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto [w, e] : adj.out[v]) deg[v] += active[e] ? 1 : 0;
  }
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] > 0 && deg[v] < d_min) queue.push_back(v);
  }
  std::vector<std::size_t> removed;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (deg[v] == 0 || deg[v] >= d_min) continue;
    for (auto [w, e] : adj.out[v]) {
      if (!active[e]) continue;
      active[e] = 0;
      removed.push_back(e);
      --deg[v];
      --deg[w];
      if (deg[w] > 0 && deg[w] < d_min) queue.push_back(w);
    }
  }
  return removed;
}

std::vector<std::vector<VertexId>> components(const Adjacency& adj, const std::vector<char>& active) {
  const std::size_t n = adj.out.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    bool has_edge = std::any_of(adj.out[s].begin(), adj.out[s].end(),
                                [&](const auto& p) { return active[p.second] != 0; });
    if (!has_edge) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [w, e] : adj.out[comp[i]]) {
        if (active[e] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

struct Sweep {
  double conductance = 1.0;
  std::vector<VertexId> side;  // best prefix
};

// Power iteration for the second eigenvector of the normalised adjacency,
// then the best prefix of the induced vertex order.
Sweep sweep_cut(const Adjacency& adj, const std::vector<char>& active,
                const std::vector<VertexId>& comp, std::uint64_t seed) {
  Sweep best;
  const std::size_t m = comp.size();
  if (m < 3) return best;
  std::vector<std::size_t> local(adj.out.size(), SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) local[comp[i]] = i;
  std::vector<std::vector<std::size_t>> nb(m);
  std::vector<double> d(m, 0.0);
  double vol = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto [w, e] : adj.out[comp[i]]) {
      if (active[e] && local[w] != SIZE_MAX) nb[i].push_back(local[w]);
    }
    d[i] = static_cast<double>(nb[i].size());
    vol += d[i];
  }
  std::vector<double> top(m);
  double top_norm = 0;
  for (std::size_t i = 0; i < m; ++i) {
    top[i] = std::sqrt(d[i]);
    top_norm += d[i];
  }
  top_norm = std::sqrt(top_norm);
  for (double& t : top) t /= top_norm;

  Rng rng(seed);
  std::vector<double> x(m), y(m);
  for (double& xi : x) xi = static_cast<double>(rng.below(1u << 20)) / (1u << 20) - 0.5;
  auto deflate_normalise = [&](std::vector<double>& v) {
    double dot = 0;
    for (std::size_t i = 0; i < m; ++i) dot += v[i] * top[i];
    double norm = 0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] -= dot * top[i];
      norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (double& vi : v) vi /= norm;
    }
  };
  deflate_normalise(x);
  for (int it = 0; it < 200; ++it) {
    // y = (I + D^-1/2 A D^-1/2) x / 2
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0;
      for (std::size_t j : nb[i]) s += x[j] / std::sqrt(d[j]);
      y[i] = 0.5 * (x[i] + s / std::sqrt(d[i]));
    }
    x.swap(y);
    deflate_normalise(x);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] / std::sqrt(d[a]) < x[b] / std::sqrt(d[b]);
  });
  std::vector<char> in(m, 0);
  double cut = 0, vol_s = 0;
  std::size_t best_k = 0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    std::size_t i = order[k];
    double inside = 0;
    for (std::size_t j : nb[i]) inside += in[j] ? 1 : 0;
    in[i] = 1;
    cut += d[i] - 2 * inside;
    vol_s += d[i];
    double phi = cut / std::min(vol_s, vol - vol_s);
    if (phi < best.conductance) {
      best.conductance = phi;
      best_k = k + 1;
    }
  }
  for (std::size_t k = 0; k < best_k; ++k) best.side.push_back(comp[order[k]]);
  std::sort(best.side.begin(), best.side.end());
  return best;
}

std::size_t max_levels_for(std::size_t n) {
  std::size_t levels = 1;
  while ((std::size_t{1} << levels) < n) ++levels;
  return levels;
}

void finish(Decomposition& dec) {
  dec.es_degree.assign(dec.n, 0);
  for (std::size_t i = 0; i < dec.edges.size(); ++i) {
    if (dec.edge_cluster[i] >= 0) continue;
    ++dec.es_degree[dec.edges[i].u];
    ++dec.es_degree[dec.edges[i].v];
  }
  dec.level_count = 0;
  for (const Cluster& c : dec.clusters) dec.level_count = std::max(dec.level_count, c.level);
  // Advisory conductance on each cluster's own edges.
  Adjacency adj(dec.n, dec.edges);
  for (std::size_t ci = 0; ci < dec.clusters.size(); ++ci) {
    std::vector<char> mask(dec.edges.size(), 0);
    for (std::size_t i = 0; i < dec.edges.size(); ++i) mask[i] = dec.edge_cluster[i] == static_cast<int>(ci);
    std::vector<VertexId> members(dec.clusters[ci].members.begin(), dec.clusters[ci].members.end());
    dec.clusters[ci].conductance = sweep_cut(adj, mask, members, mix_seed(0xC1u, ci)).conductance;
  }
}

Decomposition empty_decomposition(const Graph& g, const DecompositionParams& params) {
  if (params.delta.num == 0 || params.delta.num > params.delta.den) {
    throw InputError("delta must satisfy 0 < delta <= 1, got " + params.delta.to_string());
  }
  if (params.min_degree_divisor == 0) throw InputError("min_degree_divisor must be positive");
  Decomposition dec;
  dec.n = g.vertex_count();
  dec.delta = params.delta;
  dec.min_degree = min_cluster_degree(dec.n, params);
  dec.es_cap = dec.n < 2 ? 0.0 : std::pow(static_cast<double>(dec.n), params.delta.value()) *
                                     std::log2(static_cast<double>(dec.n));
  dec.max_levels = max_levels_for(dec.n);
  dec.edges.assign(g.edges().begin(), g.edges().end());
  dec.edge_cluster.assign(dec.edges.size(), -1);
  return dec;
}

}  // namespace

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_u = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw InputError("cannot parse fraction '" + std::string(text) + "'");
    }
    return v;
  };
  Fraction f;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = parse_u(text.substr(0, slash));
    f.den = parse_u(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 6) throw InputError("at most 6 decimals in '" + std::string(text) + "'");
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    f.num = (dot == 0 ? 0 : parse_u(text.substr(0, dot))) * f.den + (frac.empty() ? 0 : parse_u(frac));
  } else {
    f.num = parse_u(text);
  }
  if (f.den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  std::uint64_t g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

bool exceeds_power(std::uint64_t count, std::uint64_t n, Fraction f) {
  Wide lhs = power_saturating(count, f.den);
  Wide rhs = power_saturating(n, f.num);
  if (lhs == kSaturated || rhs == kSaturated) {
    return static_cast<long double>(f.den) * std::log(static_cast<long double>(count)) >
           static_cast<long double>(f.num) * std::log(static_cast<long double>(n));
  }
  return lhs > rhs;
}

std::uint64_t floor_power(std::uint64_t n, Fraction f) {
  std::uint64_t hi = 1;
  while (!exceeds_power(hi, n, f)) hi *= 2;
  std::uint64_t lo = 0;  // lo <= n^f < hi
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    (exceeds_power(mid, n, f) ? hi : lo) = mid;
  }
  return lo;
}

std::size_t min_cluster_degree(std::size_t n, const DecompositionParams& params) {
  // smallest t with t * divisor >= n^delta
  std::uint64_t fl = floor_power(n, params.delta);
  Wide lhs = power_saturating(fl, params.delta.den);
  bool exact = lhs != kSaturated && lhs == power_saturating(n, params.delta.num);
  std::uint64_t ceil_pow = exact ? fl : fl + 1;
  std::uint64_t t = (ceil_pow + params.min_degree_divisor - 1) / params.min_degree_divisor;
  return std::max<std::size_t>(2, t);
}

std::vector<Edge> Decomposition::em_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_cluster[i] >= 0) out.push_back(edges[i]);
  }
  return out;
}

std::vector<Edge> Decomposition::es_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_cluster[i] < 0) out.push_back(edges[i]);
  }
  return out;
}

int Decomposition::cluster_of(Edge e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  return edge_cluster[static_cast<std::size_t>(it - edges.begin())];
}

std::size_t Decomposition::max_es_degree() const {
  return es_degree.empty() ? 0 : *std::max_element(es_degree.begin(), es_degree.end());
}

Decomposition expander_decompose(const Graph& g, const DecompositionParams& params) {
  Decomposition dec = empty_decomposition(g, params);
  const std::size_t m = dec.edges.size();
  Adjacency adj(dec.n, dec.edges);

  std::vector<char> pending(m, 1);  // edges not yet placed
  for (std::size_t level = 1; level <= dec.max_levels; ++level) {
    if (std::none_of(pending.begin(), pending.end(), [](char c) { return c != 0; })) break;
    std::vector<char> active = pending;
    std::vector<char> deferred(m, 0);
    peel(adj, active, dec.min_degree);
    std::vector<std::vector<VertexId>> comps = components(adj, active);

    bool may_split = params.spectral_split && level < dec.max_levels;
    if (may_split) {
      bool split_any = false;
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        Sweep s = sweep_cut(adj, active, comps[ci], mix_seed(params.seed, level * 7919 + ci));
        if (s.side.empty() || s.conductance >= params.split_conductance) continue;
        split_any = true;
        std::vector<char> in_side(dec.n, 0);
        for (VertexId v : s.side) in_side[v] = 1;
        for (VertexId v : comps[ci]) {
          for (auto [w, e] : adj.out[v]) {
            if (active[e] && in_side[v] != in_side[w]) {
              active[e] = 0;
              deferred[e] = 1;
            }
          }
        }
      }
      if (split_any) {
        peel(adj, active, dec.min_degree);
        comps = components(adj, active);
      }
    }

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      Cluster c;
      c.level = level;
      c.index = ci;
      c.leader = comps[ci].front();
      c.members = VertexSubset(comps[ci]);
      const int id = static_cast<int>(dec.clusters.size());
      for (VertexId v : comps[ci]) {
        for (auto [w, e] : adj.out[v]) {
          if (active[e] && v < w) {
            c.edges.push_back(dec.edges[e]);
            dec.edge_cluster[e] = id;
          }
        }
      }
      std::sort(c.edges.begin(), c.edges.end());
      dec.clusters.push_back(std::move(c));
    }
    // Peeled edges stay at -1 (sparse); only split cuts carry over.
    pending = deferred;
  }
  finish(dec);
  for (VertexId v = 0; v < dec.n; ++v) {
    if (static_cast<double>(dec.es_degree[v]) > dec.es_cap) {
      throw InputError("vertex " + std::to_string(v) + " has " + std::to_string(dec.es_degree[v]) +
                       " sparse edges, above n^delta * log2 n = " + std::to_string(dec.es_cap) +
                       "; delta " + dec.delta.to_string() + " is too small for n = " +
                       std::to_string(dec.n));
    }
  }
  return dec;
}

Decomposition decomposition_from_parts(const Graph& g, const DecompositionParams& params,
                                       const std::vector<ClusterPart>& parts) {
  Decomposition dec = empty_decomposition(g, params);
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return parts[a].level < parts[b].level; });
  std::vector<std::size_t> per_level;
  std::vector<std::size_t> owner_level(dec.n, 0);  // last level a vertex joined
  for (std::size_t pi : order) {
    const ClusterPart& part = parts[pi];
    if (part.level == 0) throw InputError("cluster levels start at 1");
    if (part.edges.empty()) throw InputError("cluster without edges");
    if (per_level.size() < part.level) per_level.resize(part.level, 0);
    Cluster c;
    c.level = part.level;
    c.index = per_level[part.level - 1]++;
    const int id = static_cast<int>(dec.clusters.size());
    std::vector<VertexId> members;
    for (const Edge& e : part.edges) {
      auto it = std::lower_bound(dec.edges.begin(), dec.edges.end(), e);
      if (it == dec.edges.end() || *it != e) {
        throw InputError("cluster edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not in the graph");
      }
      int& slot = dec.edge_cluster[static_cast<std::size_t>(it - dec.edges.begin())];
      if (slot >= 0 && slot != id) throw InputError("edge assigned to two clusters");
      slot = id;
      members.push_back(e.u);
      members.push_back(e.v);
      c.edges.push_back(e);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexId v : members) {
      if (owner_level[v] == part.level) {
        throw InputError("vertex " + std::to_string(v) + " lies in two level-" +
                         std::to_string(part.level) + " clusters");
      }
      owner_level[v] = part.level;
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    c.leader = members.front();
    c.members = VertexSubset(std::move(members));
    dec.clusters.push_back(std::move(c));
  }
  finish(dec);
  return dec;
}

std::vector<std::string> validate_decomposition(const Graph& g, const Decomposition& dec) {
  std::vector<std::string> problems;
  if (dec.n != g.vertex_count()) problems.push_back("vertex count differs from the graph");
  if (!std::equal(dec.edges.begin(), dec.edges.end(), g.edges().begin(), g.edges().end())) {
    problems.push_back("edge list differs from the graph");
    return problems;
  }
  if (dec.edge_cluster.size() != dec.edges.size()) {
    problems.push_back("edge ownership table has the wrong size");
    return problems;
  }
  // E = E_m ⊎ E_s: each cluster's edge list must match the ownership table exactly.
  std::vector<std::size_t> owned(dec.clusters.size(), 0);
  for (int id : dec.edge_cluster) {
    if (id >= static_cast<int>(dec.clusters.size())) {
      problems.push_back("edge owned by a missing cluster");
    } else if (id >= 0) {
      ++owned[static_cast<std::size_t>(id)];
    }
  }
  for (std::size_t ci = 0; ci < dec.clusters.size(); ++ci) {
    const Cluster& c = dec.clusters[ci];
    std::string name = "cluster (" + std::to_string(c.level) + "," + std::to_string(c.index) + ")";
    if (owned[ci] != c.edges.size()) problems.push_back(name + ": edge list and ownership disagree");
    std::vector<std::size_t> internal(dec.n, 0);
    for (const Edge& e : c.edges) {
      if (dec.cluster_of(e) != static_cast<int>(ci)) problems.push_back(name + ": edge owned elsewhere");
      ++internal[e.u];
      ++internal[e.v];
      if (!c.members.contains(e.u) || !c.members.contains(e.v)) {
        problems.push_back(name + ": edge endpoint outside the member set");
      }
    }
    for (VertexId v : c.members) {
      if (internal[v] < dec.min_degree) {
        problems.push_back(name + ": member " + std::to_string(v) + " has internal degree " +
                           std::to_string(internal[v]) + " < " + std::to_string(dec.min_degree));
      }
    }
    if (c.level == 0 || c.level > dec.max_levels) {
      problems.push_back(name + ": level outside 1.." + std::to_string(dec.max_levels));
    }
    if (c.members.empty() || c.leader != c.members[0]) problems.push_back(name + ": leader is not the smallest member");
  }
  for (std::size_t a = 0; a < dec.clusters.size(); ++a) {
    for (std::size_t b = a + 1; b < dec.clusters.size(); ++b) {
      if (dec.clusters[a].level != dec.clusters[b].level) continue;
      for (VertexId v : dec.clusters[a].members) {
        if (dec.clusters[b].members.contains(v)) {
          problems.push_back("level " + std::to_string(dec.clusters[a].level) + ": vertex " +
                             std::to_string(v) + " in two clusters");
          break;
        }
      }
    }
  }
  std::vector<std::size_t> es(dec.n, 0);
  for (std::size_t i = 0; i < dec.edges.size(); ++i) {
    if (dec.edge_cluster[i] < 0) {
      ++es[dec.edges[i].u];
      ++es[dec.edges[i].v];
    }
  }
  if (es != dec.es_degree) problems.push_back("recorded |E_{s,v}| values are stale");
  for (VertexId v = 0; v < dec.n; ++v) {
    if (static_cast<double>(es[v]) > dec.es_cap) {
      problems.push_back("vertex " + std::to_string(v) + ": |E_{s,v}| = " + std::to_string(es[v]) +
                         " exceeds n^delta log n");
    }
  }
  return problems;
}

}  // namespace indsub
