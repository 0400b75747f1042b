#pragma once

#include <indsub/families.hpp>
#include <indsub/graph.hpp>
#include <indsub/random.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace indsub {
// gtest printer
inline void PrintTo(const VertexSubset& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace indsub

namespace indsub::testing {

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.coin(p)) b.add_edge(u, v);
  return b.build();
}

// Each vertex lands on Alice's side with probability 1/2, but both sides stay nonempty.
inline VertexSubset random_side(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> a;
  for (VertexId v = 0; v < n; ++v)
    if (rng.coin(0.5)) a.push_back(v);
  if (a.empty()) a.push_back(0);
  if (a.size() == n) a.pop_back();
  return VertexSubset(std::move(a));
}

inline Graph cycle_graph(std::size_t k) {
  GraphBuilder b(k);
  for (VertexId i = 0; i < k; ++i) b.add_edge(i, static_cast<VertexId>((i + 1) % k));
  return b.build();
}

inline Graph clique(std::size_t k) {
  GraphBuilder b(k);
  for (VertexId u = 0; u < k; ++u)
    for (VertexId v = u + 1; v < k; ++v) b.add_edge(u, v);
  return b.build();
}

// C4 0-1-2-3 plus the chord 0-2.
inline Graph chorded_square() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

inline VertexSubset all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.vertex_count());
  for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
  return VertexSubset(std::move(v));
}

inline VertexId vertex_by_label(const FamilyInstance& inst, const std::string& label) {
  auto it = std::find(inst.labels.begin(), inst.labels.end(), label);
  if (it == inst.labels.end()) throw std::runtime_error("no vertex labelled " + label);
  return static_cast<VertexId>(it - inst.labels.begin());
}

// Inputs of length K with exactly the listed bits set.
inline BitString bits_at(std::size_t length, std::initializer_list<std::size_t> ones) {
  BitString b = zero_bits(length);
  for (auto i : ones) b[i] = true;
  return b;
}

}  // namespace indsub::testing
