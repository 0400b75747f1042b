#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indsub {

using VertexId = std::uint32_t;

// Unordered edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of distinct vertex ids.
class VertexSubset {
 public:
  VertexSubset() = default;
  // Sorts; throws InputError on duplicates.
  explicit VertexSubset(std::vector<VertexId> members);
  VertexSubset(std::initializer_list<VertexId> members);

  std::span<const VertexId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(VertexId v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }

  std::string to_string() const;

  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<VertexId> members_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; use
// GraphBuilder (or the edge-list constructor) to create one.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on self-loops, duplicate edges, or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted, canonical.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId a, VertexId b) const;

  // Throws InputError unless every id of `s` is < n.
  void check_subset(const VertexSubset& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint64_t> matrix_;
  std::size_t row_words_ = 0;
};

// Accumulates edges; silently ignores duplicates (builders often add the same
// edge from two construction rules), rejects self-loops.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  VertexId add_vertex();
  VertexId add_vertices(std::size_t count);  // returns the first new id
  std::size_t vertex_count() const noexcept { return n_; }

  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  bool has_edge(VertexId a, VertexId b) const;

  std::size_t edge_count() const noexcept { return edges_.size(); }

  Graph build() const;

 private:
  std::size_t n_;
  std::set<Edge> edges_;
};

// Canonical text format: "n m" then m lines "u v" with u < v, sorted.
// The reader accepts either endpoint order and any line order.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
std::string to_canonical_text(const Graph& g);

}  // namespace indsub
