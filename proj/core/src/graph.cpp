#include "indsub/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "indsub/errors.hpp"

namespace indsub {

VertexSubset::VertexSubset(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InputError("vertex subset contains a duplicate id");
  }
}

VertexSubset::VertexSubset(std::initializer_list<VertexId> members)
    : VertexSubset(std::vector<VertexId>(members)) {}

bool VertexSubset::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()), adjacency_(n) {
  row_words_ = (n + 63) / 64;
  matrix_.assign(n * row_words_, 0);
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside [0, " + std::to_string(n) + ")");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    matrix_[e.u * row_words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    matrix_[e.v * row_words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(VertexId a, VertexId b) const {
  std::size_t n = vertex_count();
  if (a >= n || b >= n) throw InputError("vertex id out of range in has_edge");
  return (matrix_[a * row_words_ + b / 64] >> (b % 64)) & 1U;
}

void Graph::check_subset(const VertexSubset& s) const {
  for (VertexId v : s) {
    if (v >= vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " is not in a graph of " +
                       std::to_string(vertex_count()) + " vertices");
    }
  }
}

VertexId GraphBuilder::add_vertex() { return static_cast<VertexId>(n_++); }

VertexId GraphBuilder::add_vertices(std::size_t count) {
  auto first = static_cast<VertexId>(n_);
  n_ += count;
  return first;
}

void GraphBuilder::add_edge(VertexId a, VertexId b) {
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  if (a >= n_ || b >= n_) throw InputError("edge endpoint out of range");
  edges_.insert(Edge(a, b));
}

void GraphBuilder::remove_edge(VertexId a, VertexId b) { edges_.erase(Edge(a, b)); }

bool GraphBuilder::has_edge(VertexId a, VertexId b) const {
  return a != b && edges_.contains(Edge(a, b));
}

Graph GraphBuilder::build() const {
  std::vector<Edge> list(edges_.begin(), edges_.end());
  return Graph(n_, list);
}

Graph read_graph(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw InputError("graph text: missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) {
      throw InputError("graph text: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw InputError("graph text: edge " + std::to_string(a) + " " + std::to_string(b) +
                       " out of range");
    }
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  std::string trailing;
  if (in >> trailing) throw InputError("graph text: unexpected trailing token '" + trailing + "'");
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file '" + path + "'");
  write_graph(out, g);
}

std::string to_canonical_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace indsub
