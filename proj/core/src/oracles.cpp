#include "indsub/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "indsub/errors.hpp"

namespace indsub {

namespace {

class StepCounter {
 public:
  StepCounter(WorkBudget budget, const char* what) : budget_(budget), what_(what) {}

  void tick(std::uint64_t amount = 1) {
    steps_ += amount;
    if (steps_ > budget_.max_steps) {
      throw ResourceError(std::string(what_) + ": work exceeded budget of " +
                              std::to_string(budget_.max_steps) + " steps",
                          steps_);
    }
  }

 private:
  WorkBudget budget_;
  const char* what_;
  std::uint64_t steps_ = 0;
};

void check_estimate(std::uint64_t estimate, WorkBudget budget, const char* what) {
  if (estimate > budget.max_steps) {
    throw ResourceError(std::string(what) + ": estimated " + std::to_string(estimate) +
                            " subset checks exceeds budget of " + std::to_string(budget.max_steps),
                        estimate);
  }
}

// Calls visit(subset) for every k-subset of [0, n) in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<VertexId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<VertexId>(i);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Depth-first extension of chordless paths start = p[0] < every other p[i].
// A path vertex p[i] (i >= 2) may touch only p[i-1] among earlier vertices,
// except that the last vertex must also touch p[0].
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t k, WorkBudget budget, bool stop_at_first)
      : g_(g), k_(k), counter_(budget, "list_induced_cycles"), stop_(stop_at_first) {}

  std::vector<VertexSubset> run() {
    path_.reserve(k_);
    on_path_.assign(g_.vertex_count(), 0);
    for (VertexId s = 0; s < g_.vertex_count() && !(stop_ && !found_.empty()); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      extend();
      on_path_[s] = 0;
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  const Graph& g_;
  std::size_t k_;
  StepCounter counter_;
  bool stop_;
  std::vector<VertexId> path_;
  std::vector<char> on_path_;
  std::vector<VertexSubset> found_;

  bool chordless_with(VertexId w) const {
    // w will sit at position path_.size(); it may touch path_.back() only,
    // plus path_[0] when it closes the cycle.
    std::size_t pos = path_.size();
    for (std::size_t i = 1; i + 1 < pos; ++i) {
      if (g_.has_edge(w, path_[i])) return false;
    }
    bool touches_start = pos >= 2 && g_.has_edge(w, path_[0]);
    return pos + 1 == k_ ? touches_start : !touches_start;
  }

  void extend() {
    if (stop_ && !found_.empty()) return;
    counter_.tick();
    VertexId start = path_[0];
    VertexId tail = path_.back();
    for (VertexId w : g_.neighbors(tail)) {
      if (w <= start || on_path_[w]) continue;
      if (!chordless_with(w)) continue;
      // Orientation: report each cycle once, with path_[1] < last vertex.
      if (path_.size() + 1 == k_) {
        if (path_[1] < w) {
          std::vector<VertexId> members(path_);
          members.push_back(w);
          found_.emplace_back(std::move(members));
          if (stop_) return;
        }
        continue;
      }
      path_.push_back(w);
      on_path_[w] = 1;
      extend();
      on_path_[w] = 0;
      path_.pop_back();
    }
  }
};

}  // namespace

WorkBudget WorkBudget::from_environment() {
  WorkBudget budget;
  if (const char* raw = std::getenv("INDSUB_WORK_BUDGET"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) budget.max_steps = value;
  }
  return budget;
}

std::size_t induced_edge_count(const Graph& g, const VertexSubset& s) {
  g.check_subset(s);
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) ++count;
    }
  }
  return count;
}

bool is_induced_cycle(const Graph& g, const VertexSubset& s, std::size_t k) {
  if (k < 3) throw InputError("induced cycles need k >= 3");
  g.check_subset(s);
  if (s.size() != k) return false;
  if (induced_edge_count(g, s) != k) return false;
  for (VertexId v : s) {
    std::size_t deg = 0;
    for (VertexId w : s) {
      if (w != v && g.has_edge(v, w)) ++deg;
    }
    if (deg != 2) return false;
  }
  // Connectivity: walk the cycle from s[0].
  std::vector<char> seen(k, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < k; ++j) {
      if (!seen[j] && g.has_edge(s[i], s[j])) {
        seen[j] = 1;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  return reached == k;
}

bool is_induced_diamond(const Graph& g, const VertexSubset& s) {
  g.check_subset(s);
  return s.size() == 4 && induced_edge_count(g, s) == 5;
}

std::vector<VertexSubset> list_induced_cycles(const Graph& g, std::size_t k, WorkBudget budget) {
  if (k < 3) throw InputError("induced cycles need k >= 3");
  return CycleSearch(g, k, budget, false).run();
}

std::optional<VertexSubset> find_induced_cycle(const Graph& g, std::size_t k, WorkBudget budget) {
  if (k < 3) throw InputError("induced cycles need k >= 3");
  auto found = CycleSearch(g, k, budget, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<VertexSubset> list_induced_cycles_naive(const Graph& g, std::size_t k,
                                                    WorkBudget budget) {
  if (k < 3) throw InputError("induced cycles need k >= 3");
  check_estimate(binomial(g.vertex_count(), k), budget, "list_induced_cycles_naive");
  std::vector<VertexSubset> found;
  for_each_subset(g.vertex_count(), k, [&](const std::vector<VertexId>& idx) {
    VertexSubset s(idx);
    if (is_induced_cycle(g, s, k)) found.push_back(std::move(s));
  });
  return found;
}

std::vector<VertexSubset> list_induced_diamonds(const Graph& g, WorkBudget budget) {
  StepCounter counter(budget, "list_induced_diamonds");
  std::vector<VertexSubset> found;
  std::vector<VertexId> common;
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    common.clear();
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    counter.tick(1 + common.size() * common.size() / 2);
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!g.has_edge(common[i], common[j])) {
          found.emplace_back(VertexSubset{e.u, e.v, common[i], common[j]});
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<VertexSubset> list_induced_diamonds_naive(const Graph& g, WorkBudget budget) {
  check_estimate(binomial(g.vertex_count(), 4), budget, "list_induced_diamonds_naive");
  std::vector<VertexSubset> found;
  for_each_subset(g.vertex_count(), 4, [&](const std::vector<VertexId>& idx) {
    VertexSubset s(idx);
    if (is_induced_diamond(g, s)) found.push_back(std::move(s));
  });
  return found;
}

std::vector<VertexSubset> list_triangles(const Graph& g) {
  std::vector<VertexSubset> found;
  std::vector<VertexId> common;
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    common.clear();
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    for (VertexId w : common) {
      if (w > e.v) found.emplace_back(VertexSubset{e.u, e.v, w});
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

int disj(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw InputError("disj: length mismatch (" + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) return 0;
  }
  return 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace indsub
