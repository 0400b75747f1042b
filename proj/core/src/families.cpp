#include "indsub/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "indsub/errors.hpp"
#include "indsub/oracles.hpp"
#include "instance_assembler.hpp"

namespace indsub {

namespace {

void require_input_length(const InputPair& in, std::size_t expected, const char* family) {
  if (in.x.size() != expected || in.y.size() != expected) {
    throw InputError(std::string(family) + ": inputs must have K = " + std::to_string(expected) +
                     " bits, got |x| = " + std::to_string(in.x.size()) +
                     ", |y| = " + std::to_string(in.y.size()));
  }
}

std::string indexed(const std::string& base, std::size_t i) {
  return base + "^{" + std::to_string(i + 1) + "}";
}

std::string indexed(const std::string& base, std::size_t i, std::size_t j) {
  return base + "^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

// Replaces edge (from, to) by a path through `internal` new vertices. The
// first ceil(internal/2) of them (next to `from`) go to Alice.
void subdivide(detail::InstanceAssembler& asm_, VertexId from, VertexId to, std::size_t internal,
               const std::string& block, std::size_t index) {
  if (internal == 0) {
    asm_.edge(from, to);
    return;
  }
  std::size_t alice_count = (internal + 1) / 2;
  VertexId prev = from;
  for (std::size_t r = 0; r < internal; ++r) {
    VertexId w = asm_.add(block, indexed(block, index, r), static_cast<int>(index), r < alice_count);
    asm_.edge(prev, w);
    prev = w;
  }
  asm_.edge(prev, to);
}

// Exact test for a^ell >= n * ell^ell without floating point.
bool alphabet_large_enough(std::size_t a, std::size_t n, std::size_t ell) {
  long double lhs_log = static_cast<long double>(ell) * std::log(static_cast<long double>(a));
  long double rhs_log = std::log(static_cast<long double>(n)) +
                        static_cast<long double>(ell) * std::log(static_cast<long double>(ell));
  if (lhs_log > rhs_log + 1e-6L) return true;
  if (lhs_log < rhs_log - 1e-6L) return false;
  unsigned __int128 lhs = 1;
  unsigned __int128 rhs = n;
  for (std::size_t i = 0; i < ell; ++i) {
    lhs *= a;
    rhs *= ell;
  }
  return lhs >= rhs;
}

}  // namespace

namespace detail {

VertexId InstanceAssembler::add(const std::string& block, std::string label, int sub_block,
                                bool alice) {
  VertexId id = builder_.add_vertex();
  labels_.push_back(std::move(label));
  sub_block_.push_back(sub_block);
  alice_.push_back(alice ? 1 : 0);
  blocks_[block].push_back(id);
  return id;
}

void InstanceAssembler::edge(VertexId a, VertexId b) { builder_.add_edge(a, b); }

FamilyInstance InstanceAssembler::finish(FamilyTag tag, std::size_t input_bits) const {
  FamilyInstance inst;
  inst.graph = builder_.build();
  std::vector<VertexId> va;
  std::vector<VertexId> vb;
  for (VertexId v = 0; v < alice_.size(); ++v) (alice_[v] ? va : vb).push_back(v);
  inst.va = VertexSubset(std::move(va));
  inst.vb = VertexSubset(std::move(vb));
  inst.cut_edges = crossing_edges(inst.graph, alice_);
  inst.labels = labels_;
  for (const auto& [name, members] : blocks_) inst.blocks.emplace(name, VertexSubset(members));
  inst.sub_block = sub_block_;
  inst.tag = tag;
  inst.input_bits = input_bits;
  return inst;
}

}  // namespace detail

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kC4: return "c4";
    case FamilyKind::kCkSubdivided: return "ck";
    case FamilyKind::kC8l: return "c8l";
    case FamilyKind::kDiamond: return "diamond";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "c4") return FamilyKind::kC4;
  if (name == "ck") return FamilyKind::kCkSubdivided;
  if (name == "c8l") return FamilyKind::kC8l;
  if (name == "diamond") return FamilyKind::kDiamond;
  throw InputError("unknown family '" + name + "' (expected c4, ck, c8l or diamond)");
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw InputError("pair_index: index out of range");
  return i + j * n;
}

std::vector<char> side_mask(std::size_t n, const VertexSubset& side) {
  std::vector<char> mask(n, 0);
  for (VertexId v : side) {
    if (v >= n) throw InputError("side contains a vertex outside the graph");
    mask[v] = 1;
  }
  return mask;
}

std::vector<Edge> edges_within(const Graph& g, const std::vector<char>& side) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (side[e.u] && side[e.v]) out.push_back(e);
  }
  return out;
}

std::vector<Edge> crossing_edges(const Graph& g, const std::vector<char>& side) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) out.push_back(e);
  }
  return out;
}

void remove_edge(FamilyInstance& inst, Edge e) {
  std::vector<Edge> kept;
  for (const Edge& f : inst.graph.edges()) {
    if (f != e) kept.push_back(f);
  }
  inst.graph = Graph(inst.graph.vertex_count(), kept);
  inst.cut_edges = crossing_edges(inst.graph, side_mask(inst.graph.vertex_count(), inst.va));
}

FamilyInstance build_c4_family(std::size_t n, const InputPair& in) {
  if (n < 2) throw InputError("c4 family needs n >= 2");
  require_input_length(in, n * n, "c4 family");
  detail::InstanceAssembler a;
  std::vector<VertexId> a1(n), a2(n), b1(n), b2(n);
  for (std::size_t i = 0; i < n; ++i) a1[i] = a.add("A1", indexed("a1", i), static_cast<int>(i), true);
  for (std::size_t i = 0; i < n; ++i) a2[i] = a.add("A2", indexed("a2", i), static_cast<int>(i), true);
  for (std::size_t i = 0; i < n; ++i) b1[i] = a.add("B1", indexed("b1", i), static_cast<int>(i), false);
  for (std::size_t i = 0; i < n; ++i) b2[i] = a.add("B2", indexed("b2", i), static_cast<int>(i), false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a.edge(a1[i], a1[j]);
      a.edge(b2[i], b2[j]);
    }
    a.edge(a1[i], b1[i]);
    a.edge(a2[i], b2[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in.x[pair_index(n, i, j)]) a.edge(a1[i], a2[j]);
      if (in.y[pair_index(n, i, j)]) a.edge(b1[i], b2[j]);
    }
  }
  return a.finish(FamilyTag{FamilyKind::kC4, n, 4, 0, 0, std::nullopt, {}}, n * n);
}

FamilyInstance build_ck_subdivided_family(std::size_t n, std::size_t k, const InputPair& in,
                                          CkWiring wiring) {
  if (k < 5) throw InputError("subdivided cycle family needs k >= 5 (use the c4 family for k = 4)");
  if (n < 2) throw InputError("subdivided cycle family needs n >= 2");
  require_input_length(in, n * n, "ck family");
  const std::size_t top_internal = (k - 4 + 1) / 2;
  const std::size_t bottom_internal = (k - 4) / 2;

  detail::InstanceAssembler a;
  std::vector<VertexId> a1(n), a2(n), b1(n), b2(n);
  for (std::size_t i = 0; i < n; ++i) a1[i] = a.add("A1", indexed("a1", i), static_cast<int>(i), true);
  for (std::size_t i = 0; i < n; ++i) a2[i] = a.add("A2", indexed("a2", i), static_cast<int>(i), true);
  for (std::size_t i = 0; i < n; ++i) b1[i] = a.add("B1", indexed("b1", i), static_cast<int>(i), false);
  for (std::size_t i = 0; i < n; ++i) b2[i] = a.add("B2", indexed("b2", i), static_cast<int>(i), false);
  // Odd k: without the cliques each side is bipartite apart from the paths,
  // and a parity count leaves a1^i a2^j .. b2^j b1^i .. as the only C_k.
  const bool cliques = wiring == CkWiring::kCliques || k % 2 == 0;
  if (cliques) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        a.edge(a1[i], a1[j]);
        a.edge(b2[i], b2[j]);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) subdivide(a, a1[i], b1[i], top_internal, "P_top", i);
  for (std::size_t i = 0; i < n; ++i) subdivide(a, a2[i], b2[i], bottom_internal, "P_bottom", i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in.x[pair_index(n, i, j)]) a.edge(a1[i], a2[j]);
      if (in.y[pair_index(n, i, j)]) a.edge(b1[i], b2[j]);
    }
  }
  FamilyTag tag{FamilyKind::kCkSubdivided, n, k, 0, 0, std::nullopt, {}};
  if (wiring == CkWiring::kCliques) tag.variant = "cliques";
  return a.finish(tag, n * n);
}

std::size_t code_alphabet_size(std::size_t n, std::size_t ell) {
  if (ell == 0) throw InputError("ell must be >= 1");
  if (n == 0) return 0;
  long double estimate =
      static_cast<long double>(ell) * std::pow(static_cast<long double>(n), 1.0L / ell);
  auto a = static_cast<std::size_t>(std::max<long double>(1.0L, std::floor(estimate) - 1.0L));
  while (!alphabet_large_enough(a, n, ell)) ++a;
  while (a > 1 && alphabet_large_enough(a - 1, n, ell)) --a;
  return a;
}

std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t ell) {
  // Combinatorial number system: rank = sum_k C(c_k, k) with c_ell > ... > c_1 >= 0.
  std::vector<std::size_t> out(ell);
  for (std::size_t k = ell; k >= 1; --k) {
    std::uint64_t c = k - 1;
    while (binomial(c + 1, k) <= rank) ++c;
    rank -= binomial(c, k);
    out[k - 1] = static_cast<std::size_t>(c + 1);
  }
  return out;
}

CodeAssignment make_code_assignment(std::size_t n, std::size_t ell) {
  if (ell == 0) throw InputError("make_code_assignment: ell must be >= 1");
  CodeAssignment codes;
  codes.n = n;
  codes.ell = ell;
  codes.alphabet = code_alphabet_size(n, ell);
  if (binomial(codes.alphabet, ell) < n) {
    throw InternalError("code alphabet " + std::to_string(codes.alphabet) + " cannot host " +
                        std::to_string(n) + " distinct " + std::to_string(ell) + "-subsets");
  }
  codes.codes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) codes.codes.push_back(colex_unrank(i, ell));
  return codes;
}

std::size_t cut_size_c8l(std::size_t n, std::size_t ell, std::size_t m) {
  if (m > 7) throw InputError("c8l padding m must be in 0..7");
  // One cut edge per code matching path, plus (c_A, c_B).
  return 2 * code_alphabet_size(n, ell) + 1;
}

FamilyInstance build_c8l_family(std::size_t n, std::size_t ell, std::size_t m, const InputPair& in,
                                bool hubs) {
  if (n < 2) throw InputError("c8l family needs n >= 2");
  if (ell < 1) throw InputError("c8l family needs ell >= 1");
  if (m > 7) throw InputError("c8l padding m must be in 0..7");
  require_input_length(in, n * n, "c8l family");
  const CodeAssignment codes = make_code_assignment(n, ell);
  const std::size_t q = codes.alphabet;

  detail::InstanceAssembler a;
  using Block = std::vector<std::vector<VertexId>>;
  auto make_block = [&](const std::string& name, const std::string& label, bool alice) {
    Block block(n, std::vector<VertexId>(ell));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < ell; ++j) {
        block[i][j] = a.add(name, indexed(label, i, j), static_cast<int>(i), alice);
      }
    }
    return block;
  };
  auto make_code = [&](const std::string& name, const std::string& label, bool alice) {
    std::vector<VertexId> code(q);
    for (std::size_t t = 0; t < q; ++t) code[t] = a.add(name, indexed(label, t), -1, alice);
    return code;
  };
  Block a1 = make_block("A1", "a1", true);
  Block a2 = make_block("A2", "a2", true);
  Block b1 = make_block("B1", "b1", false);
  Block b2 = make_block("B2", "b2", false);
  std::vector<VertexId> ua = make_code("U_A", "u_A", true);
  std::vector<VertexId> la = make_code("L_A", "l_A", true);
  std::vector<VertexId> ub = make_code("U_B", "u_B", false);
  std::vector<VertexId> lb = make_code("L_B", "l_B", false);

  // Code wiring: j-th vertex of sub-block i to the j-th element of sigma(i).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      std::size_t t = codes.codes[i][j] - 1;
      a.edge(a1[i][j], ua[t]);
      a.edge(a2[i][j], la[t]);
      a.edge(b1[i][j], ub[t]);
      a.edge(b2[i][j], lb[t]);
    }
  }
  auto connect_sub_blocks = [&](const Block& block) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t i2 = i + 1; i2 < n; ++i2) {
        for (VertexId u : block[i]) {
          for (VertexId v : block[i2]) a.edge(u, v);
        }
      }
    }
  };
  // Odd padding at ell = 1 makes k odd; as with odd C_k, clique edges in A1/B2
  // then close one-sided cycles of length exactly k, so they are left out.
  if (ell >= 2 || m % 2 == 0) {
    connect_sub_blocks(a1);
    connect_sub_blocks(b2);
  }
  if (ell >= 2) {
    connect_sub_blocks(a2);
    connect_sub_blocks(b1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in.x[pair_index(n, i, j)]) {
        for (std::size_t r = 0; r + 1 < ell; ++r) a.edge(a1[i][r + 1], a2[j][r]);
        a.edge(a1[i][0], a2[j][ell - 1]);
      }
      if (in.y[pair_index(n, i, j)]) {
        for (std::size_t r = 0; r < ell; ++r) a.edge(b1[i][r], b2[j][r]);
      }
    }
  }

  if (hubs) {
    VertexId ca = a.add("c_A", "c_A", -1, true);
    VertexId cb = a.add("c_B", "c_B", -1, false);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      if (v == ca || v == cb) continue;
      a.edge(v, a.is_alice(v) ? ca : cb);
    }
    a.edge(ca, cb);
  }

  // Padding: each U matching edge gains floor(m/2) internal vertices and each
  // L matching edge ceil(m/2), so the induced cycle grows by exactly m when ell = 1.
  for (std::size_t t = 0; t < q; ++t) subdivide(a, ua[t], ub[t], m / 2, "P_U", t);
  for (std::size_t t = 0; t < q; ++t) subdivide(a, la[t], lb[t], (m + 1) / 2, "P_L", t);

  FamilyTag tag{FamilyKind::kC8l, n, 8 * ell + m, ell, m, std::nullopt, {}};
  if (!hubs) tag.variant = "no-hubs";
  return a.finish(tag, n * n);
}

BlockCountReport check_block_counts(const FamilyInstance& inst, const VertexSubset& cycle) {
  BlockCountReport report;
  if (inst.tag.kind != FamilyKind::kC8l) {
    report.violations.push_back("block counts apply to c8l instances only");
    return report;
  }
  const std::size_t ell = inst.tag.ell;
  auto members_in = [&](const std::string& block) {
    std::vector<VertexId> out;
    auto it = inst.blocks.find(block);
    if (it == inst.blocks.end()) return out;
    for (VertexId v : cycle) {
      if (it->second.contains(v)) out.push_back(v);
    }
    return out;
  };
  for (const char* hub : {"c_A", "c_B"}) {
    if (!members_in(hub).empty()) report.violations.push_back(std::string(hub) + " lies on the cycle");
  }
  static const char* const kBlocks[] = {"A1", "A2", "B1", "B2", "U_A", "L_A", "U_B", "L_B"};
  for (const char* block : kBlocks) {
    std::size_t count = members_in(block).size();
    report.counts[block] = count;
    if (count != ell) {
      report.violations.push_back(std::string(block) + " holds " + std::to_string(count) +
                                  " cycle vertices, expected " + std::to_string(ell));
    }
  }
  // Each side block must be one whole sub-block whose code set is exactly the
  // cycle's share of the matching code block.
  struct Pairing {
    const char* block;
    const char* code;
  };
  static const Pairing kPairs[] = {{"A1", "U_A"}, {"A2", "L_A"}, {"B1", "U_B"}, {"B2", "L_B"}};
  std::map<std::string, int> chosen;
  for (const Pairing& p : kPairs) {
    auto in_block = members_in(p.block);
    if (in_block.empty()) continue;
    int index = inst.sub_block[in_block.front()];
    bool single = std::all_of(in_block.begin(), in_block.end(),
                              [&](VertexId v) { return inst.sub_block[v] == index; });
    if (!single) {
      report.violations.push_back(std::string(p.block) + " cycle vertices span several sub-blocks");
      continue;
    }
    chosen[p.block] = index;
    const VertexSubset& code_block = inst.blocks.at(p.code);
    std::vector<VertexId> code;
    for (VertexId v : inst.blocks.at(p.block)) {
      if (inst.sub_block[v] != index) continue;
      for (VertexId w : inst.graph.neighbors(v)) {
        if (code_block.contains(w)) code.push_back(w);
      }
    }
    std::sort(code.begin(), code.end());
    code.erase(std::unique(code.begin(), code.end()), code.end());
    if (code != members_in(p.code)) {
      report.violations.push_back(std::string("cycle ∩ ") + p.code + " differs from Code(" + p.block +
                                  "^" + std::to_string(index + 1) + ")");
    }
  }
  if (chosen.count("A1") && chosen.count("B1") && chosen["A1"] != chosen["B1"]) {
    report.violations.push_back("A1 and B1 sub-block indices differ");
  }
  if (chosen.count("A2") && chosen.count("B2") && chosen["A2"] != chosen["B2"]) {
    report.violations.push_back("A2 and B2 sub-block indices differ");
  }
  return report;
}

}  // namespace indsub
