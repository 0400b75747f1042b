#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indsub/bits.hpp"
#include "indsub/graph.hpp"

namespace indsub {

enum class FamilyKind { kC4, kCkSubdivided, kC8l, kDiamond };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

// Which construction produced an instance, with every parameter that affects it.
struct FamilyTag {
  FamilyKind kind = FamilyKind::kC4;
  std::size_t n = 0;
  std::size_t k = 0;    // cycle length for cycle families (4, k, or 8*ell+m)
  std::size_t ell = 0;  // C_{8l} families only
  std::size_t m = 0;    // C_{8l} padding
  std::optional<std::uint64_t> seed;  // diamond family only: the seed actually used
  std::string variant;  // non-default wiring, empty otherwise ("cliques", "no-hubs")

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct InputPair {
  BitString x;
  BitString y;

  static InputPair zeros(std::size_t length) { return {zero_bits(length), zero_bits(length)}; }
  std::size_t length() const noexcept { return x.size(); }
};

// Bit position of x_{ij} for 0-based i, j in [0, n): the (i + j*n)-th bit.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

// A constructed G_{x,y} together with its bipartition. `blocks` maps
// construction names ("A1", "U_A", "B'", "c_A", ...) to their vertices;
// `sub_block[v]` is the sub-block index i of v inside its block, or -1.
struct FamilyInstance {
  Graph graph;
  VertexSubset va;
  VertexSubset vb;
  std::vector<Edge> cut_edges;
  std::vector<std::string> labels;
  std::map<std::string, VertexSubset> blocks;
  std::vector<int> sub_block;
  FamilyTag tag;
  std::size_t input_bits = 0;

  bool on_alice_side(VertexId v) const { return va.contains(v); }
};

// Edges with both endpoints in `side` (as a membership mask over vertices).
std::vector<Edge> edges_within(const Graph& g, const std::vector<char>& side);
std::vector<Edge> crossing_edges(const Graph& g, const std::vector<char>& side);
std::vector<char> side_mask(std::size_t n, const VertexSubset& side);

// Drops one edge and refreshes the cut. Used for mutation tests.
void remove_edge(FamilyInstance& inst, Edge e);

// --- induced cycle families -------------------------------------------------

FamilyInstance build_c4_family(std::size_t n, const InputPair& in);

enum class CkWiring {
  kAuto,     // A1, B2 cliques for even k, independent sets for odd k
  kCliques,  // A1, B2 cliques for every k
};

// k >= 5: the C4 construction with (a1^i, b1^i) stretched to a path on
// ceil((k-4)/2)+2 vertices and (a2^i, b2^i) to one on floor((k-4)/2)+2.
// With cliques and odd k, x_{ij} = x_{ij'} = 1 alone closes an induced C_k
// through b2^j b2^j', which is why kAuto drops the cliques there.
FamilyInstance build_ck_subdivided_family(std::size_t n, std::size_t k, const InputPair& in,
                                          CkWiring wiring = CkWiring::kAuto);

struct CodeAssignment {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t alphabet = 0;                    // ceil(ell * n^(1/ell))
  std::vector<std::vector<std::size_t>> codes;  // 1-based, ascending, colex order
};

// Smallest integer a with a >= ell * n^(1/ell), computed exactly.
std::size_t code_alphabet_size(std::size_t n, std::size_t ell);
// r-th (0-based) ell-subset of {1, 2, ...} in colexicographic order.
std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t ell);
CodeAssignment make_code_assignment(std::size_t n, std::size_t ell);

// The C_{8l} construction with the diameter-3 hub vertices c_A and c_B (unless
// `hubs` is false), then m-padding of the code matching edges.
FamilyInstance build_c8l_family(std::size_t n, std::size_t ell, std::size_t m, const InputPair& in,
                                bool hubs = true);

std::size_t cut_size_c8l(std::size_t n, std::size_t ell, std::size_t m);

// Block-count audit for an induced 8l-cycle of an unpadded C_{8l} instance.
struct BlockCountReport {
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
BlockCountReport check_block_counts(const FamilyInstance& inst, const VertexSubset& cycle);

// --- induced diamond family -------------------------------------------------

struct Quadruple {
  VertexId a1 = 0;  // the A* endpoint
  VertexId a2 = 0;
  VertexId b1 = 0;  // unique common neighbour of a1 and a2 (in B)
  VertexId b2 = 0;  // unique B' neighbour of a1

  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

struct DiamondFixture {
  std::size_t n = 0;  // |A| = |B| = |B'|
  Graph graph;
  std::vector<Edge> good_pairs;  // unordered A-pairs with exactly one common neighbour
  std::vector<Quadruple> quadruples;
  VertexSubset astar;
  std::uint64_t requested_seed = 0;
  std::uint64_t seed = 0;  // after the retry rule
  std::size_t seeds_rejected = 0;

  std::size_t side() const;  // sqrt(n)
  VertexId a(std::size_t block, std::size_t j) const { return static_cast<VertexId>(block * side() + j); }
  VertexId b(std::size_t block, std::size_t j) const { return static_cast<VertexId>(n + block * side() + j); }
  VertexId b_prime(std::size_t index) const { return static_cast<VertexId>(2 * n + index); }
};

struct DiamondFixtureOptions {
  double min_good_pair_fraction = 0.01;  // |P_A| / n^2 below this rejects the seed
  std::size_t max_seed_attempts = 1000;
};

DiamondFixture build_diamond_fixture(std::size_t n, std::uint64_t seed,
                                     DiamondFixtureOptions options = {});

// Exact |N(a) ∩ N(a')| for every unordered A-pair, keyed by the pair.
std::map<Edge, std::size_t> common_neighbour_counts(const DiamondFixture& fix);

FamilyInstance build_diamond_family(const DiamondFixture& fix, const InputPair& in);

// Any induced diamond with exactly two vertices in A (and two in B ∪ B')?
std::optional<VertexSubset> find_22_diamond(const FamilyInstance& inst);
bool has_22_diamond(const FamilyInstance& inst);

// --- Definition-5 condition checker ------------------------------------------

struct FamilySpec {
  std::string name;
  std::size_t input_bits = 0;
  std::function<FamilyInstance(const InputPair&)> build;
  // The family predicate; returns a witness subset when it holds.
  std::function<std::optional<VertexSubset>(const FamilyInstance&)> predicate;
};

FamilySpec c4_family_spec(std::size_t n);
FamilySpec ck_family_spec(std::size_t n, std::size_t k, CkWiring wiring = CkWiring::kAuto);
FamilySpec c8l_family_spec(std::size_t n, std::size_t ell, std::size_t m, bool hubs = true);
FamilySpec diamond_family_spec(const DiamondFixture& fix);

struct SweepOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  // Sweep every (x, y) when 4^K does not exceed this.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  bool include_designed = true;
};

struct ConditionViolation {
  int condition = 0;  // 1..4 as in the family-of-lower-bound-graphs definition
  InputPair input;
  std::optional<VertexSubset> witness;
  std::string detail;
};

struct FamilyReport {
  std::string family;
  std::size_t input_bits = 0;
  bool exhaustive = false;
  std::size_t pairs_checked = 0;
  std::size_t predicate_true = 0;
  std::size_t disj_zero = 0;
  std::vector<ConditionViolation> violations;

  bool ok() const { return violations.empty(); }
};

// The (x, y) pairs a sweep visits, in visiting order.
std::vector<InputPair> sweep_pairs(std::size_t input_bits, const SweepOptions& options,
                                   bool* exhaustive = nullptr);

FamilyReport verify_family_conditions(const FamilySpec& spec, const SweepOptions& options);

}  // namespace indsub
