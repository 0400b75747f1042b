#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "indsub/bits.hpp"
#include "indsub/congest.hpp"
#include "indsub/families.hpp"
#include "indsub/graph.hpp"

namespace indsub {

enum class Party { kAlice, kBob };
std::string to_string(Party p);

// What one player holds: its vertices, n, and E_own ∪ E_cut.
struct PartyView {
  Party side = Party::kAlice;
  std::size_t n = 0;
  VertexSubset own;
  std::vector<Edge> known_edges;  // sorted
  std::vector<Edge> cut_edges;    // sorted, also contained in known_edges

  bool owns(VertexId v) const { return own.contains(v); }
};

PartyView make_party_view(const Graph& g, const VertexSubset& va, Party side);

// Framing (length prefixes, edge selectors, round markers) travels next to
// the payload but is counted separately.
struct TranscriptEntry {
  Party from = Party::kAlice;
  std::string label;
  BitBuffer framing;
  BitBuffer payload;
};

struct Transcript {
  std::vector<TranscriptEntry> messages;
  std::uint64_t bits_a_to_b = 0;  // payload only
  std::uint64_t bits_b_to_a = 0;
  std::uint64_t framing_a_to_b = 0;
  std::uint64_t framing_b_to_a = 0;

  void send(Party from, std::string label, BitBuffer framing, BitBuffer payload);
  std::uint64_t payload_bits() const { return bits_a_to_b + bits_b_to_a; }
  std::uint64_t framing_bits() const { return framing_a_to_b + framing_b_to_a; }
};

struct ListingResult {
  std::vector<VertexSubset> a_list;  // sorted
  std::vector<VertexSubset> b_list;
  Transcript transcript;
  std::uint64_t payload_bound = 0;  // the asserted upper bound on payload bits
  bool shortcut = false;            // diamond protocol: |cut| >= n^{3/2} branch taken

  std::vector<VertexSubset> all() const;  // sorted union
};

// Alice and Bob exchange E_A ∩ (V'_A × V_A) and E_B ∩ (V'_B × V_B); whoever
// holds at least ceil(k/2) vertices of a cycle lists it (ties to Alice).
// k in 3..7; throws InputError otherwise.
ListingResult cycle_listing_protocol(const Graph& g, const VertexSubset& va, std::size_t k);

// Heavy/light protocol for induced diamonds. v in V_A is heavy iff
// deg_B(v) > deg_A(v) / sqrt(n).
ListingResult diamond_listing_protocol(const Graph& g, const VertexSubset& va);

bool is_heavy(std::size_t deg_b, std::size_t deg_a, std::size_t n);

// 4 * ceil(log2 n) * n * |cut|.
std::uint64_t cycle_protocol_bound(std::size_t n, std::size_t cut);
// floor(12 * ceil(log2 n) * sqrt(n) * |cut|).
std::uint64_t diamond_protocol_bound(std::size_t n, std::size_t cut);

struct ReductionResult {
  int disj_answer = 1;
  int expected_disj = 1;  // from the predicate oracle
  bool validated = false;
  Transcript transcript;
  RunStats stats;
  std::uint64_t answer_bits = 0;  // the final Bob -> Alice bit, counted as framing
};

// Alice runs the va nodes, Bob the vb nodes; every message crossing the cut is
// written to the transcript. Framing per message: id_width(|cut|) bits naming
// the cut edge plus a continuation bit; each round and direction ends with a
// 0 bit.
ReductionResult congest_reduction(const FamilyInstance& inst, const NodeProgram& program,
                                  const SimConfig& config,
                                  const std::function<bool(const FamilyInstance&)>& predicate);

struct LimitationReport {
  std::string target;  // "cycles:k" or "diamond"
  std::size_t n = 0;
  std::size_t cut = 0;
  std::uint64_t protocol_bits = 0;  // upper bound of the matching protocol
  double log_n = 0;
  double ceiling = 0;  // protocol_bits / (cut * log n), rounds
  std::string growth;  // "n·polylog(n)" or "sqrt(n)·polylog(n)"
  bool degenerate = false;
  std::string arithmetic;
  std::string note;
};

// target: "diamond" or "cycles:k" with 3 <= k <= 7.
LimitationReport limitation_bound_report(std::size_t n, std::size_t cut, const std::string& target);

}  // namespace indsub
