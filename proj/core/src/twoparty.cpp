#include "indsub/twoparty.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "indsub/errors.hpp"
#include "indsub/oracles.hpp"

namespace indsub {

namespace {

using Wide = unsigned __int128;

std::uint64_t isqrt(Wide v) {
  auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::uint64_t>(r);
}

unsigned count_width(std::size_t n) { return id_width(n * n + 1); }

void push_edge(BitBuffer& out, const Edge& e, unsigned w) {
  out.push(e.u, w);
  out.push(e.v, w);
}

Edge read_edge(BitReader& in, unsigned w) {
  auto u = static_cast<VertexId>(in.read(w));
  auto v = static_cast<VertexId>(in.read(w));
  return Edge(u, v);
}

// One length-prefixed batch of edges: the count goes to framing.
void push_batch(BitBuffer& framing, BitBuffer& payload, const std::vector<Edge>& edges,
                std::size_t n) {
  framing.push(edges.size(), count_width(n));
  for (const Edge& e : edges) push_edge(payload, e, id_width(n));
}

std::vector<Edge> read_batch(BitReader& framing, BitReader& payload, std::size_t n) {
  std::size_t count = framing.read(count_width(n));
  std::vector<Edge> edges;
  edges.reserve(count);
  for (std::size_t i = 0; i < count; ++i) edges.push_back(read_edge(payload, id_width(n)));
  return edges;
}

Graph known_graph(const PartyView& view, const std::vector<Edge>& received) {
  GraphBuilder b(view.n);
  for (const Edge& e : view.known_edges) b.add_edge(e.u, e.v);
  for (const Edge& e : received) b.add_edge(e.u, e.v);
  return b.build();
}

std::size_t owned_count(const PartyView& view, const VertexSubset& s) {
  std::size_t c = 0;
  for (VertexId v : s) c += view.owns(v) ? 1 : 0;
  return c;
}

// Own endpoints of cut edges, ascending.
std::vector<VertexId> own_boundary(const PartyView& view) {
  std::vector<VertexId> out;
  for (const Edge& e : view.cut_edges) out.push_back(view.owns(e.u) ? e.u : e.v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> other_boundary(const PartyView& view) {
  std::vector<VertexId> out;
  for (const Edge& e : view.cut_edges) out.push_back(view.owns(e.u) ? e.v : e.u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Own-side neighbours (internal edges) and other-side neighbours (cut edges).
struct LocalDegrees {
  std::map<VertexId, std::vector<VertexId>> internal;
  std::map<VertexId, std::vector<VertexId>> across;
};

LocalDegrees local_adjacency(const PartyView& view) {
  LocalDegrees d;
  for (const Edge& e : view.known_edges) {
    bool ou = view.owns(e.u);
    bool ov = view.owns(e.v);
    if (ou && ov) {
      d.internal[e.u].push_back(e.v);
      d.internal[e.v].push_back(e.u);
    } else if (ou != ov) {
      VertexId mine = ou ? e.u : e.v;
      VertexId theirs = ou ? e.v : e.u;
      d.across[mine].push_back(theirs);
    }
  }
  for (auto& [v, l] : d.internal) std::sort(l.begin(), l.end());
  for (auto& [v, l] : d.across) std::sort(l.begin(), l.end());
  return d;
}

const std::vector<VertexId>& lookup(const std::map<VertexId, std::vector<VertexId>>& m, VertexId v) {
  static const std::vector<VertexId> kEmpty;
  auto it = m.find(v);
  return it == m.end() ? kEmpty : it->second;
}

// --- cycle protocol, one party's side ----------------------------------------

// E_own ∩ (V'_own × V_own).
std::vector<Edge> boundary_internal_edges(const PartyView& view) {
  std::vector<VertexId> boundary = own_boundary(view);
  std::vector<Edge> out;
  for (const Edge& e : view.known_edges) {
    if (!view.owns(e.u) || !view.owns(e.v)) continue;
    if (std::binary_search(boundary.begin(), boundary.end(), e.u) ||
        std::binary_search(boundary.begin(), boundary.end(), e.v)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<VertexSubset> cycle_party_list(const PartyView& view, const std::vector<Edge>& received,
                                           std::size_t k) {
  Graph g = known_graph(view, received);
  const std::size_t half_up = (k + 1) / 2;
  std::vector<VertexSubset> out;
  for (VertexSubset& c : list_induced_cycles(g, k)) {
    std::size_t mine = owned_count(view, c);
    bool keep = view.side == Party::kAlice ? mine >= half_up : k - mine < half_up;
    if (keep) out.push_back(std::move(c));
  }
  return out;
}

// --- diamond protocol, one party's side --------------------------------------

std::vector<VertexSubset> diamond_alice_list(const PartyView& view, const std::vector<Edge>& received,
                                             const std::map<VertexId, bool>& heavy) {
  Graph g = known_graph(view, received);
  LocalDegrees adj = local_adjacency(view);
  std::vector<VertexSubset> out;
  for (VertexSubset& d : list_induced_diamonds(g)) {
    std::size_t mine = owned_count(view, d);
    if (mine >= 3) {
      out.push_back(std::move(d));
      continue;
    }
    if (mine != 2) continue;
    std::vector<VertexId> bs;
    for (VertexId v : d) {
      if (!view.owns(v)) bs.push_back(v);
    }
    bool covered = false;
    for (VertexId a : d) {
      if (!view.owns(a)) continue;
      auto it = heavy.find(a);
      if (it != heavy.end() && it->second) continue;
      const auto& nb = lookup(adj.across, a);
      if (std::binary_search(nb.begin(), nb.end(), bs[0]) &&
          std::binary_search(nb.begin(), nb.end(), bs[1])) {
        covered = true;
      }
    }
    if (covered) out.push_back(std::move(d));
  }
  return out;
}

std::vector<VertexSubset> diamond_bob_list(const PartyView& view, const std::vector<Edge>& received,
                                           const std::map<VertexId, bool>& heavy) {
  Graph g = known_graph(view, received);
  LocalDegrees adj = local_adjacency(view);
  std::vector<VertexSubset> out;
  for (VertexSubset& d : list_induced_diamonds(g)) {
    std::size_t mine = owned_count(view, d);
    if (mine >= 3) {
      out.push_back(std::move(d));
      continue;
    }
    if (mine != 2) continue;
    std::vector<VertexId> bs;
    std::vector<VertexId> as;
    for (VertexId v : d) (view.owns(v) ? bs : as).push_back(v);
    // A-vertices adjacent to both B-vertices; Bob lists iff all of them are heavy.
    std::size_t pivots = 0;
    bool all_heavy = true;
    for (VertexId a : as) {
      const auto& b_side = lookup(adj.across, bs[0]);
      const auto& b_side2 = lookup(adj.across, bs[1]);
      if (!std::binary_search(b_side.begin(), b_side.end(), a) ||
          !std::binary_search(b_side2.begin(), b_side2.end(), a)) {
        continue;
      }
      ++pivots;
      auto it = heavy.find(a);
      if (it == heavy.end() || !it->second) all_heavy = false;
    }
    if (pivots > 0 && all_heavy) out.push_back(std::move(d));
  }
  return out;
}

std::vector<VertexSubset> sorted_unique(std::vector<VertexSubset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_bound(const ListingResult& r, const char* protocol) {
  if (r.transcript.payload_bits() > r.payload_bound) {
    throw InternalError(std::string(protocol) + ": payload " +
                        std::to_string(r.transcript.payload_bits()) + " bits exceeds bound " +
                        std::to_string(r.payload_bound));
  }
}

}  // namespace

std::string to_string(Party p) { return p == Party::kAlice ? "alice" : "bob"; }

PartyView make_party_view(const Graph& g, const VertexSubset& va, Party side) {
  g.check_subset(va);
  const std::size_t n = g.vertex_count();
  std::vector<char> alice = side_mask(n, va);
  PartyView view;
  view.side = side;
  view.n = n;
  std::vector<VertexId> own;
  for (VertexId v = 0; v < n; ++v) {
    if ((alice[v] != 0) == (side == Party::kAlice)) own.push_back(v);
  }
  view.own = VertexSubset(std::move(own));
  for (const Edge& e : g.edges()) {
    bool ou = view.own.contains(e.u);
    bool ov = view.own.contains(e.v);
    if (ou || ov) view.known_edges.push_back(e);
    if (ou != ov) view.cut_edges.push_back(e);
  }
  return view;
}

void Transcript::send(Party from, std::string label, BitBuffer framing, BitBuffer payload) {
  if (from == Party::kAlice) {
    bits_a_to_b += payload.size();
    framing_a_to_b += framing.size();
  } else {
    bits_b_to_a += payload.size();
    framing_b_to_a += framing.size();
  }
  messages.push_back({from, std::move(label), std::move(framing), std::move(payload)});
}

std::vector<VertexSubset> ListingResult::all() const {
  std::vector<VertexSubset> u = a_list;
  u.insert(u.end(), b_list.begin(), b_list.end());
  return sorted_unique(std::move(u));
}

std::uint64_t cycle_protocol_bound(std::size_t n, std::size_t cut) {
  return 4ULL * id_width(n) * n * cut;
}

std::uint64_t diamond_protocol_bound(std::size_t n, std::size_t cut) {
  Wide base = static_cast<Wide>(12) * id_width(n) * cut;
  return isqrt(base * base * n);
}

bool is_heavy(std::size_t deg_b, std::size_t deg_a, std::size_t n) {
  // deg_b > deg_a / sqrt(n), squared to stay in integers.
  return static_cast<Wide>(deg_b) * deg_b * n > static_cast<Wide>(deg_a) * deg_a;
}

ListingResult cycle_listing_protocol(const Graph& g, const VertexSubset& va, std::size_t k) {
  if (k < 3 || k > 7) {
    throw InputError("cycle listing protocol supports 3 <= k <= 7, got k = " + std::to_string(k));
  }
  const PartyView alice = make_party_view(g, va, Party::kAlice);
  const PartyView bob = make_party_view(g, va, Party::kBob);
  const std::size_t n = g.vertex_count();

  ListingResult result;
  result.payload_bound = cycle_protocol_bound(n, alice.cut_edges.size());
  std::vector<Edge> to_alice;
  std::vector<Edge> to_bob;
  if (!alice.cut_edges.empty()) {
    // Step 1: Bob -> Alice.
    {
      BitBuffer framing, payload;
      push_batch(framing, payload, boundary_internal_edges(bob), n);
      result.transcript.send(Party::kBob, "E_B ∩ (V'_B × V_B)", framing, payload);
    }
    // Step 2: Alice -> Bob.
    {
      BitBuffer framing, payload;
      push_batch(framing, payload, boundary_internal_edges(alice), n);
      result.transcript.send(Party::kAlice, "E_A ∩ (V'_A × V_A)", framing, payload);
    }
    for (const TranscriptEntry& m : result.transcript.messages) {
      BitReader fr(m.framing), pr(m.payload);
      (m.from == Party::kBob ? to_alice : to_bob) = read_batch(fr, pr, n);
    }
  }
  result.a_list = cycle_party_list(alice, to_alice, k);
  result.b_list = cycle_party_list(bob, to_bob, k);
  check_bound(result, "cycle protocol");
  return result;
}

ListingResult diamond_listing_protocol(const Graph& g, const VertexSubset& va) {
  const PartyView alice = make_party_view(g, va, Party::kAlice);
  const PartyView bob = make_party_view(g, va, Party::kBob);
  const std::size_t n = g.vertex_count();
  const std::size_t cut = alice.cut_edges.size();

  ListingResult result;
  result.payload_bound = diamond_protocol_bound(n, cut);
  Transcript& t = result.transcript;

  // |cut| >= n^{3/2}: Alice ships E_A and Bob lists everything she cannot.
  if (cut > 0 && static_cast<Wide>(cut) * cut >= static_cast<Wide>(n) * n * n) {
    result.shortcut = true;
    std::vector<Edge> e_a;
    for (const Edge& e : alice.known_edges) {
      if (alice.owns(e.u) && alice.owns(e.v)) e_a.push_back(e);
    }
    BitBuffer framing, payload;
    push_batch(framing, payload, e_a, n);
    t.send(Party::kAlice, "E_A", framing, payload);

    BitReader fr(t.messages[0].framing), pr(t.messages[0].payload);
    std::vector<Edge> received = read_batch(fr, pr, n);
    Graph bob_graph = known_graph(bob, received);
    for (VertexSubset& d : list_induced_diamonds(bob_graph)) {
      if (owned_count(alice, d) >= 3) {
        result.a_list.push_back(d);
      } else {
        result.b_list.push_back(std::move(d));
      }
    }
    check_bound(result, "diamond protocol");
    return result;
  }

  std::map<VertexId, bool> alice_heavy;  // Alice's own computation
  std::vector<VertexId> alice_boundary = own_boundary(alice);
  if (cut > 0) {
    // Alice -> Bob: heavy flags over V'_A, then each heavy vertex's A-edges.
    LocalDegrees adj = local_adjacency(alice);
    BitBuffer flags;
    BitBuffer framing, payload;
    for (VertexId v : alice_boundary) {
      bool heavy = is_heavy(lookup(adj.across, v).size(), lookup(adj.internal, v).size(), n);
      alice_heavy[v] = heavy;
      flags.push_bit(heavy);
    }
    t.send(Party::kAlice, "heavy flags over V'_A", BitBuffer(), flags);
    for (VertexId v : alice_boundary) {
      if (!alice_heavy[v]) continue;
      std::vector<Edge> edges;
      for (VertexId w : lookup(adj.internal, v)) edges.emplace_back(v, w);
      push_batch(framing, payload, edges, n);
    }
    t.send(Party::kAlice, "E_A ∩ (V_A^heavy × V_A)", framing, payload);
  }

  // Bob decodes with his own view only.
  std::map<VertexId, bool> bob_heavy;
  std::vector<Edge> bob_received;
  if (cut > 0) {
    std::vector<VertexId> boundary = other_boundary(bob);
    BitReader flags(t.messages[0].payload);
    for (VertexId v : boundary) bob_heavy[v] = flags.read_bit();
    BitReader fr(t.messages[1].framing), pr(t.messages[1].payload);
    for (VertexId v : boundary) {
      if (!bob_heavy[v]) continue;
      auto edges = read_batch(fr, pr, n);
      bob_received.insert(bob_received.end(), edges.begin(), edges.end());
    }

    // Bob -> Alice: E_B ∩ (N_B(v) × N_B(v)) for each light v in V'_A.
    LocalDegrees adj = local_adjacency(bob);
    std::map<VertexId, std::vector<VertexId>> nb;  // A-vertex -> its B-neighbours
    for (const Edge& e : bob.cut_edges) {
      VertexId a = bob.owns(e.u) ? e.v : e.u;
      VertexId b = bob.owns(e.u) ? e.u : e.v;
      nb[a].push_back(b);
    }
    BitBuffer framing, payload;
    for (VertexId v : boundary) {
      if (bob_heavy[v]) continue;
      auto& bs = nb[v];
      std::sort(bs.begin(), bs.end());
      std::vector<Edge> square;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        const auto& inner = lookup(adj.internal, bs[i]);
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
          if (std::binary_search(inner.begin(), inner.end(), bs[j])) square.emplace_back(bs[i], bs[j]);
        }
      }
      push_batch(framing, payload, square, n);
    }
    t.send(Party::kBob, "E_B ∩ (N_B(v) × N_B(v)), v light", framing, payload);
  }

  std::vector<Edge> alice_received;
  if (cut > 0) {
    BitReader fr(t.messages[2].framing), pr(t.messages[2].payload);
    for (VertexId v : alice_boundary) {
      if (alice_heavy[v]) continue;
      auto edges = read_batch(fr, pr, n);
      alice_received.insert(alice_received.end(), edges.begin(), edges.end());
    }
  }
  result.a_list = sorted_unique(diamond_alice_list(alice, alice_received, alice_heavy));
  result.b_list = sorted_unique(diamond_bob_list(bob, bob_received, bob_heavy));
  check_bound(result, "diamond protocol");
  return result;
}

ReductionResult congest_reduction(const FamilyInstance& inst, const NodeProgram& program,
                                  const SimConfig& config,
                                  const std::function<bool(const FamilyInstance&)>& predicate) {
  const std::size_t n = inst.graph.vertex_count();
  const std::vector<char> alice = side_mask(n, inst.va);
  const unsigned selector = id_width(inst.cut_edges.size());

  struct Crossing {
    std::size_t round;
    Party from;
    std::size_t cut_index;
    BitBuffer payload;
  };
  std::vector<Crossing> crossings;
  RunOptions options;
  options.alice_side = inst.va;
  options.on_cut_message = [&](std::size_t round, const Message& m) {
    auto it = std::lower_bound(inst.cut_edges.begin(), inst.cut_edges.end(), Edge(m.src, m.dst));
    if (it == inst.cut_edges.end() || *it != Edge(m.src, m.dst)) {
      throw InternalError("cut message on an edge missing from the instance's cut");
    }
    crossings.push_back({round, alice[m.src] ? Party::kAlice : Party::kBob,
                         static_cast<std::size_t>(it - inst.cut_edges.begin()), m.payload});
  };

  ReductionResult result;
  result.stats = run(inst.graph, program, config, options);

  Transcript& t = result.transcript;
  for (std::size_t round = 1; round <= result.stats.rounds_used; ++round) {
    for (Party from : {Party::kAlice, Party::kBob}) {
      for (const Crossing& c : crossings) {
        if (c.round != round || c.from != from) continue;
        BitBuffer framing;
        framing.push_bit(true);
        framing.push(c.cut_index, selector);
        t.send(from, "round " + std::to_string(round), framing, c.payload);
      }
      BitBuffer end;
      end.push_bit(false);
      t.send(from, "round " + std::to_string(round) + " end", end, BitBuffer());
    }
  }
  if (t.payload_bits() != result.stats.total_cut_bits) {
    throw InternalError("reduction transcript disagrees with the simulator's cut accounting");
  }

  bool alice_yes = false;
  bool bob_yes = false;
  for (VertexId v = 0; v < n; ++v) {
    bool yes = result.stats.node_outputs[v].value_or(false);
    (alice[v] ? alice_yes : bob_yes) |= yes;
  }
  BitBuffer answer;
  answer.push_bit(bob_yes);
  t.send(Party::kBob, "answer", answer, BitBuffer());
  result.answer_bits = 1;

  result.disj_answer = (alice_yes || bob_yes) ? 0 : 1;
  result.expected_disj = predicate(inst) ? 0 : 1;
  result.validated = result.disj_answer == result.expected_disj;
  return result;
}

LimitationReport limitation_bound_report(std::size_t n, std::size_t cut, const std::string& target) {
  LimitationReport r;
  r.target = target;
  r.n = n;
  r.cut = cut;
  r.log_n = static_cast<double>(id_width(n));
  std::ostringstream arith;
  if (target == "diamond") {
    r.protocol_bits = diamond_protocol_bound(n, cut);
    r.growth = "sqrt(n)·polylog(n)";
    arith << "CC <= 12*ceil(log2 n)*sqrt(n)*|cut| = " << r.protocol_bits << " bits";
  } else if (target.rfind("cycles:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(target.substr(7));
    } catch (const std::logic_error&) {
      throw InputError("bad target '" + target + "'");
    }
    if (k < 3 || k > 7) throw InputError("limitation report covers cycles with 3 <= k <= 7");
    r.protocol_bits = cycle_protocol_bound(n, cut);
    r.growth = "n·polylog(n)";
    arith << "CC <= 4*ceil(log2 n)*n*|cut| = " << r.protocol_bits << " bits";
  } else {
    throw InputError("target must be 'diamond' or 'cycles:k'");
  }
  if (cut == 0) {
    r.degenerate = true;
    r.ceiling = 0;
    arith << "; |cut| = 0, no lower bound can be transferred";
  } else {
    r.ceiling = static_cast<double>(r.protocol_bits) / (static_cast<double>(cut) * r.log_n);
    arith << "; rounds >= CC / (|cut| * log n) <= " << r.protocol_bits << " / (" << cut << " * "
          << r.log_n << ") = " << r.ceiling;
  }
  r.arithmetic = arith.str();
  r.note = "ceiling on what the family-of-lower-bound-graphs technique can certify; "
           "not a statement about algorithms";
  return r;
}

}  // namespace indsub
