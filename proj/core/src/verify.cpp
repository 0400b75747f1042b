#include <map>

#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/oracles.hpp"
#include "indsub/random.hpp"

namespace indsub {

namespace {

BitString bits_of(std::uint64_t value, std::size_t length) {
  BitString bits(length, false);
  for (std::size_t i = 0; i < length; ++i) bits[i] = (value >> i) & 1U;
  return bits;
}

BitString unit(std::size_t length, std::size_t k) {
  BitString bits(length, false);
  bits[k] = true;
  return bits;
}

std::string key_of(const BitString& bits) { return to_binary(bits); }

std::optional<std::size_t> first_shared_index(const InputPair& in) {
  for (std::size_t i = 0; i < in.x.size(); ++i) {
    if (in.x[i] && in.y[i]) return i;
  }
  return std::nullopt;
}

FamilySpec cycle_spec(std::string name, std::size_t k,
                      std::function<FamilyInstance(const InputPair&)> build, std::size_t bits) {
  FamilySpec spec;
  spec.name = std::move(name);
  spec.input_bits = bits;
  spec.build = std::move(build);
  spec.predicate = [k](const FamilyInstance& inst) { return find_induced_cycle(inst.graph, k); };
  return spec;
}

}  // namespace

FamilySpec c4_family_spec(std::size_t n) {
  return cycle_spec("c4(n=" + std::to_string(n) + ")", 4,
                    [n](const InputPair& in) { return build_c4_family(n, in); }, n * n);
}

FamilySpec ck_family_spec(std::size_t n, std::size_t k, CkWiring wiring) {
  std::string name = "ck(n=" + std::to_string(n) + ",k=" + std::to_string(k);
  if (wiring == CkWiring::kCliques) name += ",cliques";
  return cycle_spec(name + ")", k,
                    [n, k, wiring](const InputPair& in) {
                      return build_ck_subdivided_family(n, k, in, wiring);
                    },
                    n * n);
}

FamilySpec c8l_family_spec(std::size_t n, std::size_t ell, std::size_t m, bool hubs) {
  std::string name = "c8l(n=" + std::to_string(n) + ",ell=" + std::to_string(ell) +
                     ",m=" + std::to_string(m);
  if (!hubs) name += ",no-hubs";
  return cycle_spec(name + ")", 8 * ell + m,
                    [n, ell, m, hubs](const InputPair& in) {
                      return build_c8l_family(n, ell, m, in, hubs);
                    },
                    n * n);
}

FamilySpec diamond_family_spec(const DiamondFixture& fix) {
  FamilySpec spec;
  spec.name = "diamond(n=" + std::to_string(fix.n) + ",seed=" + std::to_string(fix.seed) + ")";
  spec.input_bits = fix.quadruples.size();
  spec.build = [fix](const InputPair& in) { return build_diamond_family(fix, in); };
  spec.predicate = [](const FamilyInstance& inst) { return find_22_diamond(inst); };
  return spec;
}

std::vector<InputPair> sweep_pairs(std::size_t input_bits, const SweepOptions& options,
                                   bool* exhaustive) {
  std::vector<InputPair> pairs;
  const std::size_t k = input_bits;
  bool full = 2 * k < 64 && (std::uint64_t{1} << (2 * k)) <= options.exhaustive_limit;
  if (exhaustive != nullptr) *exhaustive = full;
  if (full) {
    const std::uint64_t count = std::uint64_t{1} << k;
    pairs.reserve(count * count);
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t y = 0; y < count; ++y) pairs.push_back({bits_of(x, k), bits_of(y, k)});
    }
    return pairs;
  }
  if (options.include_designed) {
    pairs.push_back(InputPair::zeros(k));
    pairs.push_back({BitString(k, true), BitString(k, true)});
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({unit(k, i), unit(k, i)});
      pairs.push_back({unit(k, i), zero_bits(k)});
      BitString rest(k, true);
      rest[i] = false;
      pairs.push_back({unit(k, i), rest});
    }
  }
  Rng rng(mix_seed(options.seed, 0x5A3B1E));
  static constexpr double kDensities[] = {0.1, 0.3, 0.5};
  for (std::size_t s = 0; s < options.samples; ++s) {
    double p = kDensities[s % 3];
    InputPair in = InputPair::zeros(k);
    for (std::size_t i = 0; i < k; ++i) {
      in.x[i] = rng.coin(p);
      in.y[i] = rng.coin(p);
    }
    // Alternate between forced-disjoint pairs, single-intersection pairs and raw draws.
    switch (s % 3) {
      case 0:
        for (std::size_t i = 0; i < k; ++i) {
          if (in.x[i]) in.y[i] = false;
        }
        break;
      case 1: {
        for (std::size_t i = 0; i < k; ++i) {
          if (in.x[i]) in.y[i] = false;
        }
        if (k > 0) {
          std::size_t shared = static_cast<std::size_t>(rng.below(k));
          in.x[shared] = true;
          in.y[shared] = true;
        }
        break;
      }
      default:
        break;
    }
    pairs.push_back(std::move(in));
  }
  return pairs;
}

FamilyReport verify_family_conditions(const FamilySpec& spec, const SweepOptions& options) {
  FamilyReport report;
  report.family = spec.name;
  report.input_bits = spec.input_bits;
  const std::size_t k = spec.input_bits;

  const FamilyInstance baseline = spec.build(InputPair::zeros(k));
  const std::size_t n = baseline.graph.vertex_count();
  const std::vector<char> alice = side_mask(n, baseline.va);
  std::vector<char> bob(n);
  for (std::size_t v = 0; v < n; ++v) bob[v] = alice[v] ? 0 : 1;
  const std::vector<Edge> baseline_cut = crossing_edges(baseline.graph, alice);

  // Side-internal edges of G(x, 0) and G(0, y), cached per string.
  std::map<std::string, std::vector<Edge>> alice_edges_by_x;
  std::map<std::string, std::vector<Edge>> bob_edges_by_y;
  auto alice_reference = [&](const BitString& x) -> const std::vector<Edge>& {
    auto [it, fresh] = alice_edges_by_x.try_emplace(key_of(x));
    if (fresh) it->second = edges_within(spec.build({x, zero_bits(k)}).graph, alice);
    return it->second;
  };
  auto bob_reference = [&](const BitString& y) -> const std::vector<Edge>& {
    auto [it, fresh] = bob_edges_by_y.try_emplace(key_of(y));
    if (fresh) it->second = edges_within(spec.build({zero_bits(k), y}).graph, bob);
    return it->second;
  };

  bool exhaustive = false;
  const std::vector<InputPair> pairs = sweep_pairs(k, options, &exhaustive);
  report.exhaustive = exhaustive;

  for (const InputPair& in : pairs) {
    ++report.pairs_checked;
    const FamilyInstance inst = spec.build(in);
    auto fail = [&](int condition, std::string detail, std::optional<VertexSubset> witness = {}) {
      report.violations.push_back({condition, in, std::move(witness), std::move(detail)});
    };

    // 1: same vertices, same bipartition, same cut.
    if (inst.graph.vertex_count() != n || inst.va != baseline.va || inst.vb != baseline.vb) {
      fail(1, "vertex set or bipartition differs from G(0,0)");
      continue;
    }
    std::vector<Edge> cut = crossing_edges(inst.graph, alice);
    if (cut != baseline_cut) fail(1, "cut edges differ from G(0,0)");
    if (cut != inst.cut_edges) fail(1, "reported cut edges differ from E(V_A, V_B)");
    // 2 and 3: each side's internal edges depend only on that side's input.
    if (edges_within(inst.graph, alice) != alice_reference(in.x)) {
      fail(2, "E(V_A, V_A) depends on y");
    }
    if (edges_within(inst.graph, bob) != bob_reference(in.y)) {
      fail(3, "E(V_B, V_B) depends on x");
    }
    // 4: predicate holds exactly when the inputs intersect.
    std::optional<VertexSubset> witness = spec.predicate(inst);
    bool intersecting = disj(in.x, in.y) == 0;
    if (witness) ++report.predicate_true;
    if (intersecting) ++report.disj_zero;
    if (witness && !intersecting) {
      fail(4, "predicate holds although DISJ(x,y) = 1", witness);
    } else if (!witness && intersecting) {
      fail(4, "predicate fails although x and y share index " +
                  std::to_string(*first_shared_index(in)));
    }
  }
  return report;
}

}  // namespace indsub
