#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indsub/congest.hpp"
#include "indsub/decomposition.hpp"
#include "indsub/diamond_listing.hpp"
#include "indsub/families.hpp"
#include "indsub/twoparty.hpp"

namespace indsub {

// Every JSON report and CSV sweep carries this.
inline constexpr int kReportSchemaVersion = 1;

// A family as selected on the command line.
struct FamilyParams {
  FamilyKind kind = FamilyKind::kC4;
  std::size_t n = 2;
  std::size_t k = 0;    // ck only
  std::size_t ell = 1;  // c8l only
  std::size_t m = 0;    // c8l only
  std::optional<std::uint64_t> seed;  // diamond only, required there
  bool hubs = true;
  CkWiring wiring = CkWiring::kAuto;
};

FamilyParams family_params_from_tag(const FamilyTag& tag);

// Spec for the family; for the diamond family the fixture is built (and
// returned through `fixture` when given). InputError on bad parameters.
FamilySpec make_family_spec(const FamilyParams& params, DiamondFixture* fixture = nullptr);

// JSON texts: stable key order, 2-space indent, trailing newline. No clocks,
// so identical inputs give identical bytes.
std::string family_report_json(const FamilyParams& params, const SweepOptions& sweep,
                               const FamilyReport& report, const DiamondFixture* fixture,
                               const std::string& mutation = "");

std::string diamond_listing_json(const Graph& g, const Decomposition& dec, const ListingParams& params,
                                 const DiamondListingResult& result,
                                 const std::optional<std::vector<VertexSubset>>& oracle);

std::string run_stats_json(const std::string& program, const SimConfig& config, const RunStats& stats,
                           std::size_t cut_size, const ReductionResult* reduction);

std::string listing_protocol_json(const std::string& protocol, std::size_t n, std::size_t cut,
                                  const ListingResult& result,
                                  const std::optional<std::vector<VertexSubset>>& oracle);

std::string limitation_json(const LimitationReport& report);

}  // namespace indsub
