#pragma once

#include <string>

#include "indsub/families.hpp"

namespace indsub {

inline constexpr int kBundleSchemaVersion = 1;

// An instance bundle is a directory holding graph.txt (canonical graph text),
// meta.json (tag, sides, cut, labels, blocks, K) and inputs.json (x, y in hex).
struct Bundle {
  FamilyInstance instance;
  InputPair inputs;
};

void write_bundle(const std::string& directory, const FamilyInstance& inst, const InputPair& in);

// Re-derives the cut from graph.txt and the stored sides; InputError when the
// files disagree with each other.
Bundle read_bundle(const std::string& directory);

// meta.json text for an instance (stable key order, 2-space indent).
std::string meta_json_text(const FamilyInstance& inst);
std::string inputs_json_text(const InputPair& in);

// Reads only the Alice side from a meta.json file; anything else is ignored.
// The Bob side is the complement in [0, n).
VertexSubset read_alice_side(const std::string& meta_path);

}  // namespace indsub
