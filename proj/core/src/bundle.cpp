#include "indsub/bundle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "indsub/errors.hpp"

namespace indsub {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

ordered_json subset_json(const VertexSubset& s) {
  ordered_json arr = ordered_json::array();
  for (VertexId v : s) arr.push_back(v);
  return arr;
}

VertexSubset subset_from(const ordered_json& arr) {
  std::vector<VertexId> ids;
  for (const auto& v : arr) ids.push_back(v.get<VertexId>());
  return VertexSubset(std::move(ids));
}

ordered_json tag_json(const FamilyTag& tag) {
  ordered_json j;
  j["kind"] = to_string(tag.kind);
  j["n"] = tag.n;
  j["k"] = tag.k;
  j["ell"] = tag.ell;
  j["m"] = tag.m;
  if (tag.seed) j["seed"] = *tag.seed;
  if (!tag.variant.empty()) j["variant"] = tag.variant;
  return j;
}

FamilyTag tag_from(const ordered_json& j) {
  FamilyTag tag;
  tag.kind = family_kind_from_string(j.at("kind").get<std::string>());
  tag.n = j.at("n").get<std::size_t>();
  tag.k = j.at("k").get<std::size_t>();
  tag.ell = j.at("ell").get<std::size_t>();
  tag.m = j.at("m").get<std::size_t>();
  if (j.contains("seed")) tag.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("variant")) tag.variant = j.at("variant").get<std::string>();
  return tag;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ordered_json parse_file(const fs::path& path) {
  try {
    return ordered_json::parse(slurp(path));
  } catch (const ordered_json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string meta_json_text(const FamilyInstance& inst) {
  ordered_json j;
  j["schema_version"] = kBundleSchemaVersion;
  j["family"] = tag_json(inst.tag);
  j["n"] = inst.graph.vertex_count();
  j["K"] = inst.input_bits;
  j["va"] = subset_json(inst.va);
  j["vb"] = subset_json(inst.vb);
  ordered_json cut = ordered_json::array();
  for (const Edge& e : inst.cut_edges) cut.push_back({e.u, e.v});
  j["cut_edges"] = std::move(cut);
  j["labels"] = inst.labels;
  ordered_json blocks = ordered_json::object();
  for (const auto& [name, members] : inst.blocks) blocks[name] = subset_json(members);
  j["blocks"] = std::move(blocks);
  j["sub_block"] = inst.sub_block;
  return j.dump(2) + "\n";
}

std::string inputs_json_text(const InputPair& in) {
  ordered_json j;
  j["schema_version"] = kBundleSchemaVersion;
  j["K"] = in.x.size();
  j["x"] = to_hex(in.x);
  j["y"] = to_hex(in.y);
  return j.dump(2) + "\n";
}

void write_bundle(const std::string& directory, const FamilyInstance& inst, const InputPair& in) {
  fs::path dir(directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + directory + ": " + ec.message());
  write_graph_file((dir / "graph.txt").string(), inst.graph);
  spit(dir / "meta.json", meta_json_text(inst));
  spit(dir / "inputs.json", inputs_json_text(in));
}

Bundle read_bundle(const std::string& directory) {
  fs::path dir(directory);
  Bundle bundle;
  FamilyInstance& inst = bundle.instance;
  inst.graph = read_graph_file((dir / "graph.txt").string());
  const std::size_t n = inst.graph.vertex_count();

  ordered_json meta = parse_file(dir / "meta.json");
  try {
    if (meta.at("schema_version").get<int>() != kBundleSchemaVersion) {
      throw InputError("meta.json: unsupported schema_version");
    }
    if (meta.at("n").get<std::size_t>() != n) {
      throw InputError("meta.json: n disagrees with graph.txt");
    }
    inst.tag = tag_from(meta.at("family"));
    inst.input_bits = meta.at("K").get<std::size_t>();
    inst.va = subset_from(meta.at("va"));
    inst.vb = subset_from(meta.at("vb"));
    inst.labels = meta.at("labels").get<std::vector<std::string>>();
    inst.sub_block = meta.at("sub_block").get<std::vector<int>>();
    for (const auto& [name, members] : meta.at("blocks").items()) {
      inst.blocks.emplace(name, subset_from(members));
    }
    std::vector<Edge> stored_cut;
    for (const auto& e : meta.at("cut_edges")) {
      stored_cut.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    }
    inst.graph.check_subset(inst.va);
    inst.graph.check_subset(inst.vb);
    if (inst.va.size() + inst.vb.size() != n) {
      throw InputError("meta.json: va and vb do not partition the vertex set");
    }
    std::vector<char> alice = side_mask(n, inst.va);
    for (VertexId v : inst.vb) {
      if (alice[v]) throw InputError("meta.json: vertex " + std::to_string(v) + " on both sides");
    }
    inst.cut_edges = crossing_edges(inst.graph, alice);
    std::sort(stored_cut.begin(), stored_cut.end());
    if (stored_cut != inst.cut_edges) {
      throw InputError("meta.json: cut_edges disagree with graph.txt and the sides");
    }
    if (inst.labels.size() != n || inst.sub_block.size() != n) {
      throw InputError("meta.json: labels/sub_block must have one entry per vertex");
    }

    ordered_json inputs = parse_file(dir / "inputs.json");
    std::size_t k = inputs.at("K").get<std::size_t>();
    if (k != inst.input_bits) throw InputError("inputs.json: K disagrees with meta.json");
    bundle.inputs.x = from_hex(inputs.at("x").get<std::string>(), k);
    bundle.inputs.y = from_hex(inputs.at("y").get<std::string>(), k);
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bundle ") + directory + ": " + e.what());
  }
  return bundle;
}

VertexSubset read_alice_side(const std::string& meta_path) {
  ordered_json meta = parse_file(meta_path);
  try {
    return subset_from(meta.at("va"));
  } catch (const ordered_json::exception& e) {
    throw InputError(meta_path + ": " + e.what());
  }
}

}  // namespace indsub
