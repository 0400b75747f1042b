#pragma once

#include <map>
#include <string>
#include <vector>

#include "indsub/families.hpp"

namespace indsub::detail {

// Incremental construction of a FamilyInstance: vertices are created with a
// block name, a label and a side; the cut is derived from the final graph.
class InstanceAssembler {
 public:
  VertexId add(const std::string& block, std::string label, int sub_block, bool alice);
  void edge(VertexId a, VertexId b);

  std::size_t vertex_count() const noexcept { return builder_.vertex_count(); }
  bool is_alice(VertexId v) const { return alice_.at(v) != 0; }

  FamilyInstance finish(FamilyTag tag, std::size_t input_bits) const;

 private:
  GraphBuilder builder_;
  std::vector<std::string> labels_;
  std::vector<int> sub_block_;
  std::vector<char> alice_;
  std::map<std::string, std::vector<VertexId>> blocks_;
};

}  // namespace indsub::detail
