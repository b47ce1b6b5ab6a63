#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treedom/parent_array.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/vertex_set.hpp"

namespace treedom {

enum class InputFormat { kAuto, kParent, kEdgeList };

/// "auto", "par" or "edg".
InputFormat parse_input_format(std::string_view name);

struct LoadedTree {
  ParentArray parents;
  /// original_label[v] is the input label of internal vertex v; empty when
  /// the input was already a parent array.
  std::vector<Vertex> original_label;

  VertexSet to_input_labels(const VertexSet& s) const;
};

/// Reads a .par file as-is, or an .edg file relabeled breadth-first from a
/// maximum-degree root. kAuto decides by extension (.edg, else .par).
LoadedTree load_tree(const std::filesystem::path& path, InputFormat format);

/// One-line JSON object with fields n, leaves, h_vertices, gamma_h,
/// steiner_dominating_set, size, formula_value (in that order). Labels are
/// reported in the input labeling.
std::string solve_report_json(const LoadedTree& tree, const SteinerDominationResult& r);
std::string solve_report_text(const LoadedTree& tree, const SteinerDominationResult& r);

/// One-line JSON {"n", "roots", "dominating_set", "size"}.
std::string forest_report_json(const ParentArray& parents, const VertexSet& d);
std::string forest_report_text(const ParentArray& parents, const VertexSet& d);

}  // namespace treedom
