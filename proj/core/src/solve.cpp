#include "treedom/solve.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "treedom/error.hpp"
#include "treedom/tree_model.hpp"

namespace treedom {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const VertexSet& s) {
  ordered_json out = ordered_json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "auto") return InputFormat::kAuto;
  if (name == "par") return InputFormat::kParent;
  if (name == "edg") return InputFormat::kEdgeList;
  throw InvalidArgumentError("unknown input format '" + std::string(name) +
                             "' (expected auto, par or edg)");
}

VertexSet LoadedTree::to_input_labels(const VertexSet& s) const {
  if (original_label.empty()) return s;
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(original_label[v]);
  return VertexSet(std::move(out));
}

LoadedTree load_tree(const std::filesystem::path& path, InputFormat format) {
  if (format == InputFormat::kAuto) {
    format = path.extension() == ".edg" ? InputFormat::kEdgeList : InputFormat::kParent;
  }
  LoadedTree out;
  if (format == InputFormat::kParent) {
    out.parents = read_parent_file(path);
    return out;
  }
  Relabeling relabeled = relabel_bfs(read_edge_list(path));
  out.parents = std::move(relabeled.parents);
  out.original_label = std::move(relabeled.old_label);
  return out;
}

std::string solve_report_json(const LoadedTree& tree, const SteinerDominationResult& r) {
  ordered_json j;
  j["n"] = tree.parents.size();
  j["leaves"] = to_json(tree.to_input_labels(r.leaves));
  j["h_vertices"] = to_json(tree.to_input_labels(r.h.tree_labels()));
  j["gamma_h"] = r.d_h.size();
  j["steiner_dominating_set"] = to_json(tree.to_input_labels(r.sd));
  j["size"] = r.size;
  j["formula_value"] = r.formula_value;
  return j.dump();
}

std::string solve_report_text(const LoadedTree& tree, const SteinerDominationResult& r) {
  std::string out;
  out += "n: " + std::to_string(tree.parents.size()) + '\n';
  out += "leaves: " + join(tree.to_input_labels(r.leaves)) + '\n';
  out += "h_vertices: " + join(tree.to_input_labels(r.h.tree_labels())) + '\n';
  out += "gamma_h: " + std::to_string(r.d_h.size()) + '\n';
  out += "steiner_dominating_set: " + join(tree.to_input_labels(r.sd)) + '\n';
  out += "size: " + std::to_string(r.size) + '\n';
  out += "formula_value: " + std::to_string(r.formula_value) + '\n';
  return out;
}

std::string forest_report_json(const ParentArray& parents, const VertexSet& d) {
  ordered_json j;
  j["n"] = parents.size();
  j["roots"] = to_json(validate(parents, ForestMode::kForest).roots);
  j["dominating_set"] = to_json(d);
  j["size"] = d.size();
  return j.dump();
}

std::string forest_report_text(const ParentArray& parents, const VertexSet& d) {
  std::string out;
  out += "n: " + std::to_string(parents.size()) + '\n';
  out += "roots: " + join(validate(parents, ForestMode::kForest).roots) + '\n';
  out += "dominating_set: " + join(d) + '\n';
  out += "size: " + std::to_string(d.size()) + '\n';
  return out;
}

}  // namespace treedom
