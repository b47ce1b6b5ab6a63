#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treedom/error.hpp"
#include "treedom/parent_array.hpp"
#include "treedom/vertex_set.hpp"

namespace treedom {

/// Children lists (CSR layout) and unrooted degrees derived from a
/// ParentArray, over the same labels.
class AdjacencyTree {
 public:
  AdjacencyTree() = default;
  explicit AdjacencyTree(const ParentArray& parents);

  Vertex size() const { return n_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  bool is_root(Vertex v) const { return parent_[v] == kNoParent; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_begin_[v],
            children_.data() + child_begin_[v + 1]};
  }
  Vertex degree(Vertex v) const { return degree_[v]; }
  std::span<const Vertex> roots() const { return roots_; }

  /// Calls `f(u)` for every u in N(v): the parent first, then children in
  /// ascending order.
  template <typename F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (parent_[v] != kNoParent) f(parent_[v]);
    for (Vertex c : children(v)) f(c);
  }

 private:
  Vertex n_ = 0;
  std::vector<Vertex> parent_{kNoParent};
  std::vector<Vertex> child_begin_{0, 0};
  std::vector<Vertex> children_;
  std::vector<Vertex> degree_{0};
  std::vector<Vertex> roots_;
};

enum class ForestMode { kTree, kForest };

struct ShapeReport {
  VertexSet roots;
};

/// Old-label to new-label mapping produced by relabel_bfs. Both vectors are
/// indexed by label; slot 0 is unused.
struct Relabeling {
  ParentArray parents;
  std::vector<Vertex> new_label;  // new_label[old]
  std::vector<Vertex> old_label;  // old_label[new]
};

class RootPolicy {
 public:
  /// Root at a maximum-degree vertex, smallest original label on ties.
  static RootPolicy max_degree() { return RootPolicy(0); }
  static RootPolicy explicit_root(Vertex label) { return RootPolicy(label); }

  bool is_explicit() const { return root_ != 0; }
  Vertex root() const { return root_; }

 private:
  explicit RootPolicy(Vertex root) : root_(root) {}
  Vertex root_;
};

ParentArray parse_parent_file(std::string_view text);
EdgeList parse_edge_list(std::string_view text);

ParentArray read_parent_file(const std::filesystem::path& path);
EdgeList read_edge_list(const std::filesystem::path& path);

std::string format_parent_file(const ParentArray& parents);
std::string format_edge_list(const EdgeList& edges);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Breadth-first relabeling from the chosen root: new labels follow visit
/// order, neighbours visited in ascending original label, so parent(i) < i.
Relabeling relabel_bfs(const EdgeList& edges,
                       RootPolicy policy = RootPolicy::max_degree());

/// The tree's edges as (parent, child) pairs in child order.
EdgeList edge_list_of(const ParentArray& parents);

/// Tree mode fails unless exactly one root exists.
ShapeReport validate(const ParentArray& parents, ForestMode mode);

AdjacencyTree build_adjacency(const ParentArray& parents);

/// End-vertices (unrooted degree 1). The single-vertex tree yields {1}.
/// Throws InvalidTreeError if `t` has more than one root.
VertexSet leaf_set(const AdjacencyTree& t);

/// N[S]. Throws InvalidArgumentError if a member of `s` is out of range.
VertexSet closed_neighborhood(const AdjacencyTree& t, const VertexSet& s);

}  // namespace treedom
