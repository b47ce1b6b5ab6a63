#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "treedom/vertex_set.hpp"

namespace treedom {

/// A rooted forest stored as parent labels with parent(i) < i for every
/// vertex i. Roots carry parent 0. The empty forest (n = 0) is allowed.
class ParentArray {
 public:
  ParentArray() : parents_(1, kNoParent) {}

  /// `parents[k]` is the parent of vertex k + 1. Throws InvalidTreeError
  /// unless every entry satisfies parent(i) < i.
  explicit ParentArray(std::span<const Vertex> parents);
  explicit ParentArray(const std::vector<Vertex>& parents)
      : ParentArray(std::span<const Vertex>(parents)) {}
  ParentArray(std::initializer_list<Vertex> parents)
      : ParentArray(std::span<const Vertex>(parents.begin(), parents.size())) {}

  Vertex size() const { return static_cast<Vertex>(parents_.size() - 1); }
  bool empty() const { return size() == 0; }
  Vertex parent(Vertex v) const { return parents_[v]; }
  bool is_root(Vertex v) const { return parents_[v] == kNoParent; }
  std::size_t root_count() const;

  /// Length n + 1; index 0 holds the sentinel so `one_based()[v]` is the
  /// parent of v.
  std::span<const Vertex> one_based() const { return parents_; }
  /// Length n; element k is the parent of vertex k + 1.
  std::vector<Vertex> to_vector() const {
    return {parents_.begin() + 1, parents_.end()};
  }

  friend bool operator==(const ParentArray&, const ParentArray&) = default;

 private:
  std::vector<Vertex> parents_;
};

/// An undirected edge list over labels 1..n.
struct EdgeList {
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

}  // namespace treedom
