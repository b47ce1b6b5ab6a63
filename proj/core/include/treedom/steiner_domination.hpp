#pragma once

#include <cstddef>
#include <vector>

#include "treedom/parent_array.hpp"
#include "treedom/tree_model.hpp"
#include "treedom/vertex_set.hpp"

namespace treedom {

/// The induced forest H = T[V - N[L(T)]]: tree vertices that are neither
/// leaves nor adjacent to a leaf, relabeled 1..m in ascending tree-label
/// order.
struct HSubgraph {
  std::vector<Vertex> index;   // index[h - 1] is the tree label of H-vertex h
  std::vector<Vertex> rindex;  // rindex[v] is the H-label of tree vertex v, 0 if absent
  ParentArray nparent;         // parent array over H-labels

  Vertex size() const { return static_cast<Vertex>(index.size()); }
  Vertex tree_label(Vertex h) const { return index[h - 1]; }
  Vertex h_label(Vertex v) const { return rindex[v]; }
  VertexSet tree_labels() const { return VertexSet::from_sorted(index); }
};

struct SteinerDominationResult {
  VertexSet leaves;    // L(T)
  HSubgraph h;
  VertexSet d_h;       // minimum dominating set of H, as tree labels
  VertexSet sd;        // leaves ∪ d_h
  std::size_t size = 0;
  std::size_t formula_value = 0;  // |L(T)| + gamma(H)
};

/// Builds H from an adjacency view and its leaf set. Throws
/// InvalidArgumentError if `leaves` is not exactly leaf_set(t).
HSubgraph build_h_subgraph(const AdjacencyTree& t, const VertexSet& leaves);

/// Leaves plus a minimum dominating set of H, computed with flag arrays over
/// the parent array and a delegation of H to forest_domination. Throws
/// InvalidTreeError unless `parents` is a single tree with n >= 1.
///
/// The result is always a Steiner dominating set. Its size equals
/// |L(T)| + gamma(H); whether that equals the true minimum is not claimed.
SteinerDominationResult steiner_domination(const ParentArray& parents);

/// |L(T)| + gamma(H) computed from the adjacency view without materialising
/// the dominating set. Requires n >= 2; throws InvalidArgumentError for the
/// single-vertex tree.
std::size_t formula_gamma_st(const AdjacencyTree& t);

}  // namespace treedom
