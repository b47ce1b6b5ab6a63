#pragma once

#include <cstddef>
#include <vector>

#include "treedom/tree_model.hpp"
#include "treedom/vertex_set.hpp"

namespace treedom {

/// Instance-size limits for the exhaustive oracles. These are configuration,
/// not logic: raise them if you have the patience. Bitmask enumeration caps
/// every limit at 63 vertices.
struct OracleCaps {
  Vertex bruteforce_gamma = 20;
  Vertex gamma_st_unpruned = 18;
  Vertex gamma_st_pruned = 24;
  Vertex steiner_number = 18;
};

/// The unique minimal subtree spanning W: S(W) and d(W) for trees.
struct SteinerTreeSpan {
  VertexSet vertices;
  std::size_t edge_count = 0;
};

/// Minimum size plus its witness: the lexicographically least set of that
/// size.
struct ExactSolution {
  std::size_t size = 0;
  VertexSet witness;
};

/// Repeatedly deletes degree-1 vertices outside W. Throws
/// InvalidArgumentError for an empty W or labels outside the tree.
SteinerTreeSpan steiner_subtree(const AdjacencyTree& t, const VertexSet& w);
std::size_t steiner_distance(const AdjacencyTree& t, const VertexSet& w);
bool is_steiner_set(const AdjacencyTree& t, const VertexSet& w);
bool is_dominating_set(const AdjacencyTree& t, const VertexSet& s);

/// Minimum dominating set of a forest by enumerating subsets in increasing
/// size, then lexicographic order.
ExactSolution exact_gamma_bruteforce(const AdjacencyTree& f, Vertex cap = 20);

/// Domination number of a forest via the three-state tree dynamic program
/// (chosen / dominated by a child / waiting for its parent). No size cap.
std::size_t exact_gamma_dp(const AdjacencyTree& f);

/// Minimum Steiner dominating set of a tree by exhaustive enumeration.
///
/// With `prune` set, only supersets of the end-vertex set are enumerated.
/// That restriction is sound because every end-vertex lies in every Steiner
/// set; the unpruned mode exists to test that fact rather than assume it.
/// The caps come from `caps.gamma_st_pruned` / `caps.gamma_st_unpruned`.
ExactSolution exact_gamma_st(const AdjacencyTree& t, bool prune,
                             const OracleCaps& caps = {});

/// Steiner number s(T) by unpruned enumeration.
std::size_t exact_steiner_number(const AdjacencyTree& t, Vertex cap = 18);

/// Every Steiner set of minimum cardinality, in lexicographic order.
std::vector<VertexSet> minimum_steiner_sets(const AdjacencyTree& t, Vertex cap = 18);

}  // namespace treedom
