#include "treedom/steiner_domination.hpp"

#include <stdexcept>
#include <string>

#include "treedom/error.hpp"
#include "treedom/forest_domination.hpp"

namespace treedom {
namespace {

VertexSet to_tree_labels(const VertexSet& h_set, const std::vector<Vertex>& index) {
  std::vector<Vertex> out;
  out.reserve(h_set.size());
  // index is increasing, so the image of a sorted set stays sorted.
  for (Vertex h : h_set) out.push_back(index[h - 1]);
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace

HSubgraph build_h_subgraph(const AdjacencyTree& t, const VertexSet& leaves) {
  const Vertex n = t.size();
  std::vector<char> is_leaf(n + 1, 0);
  for (Vertex v : leaves) {
    if (v > n) {
      throw InvalidArgumentError("build_h_subgraph: leaf label " + std::to_string(v) +
                                 " outside the tree");
    }
    is_leaf[v] = 1;
  }
  std::size_t degree_one = 0;
  for (Vertex v = 1; v <= n; ++v) {
    const bool expected = n == 1 || t.degree(v) == 1;
    degree_one += expected;
    if (is_leaf[v] && !expected) {
      throw InvalidArgumentError("build_h_subgraph: vertex " + std::to_string(v) +
                                 " is not an end-vertex");
    }
  }
  if (degree_one != leaves.size()) {
    throw InvalidArgumentError("build_h_subgraph: leaf set is incomplete");
  }

  HSubgraph h;
  h.rindex.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (is_leaf[v]) continue;
    bool near_leaf = false;
    t.for_each_neighbor(v, [&](Vertex u) { near_leaf = near_leaf || is_leaf[u]; });
    if (near_leaf) continue;
    h.index.push_back(v);
    h.rindex[v] = static_cast<Vertex>(h.index.size());
  }

  std::vector<Vertex> nparent(h.index.size(), kNoParent);
  for (std::size_t k = 0; k < h.index.size(); ++k) {
    const Vertex p = t.parent(h.index[k]);
    if (p != kNoParent) nparent[k] = h.rindex[p];
  }
  h.nparent = ParentArray(nparent);
  return h;
}

SteinerDominationResult steiner_domination(const ParentArray& parents) {
  const Vertex n = parents.size();
  if (n == 0) throw InvalidTreeError("steiner_domination: empty tree");
  if (parents.root_count() != 1) {
    throw InvalidTreeError("steiner_domination: expected a single tree, found " +
                           std::to_string(parents.root_count()) + " roots");
  }
  const auto parent = parents.one_based();
  const std::size_t slots = std::size_t{n} + 1;

  // flag[v] == 0 marks an end-vertex. Degrees are counted from both edge
  // endpoints so a root with a single child is recognised as a leaf.
  std::vector<Vertex> degree(slots, 0);
  for (Vertex i = 2; i <= n; ++i) {
    ++degree[parent[i]];
    ++degree[i];
  }
  std::vector<char> flag(slots, 1);
  for (Vertex i = 1; i <= n; ++i) {
    if (n == 1 || degree[i] == 1) flag[i] = 0;
  }

  // pflag[v] == 1 marks a vertex adjacent to an end-vertex, in either
  // direction along the parent edge.
  std::vector<char> pflag(slots, 0);
  for (Vertex i = 2; i <= n; ++i) {
    if (flag[i] == 0) pflag[parent[i]] = 1;
    if (flag[parent[i]] == 0) pflag[i] = 1;
  }

  std::size_t leaf_count = 0;
  std::size_t h_count = 0;
  for (Vertex i = 1; i <= n; ++i) {
    leaf_count += flag[i] == 0;
    h_count += flag[i] != 0 && pflag[i] != 1;
  }

  SteinerDominationResult result;
  std::vector<Vertex> leaves;
  leaves.reserve(leaf_count);
  HSubgraph& h = result.h;
  h.index.reserve(h_count);
  h.rindex.assign(slots, 0);
  Vertex m = 0;
  for (Vertex i = 1; i <= n; ++i) {
    if (flag[i] == 0) {
      leaves.push_back(i);
    } else if (pflag[i] != 1) {
      ++m;
      h.index.push_back(i);
      h.rindex[i] = m;
    }
  }

  std::vector<Vertex> nparent(m, kNoParent);
  for (Vertex k = 1; k <= m; ++k) {
    const Vertex p = parent[h.index[k - 1]];
    if (p != kNoParent && pflag[p] == 0) {
      // A leaf parent would have flagged its child as leaf-adjacent.
      if (flag[p] == 0) throw std::logic_error("steiner_domination: leaf parent inside H");
      nparent[k - 1] = h.rindex[p];
    }
  }
  h.nparent = ParentArray(nparent);

  const VertexSet d = forest_domination(h.nparent);
  result.leaves = VertexSet::from_sorted(std::move(leaves));
  result.d_h = to_tree_labels(d, h.index);
  result.sd = result.leaves.set_union(result.d_h);
  result.size = result.sd.size();
  result.formula_value = result.leaves.size() + d.size();
  return result;
}

std::size_t formula_gamma_st(const AdjacencyTree& t) {
  if (t.size() < 2) {
    throw InvalidArgumentError("formula_gamma_st: requires a nontrivial tree (n >= 2)");
  }
  const VertexSet leaves = leaf_set(t);
  const HSubgraph h = build_h_subgraph(t, leaves);
  return leaves.size() + forest_domination(h.nparent).size();
}

}  // namespace treedom
