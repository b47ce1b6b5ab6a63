#include "treedom/tree_model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "treedom/tree_corpus.hpp"

namespace treedom {
namespace {

using ::treedom::testing_support::adjacency_matrix;
using ::treedom::testing_support::matrix_closed_neighborhood;
using ::treedom::testing_support::matrix_leaves;
using ::treedom::testing_support::sorted_degrees;

ParseErrc parse_code(std::string_view text, bool edges = false) {
  try {
    if (edges) {
      parse_edge_list(text);
    } else {
      parse_parent_file(text);
    }
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ParseErrc::kMissingHeader;
}

TEST(ParseParentFile, Path) {
  EXPECT_EQ(parse_parent_file("5\n0 1 2 3 4"), (ParentArray{0, 1, 2, 3, 4}));
}

TEST(ParseParentFile, Star) {
  EXPECT_EQ(parse_parent_file("4\n0 1 1 1"), (ParentArray{0, 1, 1, 1}));
}

TEST(ParseParentFile, AcceptsCrlfAndTrailingNewline) {
  EXPECT_EQ(parse_parent_file("4\r\n0 1 1 1\r\n"), (ParentArray{0, 1, 1, 1}));
}

TEST(ParseParentFile, RejectsParentNotBelowLabel) {
  try {
    parse_parent_file("3\n0 1 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ParseErrc::kParentOrder);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(ParseParentFile, DistinctErrors) {
  EXPECT_EQ(parse_code("3\n0 x 1"), ParseErrc::kMalformedInteger);
  EXPECT_EQ(parse_code("3\n0 -1 1"), ParseErrc::kMalformedInteger);
  EXPECT_EQ(parse_code("3\n0 1"), ParseErrc::kLengthMismatch);
  EXPECT_EQ(parse_code("2\n0 1 1"), ParseErrc::kLengthMismatch);
  EXPECT_EQ(parse_code("0\n"), ParseErrc::kNoRoot);
  EXPECT_EQ(parse_code("2\n1 0"), ParseErrc::kParentOrder);
  EXPECT_EQ(parse_code(""), ParseErrc::kMissingHeader);
  EXPECT_EQ(parse_code("2 2\n0 1"), ParseErrc::kMalformedInteger);
}

TEST(ParseEdgeList, Path) {
  const EdgeList e = parse_edge_list("3\n1 2\n2 3");
  EXPECT_EQ(e.n, 3u);
  EXPECT_EQ(e.edges, (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}}));
}

TEST(ParseEdgeList, Errors) {
  EXPECT_EQ(parse_code("2\n1 1", true), ParseErrc::kSelfLoop);
  EXPECT_EQ(parse_code("4\n1 2\n1 2\n3 4", true), ParseErrc::kDuplicateEdge);
  EXPECT_EQ(parse_code("4\n1 2\n2 1\n3 4", true), ParseErrc::kDuplicateEdge);
  EXPECT_EQ(parse_code("3\n1 2 3", true), ParseErrc::kMalformedPair);
  EXPECT_EQ(parse_code("3\n1", true), ParseErrc::kMalformedPair);
  EXPECT_EQ(parse_code("3\n1 4", true), ParseErrc::kLabelOutOfRange);
  EXPECT_EQ(parse_code("3\n0 1", true), ParseErrc::kLabelOutOfRange);
  EXPECT_EQ(parse_code("3\n1 b", true), ParseErrc::kMalformedInteger);
}

TEST(ParentArray, RejectsOrderViolation) {
  EXPECT_THROW((ParentArray{0, 2}), InvalidTreeError);
  EXPECT_THROW((ParentArray{1}), InvalidTreeError);
  EXPECT_NO_THROW((ParentArray{}));
}

TEST(RelabelBfs, RootsAtTheMaxDegreeVertex) {
  const Relabeling r = relabel_bfs(EdgeList{3, {{3, 1}, {1, 2}}});
  EXPECT_EQ(r.parents, (ParentArray{0, 1, 1}));
  EXPECT_EQ(r.old_label[1], 1u);
}

TEST(RelabelBfs, TieBreaksToSmallestLabel) {
  const Relabeling r = relabel_bfs(EdgeList{2, {{2, 1}}});
  EXPECT_EQ(r.parents, (ParentArray{0, 1}));
  EXPECT_EQ(r.old_label[1], 1u);
}

TEST(RelabelBfs, ExplicitRootOnPath) {
  // Hand BFS from old 3: layer {2, 4} -> new 2, 3; then old 1 under new 2,
  // old 5 under new 3.
  const EdgeList p5{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  const Relabeling r = relabel_bfs(p5, RootPolicy::explicit_root(3));
  EXPECT_EQ(r.parents, (ParentArray{0, 1, 1, 2, 3}));
  EXPECT_EQ(r.old_label, (std::vector<Vertex>{0, 3, 2, 4, 1, 5}));
  EXPECT_EQ(r.new_label, (std::vector<Vertex>{0, 4, 2, 1, 3, 5}));
}

TEST(RelabelBfs, Errors) {
  EXPECT_THROW(relabel_bfs(EdgeList{4, {{1, 2}, {3, 4}}}), InvalidTreeError);
  EXPECT_THROW(relabel_bfs(EdgeList{4, {{1, 2}, {2, 1}, {3, 4}}}), InvalidTreeError);
  EXPECT_THROW(relabel_bfs(EdgeList{3, {{1, 2}, {2, 3}}}, RootPolicy::explicit_root(4)),
               InvalidArgumentError);
  EXPECT_EQ(relabel_bfs(EdgeList{1, {}}).parents, (ParentArray{0}));
}

TEST(RelabelBfs, MaxDegreeRootIsNeverALeafForThreeOrMoreVertices) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const ParentArray p = testing_support::random_prufer_tree(rng, 3, 40);
    EXPECT_GE(build_adjacency(p).degree(1), 2u);
  }
}

TEST(RelabelBfs, RoundTripPreservesDegreesAndLeafCount) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    GeneratorSpec spec;
    spec.family = Family::kRandomParent;
    spec.n = std::uniform_int_distribution<Vertex>(1, 50)(rng);
    spec.seed = rng();
    const ParentArray p = gen(spec);
    const Relabeling r = relabel_bfs(edge_list_of(p));
    EXPECT_EQ(sorted_degrees(adjacency_matrix(p)), sorted_degrees(adjacency_matrix(r.parents)));
    EXPECT_EQ(leaf_set(build_adjacency(p)).size(), leaf_set(build_adjacency(r.parents)).size());
    for (Vertex old = 1; old <= p.size(); ++old) {
      EXPECT_EQ(r.old_label[r.new_label[old]], old);
    }
  }
}

TEST(Validate, ForestAndTreeModes) {
  const ParentArray p{0, 1, 2, 0, 4};
  EXPECT_EQ(validate(p, ForestMode::kForest).roots, (VertexSet{1, 4}));
  EXPECT_THROW(validate(p, ForestMode::kTree), InvalidTreeError);
  EXPECT_EQ(validate(ParentArray{0}, ForestMode::kTree).roots, (VertexSet{1}));
}

std::vector<Vertex> degrees(const AdjacencyTree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= t.size(); ++v) out.push_back(t.degree(v));
  return out;
}

TEST(BuildAdjacency, Degrees) {
  EXPECT_EQ(degrees(build_adjacency({0, 1, 1, 1})), (std::vector<Vertex>{3, 1, 1, 1}));
  EXPECT_EQ(degrees(build_adjacency({0, 1, 2, 3, 4})), (std::vector<Vertex>{1, 2, 2, 2, 1}));
  EXPECT_EQ(degrees(build_adjacency({0})), (std::vector<Vertex>{0}));
}

TEST(BuildAdjacency, ChildrenAgreeWithParentsAndDegreeSumIsTwiceEdges) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    GeneratorSpec spec;
    spec.family = Family::kRandomParent;
    spec.n = std::uniform_int_distribution<Vertex>(1, 60)(rng);
    spec.seed = rng();
    ParentArray p = gen(spec);
    if (k % 2 == 1) p = testing_support::concat_forests(p, ParentArray{0, 1, 1});
    const AdjacencyTree t = build_adjacency(p);
    std::size_t sum = 0;
    for (Vertex v = 1; v <= t.size(); ++v) {
      sum += t.degree(v);
      for (Vertex c : t.children(v)) EXPECT_EQ(t.parent(c), v);
    }
    EXPECT_EQ(sum, 2 * (p.size() - t.roots().size()));
  }
}

TEST(LeafSet, Examples) {
  EXPECT_EQ(leaf_set(build_adjacency({0, 1, 2, 3, 4})), (VertexSet{1, 5}));
  EXPECT_EQ(leaf_set(build_adjacency({0, 1, 1, 1})), (VertexSet{2, 3, 4}));
  EXPECT_EQ(leaf_set(build_adjacency({0, 1})), (VertexSet{1, 2}));
  EXPECT_EQ(leaf_set(build_adjacency({0})), (VertexSet{1}));
  EXPECT_THROW(leaf_set(build_adjacency({0, 0})), InvalidTreeError);
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(build_adjacency({0, 1, 2, 3, 4}), VertexSet{1, 5}),
            (VertexSet{1, 2, 4, 5}));
  EXPECT_EQ(closed_neighborhood(build_adjacency({0, 1, 1, 1}), VertexSet{2}), (VertexSet{1, 2}));
  EXPECT_TRUE(closed_neighborhood(build_adjacency({0, 1, 1, 1}), VertexSet{}).empty());
  EXPECT_THROW(closed_neighborhood(build_adjacency({0, 1}), VertexSet{3}), InvalidArgumentError);
}

TEST(LeafSet, MatchesMatrixOracleOnAllTreesUpToNine) {
  for (Vertex n = 1; n <= 9; ++n) {
    ParentArrayEnumerator stream(n, EnumerationMode::kTrees);
    while (auto p = stream.next()) {
      const auto m = adjacency_matrix(*p);
      const AdjacencyTree t = build_adjacency(*p);
      const VertexSet leaves = leaf_set(t);
      ASSERT_EQ(leaves, matrix_leaves(m));
      ASSERT_EQ(closed_neighborhood(t, leaves), matrix_closed_neighborhood(m, leaves));
    }
  }
}

TEST(Format, ParentFileRoundTrips) {
  const ParentArray p{0, 1, 1, 2, 0};
  EXPECT_EQ(format_parent_file(p), "5\n0 1 1 2 0\n");
  EXPECT_EQ(parse_parent_file(format_parent_file(p)), p);
  const EdgeList e = edge_list_of(ParentArray{0, 1, 2});
  EXPECT_EQ(parse_edge_list(format_edge_list(e)), e);
}

}  // namespace
}  // namespace treedom
