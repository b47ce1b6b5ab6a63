#pragma once

#include <cstdint>
#include <vector>

#include "treedom/parent_array.hpp"
#include "treedom/vertex_set.hpp"

namespace treedom {

/// Per-vertex state of the single-pass labeling. Every vertex starts Bound
/// (not yet dominated); Required means it must join the dominating set;
/// Free means it is dominated by a chosen child.
enum class LabelState : std::uint8_t { kBound, kRequired, kFree };

const char* to_string(LabelState state);

/// One label change observed during the descending pass.
struct LabelTransition {
  Vertex step;    // loop index i at which the change happened
  Vertex vertex;  // vertex whose label changed
  LabelState from;
  LabelState to;
};

/// Minimum dominating set of a rooted forest in one descending pass over the
/// parent array followed by an ascending root pass. Returned in ascending
/// label order; the empty forest yields the empty set.
VertexSet forest_domination(const ParentArray& parents);

/// Same result; every label change of the descending pass is appended to
/// `trace`.
VertexSet forest_domination(const ParentArray& parents,
                            std::vector<LabelTransition>& trace);

}  // namespace treedom
