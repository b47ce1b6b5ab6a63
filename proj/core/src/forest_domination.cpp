#include "treedom/forest_domination.hpp"

namespace treedom {
namespace {

struct NoTrace {
  void operator()(Vertex, Vertex, LabelState, LabelState) const {}
};

struct VectorTrace {
  std::vector<LabelTransition>* out;
  void operator()(Vertex step, Vertex v, LabelState from, LabelState to) const {
    if (from != to) out->push_back({step, v, from, to});
  }
};

template <typename Trace>
VertexSet dominate(const ParentArray& parents, Trace trace) {
  const Vertex n = parents.size();
  const auto parent = parents.one_based();
  std::vector<LabelState> label(n + 1, LabelState::kBound);
  std::vector<char> in_d(n + 1, 0);

  auto relabel = [&](Vertex step, Vertex v, LabelState to) {
    trace(step, v, label[v], to);
    label[v] = to;
  };

  for (Vertex i = n; i >= 1; --i) {
    const Vertex p = parent[i];
    if (label[i] == LabelState::kBound && p != kNoParent) {
      relabel(i, p, LabelState::kRequired);
    } else if (label[i] == LabelState::kRequired) {
      in_d[i] = 1;
      // A root has no parent label to free.
      if (p != kNoParent && label[p] == LabelState::kBound) {
        relabel(i, p, LabelState::kFree);
      }
    }
  }
  for (Vertex i = 1; i <= n; ++i) {
    if (parent[i] == kNoParent &&
        (label[i] == LabelState::kBound || label[i] == LabelState::kRequired)) {
      in_d[i] = 1;
    }
  }

  std::size_t count = 0;
  for (Vertex i = 1; i <= n; ++i) count += in_d[i];
  std::vector<Vertex> d;
  d.reserve(count);
  for (Vertex i = 1; i <= n; ++i) {
    if (in_d[i]) d.push_back(i);
  }
  return VertexSet::from_sorted(std::move(d));
}

}  // namespace

const char* to_string(LabelState state) {
  switch (state) {
    case LabelState::kBound: return "Bound";
    case LabelState::kRequired: return "Required";
    case LabelState::kFree: return "Free";
  }
  return "?";
}

VertexSet forest_domination(const ParentArray& parents) {
  return dominate(parents, NoTrace{});
}

VertexSet forest_domination(const ParentArray& parents,
                            std::vector<LabelTransition>& trace) {
  return dominate(parents, VectorTrace{&trace});
}

}  // namespace treedom
