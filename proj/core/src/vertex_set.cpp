#include "treedom/vertex_set.hpp"

#include <algorithm>
#include <iterator>

#include "treedom/error.hpp"

namespace treedom {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() == 0) {
    throw InvalidArgumentError("vertex label 0 is reserved for 'no parent'");
  }
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] == 0 || (k > 0 && members[k - 1] >= members[k])) {
      throw InvalidArgumentError("from_sorted: labels must be positive and strictly increasing");
    }
  }
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool VertexSet::disjoint_with(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

}  // namespace treedom
