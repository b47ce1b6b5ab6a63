#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace treedom {

/// Vertex labels are 1-based. Label 0 is the "no parent" sentinel.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoParent = 0;

/// A sorted, duplicate-free set of 1-based vertex labels.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  /// Sorts and deduplicates. Throws InvalidArgumentError on label 0.
  explicit VertexSet(std::vector<Vertex> members);

  /// Adopts an already strictly increasing sequence without re-sorting.
  static VertexSet from_sorted(std::vector<Vertex> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool disjoint_with(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;

  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  std::span<const Vertex> members() const { return members_; }
  Vertex max() const { return members_.empty() ? 0 : members_.back(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

}  // namespace treedom
