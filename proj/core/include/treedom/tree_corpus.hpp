#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treedom/parent_array.hpp"

namespace treedom {

enum class Family { kPrufer, kRandomParent, kPath, kStar, kSpider, kCaterpillar, kBinary };

std::string_view to_string(Family family);
/// Throws InvalidArgumentError for an unknown name.
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kPrufer;
  /// Vertex count. Spider and caterpillar derive it from their shape
  /// parameters; a non-zero value there must agree.
  Vertex n = 0;
  Vertex leg_count = 0;   // spider
  Vertex leg_length = 0;  // spider
  Vertex spine_length = 0;             // caterpillar
  std::vector<Vertex> leg_pattern{1};  // caterpillar: pendants per spine vertex, cycled
  std::uint64_t seed = 0;
};

/// A pure function of its argument. Path, star, binary and random_parent are
/// emitted in their natural labeling (path and random_parent may root at an
/// end-vertex); prufer, spider and caterpillar are relabeled breadth-first
/// from a maximum-degree root.
ParentArray gen(const GeneratorSpec& spec);

/// Decodes a Prüfer sequence (entries in 1..n, length n - 2) into the edge
/// list of its labeled tree in linear time.
EdgeList prufer_decode(std::span<const Vertex> sequence, Vertex n);

enum class EnumerationMode { kTrees, kForests };

inline constexpr Vertex kMaxEnumerationSize = 10;

/// Number of arrays enumerate_parent_arrays emits: (n-1)! trees or n!
/// forests.
std::uint64_t enumeration_count(Vertex n, EnumerationMode mode);

/// Streams every parent array on n vertices in lexicographic order. Trees
/// fix parent[1] = 0 and draw parent[i] from 1..i-1; forests draw from
/// 0..i-1. Throws CapExceededError for n > kMaxEnumerationSize.
class ParentArrayEnumerator {
 public:
  ParentArrayEnumerator(Vertex n, EnumerationMode mode);

  /// The next array, or nullopt once the stream is exhausted.
  std::optional<ParentArray> next();

 private:
  Vertex n_;
  EnumerationMode mode_;
  std::vector<Vertex> current_;
  bool done_ = false;
};

/// Named, reproducible instances. "theorem1-audit-8" is the double spider
/// [0,1,1,1,3,4,5,6].
std::vector<std::string> fixture_names();
/// Throws InvalidArgumentError for an unknown name.
ParentArray named_fixture(std::string_view name);

}  // namespace treedom
