#include "treedom/tree_corpus.hpp"

#include <array>
#include <random>
#include <string>

#include "treedom/error.hpp"
#include "treedom/tree_model.hpp"

namespace treedom {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::kPrufer, "prufer"},
    {Family::kRandomParent, "random_parent"},
    {Family::kPath, "path"},
    {Family::kStar, "star"},
    {Family::kSpider, "spider"},
    {Family::kCaterpillar, "caterpillar"},
    {Family::kBinary, "binary"},
}};

void require_n(const GeneratorSpec& spec) {
  if (spec.n == 0) {
    throw InvalidArgumentError("gen: family '" + std::string(to_string(spec.family)) +
                               "' requires n >= 1");
  }
}

void check_derived_n(const GeneratorSpec& spec, std::uint64_t derived) {
  if (derived > 0xFFFFFFF0u) throw InvalidArgumentError("gen: instance too large");
  if (spec.n != 0 && spec.n != derived) {
    throw InvalidArgumentError("gen: n = " + std::to_string(spec.n) +
                               " disagrees with the shape parameters (" +
                               std::to_string(derived) + " vertices)");
  }
}

ParentArray prufer_tree(Vertex n, std::uint64_t seed) {
  if (n == 1) return ParentArray{0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> draw(1, n);
  std::vector<Vertex> sequence(n - 2);
  for (Vertex& x : sequence) x = draw(rng);
  return relabel_bfs(prufer_decode(sequence, n)).parents;
}

ParentArray random_parent_tree(Vertex n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> parents(n, kNoParent);
  for (Vertex i = 2; i <= n; ++i) {
    parents[i - 1] = std::uniform_int_distribution<Vertex>(1, i - 1)(rng);
  }
  return ParentArray(parents);
}

ParentArray spider(const GeneratorSpec& spec) {
  if (spec.leg_count < 2 || spec.leg_length < 1) {
    throw InvalidArgumentError("gen: spider needs leg_count >= 2 and leg_length >= 1");
  }
  const std::uint64_t n = 1 + std::uint64_t{spec.leg_count} * spec.leg_length;
  check_derived_n(spec, n);
  // Center 1; leg j occupies a contiguous block, innermost vertex first.
  EdgeList edges;
  edges.n = static_cast<Vertex>(n);
  Vertex next = 2;
  for (Vertex leg = 0; leg < spec.leg_count; ++leg) {
    Vertex prev = 1;
    for (Vertex step = 0; step < spec.leg_length; ++step) {
      edges.edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return relabel_bfs(edges).parents;
}

ParentArray caterpillar(const GeneratorSpec& spec) {
  if (spec.spine_length < 1 || spec.leg_pattern.empty()) {
    throw InvalidArgumentError("gen: caterpillar needs spine_length >= 1 and a leg pattern");
  }
  std::uint64_t n = spec.spine_length;
  for (Vertex s = 0; s < spec.spine_length; ++s) {
    n += spec.leg_pattern[s % spec.leg_pattern.size()];
  }
  check_derived_n(spec, n);
  // Spine 1..spine_length, pendants after.
  EdgeList edges;
  edges.n = static_cast<Vertex>(n);
  Vertex next = spec.spine_length + 1;
  for (Vertex s = 1; s <= spec.spine_length; ++s) {
    if (s > 1) edges.edges.emplace_back(s - 1, s);
    const Vertex legs = spec.leg_pattern[(s - 1) % spec.leg_pattern.size()];
    for (Vertex k = 0; k < legs; ++k) edges.edges.emplace_back(s, next++);
  }
  return relabel_bfs(edges).parents;
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, known] : kFamilyNames) {
    if (known == name) return f;
  }
  throw InvalidArgumentError("unknown family '" + std::string(name) + "'");
}

EdgeList prufer_decode(std::span<const Vertex> sequence, Vertex n) {
  if (n < 2 || sequence.size() != static_cast<std::size_t>(n) - 2) {
    throw InvalidArgumentError("prufer_decode: sequence length must be n - 2 with n >= 2");
  }
  std::vector<Vertex> degree(n + 1, 1);
  for (Vertex x : sequence) {
    if (x < 1 || x > n) throw InvalidArgumentError("prufer_decode: entry outside [1, n]");
    ++degree[x];
  }

  EdgeList out;
  out.n = n;
  out.edges.reserve(n - 1);
  // Linear decoding: `ptr` scans for the smallest leaf; a freshly created
  // leaf below `ptr` is consumed immediately instead.
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : sequence) {
    out.edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out.edges.emplace_back(leaf, n);
  return out;
}

ParentArray gen(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kPrufer:
      require_n(spec);
      return prufer_tree(spec.n, spec.seed);
    case Family::kRandomParent:
      require_n(spec);
      return random_parent_tree(spec.n, spec.seed);
    case Family::kPath: {
      require_n(spec);
      std::vector<Vertex> parents(spec.n);
      for (Vertex i = 0; i < spec.n; ++i) parents[i] = i;
      return ParentArray(parents);
    }
    case Family::kStar: {
      require_n(spec);
      std::vector<Vertex> parents(spec.n, 1);
      parents[0] = kNoParent;
      return ParentArray(parents);
    }
    case Family::kSpider:
      return spider(spec);
    case Family::kCaterpillar:
      return caterpillar(spec);
    case Family::kBinary: {
      require_n(spec);
      std::vector<Vertex> parents(spec.n);
      for (Vertex i = 1; i <= spec.n; ++i) parents[i - 1] = i / 2;
      return ParentArray(parents);
    }
  }
  throw InvalidArgumentError("gen: unknown family");
}

std::uint64_t enumeration_count(Vertex n, EnumerationMode mode) {
  std::uint64_t count = 1;
  for (Vertex i = 2; i <= n; ++i) {
    count *= mode == EnumerationMode::kTrees ? i - 1 : i;
  }
  return n == 0 ? 1 : count;
}

ParentArrayEnumerator::ParentArrayEnumerator(Vertex n, EnumerationMode mode)
    : n_(n), mode_(mode), current_(n, kNoParent) {
  if (n > kMaxEnumerationSize) {
    throw CapExceededError("enumerate_parent_arrays: n = " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(kMaxEnumerationSize));
  }
  if (n == 0) throw InvalidArgumentError("enumerate_parent_arrays: n must be >= 1");
  if (mode == EnumerationMode::kTrees) {
    for (Vertex i = 2; i <= n; ++i) current_[i - 1] = 1;
  }
}

std::optional<ParentArray> ParentArrayEnumerator::next() {
  if (done_) return std::nullopt;
  ParentArray out(current_);

  // Odometer over positions 2..n, last position fastest.
  const Vertex low = mode_ == EnumerationMode::kTrees ? 1 : 0;
  Vertex i = n_;
  while (i >= 2 && current_[i - 1] == i - 1) {
    current_[i - 1] = low;
    --i;
  }
  if (i < 2) {
    done_ = true;
  } else {
    ++current_[i - 1];
  }
  return out;
}

std::vector<std::string> fixture_names() { return {"theorem1-audit-8"}; }

ParentArray named_fixture(std::string_view name) {
  if (name == "theorem1-audit-8") return ParentArray{0, 1, 1, 1, 3, 4, 5, 6};
  throw InvalidArgumentError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace treedom
