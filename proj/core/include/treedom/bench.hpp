#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treedom/vertex_set.hpp"

namespace treedom {

inline constexpr unsigned kMinBenchRepetitions = 3;

struct BenchRecord {
  Vertex n = 0;
  std::string algorithm;  // "forest_dom" or "steiner_dom"
  std::uint64_t ns_total_median = 0;
  double ns_per_vertex = 0.0;
  unsigned repetitions = 0;
  std::int64_t peak_bytes = -1;  // -1 when no memory probe is installed
  std::uint64_t checksum = 0;    // sum of output set sizes over all runs
};

/// Heap accounting hooks. The library never replaces operator new itself;
/// executables that want memory figures supply a probe.
struct MemoryProbe {
  std::function<void()> reset_peak;
  /// Peak live heap bytes since the last reset, relative to the live bytes
  /// at reset time.
  std::function<std::size_t()> peak_bytes;
};

struct BenchOptions {
  std::vector<Vertex> sizes;
  unsigned repetitions = 5;
  std::uint64_t seed = 7;
  std::optional<MemoryProbe> probe;
};

/// Times forest_domination and steiner_domination on one Prüfer tree per
/// size (generation excluded from timing) and reports the median over the
/// repetitions. Throws InvalidArgumentError for fewer than three
/// repetitions or sizes that are not strictly ascending; allocation failure
/// surfaces as treedom::Error naming the size.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Header plus one row per record: n, algorithm, ns_total_median,
/// ns_per_vertex, repetitions, peak_bytes, checksum.
std::string format_bench_csv(std::span<const BenchRecord> records);

struct LinearityCheck {
  std::string algorithm;
  Vertex from_n = 0;
  Vertex to_n = 0;
  double time_ratio = 0.0;    // ns_per_vertex(to) / ns_per_vertex(from)
  double memory_ratio = 0.0;  // peak_bytes(to) / peak_bytes(from); 0 when unknown
  bool ok = false;
};

/// Compares consecutive sizes per algorithm.
std::vector<LinearityCheck> check_linearity(std::span<const BenchRecord> records,
                                            double max_time_ratio = 3.0,
                                            double max_memory_ratio = 12.0);

}  // namespace treedom
