#include "treedom/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <new>
#include <string>

#include "treedom/error.hpp"
#include "treedom/forest_domination.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/tree_corpus.hpp"

namespace treedom {
namespace {

template <typename Run>
BenchRecord measure(const char* name, Vertex n, const BenchOptions& options, Run&& run) {
  BenchRecord record;
  record.n = n;
  record.algorithm = name;
  record.repetitions = options.repetitions;

  if (options.probe) {
    options.probe->reset_peak();
    record.checksum += run();
    record.peak_bytes = static_cast<std::int64_t>(options.probe->peak_bytes());
  }

  std::vector<std::uint64_t> samples;
  samples.reserve(options.repetitions);
  for (unsigned r = 0; r < options.repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    record.checksum += run();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  record.ns_total_median = samples[samples.size() / 2];
  record.ns_per_vertex = static_cast<double>(record.ns_total_median) / n;
  return record;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.repetitions < kMinBenchRepetitions) {
    throw InvalidArgumentError("bench: repetitions must be at least " +
                               std::to_string(kMinBenchRepetitions));
  }
  if (options.sizes.empty()) throw InvalidArgumentError("bench: no sizes given");
  for (std::size_t k = 0; k < options.sizes.size(); ++k) {
    if (options.sizes[k] == 0 || (k > 0 && options.sizes[k - 1] >= options.sizes[k])) {
      throw InvalidArgumentError("bench: sizes must be positive and strictly ascending");
    }
  }

  std::vector<BenchRecord> records;
  for (Vertex n : options.sizes) {
    try {
      GeneratorSpec spec;
      spec.family = Family::kPrufer;
      spec.n = n;
      spec.seed = options.seed;
      const ParentArray tree = gen(spec);
      records.push_back(measure("forest_dom", n, options,
                                [&] { return forest_domination(tree).size(); }));
      records.push_back(measure("steiner_dom", n, options,
                                [&] { return steiner_domination(tree).size; }));
    } catch (const std::bad_alloc&) {
      throw Error("bench: allocation failed at n = " + std::to_string(n));
    }
  }
  return records;
}

std::string format_bench_csv(std::span<const BenchRecord> records) {
  std::string out = "n,algorithm,ns_total_median,ns_per_vertex,repetitions,peak_bytes,checksum\n";
  char buf[256];
  for (const BenchRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%u,%s,%llu,%.3f,%u,%lld,%llu\n", r.n, r.algorithm.c_str(),
                  static_cast<unsigned long long>(r.ns_total_median), r.ns_per_vertex,
                  r.repetitions, static_cast<long long>(r.peak_bytes),
                  static_cast<unsigned long long>(r.checksum));
    out += buf;
  }
  return out;
}

std::vector<LinearityCheck> check_linearity(std::span<const BenchRecord> records,
                                            double max_time_ratio, double max_memory_ratio) {
  std::vector<LinearityCheck> out;
  for (const char* name : {"forest_dom", "steiner_dom"}) {
    const BenchRecord* prev = nullptr;
    for (const BenchRecord& r : records) {
      if (r.algorithm != name) continue;
      if (prev != nullptr) {
        LinearityCheck c;
        c.algorithm = name;
        c.from_n = prev->n;
        c.to_n = r.n;
        c.time_ratio = r.ns_per_vertex / std::max(prev->ns_per_vertex, 1e-9);
        const bool have_memory = prev->peak_bytes > 0 && r.peak_bytes >= 0;
        c.memory_ratio = have_memory ? static_cast<double>(r.peak_bytes) /
                                           static_cast<double>(prev->peak_bytes)
                                     : 0.0;
        c.ok = c.time_ratio <= max_time_ratio && c.memory_ratio <= max_memory_ratio;
        out.push_back(c);
      }
      prev = &r;
    }
  }
  return out;
}

}  // namespace treedom
