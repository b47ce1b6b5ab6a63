#include "treedom/exact_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "treedom/error.hpp"

namespace treedom {
namespace {

using Mask = std::uint64_t;
constexpr Vertex kMaskLimit = 63;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

// Open neighbourhoods as bitmasks; bit v-1 stands for vertex v.
struct MaskGraph {
  Vertex n = 0;
  std::vector<Mask> open;  // open[v]
  Mask all = 0;

  Mask closed(Vertex v) const { return open[v] | bit(v); }
};

MaskGraph to_masks(const AdjacencyTree& t, Vertex cap, const char* who) {
  const Vertex limit = std::min(cap, kMaskLimit);
  if (t.size() > limit) {
    throw CapExceededError(std::string(who) + ": n = " + std::to_string(t.size()) +
                           " exceeds the cap of " + std::to_string(limit));
  }
  MaskGraph g;
  g.n = t.size();
  g.open.assign(g.n + 1, 0);
  for (Vertex v = 1; v <= g.n; ++v) {
    const Vertex p = t.parent(v);
    if (p != kNoParent) {
      g.open[v] |= bit(p);
      g.open[p] |= bit(v);
    }
    g.all |= bit(v);
  }
  return g;
}

void require_single_tree(const AdjacencyTree& t, const char* who) {
  if (t.roots().size() != 1) {
    throw InvalidArgumentError(std::string(who) + ": expected a single tree, found " +
                               std::to_string(t.roots().size()) + " roots");
  }
}

bool dominates(const MaskGraph& g, Mask w) {
  Mask covered = 0;
  for (Mask rest = w; rest != 0; rest &= rest - 1) {
    covered |= g.closed(static_cast<Vertex>(std::countr_zero(rest)) + 1);
  }
  return covered == g.all;
}

// Vertex set of the minimal subtree spanning w: peel off vertices outside w
// with at most one remaining neighbour until none is left.
Mask steiner_span(const MaskGraph& g, Mask w) {
  Mask alive = g.all;
  for (bool changed = true; changed;) {
    changed = false;
    for (Mask rest = alive & ~w; rest != 0; rest &= rest - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest)) + 1;
      if (std::popcount(g.open[v] & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

Mask to_mask(const std::vector<Vertex>& pool, const std::vector<std::size_t>& pick) {
  Mask m = 0;
  for (std::size_t i : pick) m |= bit(pool[i]);
  return m;
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)) + 1);
  return VertexSet::from_sorted(std::move(out));
}

// Visits every k-subset of `pool` (assumed ascending) in lexicographic order
// until `visit` returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k, Visit&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (visit(to_mask(pool, pick))) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<Vertex> labels(const MaskGraph& g, Mask exclude = 0) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.n; ++v) {
    if (!(exclude & bit(v))) out.push_back(v);
  }
  return out;
}

std::vector<char> membership(const AdjacencyTree& t, const VertexSet& s, const char* who) {
  std::vector<char> in(t.size() + 1, 0);
  for (Vertex v : s) {
    if (v > t.size()) {
      throw InvalidArgumentError(std::string(who) + ": label " + std::to_string(v) +
                                 " outside [1, " + std::to_string(t.size()) + "]");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

SteinerTreeSpan steiner_subtree(const AdjacencyTree& t, const VertexSet& w) {
  if (w.empty()) throw InvalidArgumentError("steiner_subtree: W must be non-empty");
  const std::vector<char> in_w = membership(t, w, "steiner_subtree");
  const Vertex n = t.size();

  std::vector<Vertex> remaining(n + 1, 0);
  std::vector<char> removed(n + 1, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    remaining[v] = t.degree(v);
    if (!in_w[v] && remaining[v] <= 1) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    removed[v] = 1;
    t.for_each_neighbor(v, [&](Vertex u) {
      if (removed[u]) return;
      if (--remaining[u] == 1 && !in_w[u]) queue.push_back(u);
    });
  }

  std::vector<Vertex> kept;
  for (Vertex v = 1; v <= n; ++v) {
    if (!removed[v]) kept.push_back(v);
  }
  SteinerTreeSpan span;
  span.edge_count = kept.size() - 1;
  span.vertices = VertexSet::from_sorted(std::move(kept));
  return span;
}

std::size_t steiner_distance(const AdjacencyTree& t, const VertexSet& w) {
  return steiner_subtree(t, w).edge_count;
}

bool is_steiner_set(const AdjacencyTree& t, const VertexSet& w) {
  return steiner_subtree(t, w).vertices.size() == t.size();
}

bool is_dominating_set(const AdjacencyTree& t, const VertexSet& s) {
  const std::vector<char> in_s = membership(t, s, "is_dominating_set");
  for (Vertex v = 1; v <= t.size(); ++v) {
    if (in_s[v]) continue;
    bool covered = false;
    t.for_each_neighbor(v, [&](Vertex u) { covered = covered || in_s[u]; });
    if (!covered) return false;
  }
  return true;
}

ExactSolution exact_gamma_bruteforce(const AdjacencyTree& f, Vertex cap) {
  const MaskGraph g = to_masks(f, cap, "exact_gamma_bruteforce");
  const std::vector<Vertex> pool = labels(g);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    Mask found = 0;
    if (for_each_combination(pool, k, [&](Mask w) {
          found = w;
          return dominates(g, w);
        })) {
      return {k, to_set(found)};
    }
  }
  return {0, {}};  // unreachable: V dominates itself
}

std::size_t exact_gamma_dp(const AdjacencyTree& f) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  const Vertex n = f.size();
  // chosen: v in D. covered: v not in D, dominated by a child.
  // waiting: v not in D, not yet dominated (its parent must be chosen).
  std::vector<std::size_t> chosen(n + 1), covered(n + 1), waiting(n + 1);

  std::size_t total = 0;
  std::vector<Vertex> order;
  std::vector<Vertex> stack;
  for (Vertex root : f.roots()) {
    order.clear();
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex c : f.children(v)) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      std::size_t pick = 1;
      std::size_t skip = 0;
      std::size_t wait = 0;
      std::size_t best_upgrade = kInf;
      for (Vertex c : f.children(v)) {
        pick += std::min({chosen[c], covered[c], waiting[c]});
        const std::size_t settled = std::min(chosen[c], covered[c]);
        skip += settled;
        best_upgrade = std::min(best_upgrade, chosen[c] - settled);
        wait = std::min(kInf, wait + covered[c]);
      }
      chosen[v] = pick;
      covered[v] = f.children(v).empty() ? kInf : std::min(kInf, skip + best_upgrade);
      waiting[v] = wait;
    }
    total += std::min(chosen[root], covered[root]);
  }
  return total;
}

ExactSolution exact_gamma_st(const AdjacencyTree& t, bool prune, const OracleCaps& caps) {
  require_single_tree(t, "exact_gamma_st");
  const MaskGraph g = to_masks(t, prune ? caps.gamma_st_pruned : caps.gamma_st_unpruned,
                               "exact_gamma_st");

  Mask forced = 0;
  if (prune) {
    for (Vertex v = 1; v <= g.n; ++v) {
      if (g.n == 1 || std::popcount(g.open[v]) == 1) forced |= bit(v);
    }
  }
  const std::vector<Vertex> pool = labels(g, forced);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    Mask found = 0;
    if (for_each_combination(pool, k, [&](Mask extra) {
          const Mask w = forced | extra;
          found = w;
          return w != 0 && dominates(g, w) && steiner_span(g, w) == g.all;
        })) {
      return {static_cast<std::size_t>(std::popcount(found)), to_set(found)};
    }
  }
  throw std::logic_error("exact_gamma_st: no Steiner dominating set found");
}

std::vector<VertexSet> minimum_steiner_sets(const AdjacencyTree& t, Vertex cap) {
  require_single_tree(t, "minimum_steiner_sets");
  const MaskGraph g = to_masks(t, cap, "minimum_steiner_sets");
  const std::vector<Vertex> pool = labels(g);
  std::vector<VertexSet> out;
  for (std::size_t k = 1; k <= pool.size() && out.empty(); ++k) {
    for_each_combination(pool, k, [&](Mask w) {
      if (steiner_span(g, w) == g.all) out.push_back(to_set(w));
      return false;
    });
  }
  return out;
}

std::size_t exact_steiner_number(const AdjacencyTree& t, Vertex cap) {
  require_single_tree(t, "exact_steiner_number");
  const MaskGraph g = to_masks(t, cap, "exact_steiner_number");
  const std::vector<Vertex> pool = labels(g);
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    if (for_each_combination(pool, k, [&](Mask w) { return steiner_span(g, w) == g.all; })) {
      return k;
    }
  }
  throw std::logic_error("exact_steiner_number: V is always a Steiner set");
}

}  // namespace treedom
