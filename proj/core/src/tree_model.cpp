#include "treedom/tree_model.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace treedom {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits on LF, strips a trailing CR, and drops blank lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;

    Line line{line_no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i == raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(start, i - start), line_no, start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = eol + 1;
  }
  return lines;
}

Vertex parse_label(const Token& tok) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last ||
      value >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(ParseErrc::kMalformedInteger, tok.line, tok.column,
                     "expected a non-negative integer, got '" +
                         std::string(tok.text) + "'");
  }
  return static_cast<Vertex>(value);
}

Vertex parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) {
    throw ParseError(ParseErrc::kMissingHeader, 1, 1, "empty input");
  }
  const Line& header = lines.front();
  if (header.tokens.size() != 1) {
    const Token& extra = header.tokens[1];
    throw ParseError(ParseErrc::kMalformedInteger, extra.line, extra.column,
                     "header line must hold only the vertex count");
  }
  return parse_label(header.tokens.front());
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ParentArray parse_parent_file(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const Vertex n = parse_header(lines);
  if (n == 0) {
    const Token& tok = lines.front().tokens.front();
    throw ParseError(ParseErrc::kNoRoot, tok.line, tok.column,
                     "a parent array needs at least one vertex");
  }

  std::vector<Vertex> parents;
  parents.reserve(n);
  std::size_t end_line = lines.front().number;
  std::size_t end_column = 1;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (const Token& tok : lines[l].tokens) {
      if (parents.size() == n) {
        throw ParseError(ParseErrc::kLengthMismatch, tok.line, tok.column,
                         "more than n = " + std::to_string(n) + " parent entries");
      }
      const Vertex label = static_cast<Vertex>(parents.size() + 1);
      const Vertex p = parse_label(tok);
      if (p >= label) {
        throw ParseError(ParseErrc::kParentOrder, tok.line, tok.column,
                         "parent[" + std::to_string(label) + "] = " +
                             std::to_string(p) + " violates parent[i] < i");
      }
      parents.push_back(p);
      end_line = tok.line;
      end_column = tok.column + tok.text.size();
    }
  }
  if (parents.size() != n) {
    throw ParseError(ParseErrc::kLengthMismatch, end_line, end_column,
                     "expected " + std::to_string(n) + " parent entries, found " +
                         std::to_string(parents.size()));
  }
  return ParentArray(parents);
}

EdgeList parse_edge_list(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const Vertex n = parse_header(lines);
  if (n == 0) {
    const Token& tok = lines.front().tokens.front();
    throw ParseError(ParseErrc::kMalformedInteger, tok.line, tok.column,
                     "vertex count must be at least 1");
  }

  EdgeList out;
  out.n = n;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.tokens.size() != 2) {
      const Token& tok = line.tokens.size() > 2 ? line.tokens[2] : line.tokens[0];
      throw ParseError(ParseErrc::kMalformedPair, tok.line, tok.column,
                       "expected exactly two labels 'u v'");
    }
    const Vertex u = parse_label(line.tokens[0]);
    const Vertex v = parse_label(line.tokens[1]);
    for (int k = 0; k < 2; ++k) {
      const Vertex x = k == 0 ? u : v;
      if (x < 1 || x > n) {
        const Token& tok = line.tokens[k];
        throw ParseError(ParseErrc::kLabelOutOfRange, tok.line, tok.column,
                         "label " + std::to_string(x) + " outside [1, " +
                             std::to_string(n) + "]");
      }
    }
    if (u == v) {
      throw ParseError(ParseErrc::kSelfLoop, line.number, line.tokens[0].column,
                       "edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                              std::max(u, v);
    if (!seen.insert(key).second) {
      throw ParseError(ParseErrc::kDuplicateEdge, line.number, line.tokens[0].column,
                       "edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " listed twice");
    }
    out.edges.emplace_back(u, v);
  }
  return out;
}

ParentArray read_parent_file(const std::filesystem::path& path) {
  return parse_parent_file(read_all(path));
}

EdgeList read_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_all(path));
}

std::string format_parent_file(const ParentArray& parents) {
  std::string out = std::to_string(parents.size());
  out += '\n';
  for (Vertex v = 1; v <= parents.size(); ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(parents.parent(v));
  }
  out += '\n';
  return out;
}

std::string format_edge_list(const EdgeList& edges) {
  std::string out = std::to_string(edges.n);
  out += '\n';
  for (const auto& [u, v] : edges.edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("short write to '" + path.string() + "'");
}

Relabeling relabel_bfs(const EdgeList& edges, RootPolicy policy) {
  const Vertex n = edges.n;
  if (n == 0) throw InvalidTreeError("relabel_bfs: empty vertex set");
  if (edges.edges.size() != static_cast<std::size_t>(n) - 1) {
    throw InvalidTreeError("relabel_bfs: a tree on " + std::to_string(n) +
                           " vertices needs " + std::to_string(n - 1) +
                           " edges, got " + std::to_string(edges.edges.size()));
  }
  if (policy.is_explicit() && policy.root() > n) {
    throw InvalidArgumentError("relabel_bfs: root " + std::to_string(policy.root()) +
                               " outside [1, " + std::to_string(n) + "]");
  }

  // CSR adjacency with each list in ascending order: arcs are bucketed by
  // target label, then emitted target-ascending into their source lists.
  std::vector<Vertex> degree(n + 2, 0);
  for (const auto& [u, v] : edges.edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidTreeError("relabel_bfs: edge label outside [1, n]");
    }
    ++degree[u];
    ++degree[v];
  }
  std::vector<Vertex> by_target_begin(n + 2, 0);
  for (Vertex v = 1; v <= n; ++v) by_target_begin[v + 1] = by_target_begin[v] + degree[v];
  std::vector<Vertex> sources(2 * edges.edges.size());
  {
    std::vector<Vertex> cursor(by_target_begin.begin(), by_target_begin.end());
    for (const auto& [u, v] : edges.edges) {
      sources[cursor[v]++] = u;
      sources[cursor[u]++] = v;
    }
  }
  const std::vector<Vertex>& adj_begin = by_target_begin;
  std::vector<Vertex> adjacency(sources.size());
  {
    std::vector<Vertex> cursor(adj_begin.begin(), adj_begin.end());
    for (Vertex target = 1; target <= n; ++target) {
      for (Vertex k = by_target_begin[target]; k < by_target_begin[target + 1]; ++k) {
        adjacency[cursor[sources[k]]++] = target;
      }
    }
  }

  Vertex root = policy.root();
  if (!policy.is_explicit()) {
    root = 1;
    for (Vertex v = 2; v <= n; ++v) {
      if (degree[v] > degree[root]) root = v;
    }
  }

  Relabeling out;
  out.new_label.assign(n + 1, 0);
  out.old_label.assign(n + 1, 0);
  std::vector<Vertex> new_parent(n, kNoParent);

  Vertex next = 1;
  out.new_label[root] = next;
  out.old_label[next] = root;
  ++next;
  for (Vertex head = 1; head < next; ++head) {
    const Vertex old = out.old_label[head];
    for (Vertex k = adj_begin[old]; k < adj_begin[old + 1]; ++k) {
      const Vertex nb = adjacency[k];
      if (out.new_label[nb] != 0) continue;
      out.new_label[nb] = next;
      out.old_label[next] = nb;
      new_parent[next - 1] = head;
      ++next;
    }
  }
  if (next != n + 1) {
    throw InvalidTreeError("relabel_bfs: input is disconnected (" +
                           std::to_string(next - 1) + " of " + std::to_string(n) +
                           " vertices reachable from the root)");
  }
  out.parents = ParentArray(new_parent);
  return out;
}

EdgeList edge_list_of(const ParentArray& parents) {
  EdgeList out;
  out.n = parents.size();
  for (Vertex v = 1; v <= parents.size(); ++v) {
    if (!parents.is_root(v)) out.edges.emplace_back(parents.parent(v), v);
  }
  return out;
}

ShapeReport validate(const ParentArray& parents, ForestMode mode) {
  std::vector<Vertex> roots;
  for (Vertex v = 1; v <= parents.size(); ++v) {
    if (parents.is_root(v)) roots.push_back(v);
  }
  if (mode == ForestMode::kTree && roots.size() != 1) {
    throw InvalidTreeError("expected a single tree, found " +
                           std::to_string(roots.size()) + " roots");
  }
  return ShapeReport{VertexSet::from_sorted(std::move(roots))};
}

AdjacencyTree::AdjacencyTree(const ParentArray& parents) : n_(parents.size()) {
  const auto par = parents.one_based();
  parent_.assign(par.begin(), par.end());
  degree_.assign(n_ + 1, 0);
  child_begin_.assign(n_ + 2, 0);
  for (Vertex v = 1; v <= n_; ++v) {
    if (par[v] == kNoParent) {
      roots_.push_back(v);
    } else {
      ++child_begin_[par[v] + 1];
      ++degree_[par[v]];
      ++degree_[v];
    }
  }
  for (Vertex v = 1; v <= n_; ++v) child_begin_[v + 1] += child_begin_[v];
  children_.resize(n_ - roots_.size());
  std::vector<Vertex> cursor(child_begin_.begin(), child_begin_.end() - 1);
  for (Vertex v = 1; v <= n_; ++v) {
    if (par[v] != kNoParent) children_[cursor[par[v]]++] = v;
  }
}

AdjacencyTree build_adjacency(const ParentArray& parents) {
  return AdjacencyTree(parents);
}

VertexSet leaf_set(const AdjacencyTree& t) {
  if (t.roots().size() != 1) {
    throw InvalidTreeError("leaf_set: expected a single tree, found " +
                           std::to_string(t.roots().size()) + " roots");
  }
  if (t.size() == 1) return VertexSet::from_sorted({1});
  std::vector<Vertex> leaves;
  for (Vertex v = 1; v <= t.size(); ++v) {
    if (t.degree(v) == 1) leaves.push_back(v);
  }
  return VertexSet::from_sorted(std::move(leaves));
}

VertexSet closed_neighborhood(const AdjacencyTree& t, const VertexSet& s) {
  std::vector<char> mark(t.size() + 1, 0);
  for (Vertex v : s) {
    if (v > t.size()) {
      throw InvalidArgumentError("closed_neighborhood: label " + std::to_string(v) +
                                 " outside [1, " + std::to_string(t.size()) + "]");
    }
    mark[v] = 1;
    t.for_each_neighbor(v, [&](Vertex u) { mark[u] = 1; });
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= t.size(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace treedom
