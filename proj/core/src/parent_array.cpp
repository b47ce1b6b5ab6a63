#include "treedom/parent_array.hpp"

#include <algorithm>
#include <string>

#include "treedom/error.hpp"

namespace treedom {

const char* to_string(ParseErrc code) {
  switch (code) {
    case ParseErrc::kMissingHeader: return "missing header";
    case ParseErrc::kMalformedInteger: return "malformed integer";
    case ParseErrc::kLengthMismatch: return "length mismatch";
    case ParseErrc::kParentOrder: return "parent order violated";
    case ParseErrc::kNoRoot: return "no root";
    case ParseErrc::kMalformedPair: return "malformed pair";
    case ParseErrc::kLabelOutOfRange: return "label out of range";
    case ParseErrc::kSelfLoop: return "self-loop";
    case ParseErrc::kDuplicateEdge: return "duplicate edge";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrc code, std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + to_string(code) + ": " + detail),
      code_(code),
      line_(line),
      column_(column) {}

ParentArray::ParentArray(std::span<const Vertex> parents) {
  parents_.reserve(parents.size() + 1);
  parents_.push_back(kNoParent);
  for (std::size_t k = 0; k < parents.size(); ++k) {
    const Vertex label = static_cast<Vertex>(k + 1);
    if (parents[k] >= label) {
      throw InvalidTreeError("parent[" + std::to_string(label) + "] = " +
                             std::to_string(parents[k]) +
                             " violates parent[i] < i");
    }
    parents_.push_back(parents[k]);
  }
}

std::size_t ParentArray::root_count() const {
  return static_cast<std::size_t>(
      std::count(parents_.begin() + 1, parents_.end(), kNoParent));
}

}  // namespace treedom
