#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "gpforge/graph.hpp"

namespace gpforge {

// Injective, label-preserving vertex map from pattern ids to host ids.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(std::vector<std::pair<VertexId, VertexId>> pairs);

  VertexId at(VertexId patternId) const;
  const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
  std::set<VertexId> image() const;
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;  // sorted by pattern id
};

// Return false from the visitor to stop the search early.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

// Enumerates every embedding of pattern in host exactly once, in a
// deterministic order. Returns true iff at least one embedding was found.
// The empty pattern yields the single empty embedding.
bool subgraph_match(const LabeledDigraph& pattern, const LabeledDigraph& host,
                    MatchMode mode, const EmbeddingVisitor& visit);

std::vector<Embedding> all_embeddings(const LabeledDigraph& pattern,
                                      const LabeledDigraph& host, MatchMode mode);
std::optional<Embedding> first_embedding(const LabeledDigraph& pattern,
                                         const LabeledDigraph& host, MatchMode mode);
bool has_embedding(const LabeledDigraph& pattern, const LabeledDigraph& host,
                   MatchMode mode);

inline bool is_subgraph_of(const LabeledDigraph& a, const LabeledDigraph& b,
                           MatchMode mode) {
  return has_embedding(a, b, mode);
}
bool is_proper_subgraph_of(const LabeledDigraph& a, const LabeledDigraph& b,
                           MatchMode mode);

bool is_isomorphic(const LabeledDigraph& a, const LabeledDigraph& b, MatchMode mode);

// Canonical byte code: equal codes iff isomorphic under the same mode.
// Codes compare with the usual string order, which is the deterministic
// tie-break order used throughout.
using CanonicalCode = std::string;
CanonicalCode canonical_form(const LabeledDigraph& g, MatchMode mode);

std::string code_hex(const CanonicalCode& code);

}  // namespace gpforge
