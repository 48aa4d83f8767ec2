#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gpforge {

using VertexId = std::uint32_t;

enum class MatchMode {
  LabelsOnly,  // negative flags are invisible on both sides
  WithFlags,   // pattern flag must equal host flag on every mapped edge
};

struct Vertex {
  VertexId id;
  std::string label;
};

struct Edge {
  VertexId src;
  VertexId dst;
  std::string label;
  bool neg = false;
};

// Edge identity; the neg flag is an annotation, never part of the key.
using EdgeKey = std::tuple<VertexId, VertexId, std::string>;

inline EdgeKey key_of(const Edge& e) { return {e.src, e.dst, e.label}; }

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable directed graph with vertex/edge labels and per-edge negative
// flags. Every mutating helper returns a fresh copy, so values can be
// shared freely across threads.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t vertexCount() const { return verts_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  std::size_t flaggedEdgeCount() const;
  bool empty() const { return verts_.empty(); }

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool hasVertex(VertexId id) const;
  std::size_t indexOf(VertexId id) const;
  VertexId idOf(std::size_t index) const { return verts_[index].id; }
  const std::string& labelOf(VertexId id) const { return verts_[indexOf(id)].label; }

  struct Arc {
    std::size_t other;  // internal index of the far endpoint
    std::size_t edge;   // index into edges()
  };
  const std::vector<Arc>& outArcs(std::size_t index) const { return out_[index]; }
  const std::vector<Arc>& inArcs(std::size_t index) const { return in_[index]; }
  std::size_t outDegree(std::size_t index) const { return out_[index].size(); }
  std::size_t inDegree(std::size_t index) const { return in_[index].size(); }

  const Edge* findEdge(VertexId src, VertexId dst, const std::string& label) const;

  bool isWeaklyConnected() const;

  std::set<VertexId> vertexIdSet() const;

  // Restriction to vs with every edge of g whose endpoints both lie in vs.
  LabeledDigraph induced(const std::set<VertexId>& vs) const;
  // Copy with neg set on exactly the given edges.
  LabeledDigraph withFlags(const std::set<EdgeKey>& flagged) const;
  // Copy with the given vertices and all their incident edges removed.
  LabeledDigraph withoutVertices(const std::set<VertexId>& vs) const;

  // Graph spanned by the given edges; vertex labels looked up in labelSource.
  static LabeledDigraph fromEdges(const std::vector<Edge>& edges,
                                  const LabeledDigraph& labelSource);

  mutable std::optional<std::string> codeCache[2];

 private:
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> edgeLookup_;
};

// Line-oriented text format: `v <id> <label>`, `e <src> <dst> <label>`,
// '#' starts a comment. A trailing `neg` token on an edge line marks a
// negative flag; it is only emitted by debug dumps, never required on input.
LabeledDigraph parse_graph_text(std::istream& in);
LabeledDigraph parse_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const LabeledDigraph& g,
                      bool withNegTokens = false);

}  // namespace gpforge
