#include "gpforge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace gpforge {

namespace {

std::uint64_t pairKey(VertexId src, VertexId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

LabeledDigraph::LabeledDigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(verts_.begin(), verts_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (!index_.emplace(verts_[i].id, i).second)
      throw InputError("duplicate vertex id " + std::to_string(verts_[i].id));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
  });
  out_.resize(verts_.size());
  in_.resize(verts_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    auto si = index_.find(e.src);
    auto di = index_.find(e.dst);
    if (si == index_.end() || di == index_.end())
      throw InputError("edge endpoint not in vertex set: " + std::to_string(e.src) +
                       "->" + std::to_string(e.dst));
    if (i > 0 && key_of(edges_[i - 1]) == key_of(e))
      throw InputError("duplicate edge " + std::to_string(e.src) + "->" +
                       std::to_string(e.dst) + " label '" + e.label + "'");
    out_[si->second].push_back({di->second, i});
    in_[di->second].push_back({si->second, i});
    edgeLookup_[pairKey(e.src, e.dst)].push_back(i);
  }
}

std::size_t LabeledDigraph::flaggedEdgeCount() const {
  std::size_t n = 0;
  for (const Edge& e : edges_)
    if (e.neg) ++n;
  return n;
}

bool LabeledDigraph::hasVertex(VertexId id) const { return index_.count(id) > 0; }

std::size_t LabeledDigraph::indexOf(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw InputError("unknown vertex id " + std::to_string(id));
  return it->second;
}

const Edge* LabeledDigraph::findEdge(VertexId src, VertexId dst,
                                     const std::string& label) const {
  auto it = edgeLookup_.find(pairKey(src, dst));
  if (it == edgeLookup_.end()) return nullptr;
  for (std::size_t idx : it->second)
    if (edges_[idx].label == label) return &edges_[idx];
  return nullptr;
}

bool LabeledDigraph::isWeaklyConnected() const {
  if (verts_.empty()) return true;
  std::vector<char> seen(verts_.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (const auto& arcs : {std::cref(out_[v]), std::cref(in_[v])}) {
      for (const Arc& a : arcs.get()) {
        if (!seen[a.other]) {
          seen[a.other] = 1;
          ++count;
          q.push(a.other);
        }
      }
    }
  }
  return count == verts_.size();
}

std::set<VertexId> LabeledDigraph::vertexIdSet() const {
  std::set<VertexId> out;
  for (const Vertex& v : verts_) out.insert(v.id);
  return out;
}

LabeledDigraph LabeledDigraph::induced(const std::set<VertexId>& vs) const {
  std::vector<Vertex> nv;
  for (VertexId id : vs) nv.push_back({id, labelOf(id)});  // throws on unknown id
  std::vector<Edge> ne;
  for (const Edge& e : edges_)
    if (vs.count(e.src) && vs.count(e.dst)) ne.push_back(e);
  return LabeledDigraph(std::move(nv), std::move(ne));
}

LabeledDigraph LabeledDigraph::withFlags(const std::set<EdgeKey>& flagged) const {
  std::vector<Edge> ne = edges_;
  for (Edge& e : ne) e.neg = flagged.count(key_of(e)) > 0;
  return LabeledDigraph(verts_, std::move(ne));
}

LabeledDigraph LabeledDigraph::withoutVertices(const std::set<VertexId>& vs) const {
  std::vector<Vertex> nv;
  for (const Vertex& v : verts_)
    if (!vs.count(v.id)) nv.push_back(v);
  std::vector<Edge> ne;
  for (const Edge& e : edges_)
    if (!vs.count(e.src) && !vs.count(e.dst)) ne.push_back(e);
  return LabeledDigraph(std::move(nv), std::move(ne));
}

LabeledDigraph LabeledDigraph::fromEdges(const std::vector<Edge>& edges,
                                         const LabeledDigraph& labelSource) {
  std::set<VertexId> vs;
  for (const Edge& e : edges) {
    vs.insert(e.src);
    vs.insert(e.dst);
  }
  std::vector<Vertex> nv;
  for (VertexId id : vs) nv.push_back({id, labelSource.labelOf(id)});
  return LabeledDigraph(std::move(nv), edges);
}

LabeledDigraph parse_graph_text(std::istream& in) {
  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& what) -> InputError {
      return InputError("line " + std::to_string(lineNo) + ": " + what);
    };
    if (tag == "v") {
      VertexId id;
      std::string label;
      if (!(ls >> id >> label)) throw fail("expected 'v <id> <label>'");
      verts.push_back({id, label});
    } else if (tag == "e") {
      VertexId src, dst;
      std::string label;
      if (!(ls >> src >> dst >> label)) throw fail("expected 'e <src> <dst> <label>'");
      std::string extra;
      bool neg = false;
      if (ls >> extra) {
        if (extra != "neg") throw fail("unexpected token '" + extra + "'");
        neg = true;
      }
      edges.push_back({src, dst, label, neg});
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  return LabeledDigraph(std::move(verts), std::move(edges));
}

LabeledDigraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_graph_text(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_graph_text(std::ostream& out, const LabeledDigraph& g, bool withNegTokens) {
  for (const Vertex& v : g.vertices()) out << "v " << v.id << ' ' << v.label << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.src << ' ' << e.dst << ' ' << e.label;
    if (withNegTokens && e.neg) out << " neg";
    out << '\n';
  }
}

}  // namespace gpforge
