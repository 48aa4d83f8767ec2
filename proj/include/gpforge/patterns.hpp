#pragma once

#include "gpforge/graph.hpp"
#include "gpforge/util.hpp"

namespace gpforge {

// Uniform labels used by all synthetic instances.
inline const char* kVertexLabel = "n";
inline const char* kEdgeLabel = "e";

enum class PatternKind { WP1, WP2, BP1, BP2 };
enum class RuleKind { Strong, Weak, Chain };

const char* pattern_name(PatternKind p);
const char* rule_name(RuleKind r);
PatternKind pattern_from_name(const std::string& s);
RuleKind rule_from_name(const std::string& s);

// Base core graphs. WP1: index vertex fanning out to two content pages
// joined by a chain link. WP2: index and first page linked both ways.
// BP1: feed-forward loop. BP2: bi-fan.
LabeledDigraph base_pattern(PatternKind kind);

// Automorphism-orbit partition of the vertices.
std::vector<std::set<VertexId>> role_orbits(const LabeledDigraph& core);

// One GP: starts from the base graph and applies one-vertex generalization
// steps until targetVertices is reached. Chain appends the next content
// page; Strong duplicates an orbit representative with all its edges; Weak
// duplicates with a random nonempty subset of them.
LabeledDigraph instantiate_gp(PatternKind pattern, RuleKind rule,
                              std::size_t targetVertices, Rng& rng);

struct InstanceConfig {
  PatternKind pattern = PatternKind::BP1;
  RuleKind rule = RuleKind::Strong;
  std::size_t numGps = 20;
  std::size_t randomLinks = 0;
  std::uint64_t seed = 0;
  // GP sizes drawn uniformly from [base, base + sizeSpread]; 0 keeps the
  // per-family default (6 for web patterns, 3 for biological ones).
  std::size_t sizeSpread = 0;
};

std::size_t effective_size_spread(const InstanceConfig& cfg);

struct Instance {
  LabeledDigraph graph;
  std::vector<std::set<VertexId>> truth;
  InstanceConfig config;
};

// Disjoint union of numGps freshly generated GPs plus exactly randomLinks
// distinct random edges whose endpoints lie in different GPs.
Instance generate_instance(const InstanceConfig& config);

void write_instance(const Instance& inst, const std::string& dir);
Instance read_instance(const std::string& dir);

}  // namespace gpforge
