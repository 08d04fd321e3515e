#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agot/config.hpp"
#include "agot/heritage.hpp"

namespace agot {

/// A unit of content informing the final response. The title is the short
/// label shown on rendered graphs; the content carries the task text.
struct Thought {
  std::string title;
  std::string content;
};

/// Per-layer guidance generated alongside the layer's thoughts.
struct Strategy {
  std::string text;
};

struct Answer {
  std::string text;
};

/// Node life cycle. Nodes start New and either get evaluated directly or are
/// classified complex and expanded into a nested graph. Final marks the node
/// whose answer became the graph's final answer.
enum class NodeStatus { New, EvaluatedDirect, ExpandedComplex, Final };

std::string to_string(NodeStatus status);
std::optional<NodeStatus> node_status_from(const std::string& name);

struct Node {
  Heritage heritage;  ///< graph prefix + this node's own position
  Thought thought;
  int strategy_layer = 0;  ///< layer whose strategy applies to this node
  std::optional<Answer> answer;
  std::optional<Heritage> nested;  ///< key of the nested graph, when expanded
  NodeStatus status = NodeStatus::New;
  bool is_final_candidate = false;  ///< generator-set flag, recorded as parsed
};

/// Directed edge between node-table indices of one graph. Edges always point
/// from an earlier layer to a later one, which keeps every graph acyclic.
struct Edge {
  int from = 0;
  int to = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Thought synthesized when a graph exhausts its layers without any
/// generator-flagged final thought. It is evaluated to produce the final
/// answer but does not occupy a layer slot.
struct SynthesizedFinal {
  Thought thought;
  Answer answer;
};

/// One layered DAG. The top-level graph has the empty heritage prefix; each
/// nested graph's prefix ends at the complex node it expands.
struct Graph {
  Heritage heritage_prefix;
  std::vector<std::vector<int>> layers;  ///< node-table indices per layer
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<Strategy> strategies;  ///< one per layer
  std::optional<Answer> final_answer;
  std::optional<SynthesizedFinal> synthesis;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int layer_count() const { return static_cast<int>(layers.size()); }

  /// Layer that holds the given node-table index; -1 if not placed.
  int layer_of(int node_index) const;

  /// (layer, index-within-layer) of a node-table index.
  Position position_of(int node_index) const;

  /// Node-table index at a (layer, node) position, if present.
  std::optional<int> index_at(Position pos) const;
};

/// Appends one generated layer: thoughts become New nodes, the strategy is
/// recorded, and edges (from existing nodes to the new ones) are added.
/// Returns the new layer's index. Throws GraphError on any bound violation,
/// dangling endpoint, or non-forward edge.
int add_layer(Graph& g, const std::vector<Thought>& thoughts, const Strategy& strategy,
              const std::vector<Edge>& edges, const std::vector<bool>& final_flags,
              const AgotConfig& cfg);

/// All nodes reachable by reverse edge traversal from node_index, in
/// topological (layer, index) order. Throws GraphError for unknown nodes.
std::vector<int> ancestors(const Graph& g, int node_index);

struct Violation {
  std::string code;
  std::string message;
};

/// Checks every structural invariant of one graph against the config bounds.
/// Violations are data, not faults; an empty list means the graph is sound.
std::vector<Violation> validate(const Graph& g, const AgotConfig& cfg);

/// All graphs of one run, keyed by heritage prefix. The root graph sits at
/// the empty heritage.
struct RunForest {
  std::map<Heritage, Graph> graphs;

  Graph& root();
  const Graph& root() const;
  bool has_root() const { return graphs.contains(Heritage::root()); }
};

/// Union of per-graph node and edge sets. Nodes are identified by their full
/// heritage; edges carry the owning graph's heritage prefix.
struct GlobalSets {
  std::vector<Heritage> nodes;
  std::vector<std::pair<Heritage, Edge>> edges;
};

GlobalSets global_sets(const RunForest& forest);

/// Forest-level validation: per-graph invariants plus heritage uniqueness and
/// nested-graph parentage.
std::vector<Violation> validate(const RunForest& forest, const AgotConfig& cfg);

/// Worst-case node count over a whole run under cfg:
/// sum over k = 0..d_max of (l_max * n_max)^(k+1).
long long max_total_nodes(const AgotConfig& cfg);

}  // namespace agot
