#include "agot/graph.hpp"

#include <algorithm>
#include <set>

namespace agot {

std::string to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::New: return "new";
    case NodeStatus::EvaluatedDirect: return "evaluated_direct";
    case NodeStatus::ExpandedComplex: return "expanded_complex";
    case NodeStatus::Final: return "final";
  }
  return "new";
}

std::optional<NodeStatus> node_status_from(const std::string& name) {
  if (name == "new") return NodeStatus::New;
  if (name == "evaluated_direct") return NodeStatus::EvaluatedDirect;
  if (name == "expanded_complex") return NodeStatus::ExpandedComplex;
  if (name == "final") return NodeStatus::Final;
  return std::nullopt;
}

int Graph::layer_of(int node_index) const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (int idx : layers[l]) {
      if (idx == node_index) return static_cast<int>(l);
    }
  }
  return -1;
}

Position Graph::position_of(int node_index) const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& layer = layers[l];
    for (std::size_t n = 0; n < layer.size(); ++n) {
      if (layer[n] == node_index) {
        return Position{static_cast<int>(l), static_cast<int>(n)};
      }
    }
  }
  throw GraphError("node index " + std::to_string(node_index) + " is not placed in any layer");
}

std::optional<int> Graph::index_at(Position pos) const {
  if (pos.layer < 0 || pos.layer >= layer_count()) return std::nullopt;
  const auto& layer = layers[pos.layer];
  if (pos.node < 0 || pos.node >= static_cast<int>(layer.size())) return std::nullopt;
  return layer[pos.node];
}

int add_layer(Graph& g, const std::vector<Thought>& thoughts, const Strategy& strategy,
              const std::vector<Edge>& edges, const std::vector<bool>& final_flags,
              const AgotConfig& cfg) {
  if (thoughts.empty()) {
    throw GraphError("a layer must contain at least one thought");
  }
  if (static_cast<int>(thoughts.size()) > cfg.n_max) {
    throw GraphError("layer of " + std::to_string(thoughts.size()) + " thoughts exceeds n_max = " +
                     std::to_string(cfg.n_max));
  }
  if (g.layer_count() >= cfg.l_max) {
    throw GraphError("graph already has l_max = " + std::to_string(cfg.l_max) + " layers");
  }
  if (final_flags.size() != thoughts.size()) {
    throw GraphError("final_flags size must match thought count");
  }
  if (strategy.text.empty()) {
    throw GraphError("layer strategy must be non-empty");
  }
  for (const auto& t : thoughts) {
    if (t.content.empty()) throw GraphError("thought content must be non-empty");
  }

  const int new_layer = g.layer_count();
  const int first_new = g.node_count();
  const int past_new = first_new + static_cast<int>(thoughts.size());
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= first_new) {
      throw GraphError("edge source " + std::to_string(e.from) +
                       " does not reference an existing node");
    }
    if (e.to < first_new || e.to >= past_new) {
      throw GraphError("edge target " + std::to_string(e.to) +
                       " does not reference a node of the new layer");
    }
  }

  g.layers.emplace_back();
  g.strategies.push_back(strategy);
  for (std::size_t i = 0; i < thoughts.size(); ++i) {
    Node node;
    node.heritage =
        g.heritage_prefix.child(Position{new_layer, static_cast<int>(i)});
    node.thought = thoughts[i];
    node.strategy_layer = new_layer;
    node.status = NodeStatus::New;
    node.is_final_candidate = final_flags[i];
    g.layers.back().push_back(g.node_count());
    g.nodes.push_back(std::move(node));
  }
  g.edges.insert(g.edges.end(), edges.begin(), edges.end());
  return new_layer;
}

std::vector<int> ancestors(const Graph& g, int node_index) {
  if (node_index < 0 || node_index >= g.node_count()) {
    throw GraphError("unknown node index " + std::to_string(node_index));
  }
  std::set<int> seen;
  std::vector<int> frontier{node_index};
  while (!frontier.empty()) {
    int current = frontier.back();
    frontier.pop_back();
    for (const Edge& e : g.edges) {
      if (e.to == current && !seen.contains(e.from)) {
        seen.insert(e.from);
        frontier.push_back(e.from);
      }
    }
  }
  std::vector<int> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&g](int a, int b) {
    const Position pa = g.position_of(a);
    const Position pb = g.position_of(b);
    return pa < pb;
  });
  return out;
}

namespace {

void check_graph(const Graph& g, const AgotConfig& cfg, const std::string& where,
                 std::vector<Violation>& out) {
  if (g.heritage_prefix.depth() > cfg.d_max) {
    out.push_back({"depth_bound", where + ": heritage prefix length " +
                                      std::to_string(g.heritage_prefix.depth()) +
                                      " exceeds d_max = " + std::to_string(cfg.d_max)});
  }
  if (g.layer_count() > cfg.l_max) {
    out.push_back({"layer_bound", where + ": " + std::to_string(g.layer_count()) +
                                      " layers exceed l_max = " + std::to_string(cfg.l_max)});
  }
  if (g.strategies.size() != g.layers.size()) {
    out.push_back({"strategy_count", where + ": strategy list does not match layer count"});
  }
  for (std::size_t l = 0; l < g.layers.size(); ++l) {
    const int n = static_cast<int>(g.layers[l].size());
    if (n < 1 || n > cfg.n_max) {
      out.push_back({"node_bound", where + ": layer " + std::to_string(l) + " has " +
                                       std::to_string(n) + " nodes, outside [1, " +
                                       std::to_string(cfg.n_max) + "]"});
    }
  }
  for (std::size_t l = 0; l < g.strategies.size(); ++l) {
    if (g.strategies[l].text.empty()) {
      out.push_back({"empty_strategy", where + ": layer " + std::to_string(l) +
                                           " has an empty strategy"});
    }
  }

  // Placement: every node appears in exactly one layer slot, and its heritage
  // tail matches that slot.
  std::vector<int> placements(g.nodes.size(), 0);
  for (std::size_t l = 0; l < g.layers.size(); ++l) {
    for (std::size_t n = 0; n < g.layers[l].size(); ++n) {
      const int idx = g.layers[l][n];
      if (idx < 0 || idx >= g.node_count()) {
        out.push_back({"dangling_layer_entry",
                       where + ": layer " + std::to_string(l) + " references node index " +
                           std::to_string(idx)});
        continue;
      }
      placements[idx] += 1;
      const Node& node = g.nodes[idx];
      const Heritage expected = g.heritage_prefix.child(
          Position{static_cast<int>(l), static_cast<int>(n)});
      if (node.heritage != expected) {
        out.push_back({"heritage_mismatch",
                       where + ": node " + std::to_string(idx) + " heritage " +
                           node.heritage.str() + " does not match placement " + expected.str()});
      }
    }
  }
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (placements[i] != 1) {
      out.push_back({"placement", where + ": node " + std::to_string(i) + " appears in " +
                                      std::to_string(placements[i]) + " layer slots"});
    }
  }

  for (const Edge& e : g.edges) {
    if (e.from < 0 || e.from >= g.node_count() || e.to < 0 || e.to >= g.node_count()) {
      out.push_back({"dangling_edge", where + ": edge " + std::to_string(e.from) + "->" +
                                          std::to_string(e.to) + " references unknown nodes"});
      continue;
    }
    const int lf = g.layer_of(e.from);
    const int lt = g.layer_of(e.to);
    if (lf < 0 || lt < 0 || lf >= lt) {
      out.push_back({"edge_direction", where + ": edge " + std::to_string(e.from) + "->" +
                                           std::to_string(e.to) +
                                           " does not point to a later layer"});
    }
  }

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& node = g.nodes[i];
    const bool expanded = node.status == NodeStatus::ExpandedComplex;
    if (expanded != node.nested.has_value()) {
      out.push_back({"nested_handle", where + ": node " + std::to_string(i) +
                                          " nested handle inconsistent with status " +
                                          to_string(node.status)});
    }
    if (node.nested && *node.nested != node.heritage) {
      out.push_back({"nested_handle", where + ": node " + std::to_string(i) +
                                          " nested handle does not equal its heritage"});
    }
    if ((node.status == NodeStatus::EvaluatedDirect || node.status == NodeStatus::Final) &&
        (!node.answer || node.answer->text.empty())) {
      out.push_back({"missing_answer", where + ": node " + std::to_string(i) +
                                           " is evaluated but has no answer"});
    }
    if (node.thought.content.empty()) {
      out.push_back({"empty_thought", where + ": node " + std::to_string(i) +
                                          " has empty thought content"});
    }
  }

  // Final bookkeeping. A generator-flagged final leaves exactly one Final
  // node; a synthesized final leaves none (the synthesis record carries it).
  int final_nodes = 0;
  for (const Node& node : g.nodes) {
    if (node.status == NodeStatus::Final) ++final_nodes;
  }
  if (g.final_answer) {
    const int expected = g.synthesis ? 0 : 1;
    if (final_nodes != expected) {
      out.push_back({"final_marking",
                     where + ": graph with final answer has " + std::to_string(final_nodes) +
                         " Final nodes, expected " + std::to_string(expected)});
    }
    if (g.final_answer->text.empty()) {
      out.push_back({"empty_final", where + ": final answer is empty"});
    }
    for (const Node& node : g.nodes) {
      if (node.status == NodeStatus::Final &&
          (!node.answer || node.answer->text != g.final_answer->text)) {
        out.push_back({"final_marking",
                       where + ": Final node answer differs from the graph's final answer"});
      }
    }
    if (g.synthesis && g.synthesis->answer.text != g.final_answer->text) {
      out.push_back({"final_marking",
                     where + ": synthesized answer differs from the graph's final answer"});
    }
  } else if (final_nodes != 0 || g.synthesis) {
    out.push_back({"final_marking", where + ": final markings present without a final answer"});
  }
}

}  // namespace

std::vector<Violation> validate(const Graph& g, const AgotConfig& cfg) {
  std::vector<Violation> out;
  check_graph(g, cfg, "graph " + g.heritage_prefix.str(), out);
  return out;
}

Graph& RunForest::root() {
  auto it = graphs.find(Heritage::root());
  if (it == graphs.end()) throw GraphError("forest has no root graph");
  return it->second;
}

const Graph& RunForest::root() const {
  auto it = graphs.find(Heritage::root());
  if (it == graphs.end()) throw GraphError("forest has no root graph");
  return it->second;
}

GlobalSets global_sets(const RunForest& forest) {
  GlobalSets out;
  for (const auto& [prefix, graph] : forest.graphs) {
    for (const Node& node : graph.nodes) {
      out.nodes.push_back(node.heritage);
    }
    for (const Edge& e : graph.edges) {
      out.edges.emplace_back(prefix, e);
    }
  }
  return out;
}

std::vector<Violation> validate(const RunForest& forest, const AgotConfig& cfg) {
  std::vector<Violation> out;
  if (!forest.has_root()) {
    out.push_back({"missing_root", "forest has no graph at the empty heritage"});
  }
  for (const auto& [prefix, graph] : forest.graphs) {
    if (graph.heritage_prefix != prefix) {
      out.push_back({"forest_key", "graph keyed at " + prefix.str() +
                                       " carries prefix " + graph.heritage_prefix.str()});
    }
    check_graph(graph, cfg, "graph " + prefix.str(), out);
    if (!prefix.is_root()) {
      const auto parent_key = prefix.parent();
      auto it = forest.graphs.find(parent_key);
      if (it == forest.graphs.end()) {
        out.push_back({"orphan_graph", "graph " + prefix.str() + " has no parent graph"});
        continue;
      }
      const auto idx = it->second.index_at(prefix.last());
      if (!idx) {
        out.push_back({"orphan_graph", "graph " + prefix.str() +
                                           " has no node at its heritage position"});
      } else if (it->second.nodes[*idx].status != NodeStatus::ExpandedComplex) {
        out.push_back({"parent_not_complex",
                       "graph " + prefix.str() + " hangs off a node with status " +
                           to_string(it->second.nodes[*idx].status)});
      }
    }
  }

  // Heritage uniqueness across the whole forest.
  std::set<Heritage> seen;
  for (const auto& [prefix, graph] : forest.graphs) {
    for (const Node& node : graph.nodes) {
      if (!seen.insert(node.heritage).second) {
        out.push_back({"heritage_collision",
                       "heritage " + node.heritage.str() + " identifies more than one node"});
      }
    }
  }
  return out;
}

long long max_total_nodes(const AgotConfig& cfg) {
  const long long per_graph = static_cast<long long>(cfg.l_max) * cfg.n_max;
  long long total = 0;
  long long term = 1;
  for (int k = 0; k <= cfg.d_max; ++k) {
    term *= per_graph;
    total += term;
  }
  return total;
}

}  // namespace agot
