#pragma once

#include <compare>
#include <string>
#include <vector>

#include "agot/errors.hpp"

namespace agot {

/// Local coordinates of a node: topological generation index and node label
/// within that generation. Both components are non-negative.
struct Position {
  int layer = 0;
  int node = 0;

  auto operator<=>(const Position&) const = default;
};

/// Ordered sequence of positions locating a node or nested graph across
/// recursion depths. The empty sequence denotes the top-level graph.
class Heritage {
 public:
  Heritage() = default;

  explicit Heritage(std::vector<Position> positions) : positions_(std::move(positions)) {
    for (const auto& p : positions_) {
      if (p.layer < 0 || p.node < 0) {
        throw GraphError("heritage position components must be non-negative");
      }
    }
  }

  static const Heritage& root() {
    static const Heritage empty;
    return empty;
  }

  int depth() const { return static_cast<int>(positions_.size()); }
  bool is_root() const { return positions_.empty(); }
  const std::vector<Position>& positions() const { return positions_; }

  /// Heritage extended by one position. Does not check depth bounds; see
  /// heritage_child for the bounded variant.
  Heritage child(Position p) const {
    if (p.layer < 0 || p.node < 0) {
      throw GraphError("heritage position components must be non-negative");
    }
    Heritage out = *this;
    out.positions_.push_back(p);
    return out;
  }

  /// Heritage with the last position dropped.
  Heritage parent() const {
    if (positions_.empty()) {
      throw GraphError("root heritage has no parent");
    }
    Heritage out = *this;
    out.positions_.pop_back();
    return out;
  }

  Position last() const {
    if (positions_.empty()) {
      throw GraphError("root heritage has no last position");
    }
    return positions_.back();
  }

  /// Compact rendering used in mock-script keys and trace logs:
  /// "root", "0.0", "0.0/1.2".
  std::string str() const {
    if (positions_.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (i > 0) out += '/';
      out += std::to_string(positions_[i].layer);
      out += '.';
      out += std::to_string(positions_[i].node);
    }
    return out;
  }

  auto operator<=>(const Heritage&) const = default;

 private:
  std::vector<Position> positions_;
};

/// Extends h by p, enforcing the configured recursion depth. A node heritage
/// may have at most d_max + 1 positions, so extending is legal only while
/// |h| <= d_max.
inline Heritage heritage_child(const Heritage& h, Position p, int d_max) {
  if (h.depth() > d_max) {
    throw DepthError("heritage depth overflow: extending a heritage of length " +
                     std::to_string(h.depth()) + " exceeds d_max = " + std::to_string(d_max));
  }
  return h.child(p);
}

/// Current nesting depth of a graph identified by h (empty heritage -> 0).
inline int depth(const Heritage& h) { return h.depth(); }

}  // namespace agot
