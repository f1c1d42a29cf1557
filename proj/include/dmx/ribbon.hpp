#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmx/delta_matroid.hpp"

namespace dmx {

struct RibbonEdge {
  std::string label;
  int first_half = 0;
  int second_half = 0;
  bool twisted = false;
};

/// A ribbon graph stored as a signed rotation system.
///
/// Each vertex lists its half-edges in cyclic order. An edge joins two half-edges and carries a
/// twist bit. Every half-edge occurs exactly once among the vertices and once among the edges.
class RibbonGraph {
 public:
  RibbonGraph(std::vector<std::string> half_labels, std::vector<std::vector<int>> rotations,
              std::vector<RibbonEdge> edges);

  struct EdgeSpec {
    std::string label;
    std::string first_half;
    std::string second_half;
    bool twisted = false;
  };
  /// Builds from half-edge labels; throws InvalidArgument on unknown or repeated half-edges.
  static RibbonGraph from_labels(const std::vector<std::vector<std::string>>& rotations,
                                 const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int half_edge_count() const { return static_cast<int>(half_labels_.size()); }
  const std::vector<int>& rotation(int v) const { return rotations_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const RibbonEdge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<RibbonEdge>& edges() const { return edges_; }
  const std::string& half_label(int h) const { return half_labels_[static_cast<std::size_t>(h)]; }
  int vertex_of(int half) const { return vertex_of_[static_cast<std::size_t>(half)]; }
  int edge_of(int half) const { return edge_of_[static_cast<std::size_t>(half)]; }
  int endpoint(int edge, int side) const;

  /// Edge labels in edge order; the ground set of the extracted delta-matroid.
  GroundSet edge_ground() const;
  bool is_connected() const;

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b);

 private:
  std::vector<std::string> half_labels_;
  std::vector<std::vector<int>> rotations_;
  std::vector<RibbonEdge> edges_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
  std::vector<int> edge_of_;
};

/// One corner point where an edge side meets a vertex disc: the start or the end of the
/// half-edge's attaching segment in the vertex's cyclic direction.
struct BoundaryPoint {
  int half_edge = 0;
  bool end = false;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

struct BoundaryWalk {
  // Set for a vertex with no kept half-edges; its whole disc boundary is one component.
  std::optional<int> bare_vertex;
  std::vector<BoundaryPoint> points;
};

struct BoundaryTrace {
  int components = 0;
  std::vector<BoundaryWalk> walks;
};

/// Traces the boundary of the spanning ribbon subgraph keeping the edges in `kept`.
/// Untwisted edges join end-to-start on both sides, twisted edges join start-start and end-end.
BoundaryTrace trace_boundary(const RibbonGraph& g, SubsetMask kept);
int boundary_components(const RibbonGraph& g, SubsetMask kept);

inline constexpr int kMaxRibbonEdges = 16;

/// Quasi-tree delta-matroid: feasible sets are the edge sets whose spanning ribbon subgraph
/// has exactly one boundary component. Throws InvalidArgument on disconnected graphs.
DeltaMatroid delta_matroid_of_ribbon(const RibbonGraph& g);

/// Flips the twist of every edge in `edges`.
RibbonGraph petrial(const RibbonGraph& g, SubsetMask edges);

/// No cycle carries an odd number of twists after switching (includes twisted loops).
bool is_orientable(const RibbonGraph& g);

// Properties of the underlying multigraph. Loops are odd cycles and add two to the degree.
bool underlying_bipartite(const RibbonGraph& g);
bool underlying_eulerian(const RibbonGraph& g);

}  // namespace dmx
