#include "dmx/ribbon.hpp"

#include <map>
#include <queue>

#include "dmx/errors.hpp"

namespace dmx {

RibbonGraph::RibbonGraph(std::vector<std::string> half_labels, std::vector<std::vector<int>> rotations,
                         std::vector<RibbonEdge> edges)
    : half_labels_(std::move(half_labels)), rotations_(std::move(rotations)), edges_(std::move(edges)) {
  const auto halves = half_labels_.size();
  if (edges_.size() > static_cast<std::size_t>(kMaxGroundSize)) throw InvalidArgument("too many edges");
  vertex_of_.assign(halves, -1);
  position_.assign(halves, -1);
  edge_of_.assign(halves, -1);
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
      const int h = rotations_[v][i];
      if (h < 0 || static_cast<std::size_t>(h) >= halves) throw InvalidArgument("vertex lists an unknown half-edge");
      if (vertex_of_[static_cast<std::size_t>(h)] != -1) {
        throw InvalidArgument("half-edge '" + half_labels_[static_cast<std::size_t>(h)] + "' appears at two vertex positions");
      }
      vertex_of_[static_cast<std::size_t>(h)] = static_cast<int>(v);
      position_[static_cast<std::size_t>(h)] = static_cast<int>(i);
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (int h : {edges_[e].first_half, edges_[e].second_half}) {
      if (h < 0 || static_cast<std::size_t>(h) >= halves) throw InvalidArgument("edge uses an unknown half-edge");
      if (edge_of_[static_cast<std::size_t>(h)] != -1) {
        throw InvalidArgument("half-edge '" + half_labels_[static_cast<std::size_t>(h)] + "' belongs to two edges");
      }
      edge_of_[static_cast<std::size_t>(h)] = static_cast<int>(e);
    }
  }
  for (std::size_t h = 0; h < halves; ++h) {
    if (vertex_of_[h] == -1) throw InvalidArgument("half-edge '" + half_labels_[h] + "' is not placed at a vertex");
    if (edge_of_[h] == -1) throw InvalidArgument("half-edge '" + half_labels_[h] + "' belongs to no edge");
  }
  // Validates edge labels as a ground set.
  (void)edge_ground();
}

RibbonGraph RibbonGraph::from_labels(const std::vector<std::vector<std::string>>& rotations,
                                     const std::vector<EdgeSpec>& edges) {
  std::vector<std::string> half_labels;
  std::map<std::string, int> index;
  std::vector<std::vector<int>> rot;
  for (const auto& vertex : rotations) {
    auto& r = rot.emplace_back();
    for (const auto& h : vertex) {
      if (!index.emplace(h, static_cast<int>(half_labels.size())).second) {
        throw InvalidArgument("half-edge '" + h + "' appears at two vertex positions");
      }
      half_labels.push_back(h);
      r.push_back(index.at(h));
    }
  }
  std::vector<RibbonEdge> out_edges;
  for (const auto& e : edges) {
    const auto a = index.find(e.first_half);
    const auto b = index.find(e.second_half);
    if (a == index.end()) throw InvalidArgument("edge '" + e.label + "' uses unplaced half-edge '" + e.first_half + "'");
    if (b == index.end()) throw InvalidArgument("edge '" + e.label + "' uses unplaced half-edge '" + e.second_half + "'");
    out_edges.push_back(RibbonEdge{e.label, a->second, b->second, e.twisted});
  }
  return RibbonGraph(std::move(half_labels), std::move(rot), std::move(out_edges));
}

int RibbonGraph::endpoint(int edge, int side) const {
  const auto& e = edges_[static_cast<std::size_t>(edge)];
  return vertex_of(side == 0 ? e.first_half : e.second_half);
}

GroundSet RibbonGraph::edge_ground() const {
  std::vector<std::string> labels;
  labels.reserve(edges_.size());
  for (const auto& e : edges_) labels.push_back(e.label);
  return GroundSet(std::move(labels));
}

bool RibbonGraph::is_connected() const {
  if (rotations_.empty()) return true;
  std::vector<std::vector<int>> adjacent(rotations_.size());
  for (int e = 0; e < edge_count(); ++e) {
    adjacent[static_cast<std::size_t>(endpoint(e, 0))].push_back(endpoint(e, 1));
    adjacent[static_cast<std::size_t>(endpoint(e, 1))].push_back(endpoint(e, 0));
  }
  std::vector<bool> seen(rotations_.size(), false);
  std::queue<int> pending;
  pending.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!pending.empty()) {
    const int v = pending.front();
    pending.pop();
    for (int w : adjacent[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        pending.push(w);
      }
    }
  }
  return reached == rotations_.size();
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.half_labels_ != b.half_labels_ || a.rotations_ != b.rotations_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.label != y.label || x.first_half != y.first_half || x.second_half != y.second_half || x.twisted != y.twisted) {
      return false;
    }
  }
  return true;
}

namespace {

int point_id(int half, bool end) { return 2 * half + (end ? 1 : 0); }

}  // namespace

BoundaryTrace trace_boundary(const RibbonGraph& g, SubsetMask kept) {
  if (!kept.is_subset_of(SubsetMask::full(g.edge_count()))) throw InvalidArgument("edge set exceeds the ribbon graph");
  const auto points = static_cast<std::size_t>(2 * g.half_edge_count());
  std::vector<int> across_edge(points, -1);
  std::vector<int> along_vertex(points, -1);

  for (int e : kept.elements()) {
    const auto& edge = g.edge(e);
    const int a = edge.first_half;
    const int b = edge.second_half;
    auto link = [&](int p, int q) {
      across_edge[static_cast<std::size_t>(p)] = q;
      across_edge[static_cast<std::size_t>(q)] = p;
    };
    if (edge.twisted) {
      link(point_id(a, false), point_id(b, false));
      link(point_id(a, true), point_id(b, true));
    } else {
      link(point_id(a, true), point_id(b, false));
      link(point_id(a, false), point_id(b, true));
    }
  }

  BoundaryTrace trace;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> present;
    for (int h : g.rotation(v)) {
      if (kept.contains(g.edge_of(h))) present.push_back(h);
    }
    if (present.empty()) {
      trace.walks.push_back(BoundaryWalk{v, {}});
      continue;
    }
    for (std::size_t i = 0; i < present.size(); ++i) {
      const int from = point_id(present[i], true);
      const int to = point_id(present[(i + 1) % present.size()], false);
      along_vertex[static_cast<std::size_t>(from)] = to;
      along_vertex[static_cast<std::size_t>(to)] = from;
    }
  }

  std::vector<bool> visited(points, false);
  for (std::size_t start = 0; start < points; ++start) {
    if (across_edge[start] == -1 || visited[start]) continue;
    BoundaryWalk walk;
    int p = static_cast<int>(start);
    do {
      const int q = across_edge[static_cast<std::size_t>(p)];
      visited[static_cast<std::size_t>(p)] = true;
      visited[static_cast<std::size_t>(q)] = true;
      walk.points.push_back(BoundaryPoint{p / 2, (p & 1) != 0});
      walk.points.push_back(BoundaryPoint{q / 2, (q & 1) != 0});
      p = along_vertex[static_cast<std::size_t>(q)];
    } while (p != static_cast<int>(start));
    trace.walks.push_back(std::move(walk));
  }
  trace.components = static_cast<int>(trace.walks.size());
  return trace;
}

int boundary_components(const RibbonGraph& g, SubsetMask kept) { return trace_boundary(g, kept).components; }

DeltaMatroid delta_matroid_of_ribbon(const RibbonGraph& g) {
  if (g.edge_count() > kMaxRibbonEdges) throw InvalidArgument("quasi-tree extraction is limited to 16 edges");
  if (!g.is_connected()) throw InvalidArgument("quasi-tree extraction needs a connected ribbon graph");
  std::vector<SubsetMask> feasible;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.edge_count()); ++s) {
    if (boundary_components(g, SubsetMask(s)) == 1) feasible.emplace_back(s);
  }
  return DeltaMatroid::trusted(SetSystem(g.edge_ground(), std::move(feasible)));
}

RibbonGraph petrial(const RibbonGraph& g, SubsetMask edges) {
  std::vector<RibbonEdge> flipped = g.edges();
  for (int e : edges.elements()) {
    flipped.at(static_cast<std::size_t>(e)).twisted = !flipped.at(static_cast<std::size_t>(e)).twisted;
  }
  std::vector<std::string> halves;
  for (int h = 0; h < g.half_edge_count(); ++h) halves.push_back(g.half_label(h));
  return RibbonGraph(std::move(halves), g.rotations(), std::move(flipped));
}

namespace {

// Two-colours vertices so that every edge's colour change equals its weight; false on conflict.
bool consistent_labelling(const RibbonGraph& g, bool (*weight)(const RibbonEdge&)) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::pair<int, bool>>> adjacent(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool w = weight(g.edge(e));
    const int a = g.endpoint(e, 0);
    const int b = g.endpoint(e, 1);
    if (a == b) {
      if (w) return false;
      continue;
    }
    adjacent[static_cast<std::size_t>(a)].emplace_back(b, w);
    adjacent[static_cast<std::size_t>(b)].emplace_back(a, w);
  }
  std::vector<int> colour(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<int> pending;
    pending.push(static_cast<int>(root));
    while (!pending.empty()) {
      const int v = pending.front();
      pending.pop();
      for (auto [w, flip] : adjacent[static_cast<std::size_t>(v)]) {
        const int expected = colour[static_cast<std::size_t>(v)] ^ (flip ? 1 : 0);
        if (colour[static_cast<std::size_t>(w)] == -1) {
          colour[static_cast<std::size_t>(w)] = expected;
          pending.push(w);
        } else if (colour[static_cast<std::size_t>(w)] != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_orientable(const RibbonGraph& g) {
  return consistent_labelling(g, [](const RibbonEdge& e) { return e.twisted; });
}

bool underlying_bipartite(const RibbonGraph& g) {
  return consistent_labelling(g, [](const RibbonEdge&) { return true; });
}

bool underlying_eulerian(const RibbonGraph& g) {
  for (const auto& r : g.rotations()) {
    if (r.size() % 2 != 0) return false;
  }
  return true;
}

}  // namespace dmx
