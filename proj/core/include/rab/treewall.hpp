#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rab/building.hpp"

namespace rab {

enum class Side { KPanel, IJResidue };

inline Side flip(Side s) {
  return s == Side::KPanel ? Side::IJResidue : Side::KPanel;
}

const char* side_name(Side s);

// A vertex of the k-tree-wall tree: either a k-panel or an {i,j}-residue,
// identified by its canonical shortest coset representative.
struct TreeWallVertex {
  Side side;
  Chamber rep;

  bool operator==(const TreeWallVertex& o) const {
    return side == o.side && rep == o.rep;
  }
  std::strong_ordering operator<=>(const TreeWallVertex& o) const {
    if (auto c = rep <=> o.rep; c != 0) return c;
    return static_cast<int>(side) <=> static_cast<int>(o.side);
  }
  std::string str() const;
};

TreeWallVertex k_vertex(const Chamber& c);
TreeWallVertex ij_vertex(const Chamber& c);

// The two vertices incident to the edge c, as (K_PANEL, IJ_RESIDUE).
std::pair<TreeWallVertex, TreeWallVertex> tw_vertices(const Chamber& c);

// The root of the rooted tree used throughout: the base {i,j}-residue.
TreeWallVertex tw_root(const BuildingSpec& spec);

// All edges at v (the full coset) with the vertex on the far side of each.
std::vector<std::pair<Chamber, TreeWallVertex>> tw_neighbours(
    const TreeWallVertex& v);

// Tree distance from the root vertex.
int tw_depth(const TreeWallVertex& v);

// The chamber connecting v to its parent vertex (the coset representative
// itself); for the root this is the base chamber.
Chamber tw_parent_edge(const TreeWallVertex& v);

// Edges along the geodesic from the root to the edge c, ending with c.
// The t-th edge has the (t-1)-th as its parent in the rooted tree.
std::vector<Chamber> tw_root_path(const Chamber& c);

// Edges along the geodesic from vertex v to edge c, ending with c.
std::vector<Chamber> tw_geodesic(const TreeWallVertex& v, const Chamber& c);

struct TreewallReport {
  int vertex_count = 0;
  int edge_count = 0;
  bool connected = false;
  bool acyclic = false;
  bool bipartite_by_side = false;
  std::vector<int> interior_degrees;  // sorted, deduplicated
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Builds the truncation induced by the edges in ball(r) and checks that it is
// a tree, bipartite by side, with interior degrees {q_k, q_i.q_j}.
TreewallReport verify_treewall(const BuildingSpec& spec, int r);

}  // namespace rab
