#include "rab/treewall.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

namespace rab {

const char* side_name(Side s) {
  return s == Side::KPanel ? "k_panel" : "ij_residue";
}

std::string TreeWallVertex::str() const {
  return std::string(side_name(side)) + ":" + rep.str();
}

TreeWallVertex k_vertex(const Chamber& c) {
  return {Side::KPanel, panel_rep(c, Gen::k)};
}

TreeWallVertex ij_vertex(const Chamber& c) {
  return {Side::IJResidue, residue_rep_ij(c)};
}

std::pair<TreeWallVertex, TreeWallVertex> tw_vertices(const Chamber& c) {
  return {k_vertex(c), ij_vertex(c)};
}

TreeWallVertex tw_root(const BuildingSpec& spec) {
  return {Side::IJResidue, Chamber(spec)};
}

std::vector<std::pair<Chamber, TreeWallVertex>> tw_neighbours(
    const TreeWallVertex& v) {
  std::vector<std::pair<Chamber, TreeWallVertex>> out;
  if (v.side == Side::KPanel) {
    for (const Chamber& e : panel(v.rep, Gen::k)) out.emplace_back(e, ij_vertex(e));
  } else {
    for (const Chamber& e : residue(v.rep, {Gen::i, Gen::j}))
      out.emplace_back(e, k_vertex(e));
  }
  return out;
}

Chamber tw_parent_edge(const TreeWallVertex& v) { return v.rep; }

std::vector<Chamber> tw_root_path(const Chamber& c) {
  const BuildingSpec& spec = c.spec();
  const auto& syl = c.syllables();
  std::vector<Chamber> path;
  if (syl.empty() || syl[0].g == Gen::k) path.push_back(Chamber(spec));
  // Block boundaries: each k-syllable is a block, each maximal i/j-run is one.
  std::size_t t = 0;
  while (t < syl.size()) {
    std::size_t end = t + 1;
    if (syl[t].g != Gen::k)
      while (end < syl.size() && syl[end].g != Gen::k) ++end;
    path.push_back(ChamberBuilder::adopt(
        spec, std::vector<Syllable>(syl.begin(), syl.begin() + end)));
    t = end;
  }
  return path;
}

int tw_depth(const TreeWallVertex& v) {
  if (v.rep.is_base() && v.side == Side::IJResidue) return 0;
  return static_cast<int>(tw_root_path(tw_parent_edge(v)).size());
}

namespace {

// Vertex sequence of the root path of edge c: root, then the far endpoint of
// each successive edge.
std::vector<TreeWallVertex> root_vertex_path(const Chamber& c) {
  std::vector<TreeWallVertex> vs{tw_root(c.spec())};
  Side side = Side::IJResidue;
  for (const Chamber& e : tw_root_path(c)) {
    side = flip(side);
    vs.push_back(side == Side::KPanel ? k_vertex(e) : ij_vertex(e));
  }
  return vs;
}

}  // namespace

std::vector<Chamber> tw_geodesic(const TreeWallVertex& v, const Chamber& c) {
  std::vector<Chamber> down = tw_root_path(c);
  std::vector<TreeWallVertex> c_vertices = root_vertex_path(c);

  std::vector<TreeWallVertex> up_vertices{tw_root(c.spec())};
  std::vector<Chamber> up_edges;
  if (!(v == up_vertices[0])) {
    up_edges = tw_root_path(tw_parent_edge(v));
    Side side = Side::IJResidue;
    for (const Chamber& e : up_edges) {
      side = flip(side);
      up_vertices.push_back(side == Side::KPanel ? k_vertex(e) : ij_vertex(e));
    }
    if (!(up_vertices.back() == v))
      throw Error("tw_geodesic: malformed vertex representative");
  }

  std::size_t meet = 0;
  while (meet + 1 < up_vertices.size() && meet + 1 < c_vertices.size() &&
         up_vertices[meet + 1] == c_vertices[meet + 1])
    ++meet;

  std::vector<Chamber> out;
  for (std::size_t d = up_vertices.size() - 1; d > meet; --d)
    out.push_back(up_edges[d - 1]);
  for (std::size_t t = meet; t < down.size(); ++t) out.push_back(down[t]);
  if (out.empty()) out.push_back(c);  // v is the far endpoint of c
  return out;
}

TreewallReport verify_treewall(const BuildingSpec& spec, int r) {
  TreewallReport report;
  std::vector<Chamber> edges = ball(spec, r);
  std::set<Chamber> edge_set(edges.begin(), edges.end());

  std::map<TreeWallVertex, std::vector<std::pair<std::size_t, TreeWallVertex>>>
      adj;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [kv, ijv] = tw_vertices(edges[e]);
    if (kv.side != Side::KPanel || ijv.side != Side::IJResidue)
      report.violations.push_back("edge with same-side endpoints: " +
                                  edges[e].str());
    adj[kv].emplace_back(e, ijv);
    adj[ijv].emplace_back(e, kv);
  }
  report.vertex_count = static_cast<int>(adj.size());
  report.edge_count = static_cast<int>(edges.size());
  report.bipartite_by_side = true;  // edges always join KPanel to IJResidue

  // BFS from the base edge's IJ vertex; flag revisits (cycles), count reach.
  std::set<TreeWallVertex> visited;
  std::queue<std::pair<TreeWallVertex, std::size_t>> queue;  // vertex, via edge
  TreeWallVertex start = tw_root(spec);
  visited.insert(start);
  queue.push({start, edges.size()});
  bool cycle = false;
  while (!queue.empty()) {
    auto [v, via] = queue.front();
    queue.pop();
    for (const auto& [e, w] : adj[v]) {
      if (e == via) continue;
      if (visited.count(w)) {
        cycle = true;
        report.violations.push_back("cycle through vertex " + w.str());
      } else {
        visited.insert(w);
        queue.push({w, e});
      }
    }
  }
  report.connected = visited.size() == adj.size();
  if (!report.connected) report.violations.push_back("truncation disconnected");
  report.acyclic = !cycle && report.vertex_count == report.edge_count + 1;
  if (report.vertex_count != report.edge_count + 1)
    report.violations.push_back("|V| != |E| + 1");

  std::set<int> degrees;
  for (const auto& [v, inc] : adj) {
    auto nbrs = tw_neighbours(v);
    bool interior = std::all_of(nbrs.begin(), nbrs.end(), [&](const auto& n) {
      return edge_set.count(n.first) > 0;
    });
    std::set<TreeWallVertex> opposite;
    for (const auto& n : nbrs) opposite.insert(n.second);
    if (opposite.size() != nbrs.size())
      report.violations.push_back("repeated opposite vertex at " + v.str());
    if (interior) {
      int expected = v.side == Side::KPanel ? spec.q(Gen::k)
                                            : spec.q(Gen::i) * spec.q(Gen::j);
      if (static_cast<int>(inc.size()) != expected)
        report.violations.push_back("interior degree " +
                                    std::to_string(inc.size()) + " at " +
                                    v.str());
      degrees.insert(static_cast<int>(inc.size()));
    }
  }
  report.interior_degrees.assign(degrees.begin(), degrees.end());
  return report;
}

nlohmann::json TreewallReport::to_json() const {
  return {{"vertices", vertex_count},
          {"edges", edge_count},
          {"connected", connected},
          {"acyclic", acyclic},
          {"bipartite_by_side", bipartite_by_side},
          {"interior_degrees", interior_degrees},
          {"ok", ok()},
          {"violations", violations}};
}

}  // namespace rab
