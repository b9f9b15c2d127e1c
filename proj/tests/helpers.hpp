#pragma once
// Small hand-built systems shared by the test files.

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "trigeom/incidence.hpp"

namespace testutil {

// Independent girth oracle: delete each edge and measure the shortest path
// between its endpoints in the remainder.
inline int oracle_girth(const trigeom::IncidenceSystem& sys) {
  int best = trigeom::kInfinity;
  for (int a = 0; a < sys.size(); ++a)
    for (int b : sys.adj[a]) {
      if (b <= a) continue;
      std::vector<int> dist(sys.size(), -1);
      dist[a] = 0;
      std::queue<int> q;
      q.push(a);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : sys.adj[u]) {
          if (u == a && v == b) continue;  // the deleted edge
          if (dist[v] < 0) { dist[v] = dist[u] + 1; q.push(v); }
        }
      }
      if (dist[b] >= 0) best = std::min(best, dist[b] + 1);
    }
  return best;
}

// Rank-2 system from an explicit line list over points 0..v-1.
inline trigeom::IncidenceSystem rank2_from_lines(
    int v, const std::vector<std::vector<int>>& lines) {
  trigeom::IncidenceSystem sys;
  sys.add_type("P");
  sys.add_type("L");
  for (int i = 0; i < v; ++i) sys.add_element(0, std::to_string(i));
  for (size_t j = 0; j < lines.size(); ++j) {
    int id = sys.add_element(1, "l" + std::to_string(j));
    for (int p : lines[j]) sys.add_incidence(p, id);
  }
  return sys;
}

// The Fano plane, lines hard-coded.
inline trigeom::IncidenceSystem fano() {
  return rank2_from_lines(7, {{0, 1, 2},
                              {0, 3, 4},
                              {0, 5, 6},
                              {1, 3, 5},
                              {1, 4, 6},
                              {2, 3, 6},
                              {2, 4, 5}});
}

// Generalized digon: every point on every line.
inline trigeom::IncidenceSystem digon(int points = 2, int lines = 2) {
  std::vector<std::vector<int>> ls(lines);
  for (auto& l : ls)
    for (int p = 0; p < points; ++p) l.push_back(p);
  return rank2_from_lines(points, ls);
}

// Vertex-edge geometry of the k-cycle graph.
inline trigeom::IncidenceSystem cycle_geometry(int k) {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < k; ++i) lines.push_back({i, (i + 1) % k});
  return rank2_from_lines(k, lines);
}

// Vertex-edge geometry of the k-path graph (a tree, so no circuit).
inline trigeom::IncidenceSystem path_geometry(int k) {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i + 1 < k; ++i) lines.push_back({i, i + 1});
  return rank2_from_lines(k, lines);
}

// Vertex-edge geometry of the 3-cube graph (girth 4, so gonality 4).
inline trigeom::IncidenceSystem cube_geometry() {
  std::vector<std::vector<int>> lines;
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b) {
      int w = u ^ (1 << b);
      if (u < w) lines.push_back({u, w});
    }
  return rank2_from_lines(8, lines);
}

// Near-pencil on 7 points: one long line {0..5} plus the pencil through 6.
inline trigeom::IncidenceSystem near_pencil7() {
  std::vector<std::vector<int>> lines{{0, 1, 2, 3, 4, 5}};
  for (int i = 0; i < 6; ++i) lines.push_back({i, 6});
  return rank2_from_lines(7, lines);
}

}  // namespace testutil
