#pragma once
// Thin chamber systems as hypermaps. The chambers of a thin, residually
// connected rank-3 geometry carry three involutions r1, r2, r3: two chambers
// are i-adjacent when they differ exactly in their type-i element, and
// thinness makes each of these a fixed-point-free involution. When the
// chamber graph is bipartite the geometry is orientable; one bipartition
// class becomes the dart set and
//   sigma = r2 r3,  alpha = r3 r1,  phi = r1 r2   (right factor acts first)
// restrict to it with sigma alpha phi = 1. Vertices, edges and faces are the
// cycles of the three permutations, and the genus comes from the Euler
// characteristic chi = V + E + F - D.

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trigeom/incidence.hpp"
#include "trigeom/perm.hpp"

namespace trigeom {

// Raised when the input has no hypermap: wrong shape, not thin, or an odd
// closed adjacency word (non-orientable). The reason is machine-readable so
// front ends can report "not thin" and "not orientable" distinctly.
struct HypermapUnavailable : std::runtime_error {
  enum class Reason {
    not_rank3,
    not_geometry,
    not_connected,
    not_residually_connected,
    not_thin,
    not_orientable,
  };
  Reason reason;
  HypermapUnavailable(Reason r, const std::string& msg)
      : std::runtime_error(msg), reason(r) {}
};

struct Hypermap {
  long long chamber_count = 0;
  long long darts = 0;
  Permutation sigma, alpha, phi;  // acting on {0, ..., darts-1}
  long long vertices = 0, edges = 0, faces = 0;
  long long euler = 0;
  long long genus = 0;
  bool orientable = true;  // export throws instead of returning false
  // Sorted cycle length multisets of sigma, alpha, phi.
  std::vector<long long> sigma_cycles, alpha_cycles, phi_cycles;
};

namespace detail {

inline std::vector<long long> cycle_lengths(const Permutation& p) {
  int n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<long long> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline Hypermap hypermap_export(const IncidenceSystem& sys) {
  using R = HypermapUnavailable::Reason;
  if (sys.rank() != 3)
    throw HypermapUnavailable(R::not_rank3, "hypermap: system is not rank 3");
  if (!is_geometry(sys))
    throw HypermapUnavailable(R::not_geometry, "hypermap: not a geometry");
  if (!is_connected(sys))
    throw HypermapUnavailable(R::not_connected, "hypermap: not connected");
  if (!is_residually_connected(sys))
    throw HypermapUnavailable(R::not_residually_connected,
                              "hypermap: not residually connected");
  if (firmness(sys) != Firmness::thin)
    throw HypermapUnavailable(R::not_thin, "hypermap: not thin");

  std::vector<Flag> ch = chambers(sys);
  std::sort(ch.begin(), ch.end());
  int C = static_cast<int>(ch.size());
  if (C == 0 || C % 2 != 0)
    throw std::logic_error("hypermap: unexpected chamber count");

  // r[t][c] = the unique other chamber sharing the co-rank-1 flag obtained by
  // dropping the type-t element of chamber c.
  std::vector<std::vector<int>> r(3, std::vector<int>(C, -1));
  for (int t = 0; t < 3; ++t) {
    std::map<std::pair<int, int>, std::vector<int>> at;
    for (int c = 0; c < C; ++c) {
      std::vector<int> rest;
      for (int x : ch[c])
        if (sys.type_of[x] != t) rest.push_back(x);
      at[{rest[0], rest[1]}].push_back(c);
    }
    for (const auto& [flag, pair] : at) {
      (void)flag;
      if (pair.size() != 2)
        throw std::logic_error("hypermap: thin check missed a flag");
      r[t][pair[0]] = pair[1];
      r[t][pair[1]] = pair[0];
    }
  }

  // Two-color the chamber graph; an odd closed word has no consistent
  // orientation. Chamber 0 is the lexicographically smallest chamber and its
  // class is the dart set.
  std::vector<int> color(C, -1);
  color[0] = 0;
  std::queue<int> bfs;
  bfs.push(0);
  int reached = 1;
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop();
    for (int t = 0; t < 3; ++t) {
      int d = r[t][c];
      if (color[d] < 0) {
        color[d] = 1 - color[c];
        ++reached;
        bfs.push(d);
      } else if (color[d] == color[c]) {
        throw HypermapUnavailable(R::not_orientable,
                                  "hypermap: chamber graph is not bipartite");
      }
    }
  }
  if (reached != C)
    throw std::logic_error("hypermap: chamber graph disconnected");

  Hypermap h;
  h.chamber_count = C;
  h.darts = C / 2;
  std::vector<int> dart_of(C, -1);
  std::vector<int> chamber_of;
  for (int c = 0; c < C; ++c)
    if (color[c] == 0) {
      dart_of[c] = static_cast<int>(chamber_of.size());
      chamber_of.push_back(c);
    }
  if (static_cast<long long>(chamber_of.size()) != h.darts)
    throw std::logic_error("hypermap: unbalanced bipartition");

  auto build = [&](int first, int second) {
    // second acts first; both flip the class, so the product preserves it.
    Permutation p = Permutation::identity(static_cast<int>(h.darts));
    for (long long d = 0; d < h.darts; ++d)
      p.img[d] = dart_of[r[first][r[second][chamber_of[d]]]];
    if (!is_valid_permutation(p))
      throw std::logic_error("hypermap: product left the dart class");
    return p;
  };
  h.sigma = build(1, 2);  // r2 r3 in type indices 1 and 2
  h.alpha = build(2, 0);  // r3 r1
  h.phi = build(0, 1);    // r1 r2

  if (!compose(h.sigma, compose(h.alpha, h.phi)).is_identity())
    throw std::logic_error("hypermap: sigma alpha phi != 1");

  h.sigma_cycles = detail::cycle_lengths(h.sigma);
  h.alpha_cycles = detail::cycle_lengths(h.alpha);
  h.phi_cycles = detail::cycle_lengths(h.phi);
  h.vertices = static_cast<long long>(h.sigma_cycles.size());
  h.edges = static_cast<long long>(h.alpha_cycles.size());
  h.faces = static_cast<long long>(h.phi_cycles.size());
  h.euler = h.vertices + h.edges + h.faces - h.darts;
  if ((2 - h.euler) % 2 != 0)
    throw std::logic_error("hypermap: odd Euler characteristic");
  h.genus = (2 - h.euler) / 2;
  h.orientable = true;
  return h;
}

inline nlohmann::json hypermap_to_json(const Hypermap& h) {
  nlohmann::json j;
  j["chambers"] = h.chamber_count;
  j["darts"] = h.darts;
  j["sigma"] = h.sigma.img;
  j["alpha"] = h.alpha.img;
  j["phi"] = h.phi.img;
  j["vertices"] = h.vertices;
  j["edges"] = h.edges;
  j["faces"] = h.faces;
  j["euler"] = h.euler;
  j["genus"] = h.genus;
  j["orientable"] = h.orientable;
  j["sigma_cycles"] = h.sigma_cycles;
  j["alpha_cycles"] = h.alpha_cycles;
  j["phi_cycles"] = h.phi_cycles;
  return j;
}

inline std::string hypermap_summary(const Hypermap& h) {
  return "D=" + std::to_string(h.darts) + ", V=" + std::to_string(h.vertices) +
         ", E=" + std::to_string(h.edges) + ", F=" + std::to_string(h.faces) +
         ", chi=" + std::to_string(h.euler) +
         ", genus=" + std::to_string(h.genus);
}

}  // namespace trigeom
