#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "trigeom/groups.hpp"
#include "trigeom/search.hpp"
#include "trigeom/triangle.hpp"

using namespace trigeom;

namespace {

// Apply a relabeling to every element of a system, giving an isomorphic copy.
IncidenceSystem relabel(const IncidenceSystem& sys, const Permutation& g) {
  IncidenceSystem out;
  for (int t = 0; t < sys.rank(); ++t) out.add_type(sys.types[t]);
  std::vector<int> inv = g.inverse().img;
  for (int x = 0; x < sys.size(); ++x) {
    int src = inv[x];
    out.add_element(sys.type_of[src], sys.labels[src] + "'");
  }
  for (int x = 0; x < sys.size(); ++x)
    for (int y : sys.adj[x])
      if (x < y) out.add_incidence(g(x), g(y));
  return out;
}

}  // namespace

TEST_CASE("isomorphism search finds and verifies witnesses") {
  // The Hermitian unital of order 2 is the affine plane of order 3.
  LinearSpace uh2 = hermitian_unital(2);
  LinearSpace ag23 = affine_space(2, 3);
  auto iso = find_isomorphism(uh2.sys, ag23.sys);
  REQUIRE(iso.has_value());
  for (int x = 0; x < uh2.sys.size(); ++x) {
    REQUIRE(ag23.sys.type_of[(*iso)(x)] == uh2.sys.type_of[x]);
    for (int y : uh2.sys.adj[x]) REQUIRE(ag23.sys.incident((*iso)(x), (*iso)(y)));
  }

  // A shuffled copy of the Fano plane is found isomorphic.
  IncidenceSystem fano = testutil::fano();
  std::mt19937 rng(20240815);
  std::vector<int> img(fano.size());
  // Shuffle points and lines separately so types survive.
  std::vector<int> pts{0, 1, 2, 3, 4, 5, 6}, lns{7, 8, 9, 10, 11, 12, 13};
  std::shuffle(pts.begin(), pts.end(), rng);
  std::shuffle(lns.begin(), lns.end(), rng);
  for (int i = 0; i < 7; ++i) {
    img[i] = pts[i];
    img[7 + i] = lns[i];
  }
  IncidenceSystem shuffled = relabel(fano, Permutation{img});
  auto w = find_isomorphism(fano, shuffled);
  REQUIRE(w.has_value());
  REQUIRE(is_automorphism(fano, compose(Permutation{img}.inverse(), *w)));

  // Non-isomorphic pairs are rejected exhaustively.
  REQUIRE_FALSE(find_isomorphism(fano, testutil::near_pencil7()).has_value());
  REQUIRE_FALSE(
      find_isomorphism(testutil::cycle_geometry(4), testutil::cycle_geometry(5))
          .has_value());
  REQUIRE_FALSE(find_isomorphism(uh2.sys, projective_space(2, 3).sys).has_value());
}

TEST_CASE("automorphism search on small rank-2 systems") {
  // Quadrilateral: dihedral group of order 8, doubled by the duality.
  auto quad = automorphism_search(testutil::cycle_geometry(4), true);
  REQUIRE(quad.aut_order == 8);
  REQUIRE(quad.order == 16);
  REQUIRE(quad.type_perms.size() == 2);
  REQUIRE(has_odd_type_action(quad));

  // Digon: swap points, swap lines, swap the two sides.
  auto dig = automorphism_search(testutil::digon(2, 2), true);
  REQUIRE(dig.aut_order == 4);
  REQUIRE(dig.order == 8);

  // Near-pencil on 7 points: any permutation of the six co-linear points,
  // and it is self-dual (center to long line, outer point to its spoke).
  auto np = automorphism_search(testutil::near_pencil7(), true);
  REQUIRE(np.aut_order == 720);
  REQUIRE(np.order == 1440);
  REQUIRE(has_odd_type_action(np));

  // Cube graph as a point-edge geometry: 48 automorphisms, no duality.
  auto cube = automorphism_search(testutil::cube_geometry(), true);
  REQUIRE(cube.aut_order == 48);
  REQUIRE(cube.order == 48);
}

TEST_CASE("automorphism search agrees with the model groups") {
  struct Row {
    LinearSpace sp;
    long long aut;
    long long cor;  // with type permutations allowed
  };
  std::vector<Row> rows;
  rows.push_back({projective_space(2, 2), 168, 336});
  rows.push_back({projective_space(2, 3), 5616, 11232});
  rows.push_back({affine_space(2, 3), 432, 432});
  rows.push_back({complete_graph(5), 120, 120});
  rows.push_back({hermitian_unital(2), 432, 432});
  for (const auto& row : rows) {
    auto got = automorphism_search(row.sp.sys, true);
    CAPTURE(row.sp.descriptor);
    REQUIRE(got.aut_order == row.aut);
    REQUIRE(got.order == row.cor);
    REQUIRE(got.aut_order == model_group(row.sp).order);
    for (const auto& c : got.generators) REQUIRE(is_correlation(row.sp.sys, c));
  }
  // The projective planes have dualities, the others cannot (v != b).
  REQUIRE(has_odd_type_action(automorphism_search(projective_space(2, 2).sys, true)));
  REQUIRE_FALSE(has_odd_type_action(automorphism_search(affine_space(2, 3).sys, true)));
}

TEST_CASE("correlation groups of small triangle complexes") {
  // Complete graphs: the flip makes all six type actions available.
  auto k4 = automorphism_search(triangle_complex(complete_graph(4)).sys(), true);
  REQUIRE(k4.aut_order == 24);
  REQUIRE(k4.order == 144);
  REQUIRE(k4.type_perms.size() == 6);
  REQUIRE(has_odd_type_action(k4));
  REQUIRE(has_order3_type_action(k4));

  auto k5 = automorphism_search(triangle_complex(complete_graph(5)).sys(), true);
  REQUIRE(k5.aut_order == 120);
  REQUIRE(k5.order == 720);

  // Six disjoint triangles: any of the 720 component shuffles, times the
  // full type symmetry.
  auto k3 = automorphism_search(triangle_complex(complete_graph(3)).sys(), true);
  REQUIRE(k3.aut_order == 720);
  REQUIRE(k3.order == 4320);
  REQUIRE(k3.type_perms.size() == 6);

  // Fano triangle complex: lifted collineations, a lifted polarity, and the
  // canonical triality give the full type symmetry.
  auto pg = automorphism_search(triangle_complex(projective_space(2, 2)).sys(), true);
  REQUIRE(pg.aut_order == 168);
  REQUIRE(pg.order == 1008);
  REQUIRE(pg.type_perms.size() == 6);

  // Affine plane of order 3: trialities but provably no dualities.
  auto ag = automorphism_search(triangle_complex(affine_space(2, 3)).sys(), true);
  REQUIRE(ag.aut_order == 432);
  REQUIRE(ag.order == 1296);
  REQUIRE(ag.type_perms.size() == 3);
  REQUIRE(has_order3_type_action(ag));
  REQUIRE_FALSE(has_odd_type_action(ag));
}

TEST_CASE("search respects the element bound") {
  REQUIRE_THROWS_AS(automorphism_search(testutil::fano(), true, 5),
                    std::domain_error);
}

TEST_CASE("search results are deterministic") {
  auto a = automorphism_search(triangle_complex(affine_space(2, 3)).sys(), true);
  auto b = automorphism_search(triangle_complex(affine_space(2, 3)).sys(), true);
  REQUIRE(a.order == b.order);
  REQUIRE(a.generators.size() == b.generators.size());
  for (size_t i = 0; i < a.generators.size(); ++i) {
    REQUIRE(a.generators[i].perm == b.generators[i].perm);
    REQUIRE(a.generators[i].type_perm == b.generators[i].type_perm);
  }
}

TEST_CASE("searched correlation groups of larger complexes", "[heavy]") {
  // PG(2,3): dualities lift, so the full type symmetry appears.
  auto pg23 = automorphism_search(triangle_complex(projective_space(2, 3)).sys(), true);
  REQUIRE(pg23.aut_order == 5616);
  REQUIRE(pg23.order == 33696);
  REQUIRE(pg23.type_perms.size() == 6);

  // AG(2,4) and AG(2,5): trialities, and exhaustively no dualities.
  auto ag24 = automorphism_search(triangle_complex(affine_space(2, 4)).sys(), true);
  REQUIRE(ag24.aut_order == 5760);
  REQUIRE(ag24.order == 17280);
  REQUIRE(ag24.type_perms.size() == 3);
  REQUIRE_FALSE(has_odd_type_action(ag24));

  auto ag25 = automorphism_search(triangle_complex(affine_space(2, 5)).sys(), true);
  REQUIRE(ag25.aut_order == 12000);
  REQUIRE(ag25.order == 36000);
  REQUIRE(ag25.type_perms.size() == 3);
  REQUIRE_FALSE(has_odd_type_action(ag25));

  // PG(3,2) has no duality at the point-line level (40 vs 130 would already
  // fail, here 15 vs 35), but the triality is canonical.
  auto pg32 = automorphism_search(triangle_complex(projective_space(3, 2)).sys(), true);
  REQUIRE(pg32.aut_order == 20160);
  REQUIRE(pg32.order == 60480);
  REQUIRE(pg32.type_perms.size() == 3);

  // PG(2,4) with the Frobenius: the largest searched correlation group.
  auto pg24 = automorphism_search(triangle_complex(projective_space(2, 4)).sys(), true);
  REQUIRE(pg24.aut_order == 120960);
  REQUIRE(pg24.order == 725760);
  REQUIRE(pg24.type_perms.size() == 6);
}
