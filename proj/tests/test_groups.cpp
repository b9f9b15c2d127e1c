#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "trigeom/groups.hpp"
#include "trigeom/triangle.hpp"

using namespace trigeom;

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Closure order of the point generators, computed by stabilizer chain.
long long chain_order(const ModelGroup& mg) {
  return StabChain(mg.point_gens.at(0).degree(), mg.point_gens).order();
}

}  // namespace

TEST_CASE("group order formulas") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(2, 4) == 180);
  CHECK(gl_order(2, 5) == 480);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(3, 3) == 11232);
  CHECK(gl_order(3, 4) == 181440);
  CHECK(gl_order(4, 2) == 20160);
  CHECK(gl_order(4, 3) == 24261120);

  CHECK(pgl_order(3, 2) == 168);
  CHECK(pgl_order(3, 3) == 5616);
  CHECK(pgl_order(3, 4) == 60480);
  CHECK(pgl_order(4, 2) == 20160);
  CHECK(pgl_order(4, 3) == 12130560);

  CHECK(agl_order(2, 3) == 432);
  CHECK(agl_order(2, 4) == 2880);
  CHECK(agl_order(2, 5) == 12000);
  CHECK(agl_order(3, 3) == 303264);
  CHECK(agl_order(3, 4) == 11612160);

  CHECK(pgu3_order(2) == 216);
  CHECK(pgu3_order(3) == 6048);
  CHECK(pgu3_order(4) == 62400);
  CHECK(pgu3_order(5) == 378000);
}

TEST_CASE("symmetric model groups") {
  for (int v : {3, 4, 5, 6}) {
    LinearSpace kv = complete_graph(v);
    ModelGroup mg = model_group(kv);
    REQUIRE(mg.family == GroupFamily::symmetric);
    REQUIRE(mg.name == "S_" + std::to_string(v));
    REQUIRE(mg.order == factorial(v));
    REQUIRE(chain_order(mg) == mg.order);
    for (const auto& g : mg.gens) REQUIRE(is_automorphism(kv.sys, g));
  }
  LinearSpace k4 = complete_graph(4);
  ModelGroup m4 = model_group(k4);
  REQUIRE(brute_closure(m4.point_gens).size() == 24);
  REQUIRE(is_flag_transitive(k4.sys, m4.gens));
  // Ordered triples of distinct vertices form one orbit of size v(v-1)(v-2).
  ModelGroup m5 = model_group(complete_graph(5));
  REQUIRE(triple_orbit_size({0, 1, 2}, m5.point_gens) == 60);
}

TEST_CASE("projective model groups") {
  LinearSpace pg22 = projective_space(2, 2);
  ModelGroup g22 = model_group(pg22);
  REQUIRE(g22.family == GroupFamily::projective_linear);
  REQUIRE(g22.name == "PGL(3,2)");
  REQUIRE(g22.order == 168);
  REQUIRE(chain_order(g22) == 168);
  REQUIRE(brute_closure(g22.point_gens).size() == 168);
  REQUIRE(is_flag_transitive(pg22.sys, g22.gens));
  auto tri = noncollinear_triples(pg22)[0];
  REQUIRE(triple_orbit_size(tri, g22.point_gens) == 168);
  // A collinear ordered triple lies in the other orbit: 7 lines times 3!.
  auto& l0 = pg22.lines[0];
  REQUIRE(triple_orbit_size({l0[0], l0[1], l0[2]}, g22.point_gens) == 42);

  ModelGroup g23 = model_group(projective_space(2, 3));
  REQUIRE(g23.name == "PGL(3,3)");
  REQUIRE(g23.order == 5616);
  REQUIRE(chain_order(g23) == 5616);

  ModelGroup g24 = model_group(projective_space(2, 4));
  REQUIRE(g24.family == GroupFamily::projective_semilinear);
  REQUIRE(g24.name == "PGammaL(3,4)");
  REQUIRE(g24.order == 120960);
  REQUIRE(chain_order(g24) == 120960);

  LinearSpace pg32 = projective_space(3, 2);
  ModelGroup g32 = model_group(pg32);
  REQUIRE(g32.name == "PGL(4,2)");
  REQUIRE(g32.order == 20160);
  REQUIRE(chain_order(g32) == 20160);
  REQUIRE(is_flag_transitive(pg32.sys, g32.gens));
}

TEST_CASE("affine model groups") {
  LinearSpace ag23 = affine_space(2, 3);
  ModelGroup a23 = model_group(ag23);
  REQUIRE(a23.family == GroupFamily::affine_linear);
  REQUIRE(a23.name == "AGL(2,3)");
  REQUIRE(a23.order == 432);
  REQUIRE(chain_order(a23) == 432);
  REQUIRE(brute_closure(a23.point_gens).size() == 432);
  REQUIRE(is_flag_transitive(ag23.sys, a23.gens));
  REQUIRE(triple_orbit_size(noncollinear_triples(ag23)[0], a23.point_gens) == 432);

  ModelGroup a24 = model_group(affine_space(2, 4));
  REQUIRE(a24.family == GroupFamily::affine_semilinear);
  REQUIRE(a24.name == "AGammaL(2,4)");
  REQUIRE(a24.order == 5760);
  REQUIRE(chain_order(a24) == 5760);

  ModelGroup a25 = model_group(affine_space(2, 5));
  REQUIRE(a25.name == "AGL(2,5)");
  REQUIRE(a25.order == 12000);
  REQUIRE(chain_order(a25) == 12000);

  LinearSpace ag33 = affine_space(3, 3);
  ModelGroup a33 = model_group(ag33);
  REQUIRE(a33.name == "AGL(3,3)");
  REQUIRE(a33.order == 303264);
  REQUIRE(chain_order(a33) == 303264);
  REQUIRE(is_flag_transitive(ag33.sys, a33.gens));
}

TEST_CASE("unitary model groups") {
  LinearSpace uh2 = hermitian_unital(2);
  ModelGroup u2 = model_group(uh2);
  REQUIRE(u2.family == GroupFamily::unitary_semilinear);
  REQUIRE(u2.name == "PGammaU(3,2)");
  REQUIRE(u2.order == 432);
  REQUIRE(chain_order(u2) == 432);
  REQUIRE(is_flag_transitive(uh2.sys, u2.gens));
  // UH(2) is the affine plane of order 3 in disguise: same group order.
  REQUIRE(u2.order == agl_order(2, 3));

  ModelGroup u3 = model_group(hermitian_unital(3));
  REQUIRE(u3.name == "PGammaU(3,3)");
  REQUIRE(u3.order == 12096);
  REQUIRE(chain_order(u3) == 12096);

  LinearSpace uh4 = hermitian_unital(4);
  ModelGroup u4 = model_group(uh4);
  REQUIRE(u4.name == "PGammaU(3,4)");
  REQUIRE(u4.order == 249600);
  REQUIRE(chain_order(u4) == 249600);
  REQUIRE(is_flag_transitive(uh4.sys, u4.gens));
  REQUIRE(triple_orbit_size(noncollinear_triples(uh4)[0], u4.point_gens) ==
          249600);
}

TEST_CASE("unitary group matches brute matrix enumeration for q=2") {
  // Every 3x3 matrix M over GF(4) with M conj(M)^T = I, acting projectively
  // on the 9 curve points, must land inside the generated group; there are
  // |GU(3,2)| = 648 such matrices inducing |PGU(3,2)| = 216 permutations.
  LinearSpace uh2 = hermitian_unital(2);
  ModelGroup u2 = model_group(uh2);
  StabChain chain(uh2.v, u2.point_gens);
  const Field& F = *uh2.field;
  auto idx = detail::coord_index(uh2);

  long long unitary_count = 0;
  std::set<Permutation> induced;
  std::vector<std::vector<int>> M(3, std::vector<int>(3));
  for (int code = 0; code < 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4; ++code) {
    int c = code;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        M[i][j] = c % 4;
        c /= 4;
      }
    if (!detail::is_unitary(F, M, 2)) continue;
    ++unitary_count;
    induced.insert(detail::projective_matrix_perm(uh2, idx, M));
  }
  REQUIRE(unitary_count == 648);
  REQUIRE(induced.size() == 216);
  for (const auto& g : induced) REQUIRE(chain.contains(g));
  REQUIRE(chain.order() == 432);  // the Frobenius doubles the matrix group
}

TEST_CASE("model group needs a recognized model") {
  REQUIRE_THROWS_AS(model_group(from_rank2(testutil::near_pencil7(), "np7")), std::domain_error);
  // A rank-2 system that happens to be a Fano plane still has no model tag.
  REQUIRE_THROWS_AS(model_group(from_rank2(testutil::fano(), "fano")),
                    std::domain_error);
}

TEST_CASE("standard polarity of projective planes") {
  for (int q : {2, 3, 4}) {
    LinearSpace pg = projective_space(2, q);
    Correlation pol = standard_polarity(pg);
    REQUIRE(is_correlation(pg.sys, pol));
    REQUIRE(pol.type_perm.img == std::vector<int>{1, 0});
    REQUIRE(compose(pol, pol).perm.is_identity());
    // It lifts to a duality of the triangle complex.
    TriangleComplex tc = triangle_complex(pg);
    Correlation beta = lift_duality(tc, pol);
    REQUIRE(beta.perm.order() == 2);
  }
  REQUIRE_THROWS_AS(standard_polarity(affine_space(2, 3)), std::domain_error);
  REQUIRE_THROWS_AS(standard_polarity(projective_space(3, 2)), std::domain_error);
  REQUIRE_THROWS_AS(standard_polarity(complete_graph(5)), std::domain_error);
}

TEST_CASE("extension to lines") {
  // Any vertex permutation of a complete graph extends.
  LinearSpace k5 = complete_graph(5);
  Permutation odd = Permutation::from_cycles(5, {{0, 3}, {1, 4, 2}});
  Permutation full = extend_to_lines(k5, odd);
  REQUIRE(is_automorphism(k5.sys, full));
  // A transposition of two affine points is not a collineation of AG(2,3).
  LinearSpace ag = affine_space(2, 3);
  REQUIRE_THROWS_AS(extend_to_lines(ag, Permutation::from_cycles(9, {{0, 1}})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(extend_to_lines(ag, Permutation::identity(5)),
                    std::invalid_argument);
}

TEST_CASE("model groups are deterministic") {
  ModelGroup a = model_group(affine_space(2, 3));
  ModelGroup b = model_group(affine_space(2, 3));
  REQUIRE(a.point_gens == b.point_gens);
  REQUIRE(a.gens == b.gens);
  REQUIRE(a.name == b.name);
}

TEST_CASE("large model group orders are certified", "[heavy]") {
  ModelGroup g33 = model_group(projective_space(3, 3));
  REQUIRE(g33.name == "PGL(4,3)");
  REQUIRE(g33.order == 12130560);
  REQUIRE(chain_order(g33) == 12130560);

  ModelGroup a34 = model_group(affine_space(3, 4));
  REQUIRE(a34.name == "AGammaL(3,4)");
  REQUIRE(a34.order == 23224320);
  REQUIRE(chain_order(a34) == 23224320);

  ModelGroup u5 = model_group(hermitian_unital(5));
  REQUIRE(u5.name == "PGammaU(3,5)");
  REQUIRE(u5.order == 756000);
  REQUIRE(chain_order(u5) == 756000);

  // The extension to lines does not change the group: certify one case on
  // the full element set.
  ModelGroup a33 = model_group(affine_space(3, 3));
  REQUIRE(StabChain(a33.gens.at(0).degree(), a33.gens).order() == 303264);
}
