#pragma once
// Standard automorphism groups of the model linear spaces, as explicit
// permutation generators with closed-form orders:
//
//   complete graph K_v        -> S_v
//   projective space PG(n,q)  -> PGL(n+1,q), or PGammaL(n+1,q) for q = p^e, e > 1
//   affine space AG(n,q)      -> AGL(n,q), or AGammaL(n,q) for e > 1
//   Hermitian unital UH(q)    -> PGammaU(3,q)
//
// Generators are produced constructively (transvections, a primitive diagonal,
// translations, norm-one diagonals, coordinate permutations, Frobenius) and
// every generator is checked to be an automorphism of the incidence system.
// That the sets generate the whole group of the stated order is certified in
// the test suite by comparing a stabilizer-chain order with the formulas here.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigeom/perm.hpp"
#include "trigeom/spaces.hpp"

namespace trigeom {

enum class GroupFamily {
  symmetric,
  projective_linear,
  projective_semilinear,
  affine_linear,
  affine_semilinear,
  unitary_semilinear,
};

inline std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::symmetric: return "symmetric";
    case GroupFamily::projective_linear: return "projective_linear";
    case GroupFamily::projective_semilinear: return "projective_semilinear";
    case GroupFamily::affine_linear: return "affine_linear";
    case GroupFamily::affine_semilinear: return "affine_semilinear";
    case GroupFamily::unitary_semilinear: return "unitary_semilinear";
  }
  throw std::logic_error("to_string: bad group family");
}

struct ModelGroup {
  GroupFamily family = GroupFamily::symmetric;
  std::string name;     // e.g. "S_5", "PGL(3,2)", "AGammaL(2,4)", "PGammaU(3,4)"
  long long order = 0;  // closed-form order of the full group
  std::vector<Permutation> point_gens;  // acting on the v points
  std::vector<Permutation> gens;        // the same maps extended to points+lines
};

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// |GL(m,q)| = prod_{i=0}^{m-1} (q^m - q^i)
inline long long gl_order(int m, long long q) {
  long long qm = ipow(q, m), r = 1;
  for (int i = 0; i < m; ++i) r *= qm - ipow(q, i);
  return r;
}

inline long long pgl_order(int m, long long q) { return gl_order(m, q) / (q - 1); }

// |AGL(n,q)| = q^n |GL(n,q)|
inline long long agl_order(int n, long long q) { return ipow(q, n) * gl_order(n, q); }

// |PGU(3,q)| = q^3 (q^2-1)(q^3+1)
inline long long pgu3_order(long long q) {
  return q * q * q * (q * q - 1) * (q * q * q + 1);
}

// Extend a point permutation that maps lines to lines to a permutation of the
// whole element set (points then lines).  Throws if some line image is not a
// line of the space.
inline Permutation extend_to_lines(const LinearSpace& sp, const Permutation& pts) {
  if (pts.degree() != sp.v)
    throw std::invalid_argument("extend_to_lines: wrong point degree");
  std::map<std::vector<int>, int> line_index;
  for (int i = 0; i < sp.b; ++i) line_index[sp.lines[i]] = i;
  std::vector<int> img(sp.sys.size());
  for (int p = 0; p < sp.v; ++p) img[p] = pts(p);
  for (int i = 0; i < sp.b; ++i) {
    std::vector<int> block;
    block.reserve(sp.lines[i].size());
    for (int p : sp.lines[i]) block.push_back(pts(p));
    std::sort(block.begin(), block.end());
    auto it = line_index.find(block);
    if (it == line_index.end())
      throw std::invalid_argument(
          "extend_to_lines: point map does not send lines to lines");
    img[sp.line_elem(i)] = sp.line_elem(it->second);
  }
  Permutation g{img};
  if (!is_valid_permutation(g))
    throw std::logic_error("extend_to_lines: line images collide");
  return g;
}

namespace detail {

using Matrix = std::vector<std::vector<int>>;

inline Matrix identity_matrix(int m) {
  Matrix M(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) M[i][i] = 1;
  return M;
}

inline std::vector<int> mat_apply(const Field& F, const Matrix& M,
                                  const std::vector<int>& x) {
  int m = static_cast<int>(M.size());
  std::vector<int> y(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) y[i] = F.add(y[i], F.mul(M[i][j], x[j]));
  return y;
}

// Smallest index generating the multiplicative group.
inline int primitive_element(const Field& F) {
  for (int a = 2; a < F.q(); ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = F.mul(x, a);
      ++ord;
    }
    if (ord == F.q() - 1) return a;
  }
  return 1;  // GF(2)
}

inline std::map<std::vector<int>, int> coord_index(const LinearSpace& sp) {
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < sp.v; ++i) idx[sp.point_coords[i]] = i;
  return idx;
}

// Point permutation of a matrix acting on normalized representatives.
inline Permutation projective_matrix_perm(const LinearSpace& sp,
                                          const std::map<std::vector<int>, int>& idx,
                                          const Matrix& M) {
  const Field& F = *sp.field;
  std::vector<int> img(sp.v);
  for (int p = 0; p < sp.v; ++p) {
    auto w = normalize_projective(F, mat_apply(F, M, sp.point_coords[p]));
    auto it = idx.find(w);
    if (it == idx.end())
      throw std::logic_error("model_group: matrix does not preserve the point set");
    img[p] = it->second;
  }
  Permutation g{img};
  if (!is_valid_permutation(g))
    throw std::logic_error("model_group: matrix action is not a bijection");
  return g;
}

// x -> Mx + t on affine coordinate vectors.
inline Permutation affine_map_perm(const LinearSpace& sp,
                                   const std::map<std::vector<int>, int>& idx,
                                   const Matrix& M, const std::vector<int>& t) {
  const Field& F = *sp.field;
  std::vector<int> img(sp.v);
  for (int p = 0; p < sp.v; ++p) {
    auto w = mat_apply(F, M, sp.point_coords[p]);
    for (size_t i = 0; i < w.size(); ++i) w[i] = F.add(w[i], t[i]);
    img[p] = idx.at(w);
  }
  return Permutation{img};
}

// Coordinatewise x -> x^p, renormalizing projectively when asked.
inline Permutation frobenius_perm(const LinearSpace& sp,
                                  const std::map<std::vector<int>, int>& idx,
                                  bool projective) {
  const Field& F = *sp.field;
  std::vector<int> img(sp.v);
  for (int p = 0; p < sp.v; ++p) {
    std::vector<int> w = sp.point_coords[p];
    for (auto& c : w) c = F.frobenius(c, 1);
    if (projective) w = normalize_projective(F, w);
    img[p] = idx.at(w);
  }
  return Permutation{img};
}

// All transvections I + c*e_ij, i != j, c != 0; they generate SL(m,q).
inline std::vector<Matrix> transvections(const Field& F, int m) {
  std::vector<Matrix> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int c = 1; c < F.q(); ++c) {
        Matrix M = identity_matrix(m);
        M[i][j] = c;
        out.push_back(std::move(M));
      }
    }
  return out;
}

// Conjugate-transpose with respect to x -> x^q, for the Hermitian form below.
inline Matrix conj_transpose(const Field& F, const Matrix& M, int q) {
  int m = static_cast<int>(M.size());
  Matrix R(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) R[i][j] = F.pow(M[j][i], q);
  return R;
}

inline bool is_unitary(const Field& F, const Matrix& M, int q) {
  int m = static_cast<int>(M.size());
  Matrix C = conj_transpose(F, M, q);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int s = 0;
      for (int t = 0; t < m; ++t) s = F.add(s, F.mul(M[i][t], C[t][j]));
      if (s != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace detail

// The standard group of the model behind a space built by complete_graph,
// projective_space, affine_space, or hermitian_unital.  Throws domain_error
// for spaces without such a model (generic rank-2 input).
inline ModelGroup model_group(const LinearSpace& sp) {
  using detail::Matrix;
  ModelGroup mg;

  if (sp.model == LinearSpace::Model::complete) {
    mg.family = GroupFamily::symmetric;
    mg.name = "S_" + std::to_string(sp.v);
    mg.order = 1;
    for (int i = 2; i <= sp.v; ++i) mg.order *= i;
    std::vector<int> cyc(sp.v);
    for (int i = 0; i < sp.v; ++i) cyc[i] = (i + 1) % sp.v;
    mg.point_gens.push_back(Permutation{cyc});
    mg.point_gens.push_back(Permutation::from_cycles(sp.v, {{0, 1}}));
  } else if (sp.model == LinearSpace::Model::projective) {
    const Field& F = *sp.field;
    int m = sp.model_n + 1, e = F.k();
    mg.family = e == 1 ? GroupFamily::projective_linear
                       : GroupFamily::projective_semilinear;
    mg.name = std::string(e == 1 ? "PGL" : "PGammaL") + "(" +
              std::to_string(m) + "," + std::to_string(F.q()) + ")";
    mg.order = pgl_order(m, F.q()) * e;
    auto idx = detail::coord_index(sp);
    for (const auto& M : detail::transvections(F, m))
      mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, M));
    if (F.q() > 2) {
      Matrix D = detail::identity_matrix(m);
      D[0][0] = detail::primitive_element(F);
      mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, D));
    }
    if (e > 1) mg.point_gens.push_back(detail::frobenius_perm(sp, idx, true));
  } else if (sp.model == LinearSpace::Model::affine) {
    const Field& F = *sp.field;
    int n = sp.model_n, e = F.k();
    mg.family =
        e == 1 ? GroupFamily::affine_linear : GroupFamily::affine_semilinear;
    mg.name = std::string(e == 1 ? "AGL" : "AGammaL") + "(" +
              std::to_string(n) + "," + std::to_string(F.q()) + ")";
    mg.order = agl_order(n, F.q()) * e;
    auto idx = detail::coord_index(sp);
    std::vector<int> zero(n, 0);
    for (const auto& M : detail::transvections(F, n))
      mg.point_gens.push_back(detail::affine_map_perm(sp, idx, M, zero));
    Matrix D = detail::identity_matrix(n);
    D[0][0] = detail::primitive_element(F);
    mg.point_gens.push_back(detail::affine_map_perm(sp, idx, D, zero));
    std::vector<int> e1(n, 0);
    e1[0] = 1;
    mg.point_gens.push_back(
        detail::affine_map_perm(sp, idx, detail::identity_matrix(n), e1));
    if (e > 1) mg.point_gens.push_back(detail::frobenius_perm(sp, idx, false));
  } else if (sp.model == LinearSpace::Model::hermitian) {
    const Field& F = *sp.field;  // GF(q^2)
    int q = sp.model_q;
    mg.family = GroupFamily::unitary_semilinear;
    mg.name = "PGammaU(3," + std::to_string(q) + ")";
    mg.order = pgu3_order(q) * F.k();  // k = 2e, the Galois group of GF(q^2)
    auto idx = detail::coord_index(sp);

    // Unitary transvections x -> x + lam <x,v> v for isotropic v (a curve
    // point) and lam with lam + lam^q = 0; as a matrix, I + lam v (v^q)^T.
    // A handful of centers suffices; the suite certifies the closure order.
    int centers = std::min(sp.v, 8);
    for (int c = 0; c < centers; ++c) {
      const auto& vv = sp.point_coords[c];
      for (int lam = 1; lam < F.q(); ++lam) {
        if (F.add(lam, F.pow(lam, q)) != 0) continue;
        Matrix M = detail::identity_matrix(3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            M[i][j] = F.add(M[i][j], F.mul(lam, F.mul(vv[i], F.pow(vv[j], q))));
        if (!detail::is_unitary(F, M, q))
          throw std::logic_error("model_group: transvection is not unitary");
        mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, M));
      }
    }
    // Coordinate permutations and a norm-one diagonal per position.
    for (const auto& cyc : {std::vector<std::vector<int>>{{0, 1, 2}},
                            std::vector<std::vector<int>>{{0, 1}}}) {
      Matrix M(3, std::vector<int>(3, 0));
      Permutation cp = Permutation::from_cycles(3, cyc);
      for (int i = 0; i < 3; ++i) M[cp(i)][i] = 1;
      mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, M));
    }
    int mu = F.pow(detail::primitive_element(F), q - 1);  // order q+1
    for (int pos = 0; pos < 3; ++pos) {
      Matrix D = detail::identity_matrix(3);
      D[pos][pos] = mu;
      if (!detail::is_unitary(F, D, q))
        throw std::logic_error("model_group: diagonal is not unitary");
      mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, D));
    }
    if (q == 2) {
      // Transvections only generate a proper subgroup of SU(3,2); the
      // Fourier matrix over GF(4) (omega of order 3) completes the group.
      int w = detail::primitive_element(F), w2 = F.mul(w, w);
      Matrix M{{1, 1, 1}, {1, w, w2}, {1, w2, w}};
      if (!detail::is_unitary(F, M, q))
        throw std::logic_error("model_group: Fourier matrix is not unitary");
      mg.point_gens.push_back(detail::projective_matrix_perm(sp, idx, M));
    }
    mg.point_gens.push_back(detail::frobenius_perm(sp, idx, true));
  } else {
    throw std::domain_error("model_group: space has no standard model");
  }

  for (const auto& g : mg.point_gens) {
    Permutation full = extend_to_lines(sp, g);
    if (!is_automorphism(sp.sys, full))
      throw std::logic_error("model_group: generator is not an automorphism");
    mg.gens.push_back(std::move(full));
  }
  return mg;
}

// The orthogonal polarity of a projective plane PG(2,q): a point maps to its
// perpendicular line under the dot product, an involutory correlation.
inline Correlation standard_polarity(const LinearSpace& sp) {
  if (sp.model != LinearSpace::Model::projective || sp.model_n != 2)
    throw std::domain_error("standard_polarity: needs a projective plane");
  const Field& F = *sp.field;
  std::map<std::vector<int>, int> line_index;
  for (int i = 0; i < sp.b; ++i) line_index[sp.lines[i]] = i;
  std::vector<int> img(sp.sys.size(), -1);
  for (int p = 0; p < sp.v; ++p) {
    std::vector<int> perp;
    for (int r = 0; r < sp.v; ++r) {
      int dot = 0;
      for (int t = 0; t < 3; ++t)
        dot = F.add(dot, F.mul(sp.point_coords[p][t], sp.point_coords[r][t]));
      if (dot == 0) perp.push_back(r);
    }
    int li = line_index.at(perp);  // perp is sorted by construction
    img[p] = sp.line_elem(li);
    img[sp.line_elem(li)] = p;
  }
  Correlation c{Permutation{img}, Permutation{{1, 0}}};
  if (!is_valid_permutation(c.perm) || !is_correlation(sp.sys, c))
    throw std::logic_error("standard_polarity: construction failed");
  return c;
}

}  // namespace trigeom
