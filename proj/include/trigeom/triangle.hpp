#pragma once
// The triangle complex of a rank-2 space: three copies of its flags, with
// (p,L,i) incident to (p',L',i+1) exactly when the lines meet precisely in p
// and p' is a different point. Cyclically rotating the copies is a triality;
// automorphisms and dualities of the source lift to correlations, and every
// correlation of the complex projects back down (thick sources or complete
// graphs).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigeom/incidence.hpp"
#include "trigeom/perm.hpp"
#include "trigeom/spaces.hpp"

namespace trigeom {

class TriangleComplex {
 public:
  struct Entry {
    int point;  // source point id
    int line;   // source line element id
    int copy;   // 1, 2 or 3
  };

  explicit TriangleComplex(LinearSpace sp) : space_(std::move(sp)) {
    const int v = space_.v, b = space_.b;
    for (int p = 0; p < v; ++p)
      for (int li : space_.pencils[p]) flags_.push_back({p, space_.line_elem(li)});
    // pencils are sorted, so flags_ is already ordered by (point, line).
    F_ = static_cast<int>(flags_.size());
    flag_at_.assign(static_cast<size_t>(v) * b, -1);
    for (int f = 0; f < F_; ++f)
      flag_at_[static_cast<size_t>(flags_[f].first) * b +
               space_.line_index(flags_[f].second)] = f;

    for (int c = 0; c < 3; ++c) sys_.add_type(std::to_string(c + 1));
    for (int c = 0; c < 3; ++c)
      for (int f = 0; f < F_; ++f)
        sys_.add_element(c, "(" + std::to_string(flags_[f].first) + "," +
                                std::to_string(flags_[f].second) + "," +
                                std::to_string(c + 1) + ")");

    // For every ordered line pair meeting in a single point p*, connect
    // (p*,L,i) to (p',L',i+1) for each other point p' of L'.
    for (int a = 0; a < b; ++a)
      for (int bb = 0; bb < b; ++bb) {
        if (a == bb) continue;
        std::vector<int> common = sorted_intersection(space_.lines[a], space_.lines[bb]);
        if (common.size() != 1) continue;
        int pstar = common[0];
        int fa = flag_at_[static_cast<size_t>(pstar) * b + a];
        for (int pprime : space_.lines[bb]) {
          if (pprime == pstar) continue;
          int fb = flag_at_[static_cast<size_t>(pprime) * b + bb];
          for (int c = 0; c < 3; ++c)
            sys_.add_incidence(c * F_ + fa, ((c + 1) % 3) * F_ + fb);
        }
      }
  }

  const LinearSpace& space() const { return space_; }
  const IncidenceSystem& sys() const { return sys_; }
  int flag_count() const { return F_; }
  int size() const { return 3 * F_; }
  // False when the source is not a linear space; the complex is still built
  // (needed for the gonality negative controls) but need not be a geometry.
  bool source_linear() const { return space_.linear; }

  int element(int point, int line_elem, int copy) const {
    if (copy < 1 || copy > 3) throw std::invalid_argument("copy must be 1..3");
    if (point < 0 || point >= space_.v || line_elem < space_.v ||
        line_elem >= space_.v + space_.b)
      throw std::invalid_argument("element: ids out of range");
    int f = flag_at_[static_cast<size_t>(point) * space_.b +
                     space_.line_index(line_elem)];
    if (f < 0) throw std::invalid_argument("element: (point, line) is not a flag");
    return (copy - 1) * F_ + f;
  }

  Entry decode(int x) const {
    if (x < 0 || x >= size()) throw std::invalid_argument("decode: out of range");
    return {flags_[x % F_].first, flags_[x % F_].second, x / F_ + 1};
  }

 private:
  LinearSpace space_;
  IncidenceSystem sys_;
  int F_ = 0;
  std::vector<std::pair<int, int>> flags_;
  std::vector<int> flag_at_;
};

inline TriangleComplex triangle_complex(LinearSpace sp) {
  return TriangleComplex(std::move(sp));
}

// ---------------------------------------------------------------------------
// Canonical correlations.

// (p,L,i) -> (p,L,i mod 3 + 1); always a triality of order 3.
inline Correlation canonical_triality(const TriangleComplex& tc) {
  int F = tc.flag_count();
  Permutation perm = Permutation::identity(3 * F);
  for (int x = 0; x < 3 * F; ++x) perm.img[x] = (x + F) % (3 * F);
  Correlation tau{perm, Permutation{{1, 2, 0}}};
  if (!is_correlation(tc.sys(), tau))
    throw std::logic_error("canonical triality failed verification");
  return tau;
}

// Chambers of the complex are exactly the ordered non-collinear triples:
// (p1,p2,p3) <-> {(p1,[p1 p3],1), (p2,[p2 p1],2), (p3,[p2 p3],3)}.
inline Flag triple_to_chamber(const TriangleComplex& tc,
                              const std::array<int, 3>& t) {
  const LinearSpace& sp = tc.space();
  if (!sp.linear) throw std::domain_error("triple_to_chamber: source not linear");
  auto [p1, p2, p3] = t;
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw std::invalid_argument("triple_to_chamber: points not distinct");
  int l12 = sp.line_through(p1, p2);
  if (sp.sys.incident(p3, l12))
    throw std::invalid_argument("triple_to_chamber: collinear triple");
  Flag c{tc.element(p1, sp.line_through(p1, p3), 1),
         tc.element(p2, l12, 2), tc.element(p3, sp.line_through(p2, p3), 3)};
  std::sort(c.begin(), c.end());
  if (!is_flag(tc.sys(), c))
    throw std::logic_error("triple_to_chamber: produced a non-flag");
  return c;
}

inline std::array<int, 3> chamber_to_triple(const TriangleComplex& tc,
                                            const Flag& chamber) {
  if (chamber.size() != 3 || !is_flag(tc.sys(), chamber))
    throw std::invalid_argument("chamber_to_triple: not a chamber");
  std::array<int, 3> points{-1, -1, -1};
  for (int x : chamber) {
    TriangleComplex::Entry e = tc.decode(x);
    if (points[e.copy - 1] != -1)
      throw std::invalid_argument("chamber_to_triple: repeated type");
    points[e.copy - 1] = e.point;
  }
  return points;
}

// ---------------------------------------------------------------------------
// Lifts.

// g an automorphism of the source system: (p,L,i) -> (g(p),g(L),i).
inline Correlation lift_automorphism(const TriangleComplex& tc,
                                     const Permutation& g) {
  if (!is_automorphism(tc.space().sys, g))
    throw std::invalid_argument("lift_automorphism: not an automorphism of the source");
  int F = tc.flag_count();
  Permutation perm = Permutation::identity(3 * F);
  for (int f = 0; f < F; ++f) {
    TriangleComplex::Entry e = tc.decode(f);
    int img = tc.element(g(e.point), g(e.line), 1);  // copy-independent flag image
    for (int c = 0; c < 3; ++c) perm.img[c * F + f] = c * F + img;
  }
  Correlation out{perm, Permutation::identity(3)};
  if (!is_correlation(tc.sys(), out))
    throw std::logic_error("lift_automorphism: lift failed verification");
  return out;
}

// alpha a duality of the source (type swap): (p,L,i) -> (alpha(L),alpha(p),sigma(i))
// with sigma = (2 3).
inline Correlation lift_duality(const TriangleComplex& tc, const Correlation& alpha) {
  const IncidenceSystem& src = tc.space().sys;
  if (!is_correlation(src, alpha) ||
      !(alpha.type_perm == Permutation{{1, 0}}))
    throw std::invalid_argument("lift_duality: not a duality of the source");
  int F = tc.flag_count();
  static const int sigma[4] = {0, 1, 3, 2};  // copy map, 1-based
  Permutation perm = Permutation::identity(3 * F);
  for (int f = 0; f < F; ++f) {
    TriangleComplex::Entry e = tc.decode(f);
    int img = tc.element(alpha.perm(e.line), alpha.perm(e.point), 1);
    for (int c = 1; c <= 3; ++c)
      perm.img[(c - 1) * F + f] = (sigma[c] - 1) * F + img;
  }
  Correlation out{perm, Permutation{{0, 2, 1}}};
  if (!is_correlation(tc.sys(), out))
    throw std::logic_error("lift_duality: lift failed verification");
  return out;
}

namespace detail {
inline bool all_lines_size2(const LinearSpace& sp) {
  for (const auto& l : sp.lines)
    if (l.size() != 2) return false;
  return sp.linear && sp.b > 0;
}
}  // namespace detail

// The special duality of Delta(K_v): (p,L,i) -> (pbar,L,sigma(i)) where pbar is
// the other endpoint of the edge L and sigma = (2 3).
inline Correlation kv_duality(const TriangleComplex& tc) {
  const LinearSpace& sp = tc.space();
  if (!detail::all_lines_size2(sp))
    throw std::invalid_argument("kv_duality: source is not a complete graph");
  int F = tc.flag_count();
  static const int sigma[4] = {0, 1, 3, 2};
  Permutation perm = Permutation::identity(3 * F);
  for (int f = 0; f < F; ++f) {
    TriangleComplex::Entry e = tc.decode(f);
    const std::vector<int>& pts = sp.lines[sp.line_index(e.line)];
    int pbar = pts[0] == e.point ? pts[1] : pts[0];
    int img = tc.element(pbar, e.line, 1);
    for (int c = 1; c <= 3; ++c)
      perm.img[(c - 1) * F + f] = (sigma[c] - 1) * F + img;
  }
  Correlation out{perm, Permutation{{0, 2, 1}}};
  if (!is_correlation(tc.sys(), out))
    throw std::logic_error("kv_duality: failed verification");
  if (!(out.perm * out.perm).is_identity())
    throw std::logic_error("kv_duality: not an involution");
  return out;
}

// ---------------------------------------------------------------------------
// Projection: factor any correlation of the complex through the lifts.

struct Projection {
  enum class Kind { automorphism, duality, kv_flip };
  Kind kind;
  // The source-system correlation F: type-preserving for automorphism and
  // kv_flip, type-swapping for duality.
  Correlation source;
  int tau_power;  // k in phi = [beta or lift_duality(F)] . lift(F) . tau^k
};

inline const char* to_string(Projection::Kind k) {
  switch (k) {
    case Projection::Kind::automorphism: return "automorphism";
    case Projection::Kind::duality: return "duality";
    case Projection::Kind::kv_flip: return "kv-flip";
  }
  return "?";
}

namespace detail {

// Read a type-preserving lift off its action on copy 1 and check the
// pencil-preservation conditions: the image point must not depend on the line
// of the flag, and the image line must not depend on the point.
inline Permutation extract_point_line_map(const TriangleComplex& tc,
                                          const Correlation& psi) {
  const LinearSpace& sp = tc.space();
  std::vector<int> img(sp.sys.size(), -1);
  for (int f = 0; f < tc.flag_count(); ++f) {
    TriangleComplex::Entry e = tc.decode(f);
    TriangleComplex::Entry w = tc.decode(psi.perm(f));
    if (w.copy != 1)
      throw std::domain_error("projection: residual map does not preserve copies");
    if (img[e.point] == -1) img[e.point] = w.point;
    else if (img[e.point] != w.point)
      throw std::domain_error(
          "projection: image point of point " + std::to_string(e.point) +
          " differs across its pencil");
    if (img[e.line] == -1) img[e.line] = w.line;
    else if (img[e.line] != w.line)
      throw std::domain_error(
          "projection: image line of line " + std::to_string(e.line) +
          " differs across its points");
  }
  Permutation g{img};
  if (!is_valid_permutation(g))
    throw std::domain_error("projection: extracted map is not a bijection");
  return g;
}

// Read a duality lift off its action on copy 1: psi(p,L,1) = (alpha(L),alpha(p),1).
inline Correlation extract_duality(const TriangleComplex& tc, const Correlation& psi) {
  const LinearSpace& sp = tc.space();
  std::vector<int> img(sp.sys.size(), -1);
  for (int f = 0; f < tc.flag_count(); ++f) {
    TriangleComplex::Entry e = tc.decode(f);
    TriangleComplex::Entry w = tc.decode(psi.perm(f));
    if (w.copy != 1)
      throw std::domain_error("projection: residual map does not preserve copies");
    if (img[e.line] == -1) img[e.line] = w.point;
    else if (img[e.line] != w.point)
      throw std::domain_error(
          "projection: image of line " + std::to_string(e.line) +
          " differs across its points");
    if (img[e.point] == -1) img[e.point] = w.line;
    else if (img[e.point] != w.line)
      throw std::domain_error(
          "projection: image of point " + std::to_string(e.point) +
          " differs across its pencil");
  }
  Permutation a{img};
  if (!is_valid_permutation(a))
    throw std::domain_error("projection: extracted duality is not a bijection");
  Correlation alpha{a, Permutation{{1, 0}}};
  if (!is_correlation(sp.sys, alpha))
    throw std::domain_error("projection: extracted map is not a duality");
  return alpha;
}

}  // namespace detail

inline Projection project_correlation(const TriangleComplex& tc, const Correlation& phi) {
  const LinearSpace& sp = tc.space();
  bool thick = sp.linear;
  for (const auto& l : sp.lines) thick = thick && l.size() >= 3;
  for (const auto& pen : sp.pencils) thick = thick && pen.size() >= 3;
  bool kv = detail::all_lines_size2(sp) && sp.v >= 4;
  if (!thick && !kv)
    throw std::domain_error(
        "project_correlation: source must be thick or a complete graph on >= 4 points");
  if (!is_correlation(tc.sys(), phi))
    throw std::invalid_argument("project_correlation: not a correlation");

  // Split the type permutation as sigma^a . rho^k.
  const Permutation rho{{1, 2, 0}}, sigma{{0, 2, 1}};
  int k = -1, a = -1;
  for (int aa = 0; aa < 2 && k < 0; ++aa) {
    Permutation t = aa ? sigma : Permutation::identity(3);
    for (int kk = 0; kk < 3; ++kk) {
      if (phi.type_perm == t) { k = kk; a = aa; break; }
      t = t * rho;
    }
  }
  if (k < 0) throw std::logic_error("project_correlation: impossible type_perm");

  Correlation tau = canonical_triality(tc);
  Correlation tau_inv_k = tau;
  tau_inv_k.perm = Permutation::identity(tc.size());
  tau_inv_k.type_perm = Permutation::identity(3);
  for (int i = 0; i < (3 - k) % 3; ++i) tau_inv_k = compose(tau_inv_k, tau);
  Correlation psi = compose(phi, tau_inv_k);

  if (a == 0) {
    Permutation g = detail::extract_point_line_map(tc, psi);
    if (!is_automorphism(sp.sys, g))
      throw std::domain_error("projection: extracted map is not an automorphism");
    Correlation recon = lift_automorphism(tc, g);
    for (int i = 0; i < k; ++i) recon = compose(recon, tau);
    if (!(recon.perm == phi.perm))
      throw std::domain_error("projection: reconstruction mismatch");
    return {Projection::Kind::automorphism,
            Correlation{g, Permutation::identity(2)}, k};
  }

  // Odd case: try a genuine duality lift first, then the K_v flip.
  try {
    Correlation alpha = detail::extract_duality(tc, psi);
    Correlation recon = lift_duality(tc, alpha);
    for (int i = 0; i < k; ++i) recon = compose(recon, tau);
    if (!(recon.perm == phi.perm))
      throw std::domain_error("projection: reconstruction mismatch");
    return {Projection::Kind::duality, alpha, k};
  } catch (const std::domain_error&) {
    if (!kv) throw;
  }
  Correlation beta = kv_duality(tc);
  Correlation psi2 = compose(beta, psi);  // beta is an involution
  Permutation g = detail::extract_point_line_map(tc, psi2);
  if (!is_automorphism(sp.sys, g))
    throw std::domain_error("projection: extracted map is not an automorphism");
  Correlation recon = compose(beta, lift_automorphism(tc, g));
  for (int i = 0; i < k; ++i) recon = compose(recon, tau);
  if (!(recon.perm == phi.perm))
    throw std::domain_error("projection: reconstruction mismatch");
  return {Projection::Kind::kv_flip, Correlation{g, Permutation::identity(2)}, k};
}

}  // namespace trigeom
