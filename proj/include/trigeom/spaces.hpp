#pragma once
// Concrete rank-two spaces: complete graphs, projective and affine spaces,
// Hermitian unitals, plus a carrier for arbitrary rank-2 systems.
//
// Element layout is always points 0..v-1 followed by lines; every enumeration
// is sorted so identical parameters rebuild identical systems byte for byte.

#include <array>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigeom/gf.hpp"
#include "trigeom/incidence.hpp"

namespace trigeom {

struct LinearSpace {
  IncidenceSystem sys;  // types {"P","L"}
  int v = 0;            // points
  int b = 0;            // lines
  std::vector<std::vector<int>> lines;    // line index -> sorted point ids
  std::vector<std::vector<int>> pencils;  // point -> sorted line indices
  bool linear = false;
  std::string descriptor;

  // Coordinate model, present for the algebraic builders so matrix groups can
  // act on points.
  enum class Model { generic, complete, projective, affine, hermitian };
  Model model = Model::generic;
  int model_n = 0;  // dimension parameter
  int model_q = 0;  // order parameter
  std::shared_ptr<const Field> field;  // GF(q), or GF(q^2) for unitals
  std::vector<std::vector<int>> point_coords;

  int line_elem(int line_index) const { return v + line_index; }
  int line_index(int elem) const { return elem - v; }

  // Unique common line of two distinct points, as an element id.
  int line_through(int p, int q) const {
    if (p == q) throw std::invalid_argument("line_through: equal points");
    int t = through_[static_cast<size_t>(p) * v + q];
    if (t < 0) throw std::domain_error("line_through: no unique common line");
    return line_elem(t);
  }
  // -1 none, -2 several (non-linear inputs only).
  int common_line_index(int p, int q) const {
    return through_[static_cast<size_t>(p) * v + q];
  }

  void finalize() {
    v = 0;
    while (v < sys.size() && sys.type_of[v] == 0) ++v;
    b = sys.size() - v;
    for (int x = v; x < sys.size(); ++x)
      if (sys.type_of[x] != 1)
        throw std::logic_error("linear space: points must precede lines");
    lines.assign(b, {});
    pencils.assign(v, {});
    for (int li = 0; li < b; ++li) {
      lines[li] = sys.adj[v + li];
      for (int p : lines[li]) pencils[p].push_back(li);
    }
    through_.assign(static_cast<size_t>(v) * v, -1);
    for (int li = 0; li < b; ++li)
      for (int p : lines[li])
        for (int q : lines[li]) {
          if (p == q) continue;
          int& slot = through_[static_cast<size_t>(p) * v + q];
          slot = (slot == -1) ? li : -2;
        }
  }

 private:
  std::vector<int> through_;
};

// The three linear-space axioms, checked exhaustively; returns the first
// violation found.
inline std::pair<bool, std::string> is_linear_space(const IncidenceSystem& sys) {
  if (sys.rank() != 2) return {false, "not a rank-2 system"};
  std::vector<int> points = sys.type_class(0);
  std::vector<int> lines = sys.type_class(1);
  for (int l : lines)
    if (sys.adj[l].size() < 2)
      return {false, "line " + std::to_string(l) + " has fewer than 2 points"};
  for (int p : points)
    if (sys.adj[p].size() < 2)
      return {false, "point " + std::to_string(p) + " is on fewer than 2 lines"};
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      int count = static_cast<int>(
          sorted_intersection(sys.adj[points[i]], sys.adj[points[j]]).size());
      if (count != 1)
        return {false, "points " + std::to_string(points[i]) + "," +
                           std::to_string(points[j]) + " lie on " +
                           std::to_string(count) + " common lines"};
    }
  return {true, ""};
}

namespace detail {

inline std::string brace_label(const std::vector<int>& ids) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << "}";
  return os.str();
}

inline LinearSpace assemble(std::vector<std::string> point_labels,
                            const std::set<std::vector<int>>& line_sets,
                            std::string descriptor, bool expect_linear) {
  LinearSpace sp;
  sp.descriptor = std::move(descriptor);
  sp.sys.add_type("P");
  sp.sys.add_type("L");
  for (auto& pl : point_labels) sp.sys.add_element(0, std::move(pl));
  for (const auto& ls : line_sets) {
    int id = sp.sys.add_element(1, brace_label(ls));
    for (int p : ls) sp.sys.add_incidence(p, id);
  }
  sp.finalize();
  auto [ok, why] = is_linear_space(sp.sys);
  sp.linear = ok;
  if (expect_linear && !ok)
    throw std::logic_error(sp.descriptor + ": expected a linear space: " + why);
  return sp;
}

}  // namespace detail

// Arbitrary rank-2 system (points first, then lines) as a space carrier.
inline LinearSpace from_rank2(IncidenceSystem sys, std::string descriptor) {
  LinearSpace sp;
  sp.sys = std::move(sys);
  sp.descriptor = std::move(descriptor);
  if (sp.sys.rank() != 2) throw std::invalid_argument("from_rank2: rank must be 2");
  sp.finalize();
  sp.linear = is_linear_space(sp.sys).first;
  return sp;
}

inline LinearSpace complete_graph(int v) {
  if (v < 3) throw std::invalid_argument("complete_graph: need v >= 3");
  std::vector<std::string> pts;
  for (int i = 0; i < v; ++i) pts.push_back(std::to_string(i));
  std::set<std::vector<int>> ls;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) ls.insert({i, j});
  LinearSpace sp =
      detail::assemble(std::move(pts), ls, "kv " + std::to_string(v), true);
  sp.model = LinearSpace::Model::complete;
  return sp;
}

namespace detail {

// All length-d coordinate vectors over the field, sorted with c0 most
// significant, as required for reproducible point orderings.
inline std::vector<std::vector<int>> all_vectors(const Field& F, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) { out.push_back(cur); return; }
    for (int c = 0; c < F.q(); ++c) { cur[i] = c; self(self, i + 1); }
  };
  rec(rec, 0);
  return out;
}

// Scale so the first nonzero coordinate is 1.
inline std::vector<int> normalize_projective(const Field& F, std::vector<int> v) {
  for (int c : v)
    if (c != 0) {
      int s = F.inv(c);
      for (auto& x : v) x = F.mul(x, s);
      return v;
    }
  throw std::logic_error("normalize: zero vector");
}

inline std::string coord_label(const std::vector<int>& c, char open, char close,
                               char sep) {
  std::ostringstream os;
  os << open;
  for (size_t i = 0; i < c.size(); ++i) os << (i ? std::string(1, sep) : "") << c[i];
  os << close;
  return os.str();
}

}  // namespace detail

inline LinearSpace projective_space(int n, int q) {
  if (n < 2) throw std::invalid_argument("projective_space: need n >= 2");
  auto [p, e] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("projective_space: q must be a prime power");
  auto F = std::make_shared<const Field>(p, e);
  int d = n + 1;

  std::set<std::vector<int>> reps;
  for (auto& vec : detail::all_vectors(*F, d)) {
    bool zero = true;
    for (int c : vec) zero &= (c == 0);
    if (!zero) reps.insert(detail::normalize_projective(*F, vec));
  }
  std::vector<std::vector<int>> points(reps.begin(), reps.end());
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < points.size(); ++i) {
    index[points[i]] = static_cast<int>(i);
    labels.push_back(detail::coord_label(points[i], '[', ']', ':'));
  }

  std::set<std::vector<int>> line_sets;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      std::vector<int> ls{static_cast<int>(i)};
      for (int lam = 0; lam < F->q(); ++lam) {
        std::vector<int> w(d);
        for (int t = 0; t < d; ++t)
          w[t] = F->add(F->mul(lam, points[i][t]), points[j][t]);
        ls.push_back(index.at(detail::normalize_projective(*F, w)));
      }
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      line_sets.insert(ls);
    }

  LinearSpace sp = detail::assemble(
      std::move(labels), line_sets,
      "pg " + std::to_string(n) + " " + std::to_string(q), true);
  long long expect_v = 1, pw = 1;
  for (int i = 0; i <= n; ++i) pw *= q;
  expect_v = (pw - 1) / (q - 1);
  if (sp.v != expect_v) throw std::logic_error("projective_space: wrong point count");
  sp.model = LinearSpace::Model::projective;
  sp.model_n = n;
  sp.model_q = q;
  sp.field = F;
  sp.point_coords = std::move(points);
  return sp;
}

inline LinearSpace affine_space(int n, int q) {
  if (n < 2) throw std::invalid_argument("affine_space: need n >= 2");
  if (q == 2)
    throw std::invalid_argument(
        "affine_space: q=2 has 2-point lines; use the complete graph kv 2^n");
  auto [p, e] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("affine_space: q must be a prime power");
  auto F = std::make_shared<const Field>(p, e);

  std::vector<std::vector<int>> points = detail::all_vectors(*F, n);
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < points.size(); ++i) {
    index[points[i]] = static_cast<int>(i);
    labels.push_back(detail::coord_label(points[i], '(', ')', ','));
  }

  // Directions = projective points of the underlying vector space.
  std::set<std::vector<int>> dirs;
  for (auto& vec : points) {
    bool zero = true;
    for (int c : vec) zero &= (c == 0);
    if (!zero) dirs.insert(detail::normalize_projective(*F, vec));
  }

  std::set<std::vector<int>> line_sets;
  for (const auto& d : dirs)
    for (const auto& base : points) {
      std::vector<int> ls;
      for (int t = 0; t < F->q(); ++t) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = F->add(base[i], F->mul(t, d[i]));
        ls.push_back(index.at(w));
      }
      std::sort(ls.begin(), ls.end());
      line_sets.insert(ls);
    }

  LinearSpace sp = detail::assemble(
      std::move(labels), line_sets,
      "ag " + std::to_string(n) + " " + std::to_string(q), true);
  sp.model = LinearSpace::Model::affine;
  sp.model_n = n;
  sp.model_q = q;
  sp.field = F;
  sp.point_coords = std::move(points);
  return sp;
}

// Hermitian unital: points of PG(2,q^2) on the diagonal Hermitian curve
// x0^(q+1) + x1^(q+1) + x2^(q+1) = 0, blocks cut out by secant lines; a
// 2-(q^3+1, q+1, 1) design.
inline LinearSpace hermitian_unital(int q) {
  if (q < 2 || q > 5 || prime_power_decompose(q).first == 0)
    throw std::invalid_argument("hermitian_unital: q must be a prime power in 2..5");
  auto [p, e] = prime_power_decompose(q);
  auto F = std::make_shared<const Field>(p, 2 * e);  // GF(q^2)

  std::set<std::vector<int>> reps;
  for (auto& vec : detail::all_vectors(*F, 3)) {
    bool zero = true;
    for (int c : vec) zero &= (c == 0);
    if (!zero) reps.insert(detail::normalize_projective(*F, vec));
  }
  std::vector<std::vector<int>> curve;
  for (const auto& r : reps) {
    int s = 0;
    for (int c : r) s = F->add(s, F->pow(c, q + 1));
    if (s == 0) curve.push_back(r);
  }
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < curve.size(); ++i) {
    index[curve[i]] = static_cast<int>(i);
    labels.push_back(detail::coord_label(curve[i], '[', ']', ':'));
  }

  std::set<std::vector<int>> block_sets;
  for (size_t i = 0; i < curve.size(); ++i)
    for (size_t j = i + 1; j < curve.size(); ++j) {
      std::vector<int> block{static_cast<int>(i)};
      for (int lam = 0; lam < F->q(); ++lam) {
        std::vector<int> w(3);
        for (int t = 0; t < 3; ++t)
          w[t] = F->add(F->mul(lam, curve[i][t]), curve[j][t]);
        auto it = index.find(detail::normalize_projective(*F, w));
        if (it != index.end()) block.push_back(it->second);
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      if (static_cast<int>(block.size()) != q + 1)
        throw std::logic_error("hermitian_unital: secant block of wrong size");
      block_sets.insert(block);
    }

  LinearSpace sp = detail::assemble(std::move(labels), block_sets,
                                    "uh " + std::to_string(q), true);
  long long q3 = static_cast<long long>(q) * q * q;
  if (sp.v != q3 + 1) throw std::logic_error("hermitian_unital: wrong point count");
  if (sp.b != static_cast<long long>(q) * q * (q * q - q + 1))
    throw std::logic_error("hermitian_unital: wrong block count");
  sp.model = LinearSpace::Model::hermitian;
  sp.model_n = 2;
  sp.model_q = q;
  sp.field = F;
  sp.point_coords = std::move(curve);
  return sp;
}

// Ordered triples of pairwise distinct, non-collinear points, lexicographic.
inline std::vector<std::array<int, 3>> noncollinear_triples(const LinearSpace& sp) {
  if (!sp.linear)
    throw std::domain_error("noncollinear_triples: not a linear space");
  std::vector<std::array<int, 3>> out;
  for (int p1 = 0; p1 < sp.v; ++p1)
    for (int p2 = 0; p2 < sp.v; ++p2) {
      if (p2 == p1) continue;
      const std::vector<int>& line = sp.lines[sp.common_line_index(p1, p2)];
      for (int p3 = 0; p3 < sp.v; ++p3)
        if (!std::binary_search(line.begin(), line.end(), p3))
          out.push_back({p1, p2, p3});
    }
  return out;
}

inline long long noncollinear_triple_count(const LinearSpace& sp) {
  if (!sp.linear)
    throw std::domain_error("noncollinear_triples: not a linear space");
  long long n = 0;
  for (int p1 = 0; p1 < sp.v; ++p1)
    for (int p2 = 0; p2 < sp.v; ++p2) {
      if (p2 == p1) continue;
      n += sp.v - static_cast<long long>(sp.lines[sp.common_line_index(p1, p2)].size());
    }
  return n;
}

}  // namespace trigeom
