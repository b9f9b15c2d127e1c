#pragma once
// Permutations, orbits, and a deterministic Schreier-Sims stabilizer chain.
// Degrees stay in the low thousands here, so the implementation favors
// clarity and reproducibility over asymptotic tricks: transversals are built
// by FIFO BFS over generators in insertion order, and new base points are
// always the smallest moved point of the offending residue.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "trigeom/incidence.hpp"

namespace trigeom {

struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
  }

  // Smallest point with img[x] != x; -1 for the identity.
  int smallest_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return i;
    return -1;
  }

  long long order() const {
    std::vector<char> seen(img.size(), 0);
    long long ord = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = i; !seen[j]; j = img[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img == b.img;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img < b.img;
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i)
        p.img[c[i]] = c[(i + 1) % c.size()];
    return p;
  }
};

// (a % b)(x) = a(b(x)): b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  Permutation r;
  r.img.resize(a.img.size());
  for (int i = 0; i < a.degree(); ++i) r.img[i] = a.img[b.img[i]];
  return r;
}

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

inline bool is_valid_permutation(const Permutation& p) {
  std::vector<char> hit(p.img.size(), 0);
  for (int x : p.img) {
    if (x < 0 || x >= p.degree() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Orbits under the natural action and under induced tuple/set actions.

inline std::vector<int> orbit(int start, const std::vector<Permutation>& gens) {
  std::vector<int> frontier{start}, out{start};
  std::set<int> seen{start};
  for (size_t head = 0; head < frontier.size(); ++head) {
    int x = frontier[head];
    for (const auto& g : gens) {
      int y = g(x);
      if (seen.insert(y).second) {
        frontier.push_back(y);
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> all_orbits(int degree,
                                                const std::vector<Permutation>& gens) {
  std::vector<char> done(degree, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree; ++x) {
    if (done[x]) continue;
    auto orb = orbit(x, gens);
    for (int y : orb) done[y] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

namespace detail {
// Three ids in 16-bit lanes; every degree used here fits comfortably.
inline std::uint64_t encode3(int a, int b, int c) {
  return (static_cast<std::uint64_t>(a) << 32) |
         (static_cast<std::uint64_t>(b) << 16) | static_cast<std::uint64_t>(c);
}
}  // namespace detail

// Orbit size of an ordered triple under the diagonal action.
inline long long triple_orbit_size(const std::array<int, 3>& start,
                                   const std::vector<Permutation>& gens) {
  for (int x : start)
    if (x < 0 || x >= 65536) throw std::invalid_argument("triple orbit: id too large");
  std::vector<std::array<int, 3>> frontier{start};
  std::unordered_set<std::uint64_t> seen{detail::encode3(start[0], start[1], start[2])};
  for (size_t head = 0; head < frontier.size(); ++head) {
    std::array<int, 3> t = frontier[head];
    for (const auto& g : gens) {
      std::array<int, 3> u{g(t[0]), g(t[1]), g(t[2])};
      if (seen.insert(detail::encode3(u[0], u[1], u[2])).second) frontier.push_back(u);
    }
  }
  return static_cast<long long>(seen.size());
}

// Orbit size of an unordered triple (a sorted 3-set) under the induced action.
inline long long set3_orbit_size(std::array<int, 3> start,
                                 const std::vector<Permutation>& gens) {
  std::sort(start.begin(), start.end());
  std::vector<std::array<int, 3>> frontier{start};
  std::unordered_set<std::uint64_t> seen{detail::encode3(start[0], start[1], start[2])};
  for (size_t head = 0; head < frontier.size(); ++head) {
    std::array<int, 3> t = frontier[head];
    for (const auto& g : gens) {
      std::array<int, 3> u{g(t[0]), g(t[1]), g(t[2])};
      std::sort(u.begin(), u.end());
      if (seen.insert(detail::encode3(u[0], u[1], u[2])).second) frontier.push_back(u);
    }
  }
  return static_cast<long long>(seen.size());
}

// ---------------------------------------------------------------------------
// Stabilizer chain.

class StabChain {
 public:
  StabChain(int degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree || !is_valid_permutation(g))
        throw std::invalid_argument("StabChain: bad generator");
      add_at_(g, 0);
    }
    // Sims verification by closure: sweep every level's Schreier generators
    // and sift them through the chain, repeating until a whole pass adds
    // nothing. The generating set of level i is everything at levels >= i
    // (deeper strong generators fix the earlier base points by construction
    // but still contribute to the basic orbit). Each successful addition
    // strictly enlarges an orbit, so the loop terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < base_.size(); ++i) {
        rebuild_orbit_(i);
        const std::vector<int> order = orbit_order_[i];
        const std::vector<Permutation> sgens = level_gens_(i);
        for (int x : order)
          for (const Permutation& s : sgens) {
            const Permutation ux = trans_[i].at(x);
            const Permutation usx = trans_[i].at(s(x));
            if (add_at_(usx.inverse() * (s * ux), i + 1)) changed = true;
          }
      }
    }
    for (size_t i = 0; i < base_.size(); ++i) rebuild_orbit_(i);
  }

  int degree() const { return degree_; }

  long long order() const {
    long long n = 1;
    for (const auto& t : trans_) n *= static_cast<long long>(t.size());
    return n;
  }

  const std::vector<int>& base() const { return base_; }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    Permutation h = g;
    for (size_t i = 0; i < base_.size(); ++i) {
      if (h.is_identity()) return true;
      auto it = trans_[i].find(h(base_[i]));
      if (it == trans_[i].end()) return false;
      h = it->second.inverse() * h;
    }
    return h.is_identity();
  }

  // All strong generators, level by level.
  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& lev : gens_) out.insert(out.end(), lev.begin(), lev.end());
    return out;
  }

 private:
  // Sift h (which fixes base_[0..j-1]) and install the residue, extending the
  // base if needed. Returns true if a generator was added somewhere.
  bool add_at_(Permutation h, size_t j) {
    while (true) {
      if (h.is_identity()) return false;
      if (j == base_.size()) {
        base_.push_back(h.smallest_moved());
        gens_.push_back({});
        trans_.push_back({});
        orbit_order_.push_back({});
        trans_[j].emplace(base_[j], Permutation::identity(degree_));
        orbit_order_[j].push_back(base_[j]);
      }
      auto it = trans_[j].find(h(base_[j]));
      if (it == trans_[j].end()) {
        gens_[j].push_back(std::move(h));
        rebuild_orbit_(j);
        return true;
      }
      h = it->second.inverse() * h;
      ++j;
    }
  }

  std::vector<Permutation> level_gens_(size_t i) const {
    std::vector<Permutation> out;
    for (size_t j = i; j < gens_.size(); ++j)
      out.insert(out.end(), gens_[j].begin(), gens_[j].end());
    return out;
  }

  void rebuild_orbit_(size_t i) {
    const std::vector<Permutation> sgens = level_gens_(i);
    trans_[i].clear();
    orbit_order_[i].clear();
    trans_[i].emplace(base_[i], Permutation::identity(degree_));
    orbit_order_[i].push_back(base_[i]);
    for (size_t head = 0; head < orbit_order_[i].size(); ++head) {
      int x = orbit_order_[i][head];
      for (const auto& s : sgens) {
        int y = s(x);
        if (!trans_[i].count(y)) {
          trans_[i].emplace(y, s * trans_[i].at(x));
          orbit_order_[i].push_back(y);
        }
      }
    }
  }

  int degree_;
  std::vector<int> base_;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::map<int, Permutation>> trans_;
  std::vector<std::vector<int>> orbit_order_;
};

// Explicit closure; only for oracle duty in tests and small certifications.
inline std::set<Permutation> brute_closure(const std::vector<Permutation>& gens,
                                           size_t limit = 5000) {
  if (gens.empty()) return {};
  std::set<Permutation> elems{Permutation::identity(gens[0].degree())};
  std::vector<Permutation> frontier(elems.begin(), elems.end());
  for (size_t head = 0; head < frontier.size(); ++head) {
    for (const auto& g : gens) {
      Permutation h = g * frontier[head];
      if (elems.insert(h).second) {
        if (elems.size() > limit)
          throw std::runtime_error("brute_closure: limit exceeded");
        frontier.push_back(std::move(h));
      }
    }
  }
  return elems;
}

// Is <sub_gens> normal in the group generated by big_gens together with it?
// For finite groups it is enough that each g n g^-1 lands back in the
// subgroup chain.
inline bool is_normal_subgroup(const StabChain& sub,
                               const std::vector<Permutation>& sub_gens,
                               const std::vector<Permutation>& big_gens) {
  for (const auto& g : big_gens) {
    Permutation gi = g.inverse();
    for (const auto& n : sub_gens)
      if (!sub.contains(g * (n * gi))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutations acting on incidence systems.

// Type-preserving incidence automorphism. Forward edge preservation plus
// bijectivity forces edge counts to match, so no inverse check is needed.
inline bool is_automorphism(const IncidenceSystem& sys, const Permutation& g) {
  if (g.degree() != sys.size() || !is_valid_permutation(g)) return false;
  for (int x = 0; x < sys.size(); ++x)
    if (sys.type_of[g(x)] != sys.type_of[x]) return false;
  for (int x = 0; x < sys.size(); ++x)
    for (int y : sys.adj[x]) {
      if (y < x) continue;
      if (!sys.incident(g(x), g(y))) return false;
    }
  return true;
}

// Correlation: an incidence-preserving permutation of elements together with
// the induced permutation of types.
struct Correlation {
  Permutation perm;
  Permutation type_perm;
};

inline bool is_correlation(const IncidenceSystem& sys, const Correlation& c) {
  if (c.perm.degree() != sys.size() || !is_valid_permutation(c.perm)) return false;
  if (c.type_perm.degree() != sys.rank() || !is_valid_permutation(c.type_perm))
    return false;
  for (int x = 0; x < sys.size(); ++x)
    if (sys.type_of[c.perm(x)] != c.type_perm(sys.type_of[x])) return false;
  for (int x = 0; x < sys.size(); ++x)
    for (int y : sys.adj[x]) {
      if (y < x) continue;
      if (!sys.incident(c.perm(x), c.perm(y))) return false;
    }
  return true;
}

inline Correlation compose(const Correlation& a, const Correlation& b) {
  return {a.perm * b.perm, a.type_perm * b.type_perm};
}

inline Correlation inverse(const Correlation& c) {
  return {c.perm.inverse(), c.type_perm.inverse()};
}

// The group generated by gens acts transitively on chambers. Every generator
// is verified to be an automorphism first.
inline bool is_flag_transitive(const IncidenceSystem& sys,
                               const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (!is_automorphism(sys, g))
      throw std::invalid_argument("is_flag_transitive: generator is not an automorphism");
  std::vector<Flag> cs = chambers(sys);
  if (cs.empty()) return false;
  if (cs.size() == 1) return true;
  std::set<Flag> all(cs.begin(), cs.end());
  std::vector<Flag> frontier{cs[0]};
  std::set<Flag> seen{cs[0]};
  for (size_t head = 0; head < frontier.size(); ++head) {
    Flag f = frontier[head];
    for (const auto& g : gens) {
      Flag h;
      h.reserve(f.size());
      for (int x : f) h.push_back(g(x));
      std::sort(h.begin(), h.end());
      if (!all.count(h))
        throw std::logic_error("is_flag_transitive: image is not a chamber");
      if (seen.insert(h).second) frontier.push_back(h);
    }
  }
  return seen.size() == all.size();
}

}  // namespace trigeom
