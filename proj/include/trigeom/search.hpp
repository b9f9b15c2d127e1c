#pragma once
// Exact isomorphism and automorphism search for small incidence systems.
//
// The engine is classical individualization-refinement: a partial map is a
// list of individualized source/target vertices, colors are refined by
// iterated neighborhood signatures on the disjoint union of the two systems
// (so color names agree on both sides), and branching runs over the target
// cell of the chosen source vertex.  Completed maps are verified edge by
// edge, so soundness never rests on the refinement.
//
// The automorphism group is assembled level by level as a stabilizer chain:
// at each level the orbit of the chosen vertex is grown by existence
// searches, one candidate per currently unreached point, and the group order
// is the product of the certified orbit sizes.  A stabilizer-chain recount
// of the returned generators cross-checks the order.
//
// Type permutations (dualities and trialities) are searched per permutation:
// a correlation with type action s is an isomorphism onto the same system
// with types relabeled by s.  Candidate images at the root are pruned to one
// representative per orbit of the already known automorphism group.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "trigeom/perm.hpp"

namespace trigeom {

namespace detail {

struct RefineResult {
  bool feasible = false;
  std::vector<int> colA, colB;  // stable colors per side
};

class IsoSearcher {
 public:
  // Searches for bijections g with B.type(g(x)) = type_map(A.type(x)) that
  // preserve incidence.
  IsoSearcher(const IncidenceSystem& A, const IncidenceSystem& B,
              Permutation type_map)
      : A_(A), B_(B), tm_(std::move(type_map)), n_(A.size()) {
    ok_ = A_.size() == B_.size() && A_.rank() == B_.rank() &&
          tm_.degree() == A_.rank() && is_valid_permutation(tm_);
    if (ok_) {
      auto ca = A_.type_counts(), cb = B_.type_counts();
      for (int t = 0; t < A_.rank() && ok_; ++t)
        if (ca[t] != cb[tm_(t)]) ok_ = false;
    }
  }

  bool plausible() const { return ok_; }

  RefineResult refine(const std::vector<int>& fixA,
                      const std::vector<int>& fixB) const {
    RefineResult out;
    int N = 2 * n_, f = static_cast<int>(fixA.size());
    std::vector<int> cur(N);
    for (int x = 0; x < n_; ++x) cur[x] = f + tm_(A_.type_of[x]);
    for (int y = 0; y < n_; ++y) cur[n_ + y] = f + B_.type_of[y];
    for (int i = 0; i < f; ++i) {
      cur[fixA[i]] = i;
      cur[n_ + fixB[i]] = i;
    }
    int ncol = 0;
    while (true) {
      std::vector<std::vector<int>> sig(N);
      for (int v = 0; v < N; ++v) {
        const auto& nbrs = v < n_ ? A_.adj[v] : B_.adj[v - n_];
        auto& s = sig[v];
        s.reserve(nbrs.size() + 1);
        s.push_back(cur[v]);
        for (int u : nbrs) s.push_back(cur[v < n_ ? u : n_ + u]);
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<std::vector<int>> keys(sig);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (int v = 0; v < N; ++v)
        cur[v] = static_cast<int>(
            std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
      int newcol = static_cast<int>(keys.size());
      if (newcol == ncol) break;
      ncol = newcol;
    }
    // Each color class must be split evenly between the two sides.
    std::vector<int> balance(ncol, 0);
    for (int x = 0; x < n_; ++x) ++balance[cur[x]];
    for (int y = 0; y < n_; ++y) --balance[cur[n_ + y]];
    for (int c = 0; c < ncol; ++c)
      if (balance[c] != 0) return out;
    out.feasible = true;
    out.colA.assign(cur.begin(), cur.begin() + n_);
    out.colB.assign(cur.begin() + n_, cur.end());
    return out;
  }

  std::optional<Permutation> find(std::vector<int> fixA, std::vector<int> fixB) {
    if (!ok_) return std::nullopt;
    return search_(fixA, fixB);
  }

  // Existence search with root candidates pruned to one per orbit of the
  // given automorphisms of B (sound: composing with an automorphism moves
  // the image anywhere in its orbit without changing the type action).
  std::optional<Permutation> find_up_to(const std::vector<Permutation>& auts) {
    if (!ok_) return std::nullopt;
    auto R = refine({}, {});
    if (!R.feasible) return std::nullopt;
    int c = pick_cell_(R);
    if (c < 0) {
      std::vector<int> none;
      return search_(none, none);
    }
    int a = -1;
    std::vector<int> candidates;
    for (int x = 0; x < n_; ++x)
      if (R.colA[x] == c && a < 0) a = x;
    for (int y = 0; y < n_; ++y)
      if (R.colB[y] == c) candidates.push_back(y);
    std::vector<int> label(n_, -1);
    auto orbs = all_orbits(n_, auts);
    for (size_t i = 0; i < orbs.size(); ++i)
      for (int x : orbs[i]) label[x] = static_cast<int>(i);
    std::set<int> seen;
    for (int b : candidates) {
      if (!seen.insert(label[b]).second) continue;
      std::vector<int> fixA{a}, fixB{b};
      if (auto r = search_(fixA, fixB)) return r;
    }
    return std::nullopt;
  }

 private:
  // Smallest non-singleton A-side cell, ties by color id; -1 if discrete.
  int pick_cell_(const RefineResult& R) const {
    std::map<int, int> sizes;
    for (int x = 0; x < n_; ++x) ++sizes[R.colA[x]];
    int best = -1, bestsz = 0;
    for (auto [c, sz] : sizes)
      if (sz > 1 && (best < 0 || sz < bestsz)) {
        best = c;
        bestsz = sz;
      }
    return best;
  }

  bool verify_(const std::vector<int>& img) const {
    Permutation g{img};
    if (!is_valid_permutation(g)) return false;
    for (int x = 0; x < n_; ++x) {
      if (B_.type_of[img[x]] != tm_(A_.type_of[x])) return false;
      std::vector<int> mapped;
      mapped.reserve(A_.adj[x].size());
      for (int u : A_.adj[x]) mapped.push_back(img[u]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != B_.adj[img[x]]) return false;
    }
    return true;
  }

  std::optional<Permutation> search_(std::vector<int>& fixA,
                                     std::vector<int>& fixB) {
    auto R = refine(fixA, fixB);
    if (!R.feasible) return std::nullopt;
    int c = pick_cell_(R);
    if (c < 0) {
      // Discrete: colors pair each source vertex with one target vertex.
      std::vector<int> byColor(2 * n_, -1), img(n_, -1);
      for (int y = 0; y < n_; ++y) byColor[R.colB[y]] = y;
      for (int x = 0; x < n_; ++x) img[x] = byColor[R.colA[x]];
      if (!verify_(img)) return std::nullopt;
      return Permutation{img};
    }
    int a = -1;
    for (int x = 0; x < n_ && a < 0; ++x)
      if (R.colA[x] == c) a = x;
    for (int y = 0; y < n_; ++y) {
      if (R.colB[y] != c) continue;
      fixA.push_back(a);
      fixB.push_back(y);
      auto r = search_(fixA, fixB);
      fixA.pop_back();
      fixB.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  const IncidenceSystem& A_;
  const IncidenceSystem& B_;
  Permutation tm_;
  int n_;
  bool ok_ = false;
};

// One level of the automorphism stabilizer chain: returns |Aut_fix| and
// appends generators of Aut_fix to gens.
inline long long aut_chain_rec_(IsoSearcher& s, const IncidenceSystem& sys,
                                std::vector<int>& fix,
                                std::vector<Permutation>& gens) {
  auto R = s.refine(fix, fix);
  if (!R.feasible)
    throw std::logic_error("automorphism search: self-refinement infeasible");
  std::map<int, int> sizes;
  for (int c : R.colA) ++sizes[c];
  int cell = -1, cellsz = 0;
  for (auto [c, sz] : sizes)
    if (sz > 1 && (cell < 0 || sz < cellsz)) {
      cell = c;
      cellsz = sz;
    }
  if (cell < 0) return 1;  // discrete refinement: trivial stabilizer

  int n = sys.size(), a = -1;
  std::vector<int> candidates;
  for (int x = 0; x < n; ++x)
    if (R.colA[x] == cell && a < 0) a = x;
  for (int y = 0; y < n; ++y)
    if (R.colB[y] == cell) candidates.push_back(y);

  size_t mark = gens.size();
  fix.push_back(a);
  long long deeper = aut_chain_rec_(s, sys, fix, gens);
  fix.pop_back();

  // Grow the orbit of a; every generator found below mark fixes the prefix.
  std::vector<Permutation> mine(gens.begin() + mark, gens.end());
  std::vector<int> orb = orbit(a, mine);
  for (int b : candidates) {
    if (std::binary_search(orb.begin(), orb.end(), b)) continue;
    std::vector<int> fa(fix), fb(fix);
    fa.push_back(a);
    fb.push_back(b);
    if (auto w = s.find(fa, fb)) {
      gens.push_back(*w);
      mine.push_back(*w);
      orb = orbit(a, mine);
    }
  }
  return static_cast<long long>(orb.size()) * deeper;
}

}  // namespace detail

// One isomorphism A -> B with the given action on types, or nullopt after an
// exhaustive search.
inline std::optional<Permutation> find_isomorphism(const IncidenceSystem& A,
                                                   const IncidenceSystem& B,
                                                   const Permutation& type_map) {
  detail::IsoSearcher s(A, B, type_map);
  return s.find({}, {});
}

inline std::optional<Permutation> find_isomorphism(const IncidenceSystem& A,
                                                   const IncidenceSystem& B) {
  if (A.rank() != B.rank()) return std::nullopt;
  return find_isomorphism(A, B, Permutation::identity(A.rank()));
}

struct GroupSearchResult {
  std::vector<Correlation> generators;      // type-preserving gens first
  long long order = 0;                      // full group, certified
  long long aut_order = 0;                  // type-preserving subgroup
  std::vector<std::vector<int>> type_perms; // realized type actions, sorted
};

// Exhaustive automorphism search; with allow_type_perm also every type
// permutation is tried, so absence of a duality or triality among the
// results is a proof.  Throws domain_error above max_elements.
inline GroupSearchResult automorphism_search(const IncidenceSystem& sys,
                                             bool allow_type_perm,
                                             int max_elements = 5000) {
  if (sys.size() > max_elements)
    throw std::domain_error("automorphism_search: system larger than the bound");
  int n = sys.size(), r = sys.rank();

  GroupSearchResult res;
  std::vector<Permutation> auts;
  {
    detail::IsoSearcher self(sys, sys, Permutation::identity(r));
    std::vector<int> fix;
    res.aut_order = detail::aut_chain_rec_(self, sys, fix, auts);
  }
  for (const auto& g : auts) {
    if (!is_automorphism(sys, g))
      throw std::logic_error("automorphism_search: bad generator");
    res.generators.push_back({g, Permutation::identity(r)});
  }
  res.type_perms.push_back(Permutation::identity(r).img);
  res.order = res.aut_order;

  if (allow_type_perm && r >= 2) {
    std::vector<int> sigma(r);
    for (int i = 0; i < r; ++i) sigma[i] = i;
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      detail::IsoSearcher s(sys, sys, Permutation{sigma});
      auto w = s.find_up_to(auts);
      if (!w) continue;
      Correlation c{*w, Permutation{sigma}};
      if (!is_correlation(sys, c))
        throw std::logic_error("automorphism_search: bad correlation");
      res.generators.push_back(std::move(c));
      res.type_perms.push_back(sigma);
    }
    std::sort(res.type_perms.begin(), res.type_perms.end());
    // The realized type actions are the image of a homomorphism to S_r and
    // must form a group.
    for (const auto& x : res.type_perms)
      for (const auto& y : res.type_perms) {
        std::vector<int> xy(r);
        for (int i = 0; i < r; ++i) xy[i] = x[y[i]];
        if (!std::binary_search(res.type_perms.begin(), res.type_perms.end(), xy))
          throw std::logic_error("automorphism_search: type actions not closed");
      }
    res.order = res.aut_order * static_cast<long long>(res.type_perms.size());
  }

  // Recount with a stabilizer chain over all generator permutations.
  std::vector<Permutation> all;
  for (const auto& c : res.generators) all.push_back(c.perm);
  if (StabChain(n, all).order() != res.order)
    throw std::logic_error("automorphism_search: order cross-check failed");
  return res;
}

// True if some realized type action is an odd permutation (a duality for
// rank 2 and 3).
inline bool has_odd_type_action(const GroupSearchResult& g) {
  for (const auto& s : g.type_perms) {
    int trans = 0;
    std::vector<char> seen(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (size_t j = i; !seen[j]; j = s[j]) {
        seen[j] = 1;
        ++len;
      }
      trans += len - 1;
    }
    if (trans % 2 == 1) return true;
  }
  return false;
}

// True if some realized type action has order 3 (a triality).
inline bool has_order3_type_action(const GroupSearchResult& g) {
  for (const auto& s : g.type_perms)
    if (Permutation{s}.order() == 3) return true;
  return false;
}

}  // namespace trigeom
