#pragma once
// Typed incidence systems: flags, residues, connectivity, firmness, rank-2
// parameters and diagrams.
//
// An incidence system holds elements with dense integer ids, a type per
// element and a symmetric incidence relation between elements of distinct
// types.  Self-incidence is implicit and never stored, so the stored relation
// is exactly the cross-type incidence graph used by every query below.

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigeom {

// Sentinel for the gonality of a forest (no circuit).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

using Flag = std::vector<int>;  // sorted element ids, pairwise incident

struct IncidenceSystem {
  std::vector<std::string> types;
  std::vector<int> type_of;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int rank() const { return static_cast<int>(types.size()); }
  int size() const { return static_cast<int>(type_of.size()); }

  int add_type(const std::string& name) {
    types.push_back(name);
    return rank() - 1;
  }

  int add_element(int type, std::string label) {
    if (type < 0 || type >= rank()) throw std::invalid_argument("bad type index");
    type_of.push_back(type);
    labels.push_back(std::move(label));
    adj.emplace_back();
    return size() - 1;
  }

  // Raw symmetric insert; validity (cross-type rule) is checked by validate()
  // so tests can inject broken relations.
  void add_incidence(int a, int b) {
    if (a < 0 || b < 0 || a >= size() || b >= size() || a == b)
      throw std::invalid_argument("bad incidence pair");
    auto ins = [](std::vector<int>& v, int x) {
      auto it = std::lower_bound(v.begin(), v.end(), x);
      if (it == v.end() || *it != x) v.insert(it, x);
    };
    ins(adj[a], b);
    ins(adj[b], a);
  }

  bool incident(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }

  std::vector<long long> type_counts() const {
    std::vector<long long> n(rank(), 0);
    for (int t : type_of) ++n[t];
    return n;
  }

  std::vector<int> type_class(int t) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
      if (type_of[x] == t) out.push_back(x);
    return out;
  }
};

inline std::vector<int> sorted_intersection(const std::vector<int>& a,
                                            const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate(const IncidenceSystem& sys) {
  std::vector<std::string> bad;
  std::vector<long long> counts = sys.type_counts();
  for (int t = 0; t < sys.rank(); ++t)
    if (counts[t] == 0)
      bad.push_back("type class '" + sys.types[t] + "' is empty");
  for (int a = 0; a < sys.size(); ++a) {
    for (int b : sys.adj[a]) {
      if (sys.type_of[a] == sys.type_of[b] && a < b)
        bad.push_back("same-type incidence between " + std::to_string(a) +
                      " and " + std::to_string(b));
      if (!sys.incident(b, a))
        bad.push_back("asymmetric incidence " + std::to_string(a) + " -> " +
                      std::to_string(b));
    }
  }
  return bad;
}

inline bool is_flag(const IncidenceSystem& sys, const Flag& f) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= sys.size()) return false;
    for (size_t j = i + 1; j < f.size(); ++j) {
      if (sys.type_of[f[i]] == sys.type_of[f[j]]) return false;
      if (!sys.incident(f[i], f[j])) return false;
    }
  }
  return std::is_sorted(f.begin(), f.end()) &&
         std::adjacent_find(f.begin(), f.end()) == f.end();
}

// ---------------------------------------------------------------------------
// Maximal flags and chambers

namespace detail {

// Bron-Kerbosch with pivoting on the cross-type incidence graph.  Visitor
// gets each maximal clique (sorted); returning false aborts the enumeration.
template <typename Visitor>
bool bron_kerbosch(const IncidenceSystem& sys, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X, Visitor&& visit) {
  if (P.empty() && X.empty()) {
    std::vector<int> clique = R;
    std::sort(clique.begin(), clique.end());
    return visit(clique);
  }
  int pivot = -1;
  size_t best = 0;
  for (const std::vector<int>* side : {&P, &X})
    for (int u : *side) {
      size_t d = sorted_intersection(P, sys.adj[u]).size();
      if (pivot == -1 || d > best) { pivot = u; best = d; }
    }
  // Branch over P minus the pivot's neighborhood; the pivot itself stays in.
  std::vector<int> branch;
  for (int v : P)
    if (!sys.incident(pivot, v)) branch.push_back(v);
  for (int v : branch) {
    R.push_back(v);
    if (!bron_kerbosch(sys, R, sorted_intersection(P, sys.adj[v]),
                       sorted_intersection(X, sys.adj[v]), visit))
      return false;
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    auto it = std::lower_bound(X.begin(), X.end(), v);
    X.insert(it, v);
  }
  return true;
}

}  // namespace detail

template <typename Visitor>
bool for_each_maximal_flag(const IncidenceSystem& sys, Visitor&& visit) {
  std::vector<int> R, P(sys.size()), X;
  for (int i = 0; i < sys.size(); ++i) P[i] = i;
  return detail::bron_kerbosch(sys, R, std::move(P), std::move(X), visit);
}

inline std::vector<Flag> maximal_flags(const IncidenceSystem& sys) {
  std::vector<Flag> out;
  for_each_maximal_flag(sys, [&](const Flag& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Chambers enumerated directly by extending one type at a time.
inline std::vector<Flag> chambers(const IncidenceSystem& sys) {
  std::vector<Flag> out;
  int r = sys.rank();
  if (r == 0) return out;
  std::vector<std::vector<int>> classes(r);
  for (int x = 0; x < sys.size(); ++x) classes[sys.type_of[x]].push_back(x);
  // Extend in ascending class-size order; restores id order per chamber later.
  std::vector<int> order(r);
  for (int t = 0; t < r; ++t) order[t] = t;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return classes[a].size() < classes[b].size(); });
  std::vector<int> current;
  auto rec = [&](auto&& self, int level, std::vector<std::vector<int>> cand) -> void {
    if (level == r) {
      Flag f = current;
      std::sort(f.begin(), f.end());
      out.push_back(std::move(f));
      return;
    }
    int t = order[level];
    std::vector<int> choices = std::move(cand[t]);
    for (int v : choices) {
      std::vector<std::vector<int>> next(cand);
      bool dead = false;
      for (int later = level + 1; later < r && !dead; ++later) {
        int u = order[later];
        next[u] = sorted_intersection(next[u], sys.adj[v]);
        if (next[u].empty()) dead = true;
      }
      if (dead) continue;
      current.push_back(v);
      self(self, level + 1, std::move(next));
      current.pop_back();
    }
  };
  rec(rec, 0, classes);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_geometry(const IncidenceSystem& sys) {
  int r = sys.rank();
  if (r <= 1) return true;
  if (r <= 3) {
    // A maximal flag of deficient size exists iff some element is isolated
    // (maximal singleton) or, at rank 3, some incident pair has no common
    // neighbor (maximal pair).  Cheaper than clique enumeration.
    for (int v = 0; v < sys.size(); ++v)
      if (sys.adj[v].empty()) return false;
    if (r == 3) {
      for (int a = 0; a < sys.size(); ++a)
        for (int b : sys.adj[a]) {
          if (b <= a) continue;
          if (sorted_intersection(sys.adj[a], sys.adj[b]).empty()) return false;
        }
    }
    return true;
  }
  bool ok = true;
  for_each_maximal_flag(sys, [&](const Flag& f) {
    if (static_cast<int>(f.size()) != r) { ok = false; return false; }
    return true;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Residues

inline IncidenceSystem residue(const IncidenceSystem& sys, const Flag& f,
                               std::vector<int>* orig_ids = nullptr) {
  if (!is_flag(sys, f)) throw std::invalid_argument("residue: not a flag");
  std::vector<bool> flag_type(sys.rank(), false);
  for (int x : f) flag_type[sys.type_of[x]] = true;
  IncidenceSystem res;
  std::vector<int> new_type(sys.rank(), -1);
  for (int t = 0; t < sys.rank(); ++t)
    if (!flag_type[t]) new_type[t] = res.add_type(sys.types[t]);
  std::vector<int> keep;
  for (int x = 0; x < sys.size(); ++x) {
    if (flag_type[sys.type_of[x]]) continue;
    bool all = true;
    for (int y : f)
      if (!sys.incident(x, y)) { all = false; break; }
    if (all) keep.push_back(x);
  }
  std::vector<int> new_id(sys.size(), -1);
  for (int x : keep)
    new_id[x] = res.add_element(new_type[sys.type_of[x]], sys.labels[x]);
  for (int x : keep)
    for (int y : sys.adj[x])
      if (new_id[y] >= 0 && x < y) res.add_incidence(new_id[x], new_id[y]);
  if (orig_ids) *orig_ids = keep;
  return res;
}

// ---------------------------------------------------------------------------
// Flag enumeration by size

// Visits every flag of exactly the given size (sorted ids), in lexicographic
// order.  Size 0 visits the empty flag once.
template <typename Visitor>
void for_each_flag_of_size(const IncidenceSystem& sys, int target,
                           Visitor&& visit) {
  Flag current;
  std::vector<bool> type_used(sys.rank(), false);
  auto rec = [&](auto&& self, int min_id) -> void {
    if (static_cast<int>(current.size()) == target) {
      visit(const_cast<const Flag&>(current));
      return;
    }
    int remaining = target - static_cast<int>(current.size());
    for (int v = min_id; v + remaining <= sys.size(); ++v) {
      if (type_used[sys.type_of[v]]) continue;
      bool ok = true;
      for (int u : current)
        if (!sys.incident(u, v)) { ok = false; break; }
      if (!ok) continue;
      current.push_back(v);
      type_used[sys.type_of[v]] = true;
      self(self, v + 1);
      type_used[sys.type_of[v]] = false;
      current.pop_back();
    }
  };
  rec(rec, 0);
}

// Number of chambers containing the given flag.
inline long long chamber_extension_count(const IncidenceSystem& sys,
                                         const Flag& f) {
  std::vector<bool> type_used(sys.rank(), false);
  for (int x : f) type_used[sys.type_of[x]] = true;
  std::vector<int> missing;
  for (int t = 0; t < sys.rank(); ++t)
    if (!type_used[t]) missing.push_back(t);
  // Candidates per missing type: elements incident to the whole flag.
  std::vector<std::vector<int>> cand(missing.size());
  for (size_t m = 0; m < missing.size(); ++m) {
    for (int x = 0; x < sys.size(); ++x) {
      if (sys.type_of[x] != missing[m]) continue;
      bool all = true;
      for (int y : f)
        if (!sys.incident(x, y)) { all = false; break; }
      if (all) cand[m].push_back(x);
    }
  }
  long long count = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t level) -> void {
    if (level == missing.size()) { ++count; return; }
    for (int v : cand[level]) {
      bool ok = true;
      for (int u : pick)
        if (!sys.incident(u, v)) { ok = false; break; }
      if (!ok) continue;
      pick.push_back(v);
      self(self, level + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Firmness

enum class Firmness { not_firm, firm, thin, thick, firm_mixed };

inline const char* to_string(Firmness f) {
  switch (f) {
    case Firmness::not_firm: return "not_firm";
    case Firmness::firm: return "firm";
    case Firmness::thin: return "thin";
    case Firmness::thick: return "thick";
    case Firmness::firm_mixed: return "firm_mixed";
  }
  return "?";
}

inline bool is_firm(Firmness f) { return f != Firmness::not_firm; }

// Classification via co-rank-1 flags: every flag's chamber count factors
// through the counts of the co-rank-1 flags above it, so checking those is
// enough for the firm/thin/thick split.
inline Firmness firmness(const IncidenceSystem& sys) {
  if (!is_geometry(sys)) throw std::domain_error("firmness: not a geometry");
  int r = sys.rank();
  if (r == 0) return Firmness::thin;
  long long lo = std::numeric_limits<long long>::max(), hi = 0;
  if (r == 2) {
    // Co-rank-1 flags are the singletons; the count is the degree.
    for (int x = 0; x < sys.size(); ++x) {
      long long c = static_cast<long long>(sys.adj[x].size());
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  } else if (r == 3) {
    // Co-rank-1 flags are the incident pairs; the count is the number of
    // common neighbors (automatically of the missing type).
    for (int a = 0; a < sys.size(); ++a)
      for (int b : sys.adj[a]) {
        if (b <= a) continue;
        long long c =
            static_cast<long long>(sorted_intersection(sys.adj[a], sys.adj[b]).size());
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
  } else {
    for_each_flag_of_size(sys, r - 1, [&](const Flag& f) {
      long long c = chamber_extension_count(sys, f);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    });
  }
  if (hi == 0) return Firmness::not_firm;  // no co-rank-1 flags at all
  if (lo < 2) return Firmness::not_firm;
  if (hi == 2) return Firmness::thin;
  if (lo >= 3) return Firmness::thick;
  return Firmness::firm_mixed;
}

// ---------------------------------------------------------------------------
// Connectivity

inline std::pair<std::vector<int>, int> connected_components(
    const IncidenceSystem& sys) {
  std::vector<int> comp(sys.size(), -1);
  int count = 0;
  for (int s = 0; s < sys.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : sys.adj[u])
        if (comp[v] < 0) { comp[v] = count; q.push(v); }
    }
    ++count;
  }
  return {comp, count};
}

inline bool is_connected(const IncidenceSystem& sys) {
  return sys.size() == 0 || connected_components(sys).second == 1;
}

inline bool is_residually_connected(const IncidenceSystem& sys) {
  if (!is_geometry(sys)) throw std::domain_error("rc: not a geometry");
  int r = sys.rank();
  bool ok = true;
  for (int s = 0; s <= r - 2 && ok; ++s) {
    for_each_flag_of_size(sys, s, [&](const Flag& f) {
      if (!ok) return;
      if (s == 0) {
        if (!is_connected(sys)) ok = false;
      } else {
        if (!is_connected(residue(sys, f))) ok = false;
      }
    });
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Rank-2 parameters (diameters from each side, gonality)

struct Rank2Parameters {
  int d_point = 0;   // max distance from a first-type element to anything
  int gonality = 0;  // girth / 2, kInfinity for forests
  int d_line = 0;

  bool operator==(const Rank2Parameters& o) const {
    return d_point == o.d_point && gonality == o.gonality && d_line == o.d_line;
  }
};

inline Rank2Parameters rank2_parameters(const IncidenceSystem& sys) {
  if (sys.rank() != 2)
    throw std::domain_error("rank2_parameters: system is not rank 2");
  if (sys.size() == 0 || !is_connected(sys))
    throw std::domain_error("rank2_parameters: disconnected system");
  int n = sys.size();
  Rank2Parameters out;
  int girth = kInfinity;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[r] = 0;
    std::queue<int> q;
    q.push(r);
    int ecc = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : sys.adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          ecc = std::max(ecc, dist[v]);
          q.push(v);
        } else if (v != parent[u]) {
          girth = std::min(girth, dist[u] + dist[v] + 1);
        }
      }
    }
    if (sys.type_of[r] == 0) out.d_point = std::max(out.d_point, ecc);
    else out.d_line = std::max(out.d_line, ecc);
  }
  if (girth == kInfinity) {
    out.gonality = kInfinity;
  } else {
    if (girth % 2 != 0)
      throw std::logic_error("rank2_parameters: odd circuit in a bipartite graph");
    out.gonality = girth / 2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Buekenhout diagram

struct DiagramPair {
  bool uniform = true;
  bool disconnected = false;
  Rank2Parameters params{};
};

struct Diagram {
  std::vector<std::string> types;
  std::vector<long long> n;              // elements per type
  std::vector<long long> s;              // -1 marks a nonuniform type
  std::map<std::pair<int, int>, DiagramPair> pairs;  // keyed (i, j), i < j
};

inline Diagram diagram(const IncidenceSystem& sys) {
  if (!is_geometry(sys)) throw std::domain_error("diagram: not a geometry");
  int r = sys.rank();
  Diagram d;
  d.types = sys.types;
  d.n = sys.type_counts();
  d.s.assign(r, -1);

  // s_i from co-rank-1 flags, bucketed by their missing type.
  std::vector<long long> value(r, -2);  // -2 unseen, -1 nonuniform
  for_each_flag_of_size(sys, r - 1, [&](const Flag& f) {
    std::vector<bool> used(r, false);
    for (int x : f) used[sys.type_of[x]] = true;
    int missing = 0;
    for (int t = 0; t < r; ++t)
      if (!used[t]) missing = t;
    long long c = chamber_extension_count(sys, f);
    if (value[missing] == -2) value[missing] = c;
    else if (value[missing] != c) value[missing] = -1;
  });
  for (int t = 0; t < r; ++t) d.s[t] = value[t] >= 0 ? value[t] - 1 : -1;

  // Rank-2 residues per unordered type pair.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      DiagramPair dp;
      bool first = true;
      for_each_flag_of_size(sys, r - 2, [&](const Flag& f) {
        std::vector<bool> used(r, false);
        for (int x : f) used[sys.type_of[x]] = true;
        if (used[i] || used[j]) return;
        IncidenceSystem res = (r == 2) ? sys : residue(sys, f);
        Rank2Parameters p;
        try {
          p = rank2_parameters(res);
        } catch (const std::domain_error&) {
          dp.disconnected = true;
          return;
        }
        if (first) { dp.params = p; first = false; }
        else if (!(dp.params == p)) dp.uniform = false;
      });
      d.pairs[{i, j}] = dp;
    }
  return d;
}

}  // namespace trigeom
