#include "slat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slat/semilattice.hpp"

namespace slat {

FiniteLattice FiniteLattice::from_leq(int size,
                                      const std::vector<std::uint8_t>& leq) {
  if (size <= 0) throw error("lattice size must be positive");
  if ((int)leq.size() != size * size) throw error("order matrix size mismatch");
  auto at = [&](int a, int b) { return leq[a * size + b] != 0; };
  for (int a = 0; a < size; ++a)
    if (!at(a, a)) throw error("order not reflexive at " + std::to_string(a));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a != b && at(a, b) && at(b, a))
        throw error("order not antisymmetric at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      for (int c = 0; c < size; ++c)
        if (at(a, b) && at(b, c) && !at(a, c))
          throw error("order not transitive at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
    }

  FiniteLattice l;
  l.n_ = size;
  l.leq_ = leq;
  l.join_.assign(size * size, -1);
  l.meet_.assign(size * size, -1);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < size; ++c) {
        if (at(a, c) && at(b, c) && (lub == -1 || at(c, lub))) lub = c;
        if (at(c, a) && at(c, b) && (glb == -1 || at(glb, c))) glb = c;
      }
      // The candidates above are minimal/maximal only if comparable to every
      // other bound; verify.
      if (lub == -1) throw error("no upper bound for a pair");
      if (glb == -1) throw error("no lower bound for a pair");
      for (int c = 0; c < size; ++c) {
        if (at(a, c) && at(b, c) && !at(lub, c))
          throw error("no least upper bound for (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
        if (at(c, a) && at(c, b) && !at(c, glb))
          throw error("no greatest lower bound for (" + std::to_string(a) +
                      "," + std::to_string(b) + ")");
      }
      l.join_[a * size + b] = lub;
      l.meet_[a * size + b] = glb;
    }
  l.bottom_ = 0;
  l.top_ = 0;
  for (int a = 0; a < size; ++a) {
    l.bottom_ = l.meet_[l.bottom_ * size + a];
    l.top_ = l.join_[l.top_ * size + a];
  }
  return l;
}

bool FiniteLattice::covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  for (int c = 0; c < n_; ++c)
    if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
  return true;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<std::uint8_t> d(n_ * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) d[a * n_ + b] = leq_[b * n_ + a];
  return from_leq(n_, d);
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> join_irreducibles(const FiniteLattice& l) {
  std::vector<int> out;
  for (int p = 0; p < l.size(); ++p) {
    if (p == l.bottom()) continue;
    int lower_covers = 0;
    for (int q = 0; q < l.size(); ++q)
      if (l.covers(q, p)) ++lower_covers;
    if (lower_covers == 1) out.push_back(p);
  }
  return out;
}

// Minimal nontrivial join covers of p among antichains of join-irreducibles:
// A covers p (p <= vA), p is below no member, and every join cover refining
// A contains A.
std::vector<std::vector<int>> minimal_join_covers(const FiniteLattice& l,
                                                  int p,
                                                  const std::vector<int>& ji) {
  int k = (int)ji.size();
  std::vector<std::vector<int>> covers;
  std::vector<std::vector<int>> all_covers;  // all antichain join covers
  for (std::uint32_t m = 1; m < (1u << k); ++m) {
    std::vector<int> a;
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1) a.push_back(ji[i]);
    bool antichain = true;
    for (size_t i = 0; i < a.size() && antichain; ++i)
      for (size_t j = 0; j < a.size() && antichain; ++j)
        if (i != j && l.leq(a[i], a[j])) antichain = false;
    if (!antichain) continue;
    bool nontrivial = true;
    int jn = l.bottom();
    for (int x : a) {
      jn = l.join(jn, x);
      if (l.leq(p, x)) nontrivial = false;
    }
    if (!l.leq(p, jn) || !nontrivial) continue;
    all_covers.push_back(a);
  }
  auto refines = [&](const std::vector<int>& b, const std::vector<int>& a) {
    for (int x : b) {
      bool below = false;
      for (int y : a)
        if (l.leq(x, y)) {
          below = true;
          break;
        }
      if (!below) return false;
    }
    return true;
  };
  for (const auto& a : all_covers) {
    bool minimal = true;
    for (const auto& b : all_covers) {
      if (!refines(b, a)) continue;
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) covers.push_back(a);
  }
  return covers;
}

bool d_relation_acyclic(const FiniteLattice& l) {
  std::vector<int> ji = join_irreducibles(l);
  int k = (int)ji.size();
  std::vector<std::vector<std::uint8_t>> d(k, std::vector<std::uint8_t>(k, 0));
  for (int i = 0; i < k; ++i)
    for (const auto& cover : minimal_join_covers(l, ji[i], ji))
      for (int q : cover)
        d[i][std::find(ji.begin(), ji.end(), q) - ji.begin()] = 1;
  // Cycle check by DFS colors.
  std::vector<int> color(k, 0);
  std::vector<int> stack;
  for (int s = 0; s < k; ++s) {
    if (color[s]) continue;
    stack.push_back(s);
    std::vector<int> iter(k, 0);
    while (!stack.empty()) {
      int v = stack.back();
      if (color[v] == 0) color[v] = 1;
      bool advanced = false;
      for (int& w = iter[v]; w < k; ++w) {
        if (!d[v][w]) continue;
        if (color[w] == 1) return false;  // back edge
        if (color[w] == 0) {
          stack.push_back(w);
          ++w;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

LatticeProperties lattice_properties(const FiniteLattice& l) {
  LatticeProperties p;
  int n = l.size();

  p.sd_meet = true;
  p.sd_join = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, y) == l.meet(x, z) &&
            l.meet(x, y) != l.meet(x, l.join(y, z)))
          p.sd_meet = false;
        if (l.join(x, y) == l.join(x, z) &&
            l.join(x, y) != l.join(x, l.meet(y, z)))
          p.sd_join = false;
      }

  std::vector<int> atoms, coatoms;
  for (int a = 0; a < n; ++a) {
    if (l.covers(l.bottom(), a)) atoms.push_back(a);
    if (l.covers(a, l.top())) coatoms.push_back(a);
  }
  p.atomistic = true;
  p.coatomistic = true;
  for (int x = 0; x < n; ++x) {
    int ja = l.bottom();
    for (int a : atoms)
      if (l.leq(a, x)) ja = l.join(ja, a);
    if (ja != x) p.atomistic = false;
    int mc = l.top();
    for (int c : coatoms)
      if (l.leq(x, c)) mc = l.meet(mc, c);
    if (mc != x) p.coatomistic = false;
  }

  p.lower_bounded = d_relation_acyclic(l);
  p.upper_bounded = d_relation_acyclic(l.dual());
  return p;
}

FiniteLattice convex_subsets_lattice(int n) {
  // Convex subsets of the chain 1..n: the empty set plus the intervals.
  std::vector<std::uint32_t> sets;
  sets.push_back(0);
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi) {
      std::uint32_t s = 0;
      for (int i = lo; i <= hi; ++i) s |= 1u << i;
      sets.push_back(s);
    }
  std::sort(sets.begin(), sets.end());
  int k = (int)sets.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      leq[a * k + b] = (sets[a] & ~sets[b]) == 0;
  return FiniteLattice::from_leq(k, leq);
}

FiniteLattice with_new_bottom(const FiniteLattice& l) {
  int n = l.size() + 1;
  std::vector<std::uint8_t> leq(n * n, 0);
  leq[0 * n + 0] = 1;
  for (int a = 0; a < l.size(); ++a) {
    leq[0 * n + (a + 1)] = 1;
    for (int b = 0; b < l.size(); ++b)
      leq[(a + 1) * n + (b + 1)] = l.leq(a, b);
  }
  return FiniteLattice::from_leq(n, leq);
}

FiniteLattice dual_leaf() {
  return with_new_bottom(convex_subsets_lattice(4)).dual();
}

namespace {

// Order invariant used to cut the isomorphism search.
std::vector<long> invariants(const FiniteLattice& l) {
  std::vector<long> inv(l.size());
  for (int a = 0; a < l.size(); ++a) {
    long down = 0, up = 0, cu = 0, cd = 0;
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(b, a)) ++down;
      if (l.leq(a, b)) ++up;
      if (l.covers(a, b)) ++cu;
      if (l.covers(b, a)) ++cd;
    }
    inv[a] = ((down * 64 + up) * 64 + cu) * 64 + cd;
  }
  return inv;
}

bool extend_iso(const FiniteLattice& l1, const FiniteLattice& l2,
                const std::vector<long>& i1, const std::vector<long>& i2,
                std::vector<int>& map, std::vector<std::uint8_t>& used,
                int next) {
  if (next == l1.size()) return true;
  for (int img = 0; img < l2.size(); ++img) {
    if (used[img] || i1[next] != i2[img]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = (l1.leq(prev, next) == l2.leq(map[prev], img)) &&
           (l1.leq(next, prev) == l2.leq(img, map[prev]));
    if (!ok) continue;
    map[next] = img;
    used[img] = 1;
    if (extend_iso(l1, l2, i1, i2, map, used, next + 1)) return true;
    used[img] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& l1,
                                                    const FiniteLattice& l2) {
  if (l1.size() != l2.size()) return std::nullopt;
  std::vector<long> i1 = invariants(l1), i2 = invariants(l2);
  std::vector<long> s1 = i1, s2 = i2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  std::vector<int> map(l1.size(), -1);
  std::vector<std::uint8_t> used(l1.size(), 0);
  if (extend_iso(l1, l2, i1, i2, map, used, 0)) return map;
  return std::nullopt;
}

bool lattices_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2) {
  return lattice_isomorphism(l1, l2).has_value();
}

}  // namespace slat
