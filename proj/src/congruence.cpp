#include "slat/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace slat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least index as root
    parent[b] = a;
    return true;
  }
};

Congruence canonical_from_uf(UnionFind& uf) {
  int n = (int)uf.parent.size();
  Congruence c;
  c.rep.resize(n);
  for (int x = 0; x < n; ++x) c.rep[x] = uf.find(x);
  return c;
}

}  // namespace

Congruence identity_congruence(int n) {
  Congruence c;
  c.rep.resize(n);
  std::iota(c.rep.begin(), c.rep.end(), 0);
  return c;
}

Congruence universal_congruence(int n) {
  Congruence c;
  c.rep.assign(n, 0);
  return c;
}

bool congruence_leq(const Congruence& a, const Congruence& b) {
  for (int x = 0; x < a.size(); ++x)
    if (b.rep[x] != b.rep[a.rep[x]]) return false;
  return true;
}

std::string blocks_string(const Congruence& c) {
  std::string out;
  for (int r = 0; r < c.size(); ++r) {
    if (c.rep[r] != r) continue;
    if (!out.empty()) out += '|';
    bool first = true;
    for (int x = 0; x < c.size(); ++x)
      if (c.rep[x] == r) {
        if (!first) out += '.';
        out += std::to_string(x);
        first = false;
      }
  }
  return out;
}

Congruence canonical_congruence(std::vector<int> rep) {
  UnionFind uf((int)rep.size());
  for (int x = 0; x < (int)rep.size(); ++x) uf.unite(x, rep[x]);
  return canonical_from_uf(uf);
}

Congruence congruence_from_pairs(
    const Semilattice& s, const OperatorMonoid& m,
    const std::vector<std::pair<int, int>>& pairs) {
  int n = s.size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  // Fixpoint closure under translations and operators; transitivity and
  // symmetry are built into the union-find.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int t = 0; t < n; ++t)
          if (uf.unite(s.join(x, t), s.join(y, t))) changed = true;
        for (const Operator& f : m.elements)
          if (uf.unite(f(x), f(y))) changed = true;
      }
  }
  return canonical_from_uf(uf);
}

Congruence principal_congruence(const Semilattice& s, const OperatorMonoid& m,
                                int a, int b) {
  if (a < 0 || a >= s.size() || b < 0 || b >= s.size())
    throw error("principal congruence: index out of range");
  return congruence_from_pairs(s, m, {{a, b}});
}

Congruence congruence_join(const Semilattice& s, const OperatorMonoid& m,
                           const Congruence& a, const Congruence& b) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < s.size(); ++x) {
    pairs.emplace_back(x, a.rep[x]);
    pairs.emplace_back(x, b.rep[x]);
  }
  return congruence_from_pairs(s, m, pairs);
}

bool is_congruence(const Semilattice& s, const OperatorMonoid& m,
                   const Congruence& c) {
  if (c.size() != s.size()) return false;
  for (int x = 0; x < s.size(); ++x) {
    int r = c.rep[x];
    if (r < 0 || r > x || c.rep[r] != r) return false;
  }
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y) {
      if (!c.related(x, y)) continue;
      for (int t = 0; t < s.size(); ++t)
        if (!c.related(s.join(x, t), s.join(y, t))) return false;
      for (const Operator& f : m.elements)
        if (!c.related(f(x), f(y))) return false;
    }
  return true;
}

int ConLattice::index_of(const Congruence& c) const {
  auto it = std::find(elems.begin(), elems.end(), c);
  return it == elems.end() ? -1 : (int)(it - elems.begin());
}

ConLattice congruence_lattice(const Semilattice& s, const OperatorMonoid& m) {
  int n = s.size();
  std::set<Congruence> all;
  all.insert(identity_congruence(n));
  std::vector<Congruence> work;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Congruence c = principal_congruence(s, m, a, b);
      if (all.insert(c).second) work.push_back(c);
    }
  // Close under pairwise joins.
  while (!work.empty()) {
    Congruence c = work.back();
    work.pop_back();
    for (const Congruence& d : std::vector<Congruence>(all.begin(), all.end())) {
      Congruence j = congruence_join(s, m, c, d);
      if (all.insert(j).second) work.push_back(j);
    }
  }

  ConLattice out;
  out.elems.assign(all.begin(), all.end());
  std::sort(out.elems.begin(), out.elems.end(),
            [n](const Congruence& a, const Congruence& b) {
              int ba = 0, bb = 0;
              for (int x = 0; x < n; ++x) {
                ba += a.rep[x] == x;
                bb += b.rep[x] == x;
              }
              if (ba != bb) return ba > bb;  // finer first
              return a.rep < b.rep;
            });
  int k = (int)out.elems.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[i * k + j] = congruence_leq(out.elems[i], out.elems[j]);
  out.order = FiniteLattice::from_leq(k, leq);
  return out;
}

}  // namespace slat
