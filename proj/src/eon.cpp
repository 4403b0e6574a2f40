#include "slat/eon.hpp"

#include <algorithm>
#include <set>

namespace slat {

EonRelation identity_eon(int n) {
  EonRelation r;
  r.n = n;
  r.mat.assign(n * n, 0);
  for (int x = 0; x < n; ++x) r.set(x, x);
  return r;
}

EonRelation order_eon(const Semilattice& s) {
  EonRelation r = identity_eon(s.size());
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.leq(x, y)) r.set(x, y);
  return r;
}

bool eon_leq(const EonRelation& a, const EonRelation& b) {
  for (size_t i = 0; i < a.mat.size(); ++i)
    if (a.mat[i] && !b.mat[i]) return false;
  return true;
}

std::string pairs_string(const EonRelation& r) {
  std::string out;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (x != y && r.at(x, y))
        out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  return out.empty() ? "-" : out;
}

EonRelation eon_close(const Semilattice& s, const OperatorMonoid& m,
                      const std::vector<std::pair<int, int>>& seeds) {
  int n = s.size();
  EonRelation r = identity_eon(n);
  for (auto [a, b] : seeds) {
    if (!s.leq(a, b)) throw error("a is not below b");
    r.set(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int x, int y) {
      if (!r.at(x, y)) {
        r.set(x, y);
        changed = true;
      }
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || !r.at(x, y)) continue;
        for (int t = 0; t < n; ++t) add(s.join(x, t), s.join(y, t));
        for (const Operator& f : m.elements) add(f(x), f(y));
        for (int z = 0; z < n; ++z)
          if (r.at(y, z)) add(x, z);
        for (int z = 0; z < n; ++z)
          if (s.leq(x, z) && s.leq(z, y)) add(x, z);
      }
  }
  return r;
}

EonRelation principal_eon(const Semilattice& s, const OperatorMonoid& m,
                          int a, int b) {
  if (a < 0 || a >= s.size() || b < 0 || b >= s.size())
    throw error("principal eon: index out of range");
  return eon_close(s, m, {{a, b}});
}

bool is_eon(const Semilattice& s, const OperatorMonoid& m,
            const EonRelation& r) {
  int n = s.size();
  if (r.n != n) return false;
  for (int x = 0; x < n; ++x)
    if (!r.at(x, x)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!r.at(x, y)) continue;
      if (!s.leq(x, y)) return false;
      for (int t = 0; t < n; ++t)
        if (!r.at(s.join(x, t), s.join(y, t))) return false;
      for (const Operator& f : m.elements)
        if (!r.at(f(x), f(y))) return false;
      for (int z = 0; z < n; ++z) {
        if (r.at(y, z) && !r.at(x, z)) return false;
        if (s.leq(x, z) && s.leq(z, y) && !r.at(x, z)) return false;
      }
    }
  return true;
}

int EonLattice::index_of(const EonRelation& r) const {
  auto it = std::find(elems.begin(), elems.end(), r);
  return it == elems.end() ? -1 : (int)(it - elems.begin());
}

namespace {

std::vector<std::pair<int, int>> strict_pairs(const Semilattice& s) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.lt(a, b)) out.emplace_back(a, b);
  return out;
}

void sort_eon_elems(std::vector<EonRelation>& elems) {
  auto weight = [](const EonRelation& r) {
    int w = 0;
    for (auto v : r.mat) w += v;
    return w;
  };
  std::sort(elems.begin(), elems.end(),
            [&](const EonRelation& a, const EonRelation& b) {
              int wa = weight(a), wb = weight(b);
              if (wa != wb) return wa < wb;
              return a.mat < b.mat;
            });
}

}  // namespace

EonLattice eon_lattice(const Semilattice& s, const OperatorMonoid& m,
                       int exhaustive_bound) {
  int n = s.size();
  std::vector<EonRelation> elems;
  if (n <= exhaustive_bound) {
    auto pairs = strict_pairs(s);
    if (pairs.size() > 25) throw error("carrier too large for exhaustive mode");
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      EonRelation r = identity_eon(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) r.set(pairs[i].first, pairs[i].second);
      if (is_eon(s, m, r)) elems.push_back(r);
    }
  } else {
    std::set<EonRelation> all;
    all.insert(identity_eon(n));
    std::vector<EonRelation> work;
    for (auto [a, b] : strict_pairs(s)) {
      EonRelation r = principal_eon(s, m, a, b);
      if (all.insert(r).second) work.push_back(r);
    }
    while (!work.empty()) {
      EonRelation r = work.back();
      work.pop_back();
      for (const EonRelation& q :
           std::vector<EonRelation>(all.begin(), all.end())) {
        std::vector<std::pair<int, int>> seeds;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (x != y && (r.at(x, y) || q.at(x, y))) seeds.emplace_back(x, y);
        EonRelation j = eon_close(s, m, seeds);
        if (all.insert(j).second) work.push_back(j);
      }
    }
    elems.assign(all.begin(), all.end());
  }

  sort_eon_elems(elems);
  int k = (int)elems.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i * k + j] = eon_leq(elems[i], elems[j]);
  EonLattice out;
  out.elems = std::move(elems);
  out.order = FiniteLattice::from_leq(k, leq);
  return out;
}

std::vector<int> equational_elements(const Semilattice& s,
                                     const OperatorMonoid& m,
                                     const EonLattice& lat) {
  std::vector<int> out;
  for (const Ideal& ideal : ideals(s)) {
    std::vector<std::pair<int, int>> seeds;
    for (int b = 0; b < s.size(); ++b)
      if (ideal.contains(b)) seeds.emplace_back(0, b);
    EonRelation r = eon_close(s, m, seeds);
    int idx = lat.index_of(r);
    if (idx < 0) throw error("equational element missing from eon lattice");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  // The equational elements contain Δ and the top and are join-closed.
  auto present = [&](int i) {
    return std::binary_search(out.begin(), out.end(), i);
  };
  if (!present(lat.index_of(identity_eon(s.size()))))
    throw error("equational elements missing the bottom");
  if (!present(lat.index_of(order_eon(s))))
    throw error("equational elements missing the top");
  for (int i : out)
    for (int j : out)
      if (!present(lat.order.join(i, j)))
        throw error("equational elements not join-closed");
  return out;
}

bool eon_rule1(const Semilattice& s, int a, int b, int c, int d) {
  return s.leq(c, a) && s.leq(b, s.join(a, d));
}

bool eon_rule2(const Semilattice& s, int a, int b,
               const std::vector<std::pair<int, int>>& family) {
  if (a == b) return true;
  int n = s.size();
  // Chains e_1 < f_1 = e_2 < f_2 = ... < f_k: breadth-first over endpoints,
  // starting from any e_1 <= a.
  std::vector<std::uint8_t> endpoint(n, 0), start(n, 0);
  for (int e = 0; e < n; ++e) start[e] = s.leq(e, a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < n; ++e) {
      if (!start[e] && !endpoint[e]) continue;
      for (int f = 0; f < n; ++f) {
        if (!s.lt(e, f) || endpoint[f]) continue;
        for (auto [c, d] : family)
          if (eon_rule1(s, e, f, c, d)) {
            endpoint[f] = 1;
            changed = true;
            break;
          }
      }
    }
  }
  for (int f = 0; f < n; ++f)
    if (endpoint[f] && s.leq(b, s.join(a, f))) return true;
  return false;
}

EonRuleReport eon_rule_check(const Semilattice& s) {
  EonRuleReport rep;
  OperatorMonoid triv = trivial_monoid(s);
  int n = s.size();

  std::vector<std::pair<int, int>> le_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.leq(a, b)) le_pairs.emplace_back(a, b);

  std::vector<EonRelation> principal(le_pairs.size());
  for (size_t i = 0; i < le_pairs.size(); ++i)
    principal[i] = principal_eon(s, triv, le_pairs[i].first, le_pairs[i].second);

  for (size_t i = 0; i < le_pairs.size(); ++i)
    for (size_t j = 0; j < le_pairs.size(); ++j) {
      auto [a, b] = le_pairs[i];
      auto [c, d] = le_pairs[j];
      bool brute = eon_leq(principal[i], principal[j]);
      bool rule = a == b || eon_rule1(s, a, b, c, d);
      ++rep.rule1_checked;
      if (brute != rule) {
        rep.pass = false;
        rep.rule1_pass = false;
        rep.witness = "rule1 (" + std::to_string(a) + "," + std::to_string(b) +
                      ") vs (" + std::to_string(c) + "," + std::to_string(d) +
                      ")";
        return rep;
      }
    }

  auto strict = strict_pairs(s);
  if (strict.size() > 20) throw error("carrier too large for exhaustive mode");
  for (std::uint32_t mask = 0; mask < (1u << strict.size()); ++mask) {
    std::vector<std::pair<int, int>> family;
    std::vector<std::pair<int, int>> seeds;
    for (size_t i = 0; i < strict.size(); ++i)
      if ((mask >> i) & 1) {
        family.push_back(strict[i]);
        seeds.push_back(strict[i]);
      }
    EonRelation join = eon_close(s, triv, seeds);
    for (auto [a, b] : le_pairs) {
      bool brute = join.at(a, b);
      bool rule = eon_rule2(s, a, b, family);
      ++rep.rule2_checked;
      if (brute != rule) {
        rep.pass = false;
        rep.rule2_pass = false;
        rep.witness = "rule2 (" + std::to_string(a) + "," + std::to_string(b) +
                      ") family mask " + std::to_string(mask);
        return rep;
      }
    }
  }
  return rep;
}

std::vector<int> con_eon_isomorphism(const Semilattice& s,
                                     const OperatorMonoid& m,
                                     const ConLattice& con,
                                     const EonLattice& eon) {
  (void)m;  // the map needs only the order data already inside con and eon
  int n = s.size();
  if (con.elems.size() != eon.elems.size())
    throw error("isomorphism failure: |Con| = " +
                std::to_string(con.elems.size()) +
                " but |Eon| = " + std::to_string(eon.elems.size()));
  std::vector<int> map(con.elems.size());
  std::vector<std::uint8_t> hit(eon.elems.size(), 0);
  for (size_t i = 0; i < con.elems.size(); ++i) {
    EonRelation r = identity_eon(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (con.elems[i].related(x, y) && s.leq(x, y)) r.set(x, y);
    int idx = eon.index_of(r);
    if (idx < 0)
      throw error("isomorphism failure: image of congruence " +
                  blocks_string(con.elems[i]) + " is not an eon relation");
    if (hit[idx])
      throw error("isomorphism failure: map not injective at " +
                  blocks_string(con.elems[i]));
    hit[idx] = 1;
    map[i] = idx;

    // Candidate inverse R -> {(x,y) : x R (x+y) and y R (x+y)}, compared
    // pairwise so a non-equivalence candidate would be caught, not closed
    // over.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int j = s.join(x, y);
        bool back = r.at(x, j) && r.at(y, j);
        if (back != con.elems[i].related(x, y))
          throw error("isomorphism failure: inverse map does not recover " +
                      blocks_string(con.elems[i]) + " at (" +
                      std::to_string(x) + "," + std::to_string(y) + ")");
      }
  }
  // Order preservation in both directions.
  for (size_t i = 0; i < con.elems.size(); ++i)
    for (size_t j = 0; j < con.elems.size(); ++j)
      if (con.order.leq((int)i, (int)j) != eon.order.leq(map[i], map[j]))
        throw error("isomorphism failure: order mismatch between " +
                    blocks_string(con.elems[i]) + " and " +
                    blocks_string(con.elems[j]));
  return map;
}

}  // namespace slat
