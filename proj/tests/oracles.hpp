// Independent brute-force oracles used by the tests: partition and relation
// scans that never touch the principal-generation or closure code paths.
#pragma once

#include <vector>

#include "slat/congruence.hpp"
#include "slat/eon.hpp"

namespace oracle {

// All partitions of {0..n-1} as least-representative vectors.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rep(n, 0);
  // rep[i] is the least element of i's block; walk assignments recursively.
  struct Rec {
    int n;
    std::vector<int>& rep;
    std::vector<std::vector<int>>& out;
    void go(int i) {
      if (i == n) {
        out.push_back(rep);
        return;
      }
      for (int r = 0; r < i; ++r)
        if (rep[r] == r) {
          rep[i] = r;
          go(i + 1);
        }
      rep[i] = i;
      go(i + 1);
    }
  } rec{n, rep, out};
  rec.go(0);
  return out;
}

// Every compatible partition, by direct filtering.
inline std::vector<slat::Congruence> congruences(const slat::Semilattice& s,
                                                 const slat::OperatorMonoid& m) {
  std::vector<slat::Congruence> out;
  for (const auto& rep : partitions(s.size())) {
    slat::Congruence c{rep};
    bool ok = true;
    for (int x = 0; x < s.size() && ok; ++x)
      for (int y = x + 1; y < s.size() && ok; ++y) {
        if (!c.related(x, y)) continue;
        for (int t = 0; t < s.size() && ok; ++t)
          ok = c.related(s.join(x, t), s.join(y, t));
        for (const slat::Operator& f : m.elements)
          if (ok) ok = c.related(f(x), f(y));
      }
    if (ok) out.push_back(c);
  }
  return out;
}

// Every relation satisfying the four eon conditions, by scanning subsets of
// the strict order pairs.
inline std::vector<slat::EonRelation> eons(const slat::Semilattice& s,
                                           const slat::OperatorMonoid& m) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.lt(a, b)) pairs.emplace_back(a, b);
  std::vector<slat::EonRelation> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    slat::EonRelation r = slat::identity_eon(s.size());
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) r.set(pairs[i].first, pairs[i].second);
    bool ok = true;
    for (int x = 0; x < s.size() && ok; ++x)
      for (int y = 0; y < s.size() && ok; ++y) {
        if (!r.at(x, y)) continue;
        if (!s.leq(x, y)) ok = false;
        for (int t = 0; t < s.size() && ok; ++t)
          ok = r.at(s.join(x, t), s.join(y, t));
        for (const slat::Operator& f : m.elements)
          if (ok) ok = r.at(f(x), f(y));
        for (int z = 0; z < s.size() && ok; ++z) {
          if (r.at(y, z)) ok = r.at(x, z);
          if (ok && s.leq(x, z) && s.leq(z, y)) ok = r.at(x, z);
        }
      }
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace oracle
