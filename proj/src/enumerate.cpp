#include "slat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace slat {

namespace {

// Posets are generated with labels forming a linear extension (i <= j in the
// order implies i <= j as integers), which every finite poset admits, so
// every isomorphism class appears.
std::vector<std::uint8_t> canonical_form(int n,
                                         const std::vector<std::uint8_t>& leq) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    if (perm[0] != 0) continue;  // zero stays at index 0
    std::vector<std::uint8_t> img(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        img[perm[a] * n + perm[b]] = leq[a * n + b];
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Semilattice> all_semilattices(int n) {
  std::vector<Semilattice> out;
  if (n == 1) {
    out.push_back(chain_semilattice(1));
    return out;
  }
  int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::set<std::vector<std::uint8_t>> seen;

  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (int a = 0; a < n; ++a) leq[a * n + a] = 1;
    for (int i = 0; i < bits; ++i)
      if ((mask >> i) & 1) leq[slots[i].first * n + slots[i].second] = 1;
    // 0 must be the least element.
    bool ok = true;
    for (int b = 1; b < n && ok; ++b) ok = leq[0 * n + b];
    if (!ok) continue;
    // Transitivity.
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) ok = false;
    if (!ok) continue;
    // Every pair needs a least upper bound.
    std::vector<int> join_table(n * n, -1);
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        int lub = -1;
        for (int c = 0; c < n; ++c) {
          if (!leq[a * n + c] || !leq[b * n + c]) continue;
          if (lub == -1 || leq[c * n + lub]) lub = c;
        }
        if (lub == -1) {
          ok = false;
          break;
        }
        for (int c = 0; c < n; ++c)
          if (leq[a * n + c] && leq[b * n + c] && !leq[lub * n + c]) {
            ok = false;
            break;
          }
        join_table[a * n + b] = lub;
      }
    if (!ok) continue;
    if (!seen.insert(canonical_form(n, leq)).second) continue;
    out.push_back(Semilattice::validate(n, join_table, 0));
  }
  return out;
}

std::vector<Semilattice> all_semilattices_up_to(int max_n) {
  std::vector<Semilattice> out;
  for (int n = 1; n <= max_n; ++n)
    for (Semilattice& s : all_semilattices(n)) out.push_back(std::move(s));
  return out;
}

Semilattice random_semilattice(Rng& rng, int max_n) {
  static std::vector<Semilattice> pool;  // classes with 2..5 elements
  static int pool_max = 0;
  if (pool_max != max_n) {
    pool.clear();
    for (int n = 2; n <= max_n; ++n)
      for (Semilattice& s : all_semilattices(n)) pool.push_back(std::move(s));
    pool_max = max_n;
  }
  return pool[rng() % pool.size()];
}

Operator random_operator(const Semilattice& s, Rng& rng, int tries) {
  int n = s.size();
  for (int t = 0; t < tries; ++t) {
    Operator f;
    f.images.resize(n);
    f.images[0] = 0;
    for (int x = 1; x < n; ++x) f.images[x] = (int)(rng() % n);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        ok = f.images[s.join(a, b)] == s.join(f.images[a], f.images[b]);
    if (ok) return f;
  }
  return identity_operator(n);
}

OperatorMonoid random_single_generator_monoid(const Semilattice& s, Rng& rng) {
  return monoid_closure(s, {random_operator(s, rng)}, {"f"});
}

OperatorMonoid random_automorphism_group(const Semilattice& s, Rng& rng,
                                         int max_order) {
  std::vector<Operator> candidates;
  for (const Operator& a : automorphisms(s)) {
    Operator power = a;
    int order = 1;
    while (!(power == identity_operator(s.size())) && order <= max_order) {
      power = compose(a, power);
      ++order;
    }
    if (order <= max_order) candidates.push_back(a);
  }
  const Operator& pick = candidates[rng() % candidates.size()];
  return monoid_closure(s, {pick}, {"s"});
}

}  // namespace slat
