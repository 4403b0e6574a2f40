#include "slat/semilattice.hpp"

#include <algorithm>

namespace slat {

Semilattice Semilattice::validate(int size, const std::vector<int>& join_table,
                                  int zero, std::vector<int>* relabel) {
  if (size <= 0) throw error("size must be positive");
  if (size > 31) throw error("carrier too large (limit 31)");
  if ((int)join_table.size() != size * size)
    throw error("join table has " + std::to_string(join_table.size()) +
                " entries, expected " + std::to_string(size * size));
  for (int i = 0; i < size * size; ++i)
    if (join_table[i] < 0 || join_table[i] >= size)
      throw error("join table entry out of range at position " +
                  std::to_string(i));
  if (zero < 0 || zero >= size) throw error("zero index out of range");

  auto jt = [&](int a, int b) { return join_table[a * size + b]; };
  for (int a = 0; a < size; ++a)
    if (jt(a, a) != a)
      throw error("not idempotent at " + std::to_string(a));
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (jt(a, b) != jt(b, a))
        throw error("not commutative at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (jt(jt(a, b), c) != jt(a, jt(b, c)))
          throw error("not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < size; ++a)
    if (jt(zero, a) != a)
      throw error("wrong zero: join(" + std::to_string(zero) + "," +
                  std::to_string(a) + ") != " + std::to_string(a));

  // Normalize the zero to index 0, keeping the other elements in input order.
  std::vector<int> perm(size);  // old -> new
  int next = 1;
  for (int i = 0; i < size; ++i) perm[i] = (i == zero) ? 0 : next++;
  if (relabel) *relabel = perm;

  Semilattice s;
  s.size_ = size;
  s.table_.assign(size * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      s.table_[perm[a] * size + perm[b]] = perm[jt(a, b)];

  int top = 0;
  for (int a = 1; a < size; ++a) top = s.table_[top * size + a];
  s.top_ = top;
  return s;
}

Mask down_set(const Semilattice& s, int a) {
  Mask m = 0;
  for (int x = 0; x < s.size(); ++x)
    if (s.leq(x, a)) m |= Mask(1) << x;
  return m;
}

std::vector<Ideal> ideals(const Semilattice& s) {
  std::vector<Mask> masks;
  for (int a = 0; a < s.size(); ++a) masks.push_back(down_set(s, a));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Ideal> out;
  for (Mask m : masks) out.push_back(Ideal{m});
  return out;
}

Semilattice chain_semilattice(int n) {
  std::vector<int> jt(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) jt[a * n + b] = std::max(a, b);
  return Semilattice::validate(n, jt, 0);
}

Semilattice diamond_semilattice() {
  // 0 < 1,2 < 3 with 1 v 2 = 3
  std::vector<int> jt = {0, 1, 2, 3,  //
                         1, 1, 3, 3,  //
                         2, 3, 2, 3,  //
                         3, 3, 3, 3};
  return Semilattice::validate(4, jt, 0);
}

}  // namespace slat
