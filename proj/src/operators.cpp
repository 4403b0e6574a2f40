#include "slat/operators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace slat {

void check_operator(const Semilattice& s, const Operator& f,
                    const std::string& name) {
  if ((int)f.images.size() != s.size())
    throw error("generator not an operator: " + name + " has " +
                std::to_string(f.images.size()) + " images, expected " +
                std::to_string(s.size()));
  for (int x : f.images)
    if (x < 0 || x >= s.size())
      throw error("generator not an operator: " + name +
                  " image out of range");
  if (f.images[s.zero()] != s.zero())
    throw error("generator not an operator: " + name + " does not fix zero");
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      if (f.images[s.join(a, b)] != s.join(f.images[a], f.images[b]))
        throw error("generator not an operator: " + name +
                    " not join-preserving at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
}

Operator compose(const Operator& h, const Operator& g) {
  Operator r;
  r.images.resize(g.images.size());
  for (size_t x = 0; x < g.images.size(); ++x)
    r.images[x] = h.images[g.images[x]];
  return r;
}

Operator identity_operator(int size) {
  Operator f;
  f.images.resize(size);
  std::iota(f.images.begin(), f.images.end(), 0);
  return f;
}

OperatorMonoid monoid_closure(const Semilattice& s,
                              const std::vector<Operator>& generators,
                              std::vector<std::string> names, int bound) {
  while (names.size() < generators.size())
    names.push_back("g" + std::to_string(names.size()));
  for (size_t i = 0; i < generators.size(); ++i)
    check_operator(s, generators[i], names[i]);

  OperatorMonoid m;
  std::map<Operator, int> index;
  auto add = [&](const Operator& f, const std::string& name) {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    if ((int)m.elements.size() >= bound) throw error("closure bound exceeded");
    index[f] = (int)m.elements.size();
    m.elements.push_back(f);
    m.names.push_back(name);
    return (int)m.elements.size() - 1;
  };

  add(identity_operator(s.size()), "id");
  for (size_t i = 0; i < generators.size(); ++i) add(generators[i], names[i]);

  // Close under composition; new elements are named by application order,
  // inner factor first.
  for (size_t i = 0; i < m.elements.size(); ++i)
    for (size_t j = 0; j < m.elements.size(); ++j) {
      Operator c = compose(m.elements[i], m.elements[j]);
      add(c, m.names[j] + "_" + m.names[i]);
    }

  m.table.assign(m.size(), std::vector<int>(m.size(), 0));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      m.table[i][j] = index.at(compose(m.elements[i], m.elements[j]));
  m.flags = monoid_properties(s, m);
  return m;
}

MonoidFlags monoid_properties(const Semilattice& s, const OperatorMonoid& m) {
  MonoidFlags r;
  int n = m.size();

  r.reductive = true;
  for (int f = 0; f < n && r.reductive; ++f)
    for (int g = 0; g < n && r.reductive; ++g) {
      bool found = false;
      for (int h = 0; h < n && !found; ++h)
        found = m.table[h][g] == f || m.table[h][f] == g;
      r.reductive = found;
    }

  r.right_cancellative = true;
  for (int f = 0; f < n && r.right_cancellative; ++f)
    for (int g = 0; g < n && r.right_cancellative; ++g)
      for (int h = g + 1; h < n; ++h)
        if (m.table[g][f] == m.table[h][f]) {
          r.right_cancellative = false;
          break;
        }

  r.is_group = true;
  for (int f = 0; f < n && r.is_group; ++f) {
    bool inv = false;
    for (int g = 0; g < n && !inv; ++g)
      inv = m.table[f][g] == m.identity() && m.table[g][f] == m.identity();
    r.is_group = inv;
  }

  r.fixes_top = true;
  for (int f = 0; f < n; ++f)
    if (m.elements[f].images[s.top()] != s.top()) {
      r.fixes_top = false;
      break;
    }
  return r;
}

OperatorMonoid trivial_monoid(const Semilattice& s) {
  return monoid_closure(s, {});
}

std::vector<Operator> automorphisms(const Semilattice& s) {
  int n = s.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Operator> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = perm[s.join(a, b)] == s.join(perm[a], perm[b]);
    if (ok) out.push_back(Operator{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace slat
