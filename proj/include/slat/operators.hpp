#pragma once

#include <string>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

/// A (+,0)-endomorphism of a semilattice, given by its image table.
struct Operator {
  std::vector<int> images;
  int operator()(int x) const { return images[x]; }
  bool operator==(const Operator&) const = default;
  auto operator<=>(const Operator&) const = default;
};

/// Throws slat::error naming the violated condition if `f` is not an
/// operator on `s`.
void check_operator(const Semilattice& s, const Operator& f,
                    const std::string& name = "op");

/// (h o g)(x) = h(g(x)); this composition convention is used everywhere.
Operator compose(const Operator& h, const Operator& g);

Operator identity_operator(int size);

struct MonoidFlags {
  bool reductive = false;
  bool right_cancellative = false;
  bool is_group = false;
  bool fixes_top = false;
};

/// Finite composition-closed set of operators containing the identity.
/// Element 0 is the identity; composites discovered during closure keep a
/// deterministic order and get names derived from the generator names.
struct OperatorMonoid {
  std::vector<Operator> elements;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[i][j] = index of i o j
  MonoidFlags flags;

  int size() const { return (int)elements.size(); }
  int identity() const { return 0; }
  /// Index of elements[i] o elements[j] (apply j first).
  int compose_index(int i, int j) const { return table[i][j]; }
  int apply(int f, int x) const { return elements[f].images[x]; }
};

/// Smallest composition-closed monoid containing the identity and the
/// generators.  `names` may name the generators (defaults g0, g1, ...).
/// Throws "closure bound exceeded" if more than `bound` elements appear, or
/// "generator not an operator: ..." for an invalid generator.
OperatorMonoid monoid_closure(const Semilattice& s,
                              const std::vector<Operator>& generators,
                              std::vector<std::string> names = {},
                              int bound = 10000);

/// Exhaustively checked property flags.
///   reductive:          for all f,g some h has f = h o g or g = h o f.
///   right_cancellative: g o f = h o f implies g = h.
///   is_group:           every element has a two-sided inverse.
///   fixes_top:          f(top) = top for all f.
MonoidFlags monoid_properties(const Semilattice& s, const OperatorMonoid& m);

OperatorMonoid trivial_monoid(const Semilattice& s);

/// All join-preserving bijections of s (they fix 0 and top automatically).
std::vector<Operator> automorphisms(const Semilattice& s);

}  // namespace slat
