#pragma once

#include <string>
#include <vector>

#include "slat/lattice.hpp"
#include "slat/operators.hpp"
#include "slat/structure.hpp"

namespace slat {

/// Congruence pair <theta0, theta1> of a finite structure: an equivalence
/// compatible with the operations, plus a per-predicate extension containing
/// the structure's own and closed under theta0.
struct StructureCongruence {
  std::vector<int> rep;     // theta0 by least representative
  std::vector<Mask> preds;  // theta1 per predicate symbol

  bool related(int a, int b) const { return rep[a] == rep[b]; }
  bool operator==(const StructureCongruence&) const = default;
  auto operator<=>(const StructureCongruence&) const = default;
};

/// Componentwise order.
bool kcong_leq(const StructureCongruence& a, const StructureCongruence& b);

/// All K-congruences of a finite structure (every one is compact), ordered
/// componentwise; joins are least upper bounds in the enumerated set.
struct CompactConSemilattice {
  FiniteStructure base;
  Presentation laws;
  std::vector<StructureCongruence> elems;  // sorted, elems[0] is the zero
  FiniteLattice order;

  int index_of(const StructureCongruence& c) const;
  int least_containing_pair(int a, int b) const;
  int least_containing_atom(int pred, int elem) const;
  int join2(int i, int j) const { return order.join(i, j); }

  /// Join of a set of elements (empty join = zero).
  int join_all(const std::vector<int>& xs) const;

  /// The semilattice (T, v, 0) of the enumerated congruences.
  Semilattice to_semilattice() const;
};

/// Enumerates the pairs <theta0, theta1> whose quotient satisfies every law.
/// Throws naming the violated law if even the one-element quotient fails.
CompactConSemilattice k_congruences(const FiniteStructure& a,
                                    const Presentation& laws);

/// Operator induced on T by an endomorphism of the base structure: maps
/// each congruence, presented by its canonical generators, to the join of
/// the congruences generated by the images.  Well-definedness is checked by
/// recomputing from the full generator set, and the result is verified to
/// preserve joins and zero.
Operator induced_operator(const CompactConSemilattice& t,
                          const std::vector<int>& endo);

/// Least congruence whose equivalence part is universal; throws
/// "one-element quotient violates law ..." when absent.
int upsilon(const CompactConSemilattice& t);

/// The induced-operator monoid on T for a set of endomorphisms.
OperatorMonoid induced_monoid(const CompactConSemilattice& t,
                              const std::vector<std::vector<int>>& endos,
                              const std::vector<std::string>& names);

}  // namespace slat
