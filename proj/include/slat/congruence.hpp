#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slat/lattice.hpp"
#include "slat/operators.hpp"

namespace slat {

/// Congruence of (S,+,0,M): an equivalence relation compatible with the join
/// translations x -> x+s and every operator, stored as the map from each
/// index to the least index of its block.
struct Congruence {
  std::vector<int> rep;
  bool related(int a, int b) const { return rep[a] == rep[b]; }
  int size() const { return (int)rep.size(); }
  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

Congruence identity_congruence(int n);   // Δ
Congruence universal_congruence(int n);  // ∇

/// Refinement order: every block of a is contained in a block of b.
bool congruence_leq(const Congruence& a, const Congruence& b);

/// Renders blocks as "0|1.2|3" (blocks sorted by least element).
std::string blocks_string(const Congruence& c);

/// Normalizes an arbitrary block-representative map to canonical form.
Congruence canonical_congruence(std::vector<int> rep);

/// Least congruence relating every listed pair: fixpoint closure under
/// symmetry, transitivity, x -> x+s and all f in M.
Congruence congruence_from_pairs(const Semilattice& s, const OperatorMonoid& m,
                                 const std::vector<std::pair<int, int>>& pairs);

/// Least congruence relating a and b.
Congruence principal_congruence(const Semilattice& s, const OperatorMonoid& m,
                                int a, int b);

/// Join = transitive closure of the union, re-closed under compatibility.
Congruence congruence_join(const Semilattice& s, const OperatorMonoid& m,
                           const Congruence& a, const Congruence& b);

bool is_congruence(const Semilattice& s, const OperatorMonoid& m,
                   const Congruence& c);

/// All congruences with their refinement order: {Δ} plus the join-closure of
/// the principal congruences.  Elements are sorted canonically (coarseness,
/// then representative vector), so elems.front() is Δ and elems.back() is ∇.
struct ConLattice {
  std::vector<Congruence> elems;
  FiniteLattice order;

  int index_of(const Congruence& c) const;
};

ConLattice congruence_lattice(const Semilattice& s, const OperatorMonoid& m);

}  // namespace slat
