#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace slat {

/// Finite lattice given by its order matrix, with join/meet tables derived
/// on construction.
class FiniteLattice {
 public:
  FiniteLattice() = default;  // empty placeholder; fill via from_leq

  /// Validates that leq is a partial order in which every pair has a least
  /// upper bound and a greatest lower bound; throws slat::error otherwise.
  static FiniteLattice from_leq(int size, const std::vector<std::uint8_t>& leq);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool covers(int a, int b) const;  // b covers a

  FiniteLattice dual() const;

  /// Cover pairs (lower, upper), lexicographically sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  int n_ = 0;
  int bottom_ = 0, top_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> join_, meet_;
};

struct LatticeProperties {
  bool sd_meet = false;
  bool sd_join = false;
  bool atomistic = false;
  bool coatomistic = false;
  bool lower_bounded = false;
  bool upper_bounded = false;
};

/// Exhaustive property checks.  Boundedness uses the join-dependency
/// D-relation cycle criterion on join-irreducibles (a finite lattice is
/// lower bounded iff its D-relation has no cycle; upper bounded is the dual
/// test).
LatticeProperties lattice_properties(const FiniteLattice& l);

/// The lattice of convex subsets of an n-element chain, ordered by
/// inclusion.
FiniteLattice convex_subsets_lattice(int n);

/// Linear sum: new bottom element below every element of l.
FiniteLattice with_new_bottom(const FiniteLattice& l);

/// Order dual of (new bottom + Co(4)): 12 elements.
FiniteLattice dual_leaf();

/// Order isomorphism l1 -> l2 if one exists (backtracking on order
/// invariants).
std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& l1,
                                                    const FiniteLattice& l2);

bool lattices_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2);

}  // namespace slat
