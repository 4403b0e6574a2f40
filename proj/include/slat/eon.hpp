#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slat/congruence.hpp"

namespace slat {

/// Reflexive transitive compatible relation contained in <= and satisfying
/// the interval condition (x <= y <= z and x R z imply x R y).
struct EonRelation {
  int n = 0;
  std::vector<std::uint8_t> mat;  // row-major n*n

  bool at(int x, int y) const { return mat[x * n + y] != 0; }
  void set(int x, int y) { mat[x * n + y] = 1; }
  bool operator==(const EonRelation&) const = default;
  auto operator<=>(const EonRelation&) const = default;
};

EonRelation identity_eon(int n);                 // Δ
EonRelation order_eon(const Semilattice& s);     // <= itself, the top

/// Inclusion order.
bool eon_leq(const EonRelation& a, const EonRelation& b);

/// Strict pairs as "(0,1)(1,2)", or "-" when the relation is Δ.
std::string pairs_string(const EonRelation& r);

/// Least eon relation containing the seed pairs (each must satisfy a <= b):
/// fixpoint closure under translations, operators, transitivity and the
/// interval condition.
EonRelation eon_close(const Semilattice& s, const OperatorMonoid& m,
                      const std::vector<std::pair<int, int>>& seeds);

/// Principal eon relation <a,b>; throws "a is not below b" unless a <= b.
EonRelation principal_eon(const Semilattice& s, const OperatorMonoid& m,
                          int a, int b);

bool is_eon(const Semilattice& s, const OperatorMonoid& m,
            const EonRelation& r);

struct EonLattice {
  std::vector<EonRelation> elems;  // sorted: fewer strict pairs first
  FiniteLattice order;

  int index_of(const EonRelation& r) const;
};

/// All eon relations ordered by inclusion.  For size() <= exhaustive_bound
/// the relation space is scanned directly; larger carriers use the
/// join-closure of the principal eon relations (complete, since every eon
/// relation of a finite algebra is a finite join of principal ones).
EonLattice eon_lattice(const Semilattice& s, const OperatorMonoid& m,
                       int exhaustive_bound = 6);

/// Indices into `lat` of the equational elements, i.e. the joins
/// of <0,b> over b in an ideal, one per ideal.  Verifies that the set
/// contains Δ and the top and is join-closed; throws on failure.
std::vector<int> equational_elements(const Semilattice& s,
                                     const OperatorMonoid& m,
                                     const EonLattice& lat);

/// Ordering rule for principal eon relations in the operator-free setting:
/// <a,b> <= <c,d> iff a >= c and a v d >= b.
bool eon_rule1(const Semilattice& s, int a, int b, int c, int d);

/// Join rule: <a,b> <= v_j <c_j,d_j> iff a = b or some increasing chain
/// e_1 < f_1 = e_2 < ... < f_k has a >= e_1, every step below some
/// <c_j,d_j> by rule 1, and a v f_k >= b.
bool eon_rule2(const Semilattice& s, int a, int b,
               const std::vector<std::pair<int, int>>& family);

struct EonRuleReport {
  bool pass = true;
  bool rule1_pass = true;
  bool rule2_pass = true;
  std::string witness;  // first counterexample, if any
  long rule1_checked = 0;
  long rule2_checked = 0;
};

/// Compares both rules against brute-force containment over all pairs and
/// all families of strict pairs.  Only meaningful for the operator-free
/// setting; callers must pass the trivial monoid.
EonRuleReport eon_rule_check(const Semilattice& s);

/// Verified order isomorphism Con -> Eon given by θ -> θ ∩ <=, with the
/// candidate inverse R -> {(x,y) : x R (x+y) and y R (x+y)} checked to
/// invert it.  Throws slat::error with a witness on any failure.
std::vector<int> con_eon_isomorphism(const Semilattice& s,
                                     const OperatorMonoid& m,
                                     const ConLattice& con,
                                     const EonLattice& eon);

}  // namespace slat
