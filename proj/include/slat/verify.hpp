#pragma once

#include <string>
#include <vector>

#include "slat/congruence.hpp"
#include "slat/eon.hpp"
#include "slat/kcongruence.hpp"
#include "slat/presentation.hpp"

namespace slat {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass,
           const std::string& witness = "") {
    checks.push_back({name, pass, witness});
  }
  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Pipeline for the combined presentation: free structure, congruence
/// enumeration, the congruence/ideal correspondence, the action of the
/// induced operators, and the final lattice isomorphism
/// Con(T,v,0,E) = Con(S,+,0,M).
Report verify_combined(const Semilattice& s, const OperatorMonoid& m);

/// Pipeline for the second representation: Con(T,v,0,E) computed from the
/// two-element free structure is isomorphic to the eon lattice of S.
Report verify_second(const Semilattice& s);

/// |Eon| = |Con| and theta -> theta ∩ <= is an order isomorphism.
Report verify_lemma1(const Semilattice& s, const OperatorMonoid& m);

/// Principal-eon ordering and join rules against brute force; the monoid
/// must be trivial.
Report verify_eon_rules(const Semilattice& s, const OperatorMonoid& m);

/// On the combined pipeline: induced(theta) v upsilon = theta v upsilon for
/// every congruence and endomorphism, and upsilon is the join of the
/// induced images of con(x,w).
Report pseudo_lemma_check(const Semilattice& s, const OperatorMonoid& m);

/// Each law reduces to one-variable laws with the same models among
/// structures of carrier size <= model_bound satisfying the context laws.
Report verify_reduce(const Presentation& ctx,
                     const std::vector<QuasiIdentity>& laws,
                     int model_bound = 4);

/// Every congruence's top block satisfies (*) and the congruences sharing
/// that block are exactly the interval [phi, psi].
Report verify_star_filters(const Semilattice& s, const OperatorMonoid& m);

}  // namespace slat
