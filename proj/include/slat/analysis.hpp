#pragma once

#include <string>
#include <vector>

#include "slat/congruence.hpp"

namespace slat {

struct PseudopropWitness {
  int s = 0;
  int f = 0;   // operator index in M
  int j = 0;   // equalizing join of orbit elements
};

struct PseudopropReport {
  bool success = false;
  int k = -1;  // least witness element
  std::vector<PseudopropWitness> witnesses;
  std::string note;
};

/// Searches for the least k such that for every s and f some join j of
/// orbit elements g(k) satisfies f(s)+j = s+j.  Every finite semilattice
/// admits k = top (id is in M, so top is in the orbit and f(s)+top = top =
/// s+top); the report's note records that failures require an infinite
/// carrier.
PseudopropReport pseudoprop_check(const Semilattice& s,
                                  const OperatorMonoid& m);

struct CofinalReport {
  std::vector<int> cofinal_witnesses;  // all u with {f(u)} cofinal in S
  bool top_congruence_compact = true;  // finite carrier: always true
  std::string note;
};

/// For each u checks whether the orbit {f(u) : f in M} is cofinal in S.
CofinalReport cofinal_compact_check(const Semilattice& s,
                                    const OperatorMonoid& m);

/// Order filter (up-set containing top) intended to satisfy condition (*):
/// f(a)+s in F implies f(b)+s in F for all f in M, a,b in F, s in S.
struct StarFilter {
  Mask members = 0;
  bool contains(int x) const { return (members >> x) & 1; }
};

/// Throws "not an order filter" / "condition (*) fails at (f,a,b,s)" if
/// invalid.
void check_star_filter(const Semilattice& s, const OperatorMonoid& m,
                       const StarFilter& f);

struct StarFilterInterval {
  Congruence phi;                // least congruence with top block >= F
  Congruence psi;                // largest congruence with top block F
  std::vector<int> members;      // indices into `con` with 1/θ = F
  bool members_match_interval = false;
};

/// φ(F) is generated by the pairs (f(a)+s, f(b)+s) over f in M, a,b in F,
/// s in S; ψ(F) relates x,y iff f(x)+s in F <-> f(y)+s in F for all f,s.
/// ψ is verified to be a congruence (throws otherwise), and the returned
/// members are checked against the interval [φ,ψ].
StarFilterInterval star_filter_interval(const Semilattice& s,
                                        const OperatorMonoid& m,
                                        const StarFilter& f,
                                        const ConLattice& con);

/// Block of the top element as a filter.
StarFilter top_block_filter(const Semilattice& s, const Congruence& c);

}  // namespace slat
