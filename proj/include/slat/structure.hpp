#pragma once

#include <string>
#include <vector>

#include "slat/presentation.hpp"

namespace slat {

/// Finite structure for a presentation's signature: unary operation table
/// per function symbol, one element per constant, extension bitmask per
/// predicate symbol.
struct FiniteStructure {
  int size = 0;
  std::vector<std::vector<int>> ops;
  std::vector<int> consts;
  std::vector<Mask> preds;
  std::vector<std::string> labels;  // optional, for reports

  std::string label(int x) const {
    return x < (int)labels.size() ? labels[x] : std::to_string(x);
  }
  bool operator==(const FiniteStructure&) const = default;
};

int eval_term(const FiniteStructure& a, const Term& t,
              const std::vector<int>& assignment);

bool atom_holds(const FiniteStructure& a, const Atom& atom,
                const std::vector<int>& assignment);

/// True iff every assignment making all premises true makes the conclusion
/// true.  Throws "uninterpreted symbol" if the law uses symbols the
/// structure lacks.
bool satisfies(const FiniteStructure& a, const QuasiIdentity& q,
               std::string* witness = nullptr);

/// First violated law rendered through `p`, or empty if a models all laws.
std::string first_violated_law(const FiniteStructure& a,
                               const Presentation& p);

/// Free structure on one generator for the combined presentation: carrier
/// {f(x) : f in M} + {w}, operations acting through the opposite monoid,
/// predicates holding exactly where the premise-free laws force them.
FiniteStructure free_structure(const Semilattice& s, const OperatorMonoid& m,
                               const Presentation& ctx);

/// Free structure on one generator for the second representation: carrier
/// {x, e} with every predicate holding only at e (degenerating to {e} for
/// the one-element semilattice, where x = e is a law).
FiniteStructure free_structure_second(const Semilattice& s,
                                      const Presentation& ctx);

/// All endomorphisms (operation-, constant- and predicate-preserving
/// self-maps), each as an image vector.
std::vector<std::vector<int>> endomorphisms(const FiniteStructure& a);

/// Endomorphisms of a free structure, verified to be exactly the constant
/// map to w plus one map per monoid element; throws "unexpected
/// endomorphism" when the enumerated set differs.  Returned in monoid
/// order with the constant map last; `names` receives matching labels.
std::vector<std::vector<int>> free_endomorphisms(
    const FiniteStructure& f, const OperatorMonoid& m,
    std::vector<std::string>* names = nullptr);

/// All models of the context laws with carrier size <= max_size, in
/// deterministic enumeration order.
std::vector<FiniteStructure> enumerate_models(const Presentation& ctx,
                                              int max_size);

}  // namespace slat
