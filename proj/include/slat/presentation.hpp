#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slat/operators.hpp"

namespace slat {

/// Variables are indices 0,1,2 rendered x,y,z.
constexpr int kMaxVars = 3;

/// Unary-application term over a variable or constant leaf.  `apps` lists
/// function symbols innermost first, so f(g(x)) has apps {g,f}.
struct Term {
  int var = -1;
  int constant = -1;
  std::vector<int> apps;

  bool is_var() const { return var >= 0; }
  bool is_const() const { return constant >= 0; }
  static Term make_var(int v);
  static Term make_const(int c);
  Term applied(int fun) const;

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

/// Predicate application or equation.
struct Atom {
  bool is_equation = false;
  int pred = -1;  // predicate symbol when !is_equation
  Term lhs, rhs;  // equation: both sides; predicate: lhs is the argument

  static Atom predicate(int pred, Term arg);
  static Atom equation(Term a, Term b);

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;
};

struct QuasiIdentity {
  std::vector<Atom> premises;
  Atom conclusion;
  bool operator==(const QuasiIdentity&) const = default;
  auto operator<=>(const QuasiIdentity&) const = default;
};

enum class Style { first, second, combined, fixture };

/// Links the function symbols of a presentation to a finite monoid so that
/// nested applications normalize through the composition table.  The
/// identity element has no symbol: identity applications render as the bare
/// argument.
struct MonoidLink {
  std::vector<std::vector<int>> table;  // table[i][j] = i o j (apply j first)
  int identity = 0;
  std::vector<int> fun_elem;  // function symbol -> monoid element
  std::vector<int> elem_fun;  // monoid element -> function symbol, -1 for id

  int compose(int i, int j) const { return table[i][j]; }
  int size() const { return (int)table.size(); }
};

/// A quasivariety axiom set over unary predicates, unary function symbols
/// and at most one constant.
struct Presentation {
  Style style = Style::fixture;
  std::vector<std::string> preds;
  std::vector<std::string> funs;
  std::vector<std::string> consts;
  std::vector<QuasiIdentity> laws;
  std::vector<std::string> comments;   // emitted verbatim before declarations
  std::optional<MonoidLink> monoid;    // set for first/second/combined styles
  std::vector<int> pred_elem;          // predicate -> semilattice element

  int pred_index(const std::string& name) const;
  int fun_index(const std::string& name) const;
  int const_index(const std::string& name) const;
};

/// Quasivariety presentation of the congruence lattice of an operator-free
/// semilattice: the collapse law x = y, an order law per comparable pair of
/// nonzero elements, and a join law per irredundant antichain cover.
Presentation present_first(const Semilattice& s);

/// Variant with a constant e, facts A(e), and the top law E(x) -> x = e.
Presentation present_second(const Semilattice& s);

/// Presentation for a semilattice with a reductive, right cancellative,
/// top-fixing operator monoid; throws "monoid lacks required property: ..."
/// otherwise.  Function symbols compose through the opposite monoid, i.e.
/// f(g(x)) = h(x) where h = g o f.
Presentation present_combined(const Semilattice& s, const OperatorMonoid& m);

/// Same law generator without the admissibility check (the free-structure
/// construction is total even when the monoid lacks the flags).
Presentation combined_laws_unchecked(const Semilattice& s,
                                     const OperatorMonoid& m);

/// Fixed fixture: predicates A,B,C,D, functions f,g, constant e, the eleven
/// displayed law schemata with the two k-indexed families truncated at
/// `k_bound`.
Presentation present_dual_near_leaf(int k_bound = 4);

/// Collapses nested applications via the monoid link; terms over the
/// constant collapse to the constant.
Term normalize_term(const Presentation& ctx, const Term& t);

/// Rewrites a quasi-identity into an equivalent set of quasi-identities in
/// at most one variable each (context style must be second or combined).
/// Trivially-true laws are dropped, so the result may be empty.
std::vector<QuasiIdentity> reduce_to_one_variable(const QuasiIdentity& q,
                                                  const Presentation& ctx);

std::string render_term(const Presentation& p, const Term& t);
std::string render_atom(const Presentation& p, const Atom& a);
std::string render_law(const Presentation& p, const QuasiIdentity& q);

/// Canonical text form: comments, declarations, one law per line.
std::string render(const Presentation& p);

/// Parses the canonical text form; throws slat::error with line and column
/// on malformed input.  The result carries no style tag or monoid link.
Presentation parse_presentation(const std::string& text);

/// Number of distinct variables appearing in a law.
int variable_count(const QuasiIdentity& q);

}  // namespace slat
