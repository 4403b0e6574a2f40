#include "slat/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>

namespace slat {

Term Term::make_var(int v) {
  Term t;
  t.var = v;
  return t;
}

Term Term::make_const(int c) {
  Term t;
  t.constant = c;
  return t;
}

Term Term::applied(int fun) const {
  Term t = *this;
  t.apps.push_back(fun);
  return t;
}

Atom Atom::predicate(int pred, Term arg) {
  Atom a;
  a.pred = pred;
  a.lhs = std::move(arg);
  return a;
}

Atom Atom::equation(Term x, Term y) {
  Atom a;
  a.is_equation = true;
  a.lhs = std::move(x);
  a.rhs = std::move(y);
  return a;
}

namespace {

int find_name(const std::vector<std::string>& v, const std::string& name) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return (int)i;
  return -1;
}

}  // namespace

int Presentation::pred_index(const std::string& name) const {
  return find_name(preds, name);
}
int Presentation::fun_index(const std::string& name) const {
  return find_name(funs, name);
}
int Presentation::const_index(const std::string& name) const {
  return find_name(consts, name);
}

namespace {

// Subsets of the nonzero elements that are antichains covering t (join >= t)
// with no proper subset covering t, listed as ascending element vectors.
std::vector<std::vector<int>> irredundant_covers(const Semilattice& s, int t,
                                                 size_t min_size) {
  std::vector<std::vector<int>> out;
  int n = s.size();
  for (Mask mask = 0; mask < (Mask(1) << (n - 1)); ++mask) {
    std::vector<int> c;
    for (int e = 1; e < n; ++e)
      if ((mask >> (e - 1)) & 1) c.push_back(e);
    if (c.size() < min_size) continue;
    bool antichain = true;
    for (size_t i = 0; i < c.size() && antichain; ++i)
      for (size_t j = 0; j < c.size() && antichain; ++j)
        if (i != j && s.leq(c[i], c[j])) antichain = false;
    if (!antichain) continue;
    int jn = 0;
    for (int e : c) jn = s.join(jn, e);
    if (!s.leq(t, jn)) continue;
    bool irredundant = true;
    for (size_t drop = 0; drop < c.size() && irredundant; ++drop) {
      int sub = 0;
      for (size_t i = 0; i < c.size(); ++i)
        if (i != drop) sub = s.join(sub, c[i]);
      if (s.leq(t, sub)) irredundant = false;
    }
    if (irredundant) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Predicate names: P_i by canonical element index, with the top aliased.
void name_predicates(const Semilattice& s, Presentation& p,
                     const std::string& top_alias) {
  for (int e = 1; e < s.size(); ++e) {
    p.preds.push_back(e == s.top() ? top_alias : "P_" + std::to_string(e));
    p.pred_elem.push_back(e);
  }
}

struct LawSink {
  Presentation* p;
  std::set<QuasiIdentity> seen;
  void add(QuasiIdentity q) {
    std::sort(q.premises.begin(), q.premises.end());
    q.premises.erase(std::unique(q.premises.begin(), q.premises.end()),
                     q.premises.end());
    for (const Atom& a : q.premises)
      if (a == q.conclusion) return;  // tautology
    if (seen.insert(q).second) p->laws.push_back(std::move(q));
  }
};

// Order and join laws shared by the first and second representations:
// A(x) -> B(x) for a > b, and a join law per irredundant cover of size >= 2.
void emit_order_join_laws(const Semilattice& s, Presentation& p,
                          LawSink& sink) {
  auto pred_of = [&](int elem) {
    for (size_t k = 0; k < p.pred_elem.size(); ++k)
      if (p.pred_elem[k] == elem) return (int)k;
    throw error("internal: no predicate for element");
  };
  Term x = Term::make_var(0);
  for (int a = 1; a < s.size(); ++a)
    for (int b = 1; b < s.size(); ++b) {
      if (a == b || !s.leq(b, a)) continue;
      QuasiIdentity q;
      q.premises.push_back(Atom::predicate(pred_of(a), x));
      q.conclusion = Atom::predicate(pred_of(b), x);
      sink.add(q);
    }
  for (int b = 1; b < s.size(); ++b)
    for (const auto& cover : irredundant_covers(s, b, 2)) {
      QuasiIdentity q;
      for (int c : cover) q.premises.push_back(Atom::predicate(pred_of(c), x));
      q.conclusion = Atom::predicate(pred_of(b), x);
      sink.add(q);
    }
}

MonoidLink trivial_link() {
  MonoidLink link;
  link.table = {{0}};
  link.identity = 0;
  link.elem_fun = {-1};
  return link;
}

}  // namespace

Presentation present_first(const Semilattice& s) {
  Presentation p;
  p.style = Style::first;
  p.monoid = trivial_link();
  QuasiIdentity collapse;
  collapse.conclusion =
      Atom::equation(Term::make_var(0), Term::make_var(1));
  p.laws.push_back(collapse);
  if (s.size() == 1) return p;
  name_predicates(s, p, "U");
  LawSink sink{&p, {}};
  emit_order_join_laws(s, p, sink);
  return p;
}

Presentation present_second(const Semilattice& s) {
  Presentation p;
  p.style = Style::second;
  p.monoid = trivial_link();
  p.consts.push_back("e");
  Term x = Term::make_var(0);
  Term e = Term::make_const(0);
  if (s.size() == 1) {
    QuasiIdentity q;
    q.conclusion = Atom::equation(x, e);
    p.laws.push_back(q);
    return p;
  }
  name_predicates(s, p, "E");
  LawSink sink{&p, {}};
  for (size_t k = 0; k < p.preds.size(); ++k) {
    QuasiIdentity q;
    q.conclusion = Atom::predicate((int)k, e);
    sink.add(q);
  }
  {
    QuasiIdentity q;
    int top_pred = p.pred_index("E");
    q.premises.push_back(Atom::predicate(top_pred, x));
    q.conclusion = Atom::equation(x, e);
    sink.add(q);
  }
  emit_order_join_laws(s, p, sink);
  return p;
}

Presentation combined_laws_unchecked(const Semilattice& s,
                                     const OperatorMonoid& m) {
  Presentation p;
  p.style = Style::combined;
  p.consts.push_back("w");
  name_predicates(s, p, "U");

  MonoidLink link;
  link.table = m.table;
  link.identity = m.identity();
  link.elem_fun.assign(m.size(), -1);
  for (int j = 0; j < m.size(); ++j) {
    if (j == m.identity()) continue;
    link.elem_fun[j] = (int)p.funs.size();
    link.fun_elem.push_back(j);
    p.funs.push_back(m.names[j]);
  }
  p.monoid = link;

  auto elem_term = [&](int var, int elem) {
    Term t = Term::make_var(var);
    return elem == m.identity() ? t : t.applied(link.elem_fun[elem]);
  };
  auto pred_of = [&](int e) {
    for (size_t k = 0; k < p.pred_elem.size(); ++k)
      if (p.pred_elem[k] == e) return (int)k;
    throw error("internal: no predicate for element");
  };
  Term x = Term::make_var(0);
  Term y = Term::make_var(1);
  Term w = Term::make_const(0);
  LawSink sink{&p, {}};

  // (5) f(w) = w
  for (int f = 0; f < m.size(); ++f) {
    if (f == m.identity()) continue;
    QuasiIdentity q;
    q.conclusion = Atom::equation(w.applied(link.elem_fun[f]), w);
    sink.add(q);
  }
  // (6) f(g(x)) = h(x) for h = g o f    (opposite-monoid action)
  for (int f = 0; f < m.size(); ++f)
    for (int g = 0; g < m.size(); ++g) {
      if (f == m.identity() || g == m.identity()) continue;
      int h = m.compose_index(g, f);
      QuasiIdentity q;
      q.conclusion = Atom::equation(
          x.applied(link.elem_fun[g]).applied(link.elem_fun[f]),
          elem_term(0, h));
      sink.add(q);
    }
  // (7) f(x) = f(y) -> x = y
  for (int f = 0; f < m.size(); ++f) {
    if (f == m.identity()) continue;
    QuasiIdentity q;
    q.premises.push_back(Atom::equation(x.applied(link.elem_fun[f]),
                                        y.applied(link.elem_fun[f])));
    q.conclusion = Atom::equation(x, y);
    sink.add(q);
  }
  // (8) f(x) = g(x) -> x = w for f != g
  for (int f = 0; f < m.size(); ++f)
    for (int g = f + 1; g < m.size(); ++g) {
      QuasiIdentity q;
      q.premises.push_back(Atom::equation(elem_term(0, f), elem_term(0, g)));
      q.conclusion = Atom::equation(x, w);
      sink.add(q);
    }
  // (9) U(x) -> x = w
  {
    QuasiIdentity q;
    q.premises.push_back(Atom::predicate(pred_of(s.top()), x));
    q.conclusion = Atom::equation(x, w);
    sink.add(q);
  }
  // (10) A(f(x)) whenever a != 0 and f(a) = 0
  for (int a = 1; a < s.size(); ++a)
    for (int f = 0; f < m.size(); ++f)
      if (m.apply(f, a) == 0) {
        QuasiIdentity q;
        q.conclusion = Atom::predicate(pred_of(a), elem_term(0, f));
        sink.add(q);
      }
  // (11) A(w)
  for (size_t k = 0; k < p.preds.size(); ++k) {
    QuasiIdentity q;
    q.conclusion = Atom::predicate((int)k, w);
    sink.add(q);
  }
  // (13) & beta_j -> alpha for irredundant covers t <= join(c_j), with
  // alpha in P(t), beta_j in P(c_j); law (12) is its singleton case.
  std::vector<std::vector<Atom>> psets(s.size());
  for (int a = 1; a < s.size(); ++a)
    for (int f = 0; f < m.size(); ++f)
      psets[m.apply(f, a)].push_back(
          Atom::predicate(pred_of(a), elem_term(0, f)));
  for (int t = 1; t < s.size(); ++t)
    for (const auto& cover : irredundant_covers(s, t, 1)) {
      bool feasible = true;
      for (int c : cover) feasible = feasible && !psets[c].empty();
      if (!feasible) continue;
      std::vector<size_t> choice(cover.size(), 0);
      while (true) {
        for (const Atom& alpha : psets[t]) {
          QuasiIdentity q;
          for (size_t j = 0; j < cover.size(); ++j)
            q.premises.push_back(psets[cover[j]][choice[j]]);
          q.conclusion = alpha;
          sink.add(q);
        }
        size_t pos = 0;
        while (pos < cover.size() &&
               ++choice[pos] == psets[cover[pos]].size()) {
          choice[pos] = 0;
          ++pos;
        }
        if (pos == cover.size()) break;
      }
    }
  return p;
}

Presentation present_combined(const Semilattice& s, const OperatorMonoid& m) {
  if (!m.flags.reductive)
    throw error("monoid lacks required property: reductive");
  if (!m.flags.right_cancellative)
    throw error("monoid lacks required property: right_cancellative");
  if (!m.flags.fixes_top)
    throw error("monoid lacks required property: fixes_top");
  return combined_laws_unchecked(s, m);
}

Presentation present_dual_near_leaf(int k_bound) {
  if (k_bound < 1) throw error("k bound must be positive");
  Presentation p;
  p.style = Style::fixture;
  p.preds = {"A", "B", "C", "D"};
  p.funs = {"f", "g"};
  p.consts = {"e"};
  p.comments.push_back(
      "# schemata x = f^k(x) -> x = e and x = g^k(x) -> x = e truncated at "
      "k = " +
      std::to_string(k_bound));
  const int A = 0, B = 1, C = 2, D = 3, F = 0, G = 1;
  Term x = Term::make_var(0);
  Term e = Term::make_const(0);
  auto fact = [&](Atom a) {
    QuasiIdentity q;
    q.conclusion = std::move(a);
    p.laws.push_back(q);
  };
  auto law = [&](std::vector<Atom> prem, Atom c) {
    QuasiIdentity q;
    q.premises = std::move(prem);
    q.conclusion = std::move(c);
    p.laws.push_back(q);
  };
  fact(Atom::equation(x.applied(G).applied(F), x));  // f(g(x)) = x
  fact(Atom::equation(x.applied(F).applied(G), x));  // g(f(x)) = x
  for (int pr : {A, B, C, D}) fact(Atom::predicate(pr, e));
  fact(Atom::equation(e.applied(F), e));
  fact(Atom::equation(e.applied(G), e));
  law({Atom::predicate(D, x)}, Atom::predicate(C, x));
  law({Atom::predicate(C, x)}, Atom::predicate(B, x));
  law({Atom::predicate(B, x)}, Atom::predicate(A, x));
  law({Atom::predicate(C, x)}, Atom::predicate(D, x.applied(G)));
  law({Atom::predicate(B, x)}, Atom::predicate(C, x.applied(G)));
  law({Atom::predicate(A, x)}, Atom::predicate(B, x.applied(G)));
  law({Atom::predicate(A, x), Atom::predicate(C, x.applied(G))},
      Atom::predicate(B, x));
  law({Atom::predicate(B, x), Atom::predicate(D, x.applied(G))},
      Atom::predicate(C, x));
  for (int fun : {F, G})
    for (int k = 1; k <= k_bound; ++k) {
      Term t = x;
      for (int i = 0; i < k; ++i) t = t.applied(fun);
      law({Atom::equation(x, t)}, Atom::equation(x, e));
    }
  return p;
}

Term normalize_term(const Presentation& ctx, const Term& t) {
  if (!ctx.monoid) return t;
  const MonoidLink& link = *ctx.monoid;
  if (t.is_const()) {
    Term out;
    out.constant = t.constant;
    return out;
  }
  int elem = link.identity;
  for (int a : t.apps) elem = link.compose(elem, link.fun_elem[a]);
  Term out = Term::make_var(t.var);
  if (elem != link.identity) out = out.applied(link.elem_fun[elem]);
  return out;
}

int variable_count(const QuasiIdentity& q) {
  std::set<int> vars;
  auto walk = [&](const Atom& a) {
    if (a.lhs.is_var()) vars.insert(a.lhs.var);
    if (a.is_equation && a.rhs.is_var()) vars.insert(a.rhs.var);
  };
  for (const Atom& a : q.premises) walk(a);
  walk(q.conclusion);
  return (int)vars.size();
}

// ---------------------------------------------------------------------------
// One-variable reduction

namespace {

struct NAtom {
  enum Kind { trivial, pred_var, pred_const, eq_vv, eq_vconst } kind = trivial;
  int pred = -1;
  int v = -1, u = -1;  // pred_var: argument variable; eq_vv: v = elem(u)
  int elem = 0;        // monoid element
};

struct Reducer {
  const Presentation& ctx;
  const MonoidLink& link;

  struct Leaf {
    bool is_const = false;
    int v = -1;
    int elem = 0;
  };

  Leaf leaf_of(const Term& t) const {
    Leaf l;
    if (t.is_const()) {
      l.is_const = true;
      return l;
    }
    l.v = t.var;
    l.elem = link.identity;
    for (int a : t.apps) l.elem = link.compose(l.elem, link.fun_elem[a]);
    return l;
  }

  NAtom make_eq(const Leaf& a, const Leaf& b) const {
    NAtom n;
    if (a.is_const && b.is_const) return n;  // w = w
    if (a.is_const || b.is_const) {
      n.kind = NAtom::eq_vconst;
      n.v = a.is_const ? b.v : a.v;
      return n;
    }
    if (a.v == b.v) {
      if (a.elem == b.elem) return n;
      // f(x) = g(x) with f != g collapses to x = w (never reached in the
      // operator-free second style).
      n.kind = NAtom::eq_vconst;
      n.v = a.v;
      return n;
    }
    for (int h = 0; h < link.size(); ++h)
      if (link.compose(h, b.elem) == a.elem) {
        n.kind = NAtom::eq_vv;
        n.v = b.v;
        n.u = a.v;
        n.elem = h;
        return n;
      }
    for (int h = 0; h < link.size(); ++h)
      if (link.compose(h, a.elem) == b.elem) {
        n.kind = NAtom::eq_vv;
        n.v = a.v;
        n.u = b.v;
        n.elem = h;
        return n;
      }
    throw error("not reducible: monoid is not reductive");
  }

  NAtom normalize(const Atom& a) const {
    if (!a.is_equation) {
      Leaf l = leaf_of(a.lhs);
      NAtom n;
      n.pred = a.pred;
      if (l.is_const) {
        n.kind = NAtom::pred_const;
      } else {
        n.kind = NAtom::pred_var;
        n.v = l.v;
        n.elem = l.elem;
      }
      return n;
    }
    return make_eq(leaf_of(a.lhs), leaf_of(a.rhs));
  }

  // Replace variable v by the constant.
  NAtom subst_const(const NAtom& a, int v) const {
    NAtom n = a;
    switch (a.kind) {
      case NAtom::pred_var:
        if (a.v == v) {
          n = NAtom{};
          n.kind = NAtom::pred_const;
          n.pred = a.pred;
        }
        break;
      case NAtom::eq_vv:
        if (a.v == v && a.u == v) throw error("internal: degenerate equation");
        if (a.v == v) {
          n = NAtom{};
          n.kind = NAtom::eq_vconst;
          n.v = a.u;
        } else if (a.u == v) {
          n = NAtom{};
          n.kind = NAtom::eq_vconst;
          n.v = a.v;
        }
        break;
      case NAtom::eq_vconst:
        if (a.v == v) n = NAtom{};  // trivial
        break;
      default:
        break;
    }
    return n;
  }

  // Replace variable v by elem h applied to u (premise v = h(u)).
  NAtom subst_var(const NAtom& a, int v, int u, int h) const {
    switch (a.kind) {
      case NAtom::pred_var:
        if (a.v == v) {
          NAtom n;
          n.kind = NAtom::pred_var;
          n.pred = a.pred;
          n.v = u;
          n.elem = link.compose(h, a.elem);
          return n;
        }
        return a;
      case NAtom::eq_vv: {
        if (a.v != v && a.u != v) return a;
        Leaf lhs, rhs;  // a is  a.v = a.elem(a.u)
        lhs.v = a.v;
        lhs.elem = link.identity;
        rhs.v = a.u;
        rhs.elem = a.elem;
        auto apply = [&](Leaf& l) {
          if (l.v == v) {
            l.v = u;
            l.elem = link.compose(h, l.elem);
          }
        };
        apply(lhs);
        apply(rhs);
        return make_eq(lhs, rhs);
      }
      case NAtom::eq_vconst:
        if (a.v == v) {
          NAtom n;
          n.kind = NAtom::eq_vconst;
          n.v = u;
          return n;  // h(u) = w iff u = w
        }
        return a;
      default:
        return a;
    }
  }

  Atom to_atom(const NAtom& n) const {
    auto term = [&](int v, int elem) {
      Term t = Term::make_var(v);
      return elem == link.identity ? t : t.applied(link.elem_fun[elem]);
    };
    switch (n.kind) {
      case NAtom::pred_var:
        return Atom::predicate(n.pred, term(n.v, n.elem));
      case NAtom::pred_const:
        return Atom::predicate(n.pred, Term::make_const(0));
      case NAtom::eq_vconst:
        return Atom::equation(Term::make_var(n.v), Term::make_const(0));
      case NAtom::eq_vv:
        return Atom::equation(Term::make_var(n.v), term(n.u, n.elem));
      default:
        throw error("internal: trivial atom has no rendering");
    }
  }
};

void check_wellformed(const QuasiIdentity& q, const Presentation& ctx) {
  auto check_term = [&](const Term& t) {
    if (t.is_var() && (t.var < 0 || t.var >= kMaxVars))
      throw error("not reducible: variable out of range");
    if (t.is_const() && (t.constant < 0 || t.constant >= (int)ctx.consts.size()))
      throw error("not reducible: undeclared constant");
    if (!t.is_var() && !t.is_const())
      throw error("not reducible: malformed term");
    for (int a : t.apps)
      if (a < 0 || a >= (int)ctx.funs.size())
        throw error("not reducible: undeclared function symbol");
  };
  auto check_atom = [&](const Atom& a) {
    if (a.is_equation) {
      check_term(a.lhs);
      check_term(a.rhs);
    } else {
      if (a.pred < 0 || a.pred >= (int)ctx.preds.size())
        throw error("not reducible: undeclared predicate");
      check_term(a.lhs);
    }
  };
  for (const Atom& a : q.premises) check_atom(a);
  check_atom(q.conclusion);
}

}  // namespace

std::vector<QuasiIdentity> reduce_to_one_variable(const QuasiIdentity& q,
                                                  const Presentation& ctx) {
  if (ctx.style != Style::second && ctx.style != Style::combined)
    throw error("not reducible: context style must be second or combined");
  if (!ctx.monoid) throw error("not reducible: context has no monoid link");
  check_wellformed(q, ctx);

  Reducer red{ctx, *ctx.monoid};
  std::vector<NAtom> prem;
  for (const Atom& a : q.premises) prem.push_back(red.normalize(a));
  NAtom concl = red.normalize(q.conclusion);

  auto drop_facts = [&]() {
    std::vector<NAtom> kept;
    for (const NAtom& a : prem)
      if (a.kind == NAtom::pred_var || a.kind == NAtom::eq_vv ||
          a.kind == NAtom::eq_vconst)
        kept.push_back(a);
    prem = std::move(kept);
  };
  drop_facts();

  // Eliminate variables bound by equational premises.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < prem.size(); ++i) {
      if (prem[i].kind == NAtom::eq_vconst) {
        int v = prem[i].v;
        prem.erase(prem.begin() + i);
        for (NAtom& a : prem) a = red.subst_const(a, v);
        concl = red.subst_const(concl, v);
        changed = true;
        break;
      }
      if (prem[i].kind == NAtom::eq_vv) {
        NAtom e = prem[i];
        prem.erase(prem.begin() + i);
        for (NAtom& a : prem) a = red.subst_var(a, e.v, e.u, e.elem);
        concl = red.subst_var(concl, e.v, e.u, e.elem);
        changed = true;
        break;
      }
    }
    if (changed) drop_facts();
  }

  // Premises now involve one variable each (predicate atoms over some
  // variable); keep those matching the conclusion's variable and replace the
  // rest by the constant, where they become facts.
  std::vector<QuasiIdentity> out;
  auto one_var_law = [&](int v, const NAtom& conclusion) {
    QuasiIdentity law;
    for (const NAtom& a : prem)
      if (a.kind == NAtom::pred_var && a.v == v)
        law.premises.push_back(red.to_atom(a));
    std::sort(law.premises.begin(), law.premises.end());
    law.premises.erase(
        std::unique(law.premises.begin(), law.premises.end()),
        law.premises.end());
    law.conclusion = red.to_atom(conclusion);
    for (const Atom& a : law.premises)
      if (a == law.conclusion) return;  // tautology
    out.push_back(std::move(law));
  };

  switch (concl.kind) {
    case NAtom::trivial:
    case NAtom::pred_const:
      break;  // holds in every model of the context laws
    case NAtom::pred_var:
    case NAtom::eq_vconst:
      one_var_law(concl.v, concl);
      break;
    case NAtom::eq_vv: {
      NAtom cv;
      cv.kind = NAtom::eq_vconst;
      cv.v = concl.v;
      one_var_law(concl.v, cv);
      NAtom cu;
      cu.kind = NAtom::eq_vconst;
      cu.v = concl.u;
      one_var_law(concl.u, cu);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering and parsing

namespace {

const char* kVarNames[kMaxVars] = {"x", "y", "z"};

}  // namespace

std::string render_term(const Presentation& p, const Term& t) {
  std::string out;
  if (t.is_var())
    out = kVarNames[t.var];
  else
    out = p.consts[t.constant];
  for (int a : t.apps) out = p.funs[a] + "(" + out + ")";
  return out;
}

std::string render_atom(const Presentation& p, const Atom& a) {
  if (a.is_equation)
    return render_term(p, a.lhs) + " = " + render_term(p, a.rhs);
  return p.preds[a.pred] + "(" + render_term(p, a.lhs) + ")";
}

std::string render_law(const Presentation& p, const QuasiIdentity& q) {
  std::string out;
  for (size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " & ";
    out += render_atom(p, q.premises[i]);
  }
  if (!q.premises.empty()) out += " -> ";
  out += render_atom(p, q.conclusion);
  return out;
}

std::string render(const Presentation& p) {
  std::string out;
  for (const std::string& c : p.comments) out += c + "\n";
  if (!p.preds.empty()) {
    out += "pred";
    for (const std::string& s : p.preds) out += " " + s;
    out += "\n";
  }
  if (!p.funs.empty()) {
    out += "fun";
    for (const std::string& s : p.funs) out += " " + s;
    out += "\n";
  }
  if (!p.consts.empty()) {
    out += "const";
    for (const std::string& s : p.consts) out += " " + s;
    out += "\n";
  }
  for (const QuasiIdentity& q : p.laws) out += render_law(p, q) + "\n";
  return out;
}

namespace {

struct LineParser {
  const std::string& line;
  int lineno;
  size_t pos = 0;
  const Presentation& p;

  [[noreturn]] void fail(const std::string& why, size_t at) const {
    throw error("parse error at line " + std::to_string(lineno) + " column " +
                std::to_string(at + 1) + ": " + why);
  }

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < line.size() && line[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < line.size() && line[pos] == '-' && line[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  bool at_end() {
    skip_ws();
    return pos >= line.size();
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < line.size() &&
           (isalnum((unsigned char)line[pos]) || line[pos] == '_' ||
            line[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected identifier", pos);
    return line.substr(start, pos - start);
  }

  Term term() {
    skip_ws();
    size_t start = pos;
    std::string name = ident();
    for (int v = 0; v < kMaxVars; ++v)
      if (name == kVarNames[v]) return Term::make_var(v);
    int c = p.const_index(name);
    if (c >= 0) return Term::make_const(c);
    int f = p.fun_index(name);
    if (f >= 0) {
      size_t paren = pos;
      skip_ws();
      paren = pos;
      if (!eat('(')) fail("expected ( after function symbol", pos);
      if (at_end()) fail("unterminated application", paren);
      Term inner = term();
      if (!eat(')')) fail("expected )", pos);
      return inner.applied(f);
    }
    fail("unknown symbol '" + name + "'", start);
  }

  Atom atom() {
    skip_ws();
    size_t start = pos;
    // Lookahead: predicate application or a term.
    size_t save = pos;
    std::string name = ident();
    int pr = p.pred_index(name);
    if (pr >= 0) {
      size_t paren = pos;
      skip_ws();
      paren = pos;
      if (!eat('(')) fail("expected ( after predicate", pos);
      if (at_end()) fail("unterminated application", paren);
      Term arg = term();
      if (!eat(')')) fail("expected )", pos);
      return Atom::predicate(pr, arg);
    }
    pos = save;
    Term lhs = term();
    skip_ws();
    if (!eat('=')) fail("expected = in equation", pos);
    if (at_end()) fail("missing right-hand side", pos);
    Term rhs = term();
    (void)start;
    return Atom::equation(lhs, rhs);
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  p.style = Style::fixture;
  int lineno = 0;
  size_t off = 0;
  bool saw_law = false;
  while (off <= text.size()) {
    size_t nl = text.find('\n', off);
    std::string line = text.substr(
        off, nl == std::string::npos ? std::string::npos : nl - off);
    off = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string c = line.substr(first);
      while (!c.empty() && (c.back() == '\r' || c.back() == ' ')) c.pop_back();
      p.comments.push_back(c);
      continue;
    }
    while (!line.empty() && (line.back() == '\r')) line.pop_back();

    // Declarations.
    auto starts = [&](const char* kw) {
      size_t n = strlen(kw);
      return line.compare(first, n, kw) == 0 &&
             (first + n == line.size() || line[first + n] == ' ' ||
              line[first + n] == '\t');
    };
    if (starts("pred") || starts("fun") || starts("const")) {
      if (saw_law)
        throw error("parse error at line " + std::to_string(lineno) +
                    " column " + std::to_string(first + 1) +
                    ": declaration after laws");
      std::vector<std::string>* target =
          starts("pred") ? &p.preds : starts("fun") ? &p.funs : &p.consts;
      size_t pos = first + (starts("const") ? 5 : starts("pred") ? 4 : 3);
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
          ++pos;
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
          ++pos;
        if (pos > start) target->push_back(line.substr(start, pos - start));
      }
      continue;
    }

    LineParser lp{line, lineno, 0, p};
    QuasiIdentity q;
    std::vector<Atom> atoms;
    atoms.push_back(lp.atom());
    while (lp.eat('&')) atoms.push_back(lp.atom());
    if (lp.eat_arrow()) {
      q.premises = atoms;
      if (lp.at_end()) lp.fail("missing conclusion", lp.pos);
      q.conclusion = lp.atom();
    } else {
      if (atoms.size() != 1) lp.fail("expected ->", lp.pos);
      q.conclusion = atoms[0];
    }
    if (!lp.at_end()) lp.fail("trailing input", lp.pos);
    p.laws.push_back(q);
    saw_law = true;
  }
  return p;
}

}  // namespace slat
