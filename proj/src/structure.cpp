#include "slat/structure.hpp"

#include <algorithm>
#include <set>

namespace slat {

int eval_term(const FiniteStructure& a, const Term& t,
              const std::vector<int>& assignment) {
  int v;
  if (t.is_var()) {
    if (t.var >= (int)assignment.size()) throw error("uninterpreted symbol");
    v = assignment[t.var];
  } else if (t.is_const()) {
    if (t.constant >= (int)a.consts.size())
      throw error("uninterpreted symbol");
    v = a.consts[t.constant];
  } else {
    throw error("uninterpreted symbol");
  }
  for (int f : t.apps) {
    if (f >= (int)a.ops.size()) throw error("uninterpreted symbol");
    v = a.ops[f][v];
  }
  return v;
}

bool atom_holds(const FiniteStructure& a, const Atom& atom,
                const std::vector<int>& assignment) {
  if (atom.is_equation)
    return eval_term(a, atom.lhs, assignment) ==
           eval_term(a, atom.rhs, assignment);
  if (atom.pred >= (int)a.preds.size()) throw error("uninterpreted symbol");
  return (a.preds[atom.pred] >> eval_term(a, atom.lhs, assignment)) & 1;
}

bool satisfies(const FiniteStructure& a, const QuasiIdentity& q,
               std::string* witness) {
  int vars = 0;
  auto note = [&](const Term& t) {
    if (t.is_var()) vars = std::max(vars, t.var + 1);
  };
  for (const Atom& at : q.premises) {
    note(at.lhs);
    if (at.is_equation) note(at.rhs);
  }
  note(q.conclusion.lhs);
  if (q.conclusion.is_equation) note(q.conclusion.rhs);

  std::vector<int> assignment(vars, 0);
  long total = 1;
  for (int i = 0; i < vars; ++i) total *= a.size;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < vars; ++i) {
      assignment[i] = (int)(c % a.size);
      c /= a.size;
    }
    bool premises_hold = true;
    for (const Atom& at : q.premises)
      if (!atom_holds(a, at, assignment)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !atom_holds(a, q.conclusion, assignment)) {
      if (witness) {
        *witness = "assignment";
        for (int i = 0; i < vars; ++i)
          *witness += " " + std::string(1, "xyz"[i]) + "=" +
                      a.label(assignment[i]);
      }
      return false;
    }
  }
  return true;
}

std::string first_violated_law(const FiniteStructure& a,
                               const Presentation& p) {
  for (const QuasiIdentity& q : p.laws)
    if (!satisfies(a, q)) return render_law(p, q);
  return "";
}

FiniteStructure free_structure(const Semilattice& s, const OperatorMonoid& m,
                               const Presentation& ctx) {
  if (!ctx.monoid || ctx.monoid->size() != m.size())
    throw error("presentation does not match the monoid");
  if ((int)ctx.preds.size() != s.size() - 1)
    throw error("presentation does not match the semilattice");
  const MonoidLink& link = *ctx.monoid;
  FiniteStructure f;
  f.size = m.size() + 1;
  int w = m.size();

  f.ops.resize(ctx.funs.size());
  for (size_t k = 0; k < ctx.funs.size(); ++k) {
    int fe = link.fun_elem[k];
    std::vector<int>& op = f.ops[k];
    op.resize(f.size);
    for (int g = 0; g < m.size(); ++g)
      op[g] = m.compose_index(g, fe);  // term f(g(x)) = (g o f)(x)
    op[w] = w;
  }
  f.consts = {w};
  f.preds.assign(ctx.preds.size(), 0);
  for (size_t k = 0; k < ctx.preds.size(); ++k) {
    int a = ctx.pred_elem[k];
    Mask ext = Mask(1) << w;  // A(w) holds for every nonzero a
    for (int g = 0; g < m.size(); ++g)
      if (m.apply(g, a) == 0) ext |= Mask(1) << g;  // law (10)
    f.preds[k] = ext;
  }
  for (int g = 0; g < m.size(); ++g)
    f.labels.push_back(g == m.identity() ? "x" : m.names[g] + "(x)");
  f.labels.push_back("w");
  return f;
}

FiniteStructure free_structure_second(const Semilattice& s,
                                      const Presentation& ctx) {
  FiniteStructure f;
  if (s.size() == 1) {
    f.size = 1;
    f.consts = {0};
    f.preds.assign(ctx.preds.size(), 0);
    f.labels = {"e"};
    return f;
  }
  f.size = 2;  // 0 = x, 1 = e
  f.consts = {1};
  f.preds.assign(ctx.preds.size(), Mask(1) << 1);
  f.labels = {"x", "e"};
  return f;
}

std::vector<std::vector<int>> endomorphisms(const FiniteStructure& a) {
  std::vector<std::vector<int>> out;
  int n = a.size;
  std::vector<int> map(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      map[i] = (int)(c % n);
      c /= n;
    }
    bool ok = true;
    for (int cst : a.consts)
      if (map[cst] != cst) {
        ok = false;
        break;
      }
    for (const auto& op : a.ops) {
      for (int x = 0; x < n && ok; ++x)
        if (map[op[x]] != op[map[x]]) ok = false;
      if (!ok) break;
    }
    for (Mask ext : a.preds) {
      for (int x = 0; x < n && ok; ++x)
        if (((ext >> x) & 1) && !((ext >> map[x]) & 1)) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(map);
  }
  return out;
}

std::vector<std::vector<int>> free_endomorphisms(
    const FiniteStructure& f, const OperatorMonoid& m,
    std::vector<std::string>* names) {
  int w = m.size();
  if (f.size != w + 1) throw error("not a free structure for this monoid");
  std::vector<std::vector<int>> expected;
  std::vector<std::string> expected_names;
  for (int h = 0; h < m.size(); ++h) {
    std::vector<int> eps(f.size);
    for (int g = 0; g < m.size(); ++g)
      eps[g] = m.compose_index(h, g);  // eps_h(g(x)) = (h o g)(x)
    eps[w] = w;
    expected.push_back(eps);
    expected_names.push_back("e_" + m.names[h]);
  }
  expected.push_back(std::vector<int>(f.size, w));
  expected_names.push_back("e_w");

  std::vector<std::vector<int>> found = endomorphisms(f);
  std::set<std::vector<int>> found_set(found.begin(), found.end());
  std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
  if (found_set != expected_set) {
    std::string msg = "unexpected endomorphism:";
    for (const auto& e : found)
      if (!expected_set.count(e)) {
        msg += " extra map";
        for (int x : e) msg += " " + std::to_string(x);
        break;
      }
    for (const auto& e : expected)
      if (!found_set.count(e)) {
        msg += " missing map";
        for (int x : e) msg += " " + std::to_string(x);
        break;
      }
    throw error(msg);
  }
  if (names) *names = expected_names;
  return expected;
}

std::vector<FiniteStructure> enumerate_models(const Presentation& ctx,
                                              int max_size) {
  std::vector<FiniteStructure> out;
  std::vector<const QuasiIdentity*> pred_free, with_preds;
  for (const QuasiIdentity& q : ctx.laws) {
    bool has_pred = !q.conclusion.is_equation;
    for (const Atom& a : q.premises) has_pred = has_pred || !a.is_equation;
    (has_pred ? with_preds : pred_free).push_back(&q);
  }

  for (int n = 1; n <= max_size; ++n) {
    long op_total = 1;
    for (size_t k = 0; k < ctx.funs.size(); ++k)
      for (int i = 0; i < n; ++i) op_total *= n;
    long const_total = 1;
    for (size_t k = 0; k < ctx.consts.size(); ++k) const_total *= n;

    for (long cc = 0; cc < const_total; ++cc) {
      FiniteStructure a;
      a.size = n;
      long c = cc;
      for (size_t k = 0; k < ctx.consts.size(); ++k) {
        a.consts.push_back((int)(c % n));
        c /= n;
      }
      for (long oc = 0; oc < op_total; ++oc) {
        a.ops.assign(ctx.funs.size(), std::vector<int>(n, 0));
        long o = oc;
        for (size_t k = 0; k < ctx.funs.size(); ++k)
          for (int i = 0; i < n; ++i) {
            a.ops[k][i] = (int)(o % n);
            o /= n;
          }
        bool ok = true;
        a.preds.assign(ctx.preds.size(), 0);
        for (const QuasiIdentity* q : pred_free)
          if (!satisfies(a, *q)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        long pred_total = 1;
        for (size_t k = 0; k < ctx.preds.size(); ++k) pred_total *= (1 << n);
        for (long pc = 0; pc < pred_total; ++pc) {
          long pv = pc;
          for (size_t k = 0; k < ctx.preds.size(); ++k) {
            a.preds[k] = (Mask)(pv % (1 << n));
            pv /= (1 << n);
          }
          bool good = true;
          for (const QuasiIdentity* q : with_preds)
            if (!satisfies(a, *q)) {
              good = false;
              break;
            }
          if (good) out.push_back(a);
        }
      }
    }
  }
  return out;
}

}  // namespace slat
