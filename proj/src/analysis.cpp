#include "slat/analysis.hpp"

#include <algorithm>

namespace slat {

namespace {

// Join-closure of the orbit {g(k) : g in M}: all joins of nonempty orbit
// subsets.
std::vector<int> orbit_join_closure(const Semilattice& s,
                                    const OperatorMonoid& m, int k) {
  std::vector<std::uint8_t> in(s.size(), 0);
  std::vector<int> out;
  std::vector<int> work;
  for (const Operator& g : m.elements)
    if (!in[g(k)]) {
      in[g(k)] = 1;
      work.push_back(g(k));
      out.push_back(g(k));
    }
  while (!work.empty()) {
    int a = work.back();
    work.pop_back();
    for (size_t i = 0; i < out.size(); ++i) {
      int j = s.join(a, out[i]);
      if (!in[j]) {
        in[j] = 1;
        out.push_back(j);
        work.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PseudopropReport pseudoprop_check(const Semilattice& s,
                                  const OperatorMonoid& m) {
  PseudopropReport rep;
  rep.note =
      "holds on every finite carrier via k=top; failures require an "
      "infinite carrier, e.g. (omega,max,0,pred) whose congruence lattice "
      "omega+1 has no such element";
  for (int k = 0; k < s.size(); ++k) {
    std::vector<int> joins = orbit_join_closure(s, m, k);
    std::vector<PseudopropWitness> ws;
    bool ok = true;
    for (int x = 0; x < s.size() && ok; ++x)
      for (int f = 0; f < m.size() && ok; ++f) {
        int fx = m.apply(f, x);
        bool found = false;
        for (int j : joins)
          if (s.join(fx, j) == s.join(x, j)) {
            ws.push_back({x, f, j});
            found = true;
            break;
          }
        ok = found;
      }
    if (ok) {
      rep.success = true;
      rep.k = k;
      rep.witnesses = std::move(ws);
      return rep;
    }
  }
  return rep;
}

CofinalReport cofinal_compact_check(const Semilattice& s,
                                    const OperatorMonoid& m) {
  CofinalReport rep;
  rep.note =
      "on a finite carrier the top congruence is always a finite join of "
      "principal congruences";
  for (int u = 0; u < s.size(); ++u) {
    bool cofinal = true;
    for (int x = 0; x < s.size() && cofinal; ++x) {
      bool dominated = false;
      for (int f = 0; f < m.size() && !dominated; ++f)
        dominated = s.leq(x, m.apply(f, u));
      cofinal = dominated;
    }
    if (cofinal) rep.cofinal_witnesses.push_back(u);
  }
  return rep;
}

void check_star_filter(const Semilattice& s, const OperatorMonoid& m,
                       const StarFilter& f) {
  if (!f.contains(s.top())) throw error("not an order filter: missing top");
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (f.contains(a) && s.leq(a, b) && !f.contains(b))
        throw error("not an order filter: " + std::to_string(a) +
                    " in F but " + std::to_string(b) + " above it is not");
  for (int fi = 0; fi < m.size(); ++fi)
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!f.contains(a) || !f.contains(b)) continue;
        for (int x = 0; x < s.size(); ++x) {
          bool fa = f.contains(s.join(m.apply(fi, a), x));
          bool fb = f.contains(s.join(m.apply(fi, b), x));
          if (fa && !fb)
            throw error("condition (*) fails at (f=" + std::to_string(fi) +
                        ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                        ",s=" + std::to_string(x) + ")");
        }
      }
}

StarFilter top_block_filter(const Semilattice& s, const Congruence& c) {
  StarFilter f;
  for (int x = 0; x < s.size(); ++x)
    if (c.related(x, s.top())) f.members |= Mask(1) << x;
  return f;
}

StarFilterInterval star_filter_interval(const Semilattice& s,
                                        const OperatorMonoid& m,
                                        const StarFilter& f,
                                        const ConLattice& con) {
  check_star_filter(s, m, f);
  StarFilterInterval out;

  std::vector<std::pair<int, int>> gens;
  for (int fi = 0; fi < m.size(); ++fi)
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!f.contains(a) || !f.contains(b)) continue;
        for (int x = 0; x < s.size(); ++x)
          gens.emplace_back(s.join(m.apply(fi, a), x),
                            s.join(m.apply(fi, b), x));
      }
  out.phi = congruence_from_pairs(s, m, gens);

  std::vector<int> rep(s.size());
  for (int x = 0; x < s.size(); ++x) {
    rep[x] = x;
    for (int y = 0; y < x; ++y) {
      bool same = true;
      for (int fi = 0; fi < m.size() && same; ++fi)
        for (int t = 0; t < s.size() && same; ++t)
          same = f.contains(s.join(m.apply(fi, x), t)) ==
                 f.contains(s.join(m.apply(fi, y), t));
      if (same) {
        rep[x] = rep[y];
        break;
      }
    }
  }
  out.psi = canonical_congruence(rep);
  if (!is_congruence(s, m, out.psi))
    throw error("psi(F) is not a congruence");

  for (size_t i = 0; i < con.elems.size(); ++i)
    if (top_block_filter(s, con.elems[i]).members == f.members)
      out.members.push_back((int)i);
  std::vector<int> interval;
  for (size_t i = 0; i < con.elems.size(); ++i)
    if (congruence_leq(out.phi, con.elems[i]) &&
        congruence_leq(con.elems[i], out.psi))
      interval.push_back((int)i);
  out.members_match_interval = out.members == interval;
  return out;
}

}  // namespace slat
