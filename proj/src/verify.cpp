#include "slat/verify.hpp"

#include <algorithm>
#include <set>

#include "slat/analysis.hpp"

namespace slat {

namespace {

// theta^I for an ideal of S on the combined free structure: the diagonal
// (or, for I = S, the universal relation) with A(f(x)) held iff f(a) in I,
// plus every A(w).
StructureCongruence theta_of_ideal(const Semilattice& s,
                                   const OperatorMonoid& m,
                                   const Presentation& ctx, const Ideal& ideal) {
  int w = m.size();
  StructureCongruence c;
  bool whole = ideal.contains(s.top());
  c.rep.resize(w + 1);
  for (int x = 0; x <= w; ++x) c.rep[x] = whole ? 0 : x;
  for (size_t k = 0; k < ctx.preds.size(); ++k) {
    int a = ctx.pred_elem[k];
    Mask ext = Mask(1) << w;
    for (int g = 0; g < m.size(); ++g)
      if (ideal.contains(m.apply(g, a))) ext |= Mask(1) << g;
    c.preds.push_back(ext);
  }
  return c;
}

std::string ideal_string(const Ideal& ideal, int n) {
  std::string out;
  for (int x = 0; x < n; ++x)
    if (ideal.contains(x)) {
      if (!out.empty()) out += ".";
      out += std::to_string(x);
    }
  return out;
}

}  // namespace

Report verify_combined(const Semilattice& s, const OperatorMonoid& m) {
  Report r;
  Presentation ctx = present_combined(s, m);
  FiniteStructure f = free_structure(s, m, ctx);

  r.add("free-carrier", f.size == m.size() + 1,
        "size " + std::to_string(f.size));

  std::vector<std::string> endo_names;
  std::vector<std::vector<int>> endos;
  try {
    endos = free_endomorphisms(f, m, &endo_names);
    r.add("endomorphisms", true,
          std::to_string(endos.size()) + " maps");
  } catch (const error& e) {
    r.add("endomorphisms", false, e.what());
    return r;
  }

  CompactConSemilattice t = k_congruences(f, ctx);
  std::vector<Ideal> ids = ideals(s);

  // Claim 1: every theta^I is a K-congruence.
  {
    bool ok = true;
    std::string witness;
    for (const Ideal& ideal : ids)
      if (t.index_of(theta_of_ideal(s, m, ctx, ideal)) < 0) {
        ok = false;
        witness = "ideal " + ideal_string(ideal, s.size());
        break;
      }
    r.add("claim1", ok, witness);
  }
  // Claim 2: theta^I <= theta^J iff I included in J.
  {
    bool ok = true;
    std::string witness;
    for (const Ideal& i : ids)
      for (const Ideal& j : ids) {
        bool sub = (i.members & ~j.members) == 0;
        bool leq = kcong_leq(theta_of_ideal(s, m, ctx, i),
                             theta_of_ideal(s, m, ctx, j));
        if (sub != leq) {
          ok = false;
          witness = "ideals " + ideal_string(i, s.size()) + " vs " +
                    ideal_string(j, s.size());
        }
      }
    r.add("claim2", ok, witness);
  }
  // Claim 3: the K-congruences are exactly the theta^I.
  {
    std::set<StructureCongruence> expected;
    for (const Ideal& ideal : ids)
      expected.insert(theta_of_ideal(s, m, ctx, ideal));
    std::set<StructureCongruence> got(t.elems.begin(), t.elems.end());
    bool ok = expected == got;
    r.add("claim3", ok,
          "congruences " + std::to_string(got.size()) + " ideals " +
              std::to_string(expected.size()));
  }

  // Claims 4 and 5: the constant endomorphism induces the zero map, and
  // e_h sends theta^(down s) to theta^(down h(s)).
  {
    std::vector<int> const_map(f.size, m.size());
    Operator hat = induced_operator(t, const_map);
    bool ok = true;
    for (int img : hat.images) ok = ok && img == 0;
    r.add("claim4", ok);
  }
  {
    bool ok = true;
    std::string witness;
    for (int h = 0; h < m.size() && ok; ++h) {
      std::vector<int> eps(f.size);
      for (int g = 0; g < m.size(); ++g) eps[g] = m.compose_index(h, g);
      eps[m.size()] = m.size();
      Operator hat = induced_operator(t, eps);
      for (int x = 0; x < s.size() && ok; ++x) {
        int from = t.index_of(
            theta_of_ideal(s, m, ctx, Ideal{down_set(s, x)}));
        int to = t.index_of(theta_of_ideal(
            s, m, ctx, Ideal{down_set(s, m.apply(h, x))}));
        if (hat.images[from] != to) {
          ok = false;
          witness = "h=" + m.names[h] + " s=" + std::to_string(x);
        }
      }
    }
    r.add("claim5", ok, witness);
  }

  // Final isomorphism Con(T,v,0,E) = Con(S,+,0,M).
  {
    OperatorMonoid ehat = induced_monoid(t, endos, endo_names);
    ConLattice left = congruence_lattice(t.to_semilattice(), ehat);
    ConLattice right = congruence_lattice(s, m);
    bool ok = lattices_isomorphic(left.order, right.order);
    r.add("lattice-iso", ok,
          std::to_string(left.elems.size()) + " vs " +
              std::to_string(right.elems.size()) + " congruences");
  }
  return r;
}

Report verify_second(const Semilattice& s) {
  Report r;
  Presentation ctx = present_second(s);
  FiniteStructure f = free_structure_second(s, ctx);
  r.add("free-carrier", f.size == (s.size() == 1 ? 1 : 2));

  CompactConSemilattice t = k_congruences(f, ctx);
  r.add("kcong-count", t.elems.size() == ideals(s).size(),
        std::to_string(t.elems.size()) + " vs " +
            std::to_string(ideals(s).size()) + " ideals");

  std::vector<std::vector<int>> endos = endomorphisms(f);
  std::vector<std::string> names;
  for (size_t i = 0; i < endos.size(); ++i)
    names.push_back("e" + std::to_string(i));
  OperatorMonoid ehat = induced_monoid(t, endos, names);
  ConLattice left = congruence_lattice(t.to_semilattice(), ehat);
  EonLattice right = eon_lattice(s, trivial_monoid(s));
  r.add("lattice-iso", lattices_isomorphic(left.order, right.order),
        std::to_string(left.elems.size()) + " vs " +
            std::to_string(right.elems.size()));
  return r;
}

Report verify_lemma1(const Semilattice& s, const OperatorMonoid& m) {
  Report r;
  ConLattice con = congruence_lattice(s, m);
  EonLattice eon = eon_lattice(s, m);
  r.add("lemma1-size", con.elems.size() == eon.elems.size(),
        std::to_string(con.elems.size()) + " vs " +
            std::to_string(eon.elems.size()));
  try {
    con_eon_isomorphism(s, m, con, eon);
    r.add("lemma1-iso", true);
  } catch (const error& e) {
    r.add("lemma1-iso", false, e.what());
  }
  return r;
}

Report verify_eon_rules(const Semilattice& s, const OperatorMonoid& m) {
  if (m.size() != 1) throw error("non-trivial monoid supplied");
  Report r;
  EonRuleReport rr = eon_rule_check(s);
  r.add("eon-rule1", rr.rule1_pass, rr.rule1_pass ? "" : rr.witness);
  r.add("eon-rule2", rr.rule2_pass, rr.rule2_pass ? "" : rr.witness);
  return r;
}

Report pseudo_lemma_check(const Semilattice& s, const OperatorMonoid& m) {
  Report r;
  Presentation ctx = present_combined(s, m);
  FiniteStructure f = free_structure(s, m, ctx);
  std::vector<std::string> names;
  std::vector<std::vector<int>> endos = free_endomorphisms(f, m, &names);
  CompactConSemilattice t = k_congruences(f, ctx);

  int ups = upsilon(t);
  {
    bool ok = true;
    std::string witness;
    for (const auto& e : endos) {
      Operator hat = induced_operator(t, e);
      for (size_t i = 0; i < t.elems.size(); ++i)
        if (t.order.join(hat.images[i], ups) !=
            t.order.join((int)i, ups)) {
          ok = false;
          witness = "congruence " + std::to_string(i);
        }
    }
    r.add("pseudo-lemma", ok, witness);
  }
  {
    // upsilon = join over endomorphisms of induced(con(x,w)).
    int kappa = t.least_containing_pair(m.identity(), m.size());
    int join = 0;
    for (const auto& e : endos) {
      Operator hat = induced_operator(t, e);
      join = t.order.join(join, hat.images[kappa]);
    }
    r.add("upsilon-generators", join == ups,
          "join " + std::to_string(join) + " upsilon " + std::to_string(ups));
  }
  return r;
}

Report verify_reduce(const Presentation& ctx,
                     const std::vector<QuasiIdentity>& laws, int model_bound) {
  Report r;
  std::vector<FiniteStructure> models = enumerate_models(ctx, model_bound);
  r.add("context-models", !models.empty(),
        std::to_string(models.size()) + " models");
  bool one_var = true, equivalent = true;
  std::string witness_var, witness_eq;
  for (size_t i = 0; i < laws.size(); ++i) {
    std::vector<QuasiIdentity> reduced = reduce_to_one_variable(laws[i], ctx);
    for (const QuasiIdentity& q : reduced)
      if (variable_count(q) > 1) {
        one_var = false;
        witness_var = "law " + std::to_string(i);
      }
    for (const FiniteStructure& a : models) {
      bool orig = satisfies(a, laws[i]);
      bool red = true;
      for (const QuasiIdentity& q : reduced) red = red && satisfies(a, q);
      if (orig != red) {
        equivalent = false;
        witness_eq = "law " + std::to_string(i) + " (" +
                     render_law(ctx, laws[i]) + ") on a " +
                     std::to_string(a.size) + "-element model";
      }
    }
  }
  r.add("reduce-one-variable", one_var, witness_var);
  r.add("reduce-equivalence", equivalent, witness_eq);
  return r;
}

Report verify_star_filters(const Semilattice& s, const OperatorMonoid& m) {
  Report r;
  ConLattice con = congruence_lattice(s, m);
  bool star_ok = true, interval_ok = true, members_ok = true;
  std::string w1, w2, w3;
  for (size_t i = 0; i < con.elems.size(); ++i) {
    StarFilter f = top_block_filter(s, con.elems[i]);
    StarFilterInterval iv;
    try {
      iv = star_filter_interval(s, m, f, con);
    } catch (const error& e) {
      star_ok = false;
      w1 = "congruence " + blocks_string(con.elems[i]) + ": " + e.what();
      continue;
    }
    if (!congruence_leq(iv.phi, con.elems[i]) ||
        !congruence_leq(con.elems[i], iv.psi)) {
      interval_ok = false;
      w2 = "congruence " + blocks_string(con.elems[i]);
    }
    if (!iv.members_match_interval) {
      members_ok = false;
      w3 = "congruence " + blocks_string(con.elems[i]);
    }
  }
  r.add("star-condition", star_ok, w1);
  r.add("star-interval", interval_ok, w2);
  r.add("star-members", members_ok, w3);
  return r;
}

}  // namespace slat
