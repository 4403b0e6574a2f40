#include "slat/kcongruence.hpp"

#include <algorithm>
#include <numeric>

namespace slat {

bool kcong_leq(const StructureCongruence& a, const StructureCongruence& b) {
  for (size_t x = 0; x < a.rep.size(); ++x)
    if (b.rep[x] != b.rep[a.rep[x]]) return false;
  for (size_t k = 0; k < a.preds.size(); ++k)
    if (a.preds[k] & ~b.preds[k]) return false;
  return true;
}

namespace {

// Quotient of the base structure by a congruence pair.
FiniteStructure quotient(const FiniteStructure& a,
                         const StructureCongruence& c) {
  std::vector<int> cls(a.size, -1);
  std::vector<int> reps;
  for (int x = 0; x < a.size; ++x)
    if (c.rep[x] == x) {
      cls[x] = (int)reps.size();
      reps.push_back(x);
    }
  FiniteStructure q;
  q.size = (int)reps.size();
  for (const auto& op : a.ops) {
    std::vector<int> qop(q.size);
    for (int i = 0; i < q.size; ++i) qop[i] = cls[c.rep[op[reps[i]]]];
    q.ops.push_back(qop);
  }
  for (int cst : a.consts) q.consts.push_back(cls[c.rep[cst]]);
  for (Mask ext : c.preds) {
    Mask m = 0;
    for (int i = 0; i < q.size; ++i)
      if ((ext >> reps[i]) & 1) m |= Mask(1) << i;
    q.preds.push_back(m);
  }
  return q;
}

// All equivalence partitions of n elements via restricted growth strings.
std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  while (true) {
    std::vector<int> rep(n);
    std::vector<int> first(n, -1);
    for (int x = 0; x < n; ++x) {
      if (first[block[x]] < 0) first[block[x]] = x;
      rep[x] = first[block[x]];
    }
    out.push_back(rep);
    int i = n - 1;
    for (; i > 0; --i) {
      int maxb = 0;
      for (int j = 0; j < i; ++j) maxb = std::max(maxb, block[j]);
      if (block[i] <= maxb) {
        ++block[i];
        for (int j = i + 1; j < n; ++j) block[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

bool op_compatible(const FiniteStructure& a, const std::vector<int>& rep) {
  for (const auto& op : a.ops)
    for (int x = 0; x < a.size; ++x)
      for (int y = x + 1; y < a.size; ++y)
        if (rep[x] == rep[y] && rep[op[x]] != rep[op[y]]) return false;
  return true;
}

long weight(const StructureCongruence& c) {
  long w = 0;
  for (size_t x = 0; x < c.rep.size(); ++x)
    for (size_t y = x + 1; y < c.rep.size(); ++y)
      if (c.rep[x] == c.rep[y]) ++w;
  for (Mask m : c.preds) w += __builtin_popcount(m);
  return w;
}

}  // namespace

int CompactConSemilattice::index_of(const StructureCongruence& c) const {
  auto it = std::find(elems.begin(), elems.end(), c);
  return it == elems.end() ? -1 : (int)(it - elems.begin());
}

int CompactConSemilattice::least_containing_pair(int a, int b) const {
  int best = -1;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].related(a, b)) continue;
    if (best < 0 || order.leq((int)i, best)) best = (int)i;
  }
  if (best < 0) throw error("no congruence contains the pair");
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].related(a, b) && !order.leq(best, (int)i))
      throw error("containing congruences have no least element");
  return best;
}

int CompactConSemilattice::least_containing_atom(int pred, int elem) const {
  int best = -1;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!((elems[i].preds[pred] >> elem) & 1)) continue;
    if (best < 0 || order.leq((int)i, best)) best = (int)i;
  }
  if (best < 0) throw error("no congruence contains the atom");
  for (size_t i = 0; i < elems.size(); ++i)
    if (((elems[i].preds[pred] >> elem) & 1) && !order.leq(best, (int)i))
      throw error("containing congruences have no least element");
  return best;
}

int CompactConSemilattice::join_all(const std::vector<int>& xs) const {
  int j = 0;
  for (int x : xs) j = order.join(j, x);
  return j;
}

Semilattice CompactConSemilattice::to_semilattice() const {
  int k = (int)elems.size();
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = order.join(i, j);
  return Semilattice::validate(k, table, 0);
}

CompactConSemilattice k_congruences(const FiniteStructure& a,
                                    const Presentation& laws) {
  if (a.size > 12) throw error("carrier too large for exhaustive enumeration");
  CompactConSemilattice t;
  t.base = a;
  t.laws = laws;

  int np = (int)a.preds.size();
  // Laws grouped by the highest predicate symbol they mention (-1 when
  // equations only), so the predicate-extension search can check them as
  // soon as all their symbols are assigned.
  std::vector<std::vector<const QuasiIdentity*>> by_pred(np + 1);
  for (const QuasiIdentity& q : laws.laws) {
    int hi = -1;
    auto note = [&](const Atom& at) {
      if (!at.is_equation) hi = std::max(hi, at.pred);
    };
    for (const Atom& at : q.premises) note(at);
    note(q.conclusion);
    by_pred[hi + 1].push_back(&q);
  }

  for (const std::vector<int>& rep : all_partitions(a.size)) {
    if (!op_compatible(a, rep)) continue;
    // Saturated candidate extensions per predicate: unions of blocks
    // containing the base extension.
    std::vector<int> blocks;
    for (int x = 0; x < a.size; ++x)
      if (rep[x] == x) blocks.push_back(x);
    std::vector<Mask> block_mask(blocks.size(), 0);
    for (int x = 0; x < a.size; ++x)
      for (size_t bi = 0; bi < blocks.size(); ++bi)
        if (rep[x] == blocks[bi]) block_mask[bi] |= Mask(1) << x;

    std::vector<std::vector<Mask>> choices(np);
    for (int k = 0; k < np; ++k) {
      Mask required = 0;
      std::vector<int> optional;
      for (size_t bi = 0; bi < blocks.size(); ++bi) {
        if (block_mask[bi] & a.preds[k])
          required |= block_mask[bi];
        else
          optional.push_back((int)bi);
      }
      for (Mask sub = 0; sub < (Mask(1) << optional.size()); ++sub) {
        Mask ext = required;
        for (size_t i = 0; i < optional.size(); ++i)
          if ((sub >> i) & 1) ext |= block_mask[optional[i]];
        choices[k].push_back(ext);
      }
      std::sort(choices[k].begin(), choices[k].end());
    }

    StructureCongruence cand;
    cand.rep = rep;
    cand.preds.assign(np, 0);

    // DFS over predicate extensions with incremental law checking.
    auto check_level = [&](int level) {
      StructureCongruence partial = cand;
      FiniteStructure q = quotient(a, partial);
      for (const QuasiIdentity* law : by_pred[level])
        if (!satisfies(q, *law)) return false;
      return true;
    };
    std::vector<size_t> pick(np, 0);
    int level = 0;
    if (!check_level(0)) continue;  // equation-only laws fail this theta0
    while (level >= 0) {
      if (level == np) {
        t.elems.push_back(cand);
        --level;
        if (level >= 0) ++pick[level];
        continue;
      }
      if (pick[level] >= choices[level].size()) {
        pick[level] = 0;
        --level;
        if (level >= 0) ++pick[level];
        continue;
      }
      cand.preds[level] = choices[level][pick[level]];
      if (check_level(level + 1)) {
        ++level;
      } else {
        ++pick[level];
      }
    }
  }

  if (t.elems.empty()) {
    // Even the one-element quotient fails; name the law it violates.
    StructureCongruence top;
    top.rep.assign(a.size, 0);
    top.preds.assign(np, (Mask(1) << a.size) - 1);
    std::string law = first_violated_law(quotient(a, top), laws);
    throw error("no congruences: one-element quotient violates law " + law);
  }

  std::sort(t.elems.begin(), t.elems.end(),
            [](const StructureCongruence& x, const StructureCongruence& y) {
              long wx = weight(x), wy = weight(y);
              if (wx != wy) return wx < wy;
              return std::tie(x.rep, x.preds) < std::tie(y.rep, y.preds);
            });
  int k = (int)t.elems.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      leq[i * k + j] = kcong_leq(t.elems[i], t.elems[j]);
  t.order = FiniteLattice::from_leq(k, leq);
  for (int i = 0; i < k; ++i)
    if (!t.order.leq(0, i))
      throw error("congruence set has no least element");
  return t;
}

namespace {

// Canonical generators are the theta0 pairs outside the diagonal plus the
// theta1 atoms outside the base structure; the full generator set keeps
// everything and serves as the well-definedness cross-check.
int induced_image(const CompactConSemilattice& t, const std::vector<int>& endo,
                  int i, bool full_generators) {
  const StructureCongruence& c = t.elems[i];
  std::vector<int> parts;
  for (size_t x = 0; x < c.rep.size(); ++x)
    for (size_t y = 0; y < x; ++y)
      if (c.related((int)x, (int)y))
        parts.push_back(t.least_containing_pair(endo[x], endo[y]));
  for (size_t k = 0; k < c.preds.size(); ++k) {
    Mask extra =
        full_generators ? c.preds[k] : c.preds[k] & ~t.base.preds[k];
    for (int x = 0; x < (int)c.rep.size(); ++x)
      if ((extra >> x) & 1)
        parts.push_back(t.least_containing_atom((int)k, endo[x]));
  }
  return t.join_all(parts);
}

}  // namespace

Operator induced_operator(const CompactConSemilattice& t,
                          const std::vector<int>& endo) {
  Operator op;
  op.images.resize(t.elems.size());
  for (size_t i = 0; i < t.elems.size(); ++i) {
    int a = induced_image(t, endo, (int)i, false);
    int b = induced_image(t, endo, (int)i, true);
    if (a != b) throw error("induced operator not well-defined");
    op.images[i] = a;
  }
  // Join- and zero-preservation.
  if (op.images[0] != 0) throw error("induced operator does not preserve zero");
  for (size_t i = 0; i < t.elems.size(); ++i)
    for (size_t j = 0; j < t.elems.size(); ++j)
      if (op.images[t.order.join((int)i, (int)j)] !=
          t.order.join(op.images[i], op.images[j]))
        throw error("induced operator does not preserve joins");
  return op;
}

int upsilon(const CompactConSemilattice& t) {
  for (size_t i = 0; i < t.elems.size(); ++i) {
    bool universal = true;
    for (int r : t.elems[i].rep) universal = universal && r == 0;
    if (universal) return (int)i;
  }
  StructureCongruence top;
  top.rep.assign(t.base.size, 0);
  top.preds.assign(t.base.preds.size(), (Mask(1) << t.base.size) - 1);
  FiniteStructure q;
  q.size = 1;
  q.ops.assign(t.base.ops.size(), {0});
  q.consts.assign(t.base.consts.size(), 0);
  q.preds.assign(t.base.preds.size(), 1);
  std::string law = first_violated_law(q, t.laws);
  throw error("one-element quotient violates law " + law);
}

OperatorMonoid induced_monoid(const CompactConSemilattice& t,
                              const std::vector<std::vector<int>>& endos,
                              const std::vector<std::string>& names) {
  std::vector<Operator> gens;
  for (const auto& e : endos) gens.push_back(induced_operator(t, e));
  return monoid_closure(t.to_semilattice(), gens, names);
}

}  // namespace slat
