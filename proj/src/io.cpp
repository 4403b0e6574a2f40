#include "slat/io.hpp"

#include <sstream>

namespace slat {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int to_int(const std::string& tok, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw error("expected integer for " + what + ", got '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(std::istream& in, int closure_bound) {
  std::vector<std::string> tokens = tokenize(in);
  size_t pos = 0;
  auto next = [&](const std::string& what) -> const std::string& {
    if (pos >= tokens.size()) throw error("unexpected end of input: " + what);
    return tokens[pos++];
  };

  int n = -1, zero = -1;
  std::vector<int> join_table;
  std::vector<Operator> raw_ops;
  std::vector<std::string> names;
  bool ended = false;
  while (!ended) {
    std::string kw = next("keyword");
    if (kw == "semilattice") {
      n = to_int(next("size"), "size");
      if (n <= 0) throw error("size must be positive");
    } else if (kw == "join") {
      if (n < 0) throw error("join before semilattice size");
      join_table.clear();
      for (int i = 0; i < n * n; ++i)
        join_table.push_back(to_int(next("join entry"), "join entry"));
    } else if (kw == "zero") {
      zero = to_int(next("zero index"), "zero index");
    } else if (kw == "op") {
      if (n < 0) throw error("op before semilattice size");
      std::string name = next("op name");
      Operator f;
      for (int i = 0; i < n; ++i)
        f.images.push_back(to_int(next("op image"), "op image"));
      raw_ops.push_back(std::move(f));
      names.push_back(name);
    } else if (kw == "end") {
      ended = true;
    } else {
      throw error("unknown keyword '" + kw + "'");
    }
  }
  if (n < 0) throw error("missing semilattice size");
  if (join_table.empty()) throw error("missing join table");
  if (zero < 0) throw error("missing zero index");

  Instance inst;
  std::vector<int> relabel;
  inst.s = Semilattice::validate(n, join_table, zero, &relabel);
  std::vector<Operator> ops;
  for (const Operator& f : raw_ops) {
    Operator g;
    g.images.resize(n);
    for (int x = 0; x < n; ++x) g.images[relabel[x]] = relabel[f.images[x]];
    ops.push_back(std::move(g));
  }
  inst.m = monoid_closure(inst.s, ops, names, closure_bound);
  inst.op_names = names;
  return inst;
}

Instance parse_instance_text(const std::string& text, int closure_bound) {
  std::istringstream in(text);
  return parse_instance(in, closure_bound);
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  int n = inst.s.size();
  out << "semilattice " << n << "\n";
  out << "join";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out << " " << inst.s.join(a, b);
  out << "\nzero 0\n";
  for (size_t i = 0; i < inst.op_names.size(); ++i) {
    int idx = -1;
    for (int j = 0; j < inst.m.size(); ++j)
      if (inst.m.names[j] == inst.op_names[i]) idx = j;
    if (idx < 0) continue;
    out << "op " << inst.op_names[i];
    for (int x = 0; x < n; ++x) out << " " << inst.m.elements[idx].images[x];
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

Instance fixture_instance(const std::string& name) {
  Instance inst;
  if (name == "3-chain") {
    inst.s = chain_semilattice(3);
    inst.m = trivial_monoid(inst.s);
    return inst;
  }
  if (name == "s22-trivial") {
    inst.s = diamond_semilattice();
    inst.m = trivial_monoid(inst.s);
    return inst;
  }
  if (name == "s22-swap") {
    inst.s = diamond_semilattice();
    Operator swap{{0, 2, 1, 3}};
    inst.m = monoid_closure(inst.s, {swap}, {"s"});
    inst.op_names = {"s"};
    return inst;
  }
  if (name.rfind("omega-", 0) == 0) {
    int n = to_int(name.substr(6), "omega size");
    if (n < 1 || n > 12) throw error("omega fixture size out of range");
    inst.s = chain_semilattice(n);
    Operator p;
    p.images.push_back(0);
    for (int x = 1; x < n; ++x) p.images.push_back(x - 1);
    inst.m = monoid_closure(inst.s, {p}, {"p"});
    inst.op_names = {"p"};
    return inst;
  }
  throw error("unknown fixture '" + name + "'");
}

bool is_lattice_fixture(const std::string& name) { return name == "dual-leaf"; }

std::string dot_of_lattice(const FiniteLattice& l,
                           const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < l.size(); ++i)
    out << "  \"" << labels[i] << "\";\n";
  for (auto [a, b] : l.cover_pairs())
    out << "  \"" << labels[a] << "\" -> \"" << labels[b] << "\";\n";
  out << "}\n";
  return out.str();
}

std::string edges_of_lattice(const FiniteLattice& l,
                             const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (auto [a, b] : l.cover_pairs())
    out << "cover " << labels[a] << " " << labels[b] << "\n";
  return out.str();
}

std::vector<std::string> con_labels(const ConLattice& c) {
  std::vector<std::string> out;
  for (size_t i = 0; i < c.elems.size(); ++i)
    out.push_back("c" + std::to_string(i));
  return out;
}

std::vector<std::string> eon_labels(const EonLattice& e) {
  std::vector<std::string> out;
  for (size_t i = 0; i < e.elems.size(); ++i)
    out.push_back("r" + std::to_string(i));
  return out;
}

}  // namespace slat
