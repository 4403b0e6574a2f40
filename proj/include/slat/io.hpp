#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slat/congruence.hpp"
#include "slat/eon.hpp"
#include "slat/lattice.hpp"

namespace slat {

/// A parsed input: semilattice plus the operator monoid generated by the
/// declared ops (the trivial monoid when none are declared).
struct Instance {
  Semilattice s;
  OperatorMonoid m;
  std::vector<std::string> op_names;  // generator names as declared
};

/// Text format, one item per line, '#' comments:
///   semilattice <n>
///   join <n*n space-separated indices, row-major>
///   zero <i>
///   op <name> <n images>     (repeatable)
///   end
/// Throws slat::error with a one-line reason on invalid input.
Instance parse_instance(std::istream& in, int closure_bound = 10000);
Instance parse_instance_text(const std::string& text,
                             int closure_bound = 10000);

std::string render_instance(const Instance& inst);

/// Built-in fixtures: "3-chain", "s22-swap", "s22-trivial", "omega-<n>".
Instance fixture_instance(const std::string& name);
bool is_lattice_fixture(const std::string& name);  // "dual-leaf"

/// DOT digraph of a Hasse diagram (edges bottom-to-top).
std::string dot_of_lattice(const FiniteLattice& l,
                           const std::vector<std::string>& labels);

/// `cover <lower> <upper>` lines.
std::string edges_of_lattice(const FiniteLattice& l,
                             const std::vector<std::string>& labels);

std::vector<std::string> con_labels(const ConLattice& c);
std::vector<std::string> eon_labels(const EonLattice& e);

}  // namespace slat
