#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slat/operators.hpp"

namespace slat {

/// All join-semilattices with 0 on exactly n elements, one per isomorphism
/// class, in a deterministic canonical order.
std::vector<Semilattice> all_semilattices(int n);

/// Sizes 1..max_n inclusive.
std::vector<Semilattice> all_semilattices_up_to(int max_n);

using Rng = std::mt19937;

/// Uniform pick over the isomorphism classes with 2..max_n elements.
Semilattice random_semilattice(Rng& rng, int max_n);

/// Random operator on s: rejection sampling over image maps fixing zero,
/// falling back to the identity after `tries` failures.
Operator random_operator(const Semilattice& s, Rng& rng, int tries = 500);

/// Random single-generator operator monoid.
OperatorMonoid random_single_generator_monoid(const Semilattice& s, Rng& rng);

/// Random cyclic group of automorphisms of order at most max_order.
OperatorMonoid random_automorphism_group(const Semilattice& s, Rng& rng,
                                         int max_order = 3);

}  // namespace slat
