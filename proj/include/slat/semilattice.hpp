#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slat {

/// Error carrying a one-line machine-readable reason.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Subset of a carrier as a bitmask, bit i = element i.
using Mask = std::uint32_t;

/// Finite join-semilattice with least element.  Carrier elements are the
/// indices 0..size()-1; the least element is normalized to index 0 on
/// construction, and the greatest element (join of the whole carrier) is
/// derived.  The order is a <= b iff join(a,b) == b.
class Semilattice {
 public:
  Semilattice() = default;  // empty placeholder; build via validate()

  /// Validates a join table against the semilattice axioms, normalizes the
  /// zero to index 0, and derives the top.  Throws slat::error naming the
  /// first violated axiom with indices.  `relabel`, when non-null, receives
  /// the permutation old index -> new index applied by the normalization.
  static Semilattice validate(int size, const std::vector<int>& join_table,
                              int zero, std::vector<int>* relabel = nullptr);

  int size() const { return size_; }
  int join(int a, int b) const { return table_[a * size_ + b]; }
  int zero() const { return 0; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  bool operator==(const Semilattice&) const = default;

 private:
  int size_ = 0;
  int top_ = 0;
  std::vector<int> table_;
};

/// Downward-closed, join-closed subset containing zero.
struct Ideal {
  Mask members = 0;
  bool contains(int x) const { return (members >> x) & 1; }
  bool operator==(const Ideal&) const = default;
};

/// Principal ideal of `a`.
Mask down_set(const Semilattice& s, int a);

/// All ideals, sorted by membership bitmask.  In a finite join-semilattice
/// every ideal is principal, so there are exactly size() of them.
std::vector<Ideal> ideals(const Semilattice& s);

/// Convenience constructors used by fixtures and tests.

/// Chain 0 < 1 < ... < n-1 with join = max.
Semilattice chain_semilattice(int n);

/// Diamond 0 < a,b < 1 on indices {0,1,2,3} with 1 v 2 = 3.
Semilattice diamond_semilattice();

}  // namespace slat
