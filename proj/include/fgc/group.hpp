#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgc/arith.hpp"

namespace fgc {

using Elem = int;

/// Hard cap on group order; a dense table of this size is ~50 MB.
inline constexpr int kMaxOrder = 5000;

// A finite group as a dense Cayley table. Element 0 is the identity.
// Construction validates every group law: Latin square, identity row and
// column, associativity (exhaustive up to order 256, at least 1e5 seeded
// random triples above), Lagrange on element orders. Instances are
// immutable afterwards, so concurrent reads need no coordination.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<std::uint16_t> table, std::string label);

  static FiniteGroup from_rows(const std::vector<std::vector<i64>>& rows, std::string label);

  int order() const { return n_; }
  Elem op(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inverse(Elem a) const { return inverses_[a]; }
  Elem conjugate(Elem g, Elem x) const { return op(op(g, x), inverse(g)); }
  Elem commutator(Elem a, Elem b) const {
    return op(op(inverse(a), inverse(b)), op(a, b));
  }

  /// a^k for k >= 0, by binary powering over the table.
  Elem power(Elem a, i64 k) const;

  int element_order(Elem a) const { return orders_[a]; }
  const std::vector<int>& orders() const { return orders_; }
  i64 exponent() const { return exponent_; }

  /// order -> number of elements of that order.
  std::map<int, i64> order_profile() const;

  bool is_abelian() const;
  bool is_cyclic() const { return exponent_ == n_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  void validate_table() const;
  void finish();

  int n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverses_;
  std::vector<int> orders_;
  i64 exponent_ = 1;
  std::string label_;
};

// Subset of a parent group, kept sorted; invariants (identity present,
// closure under product and inverse) are established by the producing
// operation, not rechecked on every use.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;  // sorted ascending, members[0] == 0

  int order() const { return int(members.size()); }
  bool contains(Elem x) const;
  bool is_trivial() const { return members.size() == 1; }
  bool is_whole_group() const { return parent && order() == parent->order(); }
};

/// Smallest subgroup containing the seeds (always contains the identity).
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds);

/// Is the given member set closed under the parent product?
bool is_closed_under_product(const FiniteGroup& g, const std::vector<Elem>& members);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Coset group of a normal subgroup; identity coset is element 0 and cosets
/// are ordered by their least member. Optionally reports element -> coset.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n,
                     std::vector<Elem>* coset_of = nullptr);

/// The subgroup as a standalone group with relabeled elements (sorted member
/// order, identity first).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// Intersection of two subgroups of the same parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

}  // namespace fgc
