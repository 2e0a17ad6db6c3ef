#include "fgc/group.hpp"

#include <algorithm>
#include <random>

#include "fgc/error.hpp"

namespace fgc {

FiniteGroup::FiniteGroup(int order, std::vector<std::uint16_t> table, std::string label)
    : n_(order), table_(std::move(table)), label_(std::move(label)) {
  if (n_ < 1) fail(ErrorCode::Validate, "group: order must be >= 1");
  if (n_ > kMaxOrder)
    fail(ErrorCode::Validate, "group: order " + std::to_string(n_) + " exceeds cap " +
                                  std::to_string(kMaxOrder));
  if (table_.size() != std::size_t(n_) * n_)
    fail(ErrorCode::Validate, "group: table size does not match order");
  validate_table();
  finish();
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<i64>>& rows, std::string label) {
  const int n = int(rows.size());
  if (n < 1 || n > kMaxOrder)
    fail(ErrorCode::Validate, "group: malformed table: bad row count");
  std::vector<std::uint16_t> table(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n)
      fail(ErrorCode::Parse, "group: malformed table: row " + std::to_string(i) +
                                 " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      i64 v = rows[i][j];
      if (v < 0 || v >= n)
        fail(ErrorCode::Parse, "group: malformed table: entry out of range at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
      table[std::size_t(i) * n + j] = std::uint16_t(v);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(label));
}

void FiniteGroup::validate_table() const {
  const int n = n_;
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = op(i, j);
      if (seen[v])
        fail(ErrorCode::Validate, "group: not a Latin square: row " + std::to_string(i) +
                                      " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = op(i, j);
      if (seen[v])
        fail(ErrorCode::Validate, "group: not a Latin square: column " + std::to_string(j) +
                                      " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  // Identity law at index 0.
  for (int j = 0; j < n; ++j) {
    if (op(0, j) != j || op(j, 0) != j)
      fail(ErrorCode::Validate, "group: identity is not element 0");
  }
  // Associativity: exhaustive for small tables, seeded sampling above.
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = op(a, b);
        for (int c = 0; c < n; ++c) {
          if (op(ab, c) != op(a, op(b, c)))
            fail(ErrorCode::Validate,
                 "group: associativity fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  } else {
    std::mt19937_64 rng(0x5eedf17eULL ^ (std::uint64_t(n) * 0x9e3779b97f4a7c15ULL));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (op(op(a, b), c) != op(a, op(b, c)))
        fail(ErrorCode::Validate,
             "group: associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
}

void FiniteGroup::finish() {
  const int n = n_;
  inverses_.resize(n);
  for (int i = 0; i < n; ++i) {
    int inv = -1;
    for (int j = 0; j < n; ++j)
      if (op(i, j) == 0) {
        inv = j;
        break;
      }
    if (inv < 0 || op(inv, i) != 0)
      fail(ErrorCode::Validate, "group: associativity fails: element " + std::to_string(i) +
                                    " has no two-sided inverse");
    inverses_[i] = std::uint16_t(inv);
  }
  orders_.resize(n);
  exponent_ = 1;
  for (int i = 0; i < n; ++i) {
    int k = 1;
    Elem y = i;
    while (y != 0) {
      y = op(y, i);
      ++k;
      if (k > n)
        fail(ErrorCode::Validate, "group: element " + std::to_string(i) + " has no finite order");
    }
    orders_[i] = k;
    if (n % k != 0)
      fail(ErrorCode::Validate, "group: order of element " + std::to_string(i) +
                                    " does not divide the group order");
    exponent_ = lcm(exponent_, k);
  }
}

Elem FiniteGroup::power(Elem a, i64 k) const {
  if (k < 0) fail(ErrorCode::InvalidArgument, "group: negative power");
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = op(result, base);
    base = op(base, base);
    k >>= 1;
  }
  return result;
}

std::map<int, i64> FiniteGroup::order_profile() const {
  std::map<int, i64> profile;
  for (int o : orders_) ++profile[o];
  return profile;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 1; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> elems;
  in[0] = 1;
  elems.push_back(0);
  for (Elem s : seeds) {
    if (s < 0 || s >= n) fail(ErrorCode::InvalidArgument, "subgroup_closure: seed out of range");
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
    }
  }
  // Product-closure of a finite subset containing the identity is already a
  // subgroup, since powers of each element run through its inverse.
  std::size_t next = 0;
  while (next < elems.size()) {
    Elem x = elems[next++];
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Elem p = g.op(x, elems[i]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
      Elem q = g.op(elems[i], x);
      if (!in[q]) {
        in[q] = 1;
        elems.push_back(q);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{&g, std::move(elems)};
}

bool is_closed_under_product(const FiniteGroup& g, const std::vector<Elem>& members) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : members) in[x] = 1;
  for (Elem a : members)
    for (Elem b : members)
      if (!in[g.op(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : h.members) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (Elem x : h.members)
      if (!in[g.conjugate(a, x)]) return false;
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, std::vector<Elem>* coset_of) {
  if (!is_closed_under_product(g, n.members))
    fail(ErrorCode::InvalidArgument, "quotient: subgroup members not closed");
  if (!is_normal(g, n))
    fail(ErrorCode::InvalidArgument, "quotient: subgroup is not normal");
  const int order = g.order();
  const int q = order / n.order();
  // Canonical coset id: least member of the coset. The identity coset
  // contains 0, so it sorts first and lands at index 0.
  std::vector<Elem> least(order, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < order; ++x) {
    if (least[x] >= 0) continue;
    reps.push_back(x);
    for (Elem h : n.members) least[g.op(x, h)] = x;
  }
  std::vector<int> index_of(order, -1);
  for (int i = 0; i < int(reps.size()); ++i) index_of[reps[i]] = i;
  std::vector<std::uint16_t> table(std::size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[std::size_t(i) * q + j] = std::uint16_t(index_of[least[g.op(reps[i], reps[j])]]);
  if (coset_of) {
    coset_of->assign(order, -1);
    for (int x = 0; x < order; ++x) (*coset_of)[x] = index_of[least[x]];
  }
  return FiniteGroup(q, std::move(table), g.label() + "/N" + std::to_string(n.order()));
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const int m = h.order();
  std::vector<int> index_of(g.order(), -1);
  for (int i = 0; i < m; ++i) index_of[h.members[i]] = i;
  std::vector<std::uint16_t> table(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = index_of[g.op(h.members[i], h.members[j])];
      if (p < 0) fail(ErrorCode::InvalidArgument, "subgroup_as_group: members not closed");
      table[std::size_t(i) * m + j] = std::uint16_t(p);
    }
  return FiniteGroup(m, std::move(table), g.label() + "[sub" + std::to_string(m) + "]");
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> members;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int a = 0; a < g.order() && central; ++a)
      if (g.op(x, a) != g.op(a, x)) central = false;
    if (central) members.push_back(x);
  }
  return Subgroup{&g, std::move(members)};
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> members(g.order());
  for (int i = 0; i < g.order(); ++i) members[i] = i;
  return Subgroup{&g, std::move(members)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{&g, {0}}; }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent)
    fail(ErrorCode::InvalidArgument, "intersect: subgroups of different parents");
  std::vector<Elem> members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(members));
  return Subgroup{a.parent, std::move(members)};
}

}  // namespace fgc
