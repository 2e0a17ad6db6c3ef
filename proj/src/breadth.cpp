#include "fgc/breadth.hpp"

#include <algorithm>

#include "fgc/error.hpp"

namespace fgc {

const BreadthEntry* BreadthProfile::at(i64 m) const {
  for (const auto& e : entries)
    if (e.m == m) return &e;
  return nullptr;
}

std::vector<Elem> l_m_set(const FiniteGroup& g, i64 m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "l_m_set: m must be >= 1");
  std::vector<Elem> out;
  for (int x = 0; x < g.order(); ++x)
    if (m % g.element_order(x) == 0) out.push_back(x);
  return out;
}

i64 l_m_size(const FiniteGroup& g, i64 m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "l_m_size: m must be >= 1");
  i64 count = 0;
  for (int x = 0; x < g.order(); ++x)
    if (m % g.element_order(x) == 0) ++count;
  return count;
}

CyclicCounts cyclic_counts(const FiniteGroup& g) {
  CyclicCounts out;
  for (const auto& [k, count] : g.order_profile()) {
    i64 phi = totient(k);
    if (count % phi != 0)
      fail(ErrorCode::Internal, "cyclic_counts: element count at order " + std::to_string(k) +
                                    " is not a multiple of phi; corrupted table");
    out.c[k] = count / phi;
  }
  return out;
}

i64 local_breadth(const FiniteGroup& g, i64 m) {
  i64 size = l_m_size(g, m);
  if (size % m != 0)
    fail(ErrorCode::Internal, "local breadth: m = " + std::to_string(m) +
                                  " does not divide |L_m| = " + std::to_string(size) +
                                  " in " + g.label() + "; corrupted table");
  return size / m;
}

BreadthProfile breadth_profile(const FiniteGroup& g) {
  BreadthProfile profile;
  profile.label = g.label();
  profile.exponent = g.exponent();
  const CyclicCounts counts = cyclic_counts(g);
  for (i64 m : divisors(profile.exponent).divisors) {
    BreadthEntry entry;
    entry.m = m;
    entry.size_l = l_m_size(g, m);
    if (entry.size_l % m != 0)
      fail(ErrorCode::Internal, "breadth_profile: m = " + std::to_string(m) +
                                    " does not divide |L_m| in " + g.label());
    entry.f = entry.size_l / m;
    // Counting identity: |L_m| = sum over k | m of c_k phi(k).
    i64 sum = 0;
    for (i64 k : divisors(m).divisors) {
      auto it = counts.c.find(int(k));
      if (it != counts.c.end()) sum += it->second * totient(k);
    }
    if (sum != entry.size_l)
      fail(ErrorCode::Internal, "breadth_profile: counting identity fails at m = " +
                                    std::to_string(m) + " in " + g.label());
    profile.entries.push_back(entry);
  }
  return profile;
}

FrobeniusVerdict frobenius_check(const FiniteGroup& g) {
  FrobeniusVerdict verdict;
  for (i64 m : divisors(g.order()).divisors) {
    FrobeniusEntry entry;
    entry.m = m;
    entry.size_l = l_m_size(g, m);
    entry.divides = entry.size_l % m == 0;
    entry.kernel_case = entry.size_l == m;
    if (!entry.divides) verdict.pass = false;
    if (entry.kernel_case) {
      entry.kernel_verified = frobenius_kernel(g, m).has_value();
      if (!entry.kernel_verified) verdict.pass = false;
    }
    verdict.entries.push_back(entry);
  }
  return verdict;
}

std::optional<Subgroup> frobenius_kernel(const FiniteGroup& g, i64 m) {
  if (m < 1 || g.order() % m != 0)
    fail(ErrorCode::InvalidArgument, "frobenius_kernel: m must divide the group order");
  std::vector<Elem> members = l_m_set(g, m);
  if (i64(members.size()) != m) return std::nullopt;
  std::vector<char> in(g.order(), 0);
  for (Elem x : members) in[x] = 1;
  for (Elem a : members) {
    if (!in[g.inverse(a)])
      fail(ErrorCode::CheckFailed, "frobenius_kernel: L_" + std::to_string(m) + " of " +
                                       g.label() + " with |L_m| = m is not inverse-closed");
    for (Elem b : members)
      if (!in[g.op(a, b)])
        fail(ErrorCode::CheckFailed, "frobenius_kernel: L_" + std::to_string(m) + " of " +
                                         g.label() +
                                         " with |L_m| = m is not closed under the product");
  }
  // Characteristic would need every automorphism; inner automorphisms are
  // what the table can certify directly.
  for (int a = 0; a < g.order(); ++a)
    for (Elem x : members)
      if (!in[g.conjugate(a, x)])
        fail(ErrorCode::CheckFailed, "frobenius_kernel: L_" + std::to_string(m) + " of " +
                                         g.label() + " is not invariant under conjugation");
  return Subgroup{&g, std::move(members)};
}

namespace {

QVerdict check_f_bound(const FiniteGroup& g, bool against_m, i64 bound) {
  QVerdict verdict;
  for (i64 m : divisors(g.exponent()).divisors) {
    i64 f = local_breadth(g, m);
    i64 limit = against_m ? m : bound;
    if (f > limit) {
      verdict.ok = false;
      verdict.witness_m = m;
      verdict.witness_f = f;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

QVerdict is_q_group(const FiniteGroup& g) { return check_f_bound(g, true, 0); }

QVerdict bound_check(const FiniteGroup& g, i64 bound) {
  if (bound < 1) fail(ErrorCode::InvalidArgument, "bound_check: bound must be >= 1");
  return check_f_bound(g, false, bound);
}

}  // namespace fgc
