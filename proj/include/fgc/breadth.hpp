#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgc/group.hpp"

namespace fgc {

struct BreadthEntry {
  i64 m = 1;
  i64 size_l = 1;  // |L_m| = #{x : x^m = 1}
  i64 f = 1;       // local breadth |L_m| / m
};

struct BreadthProfile {
  std::string label;
  i64 exponent = 1;
  std::vector<BreadthEntry> entries;  // one per divisor m of the exponent, ascending

  const BreadthEntry* at(i64 m) const;
};

struct CyclicCounts {
  std::map<int, i64> c;  // order k -> number of cyclic subgroups of order k
};

/// Elements x with x^m = 1, i.e. whose order divides m. Defined for any
/// m >= 1; equals L_gcd(m, exp).
std::vector<Elem> l_m_set(const FiniteGroup& g, i64 m);
i64 l_m_size(const FiniteGroup& g, i64 m);

/// c_k = (#elements of order k) / phi(k); the division is exact for every
/// genuine group and a non-exact one signals a corrupted table.
CyclicCounts cyclic_counts(const FiniteGroup& g);

/// Breadth entries over the divisors of exp(G). Asserts m | |L_m| and the
/// counting identity |L_m| = sum over k | m of c_k phi(k) for every entry.
BreadthProfile breadth_profile(const FiniteGroup& g);

/// Local breadth at one m (m | |G| guaranteed integral; asserted).
i64 local_breadth(const FiniteGroup& g, i64 m);

struct FrobeniusEntry {
  i64 m = 1;
  i64 size_l = 1;
  bool divides = true;           // m | |L_m|
  bool kernel_case = false;      // |L_m| == m
  bool kernel_verified = false;  // closure + normality checked when kernel_case
};

struct FrobeniusVerdict {
  bool pass = true;                    // all divisibility (and kernel) checks passed
  std::vector<FrobeniusEntry> entries;  // one per divisor m of |G|, ascending
};

/// Divisibility of |L_m| by m for every divisor m of |G|; where |L_m| = m the
/// kernel subgroup property is verified as well.
FrobeniusVerdict frobenius_check(const FiniteGroup& g);

/// When |L_m| = m for m | |G|, returns those elements as a verified subgroup
/// (closed, inverse-closed, invariant under every inner automorphism).
/// Returns nothing when |L_m| != m. A closure failure in the |L_m| = m case
/// is reported as a counterexample via ErrorCode::CheckFailed.
std::optional<Subgroup> frobenius_kernel(const FiniteGroup& g, i64 m);

struct QVerdict {
  bool ok = true;
  i64 witness_m = 0;  // least violating divisor when !ok
  i64 witness_f = 0;
};

/// f(m) <= m for every divisor m of exp(G)?
QVerdict is_q_group(const FiniteGroup& g);

/// f(m) <= bound for every divisor m of exp(G)?
QVerdict bound_check(const FiniteGroup& g, i64 bound);

}  // namespace fgc
