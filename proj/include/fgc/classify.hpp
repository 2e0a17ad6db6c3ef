#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgc/descriptor.hpp"
#include "fgc/group.hpp"

namespace fgc {

// The five families of the f <= 2 classification.
enum class FamilyId {
  I_Cyclic,        // C_n
  II_C2Layer,      // C_h x C_{2^(k-1)} x C_2, h odd, k >= 2
  III_Quaternion,  // C_h x Q8, h odd
  IV_Modular,      // C_h x mod2(t), h odd, t >= 4
  V_Triangle,      // C_h x famV(s), gcd(h,6) = 1, s >= 1
};

std::string family_name(FamilyId id);

struct FamilyInstance {
  FamilyId id = FamilyId::I_Cyclic;
  i64 h = 1;      // odd (I ignores it; V needs gcd(h,6) = 1)
  i64 n = 0;      // family I parameter
  i64 k = 0;      // family II
  i64 t = 0;      // family IV
  i64 s = 0;      // family V
  GroupDescriptor descriptor;

  i64 order() const { return descriptor.order(); }
  std::string text() const;
};

/// Validated family constructors; a violated side condition is rejected with
/// the offending clause named.
FamilyInstance family_cyclic(i64 n);
FamilyInstance family_c2layer(i64 h, i64 k);
FamilyInstance family_quaternion(i64 h);
FamilyInstance family_modular(i64 h, i64 t);
FamilyInstance family_triangle(i64 h, i64 s);

/// Generic entry point; params per family: I(n), II(h,k), III(h), IV(h,t), V(h,s).
FamilyInstance family_instance(FamilyId id, const std::vector<i64>& params);

/// All instances whose built group has the given order.
std::vector<FamilyInstance> family_instances_of_order(i64 order);

/// Build the instance and check f(m) <= 2 over all m | exp.
bool verify_family_forward(const FamilyInstance& instance);

// A cheap isomorphism invariant.
struct Fingerprint {
  i64 order = 1;
  std::vector<i64> abelian_invariants;  // of G/G'
  std::vector<std::pair<int, i64>> order_profile;
  i64 center_order = 1;
  int derived_len = 0;  // -1 = infinite
  i64 exponent = 1;

  bool operator==(const Fingerprint&) const = default;
  std::string text() const;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// Hard cap for the exact isomorphism search.
inline constexpr int kIsoCap = 64;

/// Exact isomorphism test (fingerprint prefilter, then backtracking over
/// generator images). Orders above kIsoCap are rejected, never guessed.
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// A greedy minimal generating set: repeatedly the least element that
/// enlarges the closure.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

/// Witness (a, b) with |<a>| * |<b>| = |G|, <a> meet <b> trivial, and
/// <a><b> = G; least pair in index order, or nothing.
std::optional<std::pair<Elem, Elem>> is_product_of_two_cyclic(const FiniteGroup& g);

struct ConverseOutcome {
  std::string label;
  bool in_f2_class = false;   // bound_check(G, 2)
  bool matched = false;       // isomorphic family instance found
  bool exact = true;          // exact search (<= kIsoCap) vs fingerprint match
  std::string family_text;    // matched instance
  i64 witness_m = 0, witness_f = 0;  // when not in the class
};

/// Match one group against the classification families.
ConverseOutcome classify_f2(const FiniteGroup& g);

}  // namespace fgc
