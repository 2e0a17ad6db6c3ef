#pragma once

#include <optional>
#include <vector>

#include "fgc/group.hpp"

namespace fgc {

enum class SeriesKind { Derived, LowerCentral };

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subgroup> chain;  // strictly decreasing until the last term
  bool reached_trivial = false; // false means the chain stabilized above 1
};

/// G >= G' >= G'' >= ... until trivial or stable.
SeriesReport derived_series(const FiniteGroup& g);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until trivial or stable.
SeriesReport lower_central_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_metabelian(const FiniteGroup& g);

/// Steps of the derived series down to the trivial subgroup; -1 when the
/// series stabilizes above it (not solvable).
int derived_length(const FiniteGroup& g);

/// Subgroup generated by commutators [h, k], h in H, k in K.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

struct PNilpotence {
  bool yes = false;
  Subgroup complement;  // the p'-elements, when they close into a subgroup
};

/// A group is p-nilpotent exactly when its elements of order coprime to p
/// are closed under the product; that set is then the normal p-complement.
PNilpotence is_p_nilpotent(const FiniteGroup& g, i64 p);

/// A normal subgroup M of index 1 or 3 whose induced group is 2-nilpotent,
/// if one exists; ties resolved by lexicographically least member set.
/// Index-3 candidates are found as preimages of index-3 subgroups of the
/// abelianization.
std::optional<Subgroup> qgroups_ii_witness(const FiniteGroup& g);

/// A Sylow p-subgroup, grown by iterated normalizer extension.
Subgroup sylow_subgroup(const FiniteGroup& g, i64 p);

/// O_p(G): intersection of all conjugates of one Sylow p-subgroup.
Subgroup p_core(const FiniteGroup& g, i64 p);

/// Fitting subgroup: closure of the union of the p-cores. Verified normal
/// and nilpotent before returning.
Subgroup fitting_subgroup(const FiniteGroup& g);

bool fitting_quotient_cyclic(const FiniteGroup& g);

/// Invariant factors d_1 | d_2 | ... | d_r of an abelian group (empty for
/// the trivial group). Rejects nonabelian input.
std::vector<i64> abelian_invariant_factors(const FiniteGroup& g);

/// Abelianization G/[G,G] together with the projection map.
FiniteGroup abelianization(const FiniteGroup& g, std::vector<Elem>* coset_of = nullptr);

struct StructureReport {
  bool solvable = false;
  bool nilpotent = false;
  bool metabelian = false;
  bool two_nilpotent = false;  // 2-nilpotent as a whole group
  int derived_len = -1;        // -1 = infinite (not solvable)
  Subgroup fitting;
  bool fitting_quotient_is_cyclic = false;
  std::optional<Subgroup> two_nilpotent_witness;  // qgroups_ii_witness
};

StructureReport structure_report(const FiniteGroup& g);

}  // namespace fgc
