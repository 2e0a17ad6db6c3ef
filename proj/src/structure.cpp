#include "fgc/structure.hpp"

#include <algorithm>
#include <set>

#include "fgc/error.hpp"

namespace fgc {

namespace {

bool same_members(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

SeriesReport run_series(const FiniteGroup& g, SeriesKind kind) {
  SeriesReport report;
  report.kind = kind;
  Subgroup current = whole_group(g);
  report.chain.push_back(current);
  while (true) {
    Subgroup next = kind == SeriesKind::Derived
                        ? commutator_subgroup(g, current, current)
                        : commutator_subgroup(g, current, whole_group(g));
    if (same_members(next, current)) break;  // stabilized
    report.chain.push_back(next);
    current = std::move(next);
    if (current.is_trivial()) break;
  }
  report.reached_trivial = report.chain.back().is_trivial();
  return report;
}

}  // namespace

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::set<Elem> seeds;
  for (Elem a : h.members)
    for (Elem b : k.members) seeds.insert(g.commutator(a, b));
  std::vector<Elem> seed_list(seeds.begin(), seeds.end());
  return subgroup_closure(g, seed_list);
}

SeriesReport derived_series(const FiniteGroup& g) { return run_series(g, SeriesKind::Derived); }

SeriesReport lower_central_series(const FiniteGroup& g) {
  return run_series(g, SeriesKind::LowerCentral);
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).reached_trivial; }

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).reached_trivial; }

int derived_length(const FiniteGroup& g) {
  SeriesReport s = derived_series(g);
  if (!s.reached_trivial) return -1;
  return int(s.chain.size()) - 1;
}

bool is_metabelian(const FiniteGroup& g) {
  int len = derived_length(g);
  return len >= 0 && len <= 2;
}

PNilpotence is_p_nilpotent(const FiniteGroup& g, i64 p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "is_p_nilpotent: p must be prime");
  PNilpotence result;
  std::vector<Elem> coprime;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) coprime.push_back(x);
  if (!is_closed_under_product(g, coprime)) return result;
  result.yes = true;
  result.complement = Subgroup{&g, std::move(coprime)};
  return result;
}

FiniteGroup abelianization(const FiniteGroup& g, std::vector<Elem>* coset_of) {
  Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
  return quotient(g, derived, coset_of);
}

namespace {

// Index-3 subgroups of an abelian group: kernels of the surjections onto
// C_3. Functional values are propagated from a generating set.
std::vector<std::vector<Elem>> index3_subgroups_of_abelian(const FiniteGroup& a) {
  std::vector<std::vector<Elem>> out;
  if (a.order() % 3 != 0) return out;
  // greedy generating set
  std::vector<Elem> gens;
  Subgroup closure = trivial_subgroup(a);
  while (closure.order() < a.order()) {
    Elem next = -1;
    for (int x = 0; x < a.order(); ++x)
      if (!closure.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    closure = subgroup_closure(a, gens);
  }
  std::set<std::vector<Elem>> seen;
  std::vector<int> assign(gens.size(), 0);
  while (true) {
    // next assignment of {0,1,2} to generators
    int i = 0;
    while (i < int(assign.size()) && assign[i] == 2) assign[i++] = 0;
    if (i == int(assign.size())) break;
    ++assign[i];
    // propagate chi over the group; chi(x*g) = chi(x) + chi(g) mod 3
    std::vector<int> chi(a.order(), -1);
    chi[0] = 0;
    bool consistent = true;
    std::vector<Elem> frontier{0};
    while (!frontier.empty() && consistent) {
      std::vector<Elem> next_frontier;
      for (Elem x : frontier) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          Elem y = a.op(x, gens[gi]);
          int value = (chi[x] + assign[gi]) % 3;
          if (chi[y] < 0) {
            chi[y] = value;
            next_frontier.push_back(y);
          } else if (chi[y] != value) {
            consistent = false;  // order of generator incompatible with assignment
            break;
          }
        }
        if (!consistent) break;
      }
      frontier = std::move(next_frontier);
    }
    if (!consistent) continue;
    // also reject assignments whose chi is not a homomorphism onto C_3
    bool onto = false;
    for (int x = 0; x < a.order() && !onto; ++x) onto = chi[x] != 0;
    if (!onto) continue;
    bool hom = true;
    for (int x = 0; x < a.order() && hom; ++x)
      for (int y = 0; y < a.order() && hom; ++y)
        if (chi[a.op(x, y)] != (chi[x] + chi[y]) % 3) hom = false;
    if (!hom) continue;
    std::vector<Elem> kernel;
    for (int x = 0; x < a.order(); ++x)
      if (chi[x] == 0) kernel.push_back(x);
    if (3 * i64(kernel.size()) != a.order()) continue;
    if (seen.insert(kernel).second) out.push_back(std::move(kernel));
  }
  return out;
}

}  // namespace

std::optional<Subgroup> qgroups_ii_witness(const FiniteGroup& g) {
  std::vector<Subgroup> candidates;
  if (is_p_nilpotent(g, 2).yes) candidates.push_back(whole_group(g));
  if (g.order() % 3 == 0) {
    std::vector<Elem> coset_of;
    FiniteGroup ab = abelianization(g, &coset_of);
    for (const auto& kernel : index3_subgroups_of_abelian(ab)) {
      std::vector<char> in_kernel(ab.order(), 0);
      for (Elem x : kernel) in_kernel[x] = 1;
      std::vector<Elem> members;
      for (int x = 0; x < g.order(); ++x)
        if (in_kernel[coset_of[x]]) members.push_back(x);
      Subgroup m{&g, std::move(members)};
      // preimage of a subgroup of G/G' contains G', hence is normal
      FiniteGroup induced = subgroup_as_group(g, m);
      if (is_p_nilpotent(induced, 2).yes) candidates.push_back(std::move(m));
    }
  }
  if (candidates.empty()) return std::nullopt;
  const Subgroup* best = &candidates[0];
  for (const auto& c : candidates)
    if (std::lexicographical_compare(c.members.begin(), c.members.end(), best->members.begin(),
                                     best->members.end()))
      best = &c;
  return *best;
}

namespace {

i64 p_part(i64 n, i64 p) {
  i64 part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

std::vector<Elem> normalizer(const FiniteGroup& g, const Subgroup& p) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : p.members) in[x] = 1;
  std::vector<Elem> out;
  for (int a = 0; a < g.order(); ++a) {
    bool stabilizes = true;
    for (Elem x : p.members)
      if (!in[g.conjugate(a, x)]) {
        stabilizes = false;
        break;
      }
    if (stabilizes) out.push_back(a);
  }
  return out;
}

}  // namespace

Subgroup sylow_subgroup(const FiniteGroup& g, i64 p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "sylow_subgroup: p must be prime");
  const i64 target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);
  // seed: an element of order exactly p
  Elem seed = -1;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (o % p == 0) {
      seed = g.power(x, o / p);
      break;
    }
  }
  if (seed < 0)
    fail(ErrorCode::Internal, "sylow_subgroup: no element of order divisible by " +
                                  std::to_string(p) + " although p divides |G|");
  Subgroup current = subgroup_closure(g, std::vector<Elem>{seed});
  // Below Sylow order the normalizer is strictly larger than the subgroup
  // itself, so some p-element outside keeps the growth going.
  while (i64(current.order()) < target) {
    std::vector<Elem> n = normalizer(g, current);
    Elem extend = -1;
    for (Elem a : n) {
      if (current.contains(a)) continue;
      int o = g.element_order(a);
      i64 coprime_part = o;
      while (coprime_part % p == 0) coprime_part /= p;
      Elem h = g.power(a, coprime_part);  // p-power order
      if (h != 0 && !current.contains(h)) {
        extend = h;
        break;
      }
    }
    if (extend < 0)
      fail(ErrorCode::Internal, "sylow_subgroup: normalizer growth stalled below the p-part");
    std::vector<Elem> seeds = current.members;
    seeds.push_back(extend);
    Subgroup next = subgroup_closure(g, seeds);
    if (next.order() <= current.order())
      fail(ErrorCode::Internal, "sylow_subgroup: closure did not grow");
    current = std::move(next);
  }
  if (i64(current.order()) != target)
    fail(ErrorCode::Internal, "sylow_subgroup: overshot the p-part");
  return current;
}

Subgroup p_core(const FiniteGroup& g, i64 p) {
  Subgroup sylow = sylow_subgroup(g, p);
  std::vector<char> core(g.order(), 0);
  for (Elem x : sylow.members) core[x] = 1;
  for (int a = 0; a < g.order(); ++a) {
    std::vector<char> conj(g.order(), 0);
    for (Elem x : sylow.members) conj[g.conjugate(a, x)] = 1;
    for (int x = 0; x < g.order(); ++x) core[x] = core[x] && conj[x];
  }
  std::vector<Elem> members;
  for (int x = 0; x < g.order(); ++x)
    if (core[x]) members.push_back(x);
  return Subgroup{&g, std::move(members)};
}

Subgroup fitting_subgroup(const FiniteGroup& g) {
  std::set<Elem> seeds;
  for (i64 p : prime_factors(g.order()))
    for (Elem x : p_core(g, p).members) seeds.insert(x);
  std::vector<Elem> seed_list(seeds.begin(), seeds.end());
  Subgroup fitting = subgroup_closure(g, seed_list);
  if (!is_normal(g, fitting))
    fail(ErrorCode::Internal, "fitting_subgroup: result is not normal in " + g.label());
  if (!is_nilpotent(subgroup_as_group(g, fitting)))
    fail(ErrorCode::Internal, "fitting_subgroup: result is not nilpotent in " + g.label());
  return fitting;
}

bool fitting_quotient_cyclic(const FiniteGroup& g) {
  Subgroup fitting = fitting_subgroup(g);
  if (fitting.is_whole_group()) return true;  // trivial quotient
  FiniteGroup q = quotient(g, fitting);
  return q.is_cyclic();
}

std::vector<i64> abelian_invariant_factors(const FiniteGroup& g) {
  if (!g.is_abelian())
    fail(ErrorCode::InvalidArgument, "abelian_invariant_factors: group is not abelian");
  // Peel off a cyclic factor of exponent order; the quotient carries the rest.
  std::vector<i64> factors;
  FiniteGroup current = g;
  while (current.order() > 1) {
    i64 e = current.exponent();
    Elem x = -1;
    for (int i = 0; i < current.order(); ++i)
      if (current.element_order(i) == e) {
        x = i;
        break;
      }
    Subgroup cyclic = subgroup_closure(current, std::vector<Elem>{x});
    FiniteGroup next = quotient(current, cyclic);
    factors.push_back(e);
    current = std::move(next);
  }
  std::reverse(factors.begin(), factors.end());  // d_1 | d_2 | ... | d_r
  return factors;
}

StructureReport structure_report(const FiniteGroup& g) {
  StructureReport report;
  int len = derived_length(g);
  report.derived_len = len;
  report.solvable = len >= 0;
  report.nilpotent = is_nilpotent(g);
  report.metabelian = len >= 0 && len <= 2;
  report.two_nilpotent = is_p_nilpotent(g, 2).yes;
  report.fitting = fitting_subgroup(g);
  report.fitting_quotient_is_cyclic = fitting_quotient_cyclic(g);
  report.two_nilpotent_witness = qgroups_ii_witness(g);
  return report;
}

}  // namespace fgc
