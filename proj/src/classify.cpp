#include "fgc/classify.hpp"

#include <algorithm>

#include "fgc/breadth.hpp"
#include "fgc/error.hpp"
#include "fgc/structure.hpp"

namespace fgc {

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::I_Cyclic: return "I-cyclic";
    case FamilyId::II_C2Layer: return "II-C2layer";
    case FamilyId::III_Quaternion: return "III-quaternion";
    case FamilyId::IV_Modular: return "IV-modular";
    case FamilyId::V_Triangle: return "V-triangle";
  }
  fail(ErrorCode::Internal, "family_name: unhandled id");
}

std::string FamilyInstance::text() const {
  std::string out = family_name(id) + "[";
  switch (id) {
    case FamilyId::I_Cyclic: out += "n=" + std::to_string(n); break;
    case FamilyId::II_C2Layer: out += "h=" + std::to_string(h) + ",k=" + std::to_string(k); break;
    case FamilyId::III_Quaternion: out += "h=" + std::to_string(h); break;
    case FamilyId::IV_Modular: out += "h=" + std::to_string(h) + ",t=" + std::to_string(t); break;
    case FamilyId::V_Triangle: out += "h=" + std::to_string(h) + ",s=" + std::to_string(s); break;
  }
  return out + "] = " + descriptor.text();
}

namespace {

void require_odd(i64 h, const char* family) {
  if (h < 1 || h % 2 == 0)
    fail(ErrorCode::InvalidArgument,
         std::string(family) + ": requires odd h >= 1, got h = " + std::to_string(h));
}

GroupDescriptor with_cyclic_factor(i64 h, GroupDescriptor core) {
  if (h == 1) return core;
  return GroupDescriptor::direct({GroupDescriptor::cyclic(h), std::move(core)});
}

}  // namespace

FamilyInstance family_cyclic(i64 n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "family I: requires n >= 1");
  FamilyInstance inst;
  inst.id = FamilyId::I_Cyclic;
  inst.n = n;
  inst.descriptor = GroupDescriptor::cyclic(n);
  return inst;
}

FamilyInstance family_c2layer(i64 h, i64 k) {
  require_odd(h, "family II");
  if (k < 2) fail(ErrorCode::InvalidArgument, "family II: requires k >= 2, got k = " + std::to_string(k));
  FamilyInstance inst;
  inst.id = FamilyId::II_C2Layer;
  inst.h = h;
  inst.k = k;
  std::vector<GroupDescriptor> factors;
  if (h > 1) factors.push_back(GroupDescriptor::cyclic(h));
  factors.push_back(GroupDescriptor::cyclic(i64(1) << (k - 1)));
  factors.push_back(GroupDescriptor::cyclic(2));
  inst.descriptor = GroupDescriptor::direct(std::move(factors));
  return inst;
}

FamilyInstance family_quaternion(i64 h) {
  require_odd(h, "family III");
  FamilyInstance inst;
  inst.id = FamilyId::III_Quaternion;
  inst.h = h;
  inst.descriptor = with_cyclic_factor(h, GroupDescriptor::quaternion8());
  return inst;
}

FamilyInstance family_modular(i64 h, i64 t) {
  require_odd(h, "family IV");
  if (t < 4) fail(ErrorCode::InvalidArgument, "family IV: requires t >= 4, got t = " + std::to_string(t));
  FamilyInstance inst;
  inst.id = FamilyId::IV_Modular;
  inst.h = h;
  inst.t = t;
  inst.descriptor = with_cyclic_factor(h, GroupDescriptor::modular2(t));
  return inst;
}

FamilyInstance family_triangle(i64 h, i64 s) {
  if (h < 1 || gcd(h, 6) != 1)
    fail(ErrorCode::InvalidArgument,
         "family V: requires gcd(h,6) = 1, got h = " + std::to_string(h));
  if (s < 1) fail(ErrorCode::InvalidArgument, "family V: requires s >= 1, got s = " + std::to_string(s));
  FamilyInstance inst;
  inst.id = FamilyId::V_Triangle;
  inst.h = h;
  inst.s = s;
  inst.descriptor = with_cyclic_factor(h, GroupDescriptor::family_v(s));
  return inst;
}

FamilyInstance family_instance(FamilyId id, const std::vector<i64>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      fail(ErrorCode::InvalidArgument, "family_instance: " + family_name(id) + " takes " +
                                           std::to_string(count) + " parameter(s)");
  };
  switch (id) {
    case FamilyId::I_Cyclic: need(1); return family_cyclic(params[0]);
    case FamilyId::II_C2Layer: need(2); return family_c2layer(params[0], params[1]);
    case FamilyId::III_Quaternion: need(1); return family_quaternion(params[0]);
    case FamilyId::IV_Modular: need(2); return family_modular(params[0], params[1]);
    case FamilyId::V_Triangle: need(2); return family_triangle(params[0], params[1]);
  }
  fail(ErrorCode::Internal, "family_instance: unhandled id");
}

std::vector<FamilyInstance> family_instances_of_order(i64 order) {
  std::vector<FamilyInstance> out;
  if (order < 1) return out;
  out.push_back(family_cyclic(order));
  for (i64 k = 2; (i64(1) << k) <= order; ++k) {
    i64 pow2 = i64(1) << k;
    if (order % pow2 == 0 && (order / pow2) % 2 == 1) out.push_back(family_c2layer(order / pow2, k));
  }
  if (order % 8 == 0 && (order / 8) % 2 == 1) out.push_back(family_quaternion(order / 8));
  for (i64 t = 4; (i64(1) << t) <= order; ++t) {
    i64 pow2 = i64(1) << t;
    if (order % pow2 == 0 && (order / pow2) % 2 == 1) out.push_back(family_modular(order / pow2, t));
  }
  for (i64 s = 1; 3 * (i64(1) << s) <= order; ++s) {
    i64 base = 3 * (i64(1) << s);
    if (order % base == 0 && gcd(order / base, 6) == 1) out.push_back(family_triangle(order / base, s));
  }
  return out;
}

bool verify_family_forward(const FamilyInstance& instance) {
  FiniteGroup g = build(instance.descriptor);
  return bound_check(g, 2).ok;
}

std::string Fingerprint::text() const {
  std::string out = "o=" + std::to_string(order) + ";ab=";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(abelian_invariants[i]);
  }
  out += ";prof=";
  for (std::size_t i = 0; i < order_profile.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(order_profile[i].first) + ":" + std::to_string(order_profile[i].second);
  }
  out += ";z=" + std::to_string(center_order);
  out += ";dl=" + std::to_string(derived_len);
  out += ";exp=" + std::to_string(exponent);
  return out;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian_invariants = abelian_invariant_factors(abelianization(g));
  for (const auto& [o, count] : g.order_profile()) fp.order_profile.emplace_back(o, count);
  fp.center_order = center(g).order();
  fp.derived_len = derived_length(g);
  fp.exponent = g.exponent();
  return fp;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup closure = trivial_subgroup(g);
  while (closure.order() < g.order()) {
    Elem next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!closure.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

namespace {

// Backtracking isomorphism search. Generator images are chosen one at a
// time; after each choice the partial map is closed over products, which
// either extends it consistently or prunes the branch.
struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<Elem> gens;

  bool found = false;

  bool close(std::vector<int>& map, std::vector<char>& used, std::vector<Elem>& mapped) {
    // `mapped` lists the g-elements with images; grow until product-stable.
    std::size_t verified = 0;
    while (true) {
      std::size_t size_before = mapped.size();
      for (std::size_t i = 0; i < mapped.size(); ++i) {
        // pairs (i, j) with max(i, j) >= verified are new since last sweep
        for (std::size_t j = 0; j < mapped.size(); ++j) {
          if (i < verified && j < verified) continue;
          Elem x = mapped[i], y = mapped[j];
          Elem p = g.op(x, y);
          int q = h.op(map[x], map[y]);
          if (map[p] < 0) {
            if (used[q]) return false;  // image collision
            map[p] = q;
            used[q] = 1;
            mapped.push_back(p);
          } else if (map[p] != q) {
            return false;  // inconsistent with the partial homomorphism
          }
        }
      }
      verified = size_before;
      if (mapped.size() == size_before) return true;
    }
  }

  bool extend(std::size_t level, std::vector<int>& map, std::vector<char>& used,
              std::vector<Elem>& mapped) {
    if (level == gens.size()) return mapped.size() == std::size_t(g.order());
    Elem gen = gens[level];
    for (int candidate = 0; candidate < h.order(); ++candidate) {
      if (used[candidate]) continue;
      if (h.element_order(candidate) != g.element_order(gen)) continue;
      std::vector<int> map2 = map;
      std::vector<char> used2 = used;
      std::vector<Elem> mapped2 = mapped;
      map2[gen] = candidate;
      used2[candidate] = 1;
      mapped2.push_back(gen);
      if (close(map2, used2, mapped2) && extend(level + 1, map2, used2, mapped2)) return true;
    }
    return false;
  }

  bool run() {
    gens = greedy_generators(g);
    std::vector<int> map(g.order(), -1);
    std::vector<char> used(h.order(), 0);
    std::vector<Elem> mapped;
    map[0] = 0;
    used[0] = 1;
    mapped.push_back(0);
    return extend(0, map, used, mapped);
  }
};

}  // namespace

bool isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.order() > kIsoCap)
    fail(ErrorCode::Unsupported, "isomorphic: order " + std::to_string(g.order()) +
                                     " exceeds the exact-search cap " + std::to_string(kIsoCap));
  if (!(fingerprint(g) == fingerprint(h))) return false;
  IsoSearch search{g, h};
  return search.run();
}

std::optional<std::pair<Elem, Elem>> is_product_of_two_cyclic(const FiniteGroup& g) {
  const i64 n = g.order();
  std::vector<char> in_a(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const i64 ord_a = g.element_order(a);
    if (n % ord_a != 0) continue;
    const i64 need = n / ord_a;
    std::fill(in_a.begin(), in_a.end(), 0);
    Elem x = 0;
    do {
      in_a[x] = 1;
      x = g.op(x, a);
    } while (x != 0);
    for (Elem b = 0; b < g.order(); ++b) {
      if (g.element_order(b) != need) continue;
      // trivial intersection of the two cyclic subgroups
      bool trivial = true;
      Elem y = g.op(0, b);
      while (y != 0 && trivial) {
        if (in_a[y]) trivial = false;
        y = g.op(y, b);
      }
      if (!trivial) continue;
      // the setwise product must cover the group
      std::vector<char> covered(g.order(), 0);
      i64 count = 0;
      for (Elem u = 0; u < g.order(); ++u) {
        if (!in_a[u]) continue;
        Elem v = u;
        for (i64 i = 0; i < need; ++i) {
          if (!covered[v]) {
            covered[v] = 1;
            ++count;
          }
          v = g.op(v, b);
        }
      }
      if (count == n) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

ConverseOutcome classify_f2(const FiniteGroup& g) {
  ConverseOutcome outcome;
  outcome.label = g.label();
  QVerdict verdict = bound_check(g, 2);
  outcome.in_f2_class = verdict.ok;
  if (!verdict.ok) {
    outcome.witness_m = verdict.witness_m;
    outcome.witness_f = verdict.witness_f;
    return outcome;
  }
  outcome.exact = g.order() <= kIsoCap;
  Fingerprint fp;
  if (!outcome.exact) fp = fingerprint(g);
  for (const FamilyInstance& instance : family_instances_of_order(g.order())) {
    FiniteGroup candidate = build(instance.descriptor);
    bool match = outcome.exact ? isomorphic(g, candidate) : fingerprint(candidate) == fp;
    if (match) {
      outcome.matched = true;
      outcome.family_text = instance.text();
      return outcome;
    }
  }
  return outcome;
}

}  // namespace fgc
