#include "foxcolor/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "foxcolor/errors.hpp"

namespace foxcolor {
namespace {

int reduce(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::Aut ? "aut" : "inn";
}

GroupKind parse_group_kind(std::string_view text) {
  if (text == "aut" || text == "Aut") return GroupKind::Aut;
  if (text == "inn" || text == "Inn") return GroupKind::Inn;
  throw InputError("group must be 'aut' or 'inn', got '" + std::string(text) + "'");
}

int AffineMap::operator()(int x) const {
  return reduce(1LL * lambda * x + mu, modulus);
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  if (outer.modulus != inner.modulus) throw InputError("modulus mismatch");
  const int m = outer.modulus;
  return {m, reduce(1LL * outer.lambda * inner.lambda, m),
          reduce(1LL * outer.lambda * inner.mu + outer.mu, m)};
}

AffineMap inverse(const AffineMap& g) {
  const int m = g.modulus;
  for (int l = 1; l < m; ++l) {
    if (reduce(1LL * l * g.lambda, m) == 1) {
      return {m, l, reduce(-1LL * l * g.mu, m)};
    }
  }
  throw InputError("lambda is not a unit");
}

GroupSpec build_group(GroupKind kind, int modulus) {
  if (modulus < 3) {
    throw InputError("coloring automorphism groups need m >= 3, got " +
                     std::to_string(modulus));
  }
  GroupSpec g{kind, modulus, {}};
  std::vector<int> lambdas;
  if (kind == GroupKind::Aut) {
    for (int l = 1; l < modulus; ++l) {
      if (std::gcd(l, modulus) == 1) lambdas.push_back(l);
    }
  } else {
    lambdas = {1, modulus - 1};
  }
  const int mu_step = (kind == GroupKind::Inn && modulus % 2 == 0) ? 2 : 1;
  for (int l : lambdas) {
    for (int mu = 0; mu < modulus; mu += mu_step) g.elements.push_back({modulus, l, mu});
  }
  return g;
}

Coloring apply_map(const AffineMap& g, const Coloring& c) {
  if (g.modulus != c.modulus) {
    throw InputError("map modulus " + std::to_string(g.modulus) +
                     " does not match coloring modulus " + std::to_string(c.modulus));
  }
  Coloring out{c.modulus, c.values};
  for (int& v : out.values) v = g(v);
  return out;
}

Relabelling apply_permutation_unchecked(const PlanarDiagram& d,
                                        std::span<const int> permutation,
                                        const Coloring& c) {
  if (static_cast<int>(permutation.size()) != c.modulus) {
    throw InputError("permutation size does not match modulus");
  }
  Relabelling out;
  out.values.reserve(c.values.size());
  for (int v : c.values) out.values.push_back(permutation[v]);
  out.is_coloring = satisfies_relations(d, c.modulus, out.values);
  return out;
}

std::vector<std::size_t> OrbitPartition::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size);
  return sizes;
}

OrbitPartition orbit_partition(std::span<const Coloring> colorings,
                               const GroupSpec& group) {
  OrbitPartition out{group.modulus, group.kind, {}};
  // Colorings in lexicographic order; the first unassigned one is always
  // the least member of its orbit.
  std::map<Coloring, bool> assigned;
  for (const auto& c : colorings) {
    if (c.modulus != group.modulus) throw InputError("modulus mismatch");
    if (c.is_trivial()) throw InputError("trivial coloring in orbit input");
    if (!assigned.emplace(c, false).second) {
      throw InputError("duplicate coloring in orbit input");
    }
  }
  for (auto& [coloring, done] : assigned) {
    if (done) continue;
    std::set<Coloring> orbit;
    std::size_t stabilizer = 0;
    for (const auto& g : group.elements) {
      Coloring image = apply_map(g, coloring);
      if (image == coloring) ++stabilizer;
      const auto it = assigned.find(image);
      if (it == assigned.end()) {
        throw InputError("coloring set is not closed under the group action");
      }
      it->second = true;
      orbit.insert(std::move(image));
    }
    Orbit o;
    o.representative = coloring;
    o.size = orbit.size();
    o.member_count_check = group.elements.size() / stabilizer;
    o.members.assign(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(o));
  }
  return out;
}

Integer predicted_class_count(GroupKind kind, int p, int n) {
  if (!is_odd_prime(p)) {
    throw InputError(std::to_string(p) + " is not an odd prime");
  }
  if (n < 2) throw InputError("class counts need p-nullity n >= 2");
  const Integer nontrivial_over_p = pow(Integer(p), n - 1) - 1;
  return kind == GroupKind::Aut ? Integer(nontrivial_over_p / (p - 1))
                                : Integer(nontrivial_over_p / 2);
}

VariantCounts class_counts(const PlanarDiagram& d, int p, std::uint64_t budget) {
  VariantCounts out;
  out.crossings = d.crossing_count();
  out.nullity = p_nullity(coloring_snf(d), p);
  const auto colorings = enumerate_colorings(d, p, true, budget);
  const auto aut = orbit_partition(colorings, build_group(GroupKind::Aut, p));
  const auto inn = orbit_partition(colorings, build_group(GroupKind::Inn, p));
  out.aut_classes = aut.class_count();
  out.inn_classes = inn.class_count();
  out.aut_orbit_sizes = aut.orbit_sizes();
  out.inn_orbit_sizes = inn.orbit_sizes();
  // Representatives differ between diagrams; compare sizes as multisets.
  std::sort(out.aut_orbit_sizes.begin(), out.aut_orbit_sizes.end());
  std::sort(out.inn_orbit_sizes.begin(), out.inn_orbit_sizes.end());
  return out;
}

VerifyReport verify_counts(const PlanarDiagram& d, int p,
                           std::span<const PlanarDiagram> variants,
                           std::string knot, std::uint64_t budget) {
  VerifyReport r;
  r.knot = std::move(knot);
  r.p = p;
  r.base = class_counts(d, p, budget);
  if (r.base.nullity >= 2) {
    r.predicted_aut = predicted_class_count(GroupKind::Aut, p, r.base.nullity);
    r.predicted_inn = predicted_class_count(GroupKind::Inn, p, r.base.nullity);
  }
  r.counts_match = Integer(r.base.aut_classes) == r.predicted_aut &&
                   Integer(r.base.inn_classes) == r.predicted_inn;

  const std::size_t aut_order = static_cast<std::size_t>(p) * (p - 1);
  const std::size_t inn_order = 2 * static_cast<std::size_t>(p);
  auto all_free = [&](const VariantCounts& v) {
    return std::all_of(v.aut_orbit_sizes.begin(), v.aut_orbit_sizes.end(),
                       [&](std::size_t s) { return s == aut_order; }) &&
           std::all_of(v.inn_orbit_sizes.begin(), v.inn_orbit_sizes.end(),
                       [&](std::size_t s) { return s == inn_order; });
  };
  r.orbit_sizes_free = all_free(r.base);

  r.invariant_across_moves = true;
  for (const auto& v : variants) {
    auto counts = class_counts(v, p, budget);
    const bool same = counts.nullity == r.base.nullity &&
                      counts.aut_classes == r.base.aut_classes &&
                      counts.inn_classes == r.base.inn_classes &&
                      counts.aut_orbit_sizes == r.base.aut_orbit_sizes &&
                      counts.inn_orbit_sizes == r.base.inn_orbit_sizes;
    r.invariant_across_moves = r.invariant_across_moves && same;
    r.orbit_sizes_free = r.orbit_sizes_free && all_free(counts);
    r.variants.push_back(std::move(counts));
  }
  return r;
}

}  // namespace foxcolor
