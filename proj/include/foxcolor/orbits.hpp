#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/linalg.hpp"

namespace foxcolor {

/// Aut: all affine coloring automorphisms x -> lambda x + mu of Z_m.
/// Inn: the inner subgroup x -> +-x + mu (mu even when m is even).
enum class GroupKind { Aut, Inn };

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

struct AffineMap {
  int modulus = 0;
  int lambda = 1;
  int mu = 0;

  int operator()(int x) const;
  bool is_identity() const { return lambda == 1 % modulus && mu == 0; }

  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

/// (outer o inner)(x) = outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);
AffineMap inverse(const AffineMap& g);

struct GroupSpec {
  GroupKind kind = GroupKind::Aut;
  int modulus = 0;
  std::vector<AffineMap> elements;  // lambda ascending, then mu ascending
};

/// Requires m >= 3. |Aut_m| = m phi(m); |Inn_m| = 2m for odd m, m for even m.
GroupSpec build_group(GroupKind kind, int modulus);

/// Applies g to every arc color. Throws InputError on modulus mismatch.
Coloring apply_map(const AffineMap& g, const Coloring& c);

struct Relabelling {
  std::vector<int> values;
  bool is_coloring = false;
};

/// Relabels colors by an arbitrary permutation of 0..m-1 and reports
/// whether the result still satisfies every crossing of d.
Relabelling apply_permutation_unchecked(const PlanarDiagram& d,
                                        std::span<const int> permutation,
                                        const Coloring& c);

struct Orbit {
  Coloring representative;       // lexicographically least member
  std::size_t size = 0;
  std::size_t member_count_check = 0;  // |G| / |stabilizer of representative|
  std::vector<Coloring> members;  // sorted
};

struct OrbitPartition {
  int modulus = 0;
  GroupKind kind = GroupKind::Aut;
  std::vector<Orbit> orbits;  // ordered by representative

  std::size_t class_count() const { return orbits.size(); }
  std::vector<std::size_t> orbit_sizes() const;
};

/// Partitions a full set of non-trivial colorings into G-orbits. Throws
/// InputError for trivial colorings, duplicates, or a set not closed under G.
OrbitPartition orbit_partition(std::span<const Coloring> colorings,
                               const GroupSpec& group);

/// (p^(n-1) - 1) / (p - 1) for Aut, (p^(n-1) - 1) / 2 for Inn. Requires p
/// an odd prime and n >= 2.
Integer predicted_class_count(GroupKind kind, int p, int n);

struct VariantCounts {
  int crossings = 0;
  int nullity = 0;
  std::size_t aut_classes = 0;
  std::size_t inn_classes = 0;
  std::vector<std::size_t> aut_orbit_sizes;
  std::vector<std::size_t> inn_orbit_sizes;

  friend bool operator==(const VariantCounts&, const VariantCounts&) = default;
};

/// Brute-force class counts for one diagram and odd prime p.
VariantCounts class_counts(const PlanarDiagram& d, int p,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct VerifyReport {
  std::string knot;
  int p = 0;
  VariantCounts base;
  Integer predicted_aut = 0;
  Integer predicted_inn = 0;
  std::vector<VariantCounts> variants;
  bool counts_match = false;       // brute force equals prediction
  bool orbit_sizes_free = false;   // every orbit has size |G|
  bool invariant_across_moves = false;

  bool passed() const { return counts_match && orbit_sizes_free && invariant_across_moves; }
};

/// Compares brute-force orbit counts against the closed forms for d and
/// each variant. Nullity 1 predicts zero classes.
VerifyReport verify_counts(const PlanarDiagram& d, int p,
                           std::span<const PlanarDiagram> variants,
                           std::string knot = "custom",
                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace foxcolor
