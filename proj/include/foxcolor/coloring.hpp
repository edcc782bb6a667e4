#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "foxcolor/diagram.hpp"
#include "foxcolor/linalg.hpp"

namespace foxcolor {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// One row per crossing, one column per arc (columns in arc-index order).
struct ColoringMatrix {
  IntegerMatrix matrix;
  std::vector<int> arc_ids;
};

/// Residues mod `modulus`, one per arc in arc-index order.
struct Coloring {
  int modulus = 0;
  std::vector<int> values;

  bool is_trivial() const;
  int distinct_colors() const;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// Throws InputError for the crossing-free unknot.
ColoringMatrix coloring_matrix(const PlanarDiagram& d);

/// Smith decomposition of the coloring matrix. The unknot is treated as
/// the 0 x 1 system (one arc, no relations), which gives it determinant 1
/// and a single free arc.
SmithDecomposition coloring_snf(const PlanarDiagram& d);

/// Diagonal of the decomposition extended by zeros to one entry per
/// column (arc). Every coloring matrix has at least one zero here.
std::vector<Integer> kernel_factors(const SmithDecomposition& sd);

/// Product of the nonzero kernel factors when exactly one is zero, and 0
/// when there are more. Throws InputError when none is zero.
Integer link_determinant(const SmithDecomposition& sd);

bool is_odd_prime(int p);

/// Number of kernel factors divisible by the odd prime p.
int p_nullity(const SmithDecomposition& sd, int p);

/// Number of m-colorings, the product of gcd(d, m) over kernel factors d.
Integer count_colorings(const SmithDecomposition& sd, int modulus);

/// Arc ids whose colors determine every p-coloring: the non-pivot columns
/// of the coloring matrix reduced mod p.
std::vector<int> generating_arcs(const PlanarDiagram& d, int p);

/// The unique p-coloring taking the given values on generating_arcs(d, p).
Coloring extend_from_generators(const PlanarDiagram& d, int p,
                                std::span<const int> generator_values);

bool satisfies_relations(const PlanarDiagram& d, int modulus,
                         std::span<const int> values);

/// All m-colorings via the Smith transform, in lexicographic order of the
/// free coordinates. Throws BudgetError when the count exceeds budget.
std::vector<Coloring> enumerate_colorings(
    const PlanarDiagram& d, int modulus, bool nontrivial_only,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// Exhaustive check of all m^arcs assignments (requires m^arcs <= 10^7),
/// in lexicographic order of the values.
std::vector<Coloring> brute_force_colorings(const PlanarDiagram& d, int modulus);

/// Exhaustive count of m-colorings by depth-first assignment of arcs in
/// index order, rejecting a partial assignment as soon as a crossing with
/// all three arcs assigned fails. No size limit.
Integer brute_force_count(const PlanarDiagram& d, int modulus);

/// Determinant, invariant factors and derived counts for one diagram.
class ColoringProfile {
 public:
  explicit ColoringProfile(const PlanarDiagram& d);

  const SmithDecomposition& smith() const { return smith_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const Integer& determinant() const { return determinant_; }
  int nullity(int p) const { return p_nullity(smith_, p); }
  /// Kernel factors divisible by m; equals nullity for odd primes.
  int zeros_mod(int modulus) const;
  Integer colorings(int modulus) const { return count_colorings(smith_, modulus); }

 private:
  SmithDecomposition smith_;
  std::vector<Integer> factors_;
  Integer determinant_;
};

}  // namespace foxcolor
