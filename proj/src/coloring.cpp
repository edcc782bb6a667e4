#include "foxcolor/coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "foxcolor/errors.hpp"

namespace foxcolor {
namespace {

void require_modulus(int modulus) {
  if (modulus < 2) {
    throw InputError("modulus must be at least 2, got " + std::to_string(modulus));
  }
}

int mod_floor(const Integer& value, int modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

// Coloring matrix reduced mod p to row echelon form.
struct ModReduction {
  std::vector<std::vector<int>> rows;  // reduced rows, one per pivot
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
};

int inverse_mod(int a, int p) {
  // p is prime: a^(p-2).
  long long result = 1;
  long long base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

ModReduction reduce_mod(const PlanarDiagram& d, int p) {
  const auto cm = coloring_matrix(d);
  const int rows = static_cast<int>(cm.matrix.rows());
  const int cols = static_cast<int>(cm.matrix.cols());
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = mod_floor(cm.matrix(i, j), p);
  }

  ModReduction out;
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      out.free_cols.push_back(c);
      continue;
    }
    std::swap(a[r], a[pivot]);
    const int inv = inverse_mod(a[r][c], p);
    for (int& v : a[r]) v = static_cast<int>(1LL * v * inv % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const int f = a[i][c];
      for (int j = 0; j < cols; ++j) {
        a[i][j] = static_cast<int>(((a[i][j] - 1LL * f * a[r][j]) % p + p) % p);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

void require_odd_prime(int p) {
  if (!is_odd_prime(p)) {
    throw InputError(std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

bool Coloring::is_trivial() const {
  return std::adjacent_find(values.begin(), values.end(),
                            std::not_equal_to<>()) == values.end();
}

int Coloring::distinct_colors() const {
  return static_cast<int>(std::set<int>(values.begin(), values.end()).size());
}

ColoringMatrix coloring_matrix(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) {
    throw InputError("a crossing-free diagram has no coloring matrix");
  }
  ColoringMatrix cm{IntegerMatrix(d.crossing_count(), d.arc_count()), d.arc_ids()};
  for (std::size_t r = 0; r < d.relations().size(); ++r) {
    const auto& rel = d.relations()[r];
    cm.matrix(r, rel.under_in) += 1;
    cm.matrix(r, rel.under_out) += 1;
    cm.matrix(r, rel.over) -= 2;
  }
  return cm;
}

SmithDecomposition coloring_snf(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return smith_normal_form(IntegerMatrix(0, 1));
  return smith_normal_form(coloring_matrix(d).matrix);
}

std::vector<Integer> kernel_factors(const SmithDecomposition& sd) {
  std::vector<Integer> out = sd.invariant_factors;
  out.resize(sd.c.cols(), Integer(0));
  return out;
}

Integer link_determinant(const SmithDecomposition& sd) {
  int zeros = 0;
  Integer product = 1;
  for (const auto& f : kernel_factors(sd)) {
    if (f == 0) {
      ++zeros;
    } else {
      product *= f;
    }
  }
  if (zeros == 0) {
    throw InputError("no zero invariant factor: not a coloring matrix");
  }
  return zeros == 1 ? product : Integer(0);
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

int p_nullity(const SmithDecomposition& sd, int p) {
  require_odd_prime(p);
  int n = 0;
  for (const auto& f : kernel_factors(sd)) n += (f % p == 0);
  return n;
}

Integer count_colorings(const SmithDecomposition& sd, int modulus) {
  require_modulus(modulus);
  return solve_mod(sd, modulus).count();
}

std::vector<int> generating_arcs(const PlanarDiagram& d, int p) {
  require_odd_prime(p);
  if (d.crossing_count() == 0) return d.arc_ids();
  std::vector<int> out;
  for (int c : reduce_mod(d, p).free_cols) out.push_back(d.arc_ids()[c]);
  return out;
}

Coloring extend_from_generators(const PlanarDiagram& d, int p,
                                std::span<const int> generator_values) {
  require_odd_prime(p);
  Coloring out{p, std::vector<int>(d.arc_count(), 0)};
  if (d.crossing_count() == 0) {
    if (generator_values.size() != 1) throw InputError("expected 1 generator value");
    out.values[0] = ((generator_values[0] % p) + p) % p;
    return out;
  }
  const auto red = reduce_mod(d, p);
  if (generator_values.size() != red.free_cols.size()) {
    throw InputError("expected " + std::to_string(red.free_cols.size()) +
                     " generator values, got " +
                     std::to_string(generator_values.size()));
  }
  for (std::size_t k = 0; k < red.free_cols.size(); ++k) {
    out.values[red.free_cols[k]] = ((generator_values[k] % p) + p) % p;
  }
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    long long v = 0;
    for (int f : red.free_cols) v -= 1LL * red.rows[r][f] * out.values[f];
    out.values[red.pivot_cols[r]] = static_cast<int>(((v % p) + p) % p);
  }
  return out;
}

bool satisfies_relations(const PlanarDiagram& d, int modulus,
                         std::span<const int> values) {
  for (const auto& rel : d.relations()) {
    const long long lhs = 1LL * values[rel.under_in] + values[rel.under_out] -
                          2LL * values[rel.over];
    if (lhs % modulus != 0) return false;
  }
  return true;
}

std::vector<Coloring> enumerate_colorings(const PlanarDiagram& d, int modulus,
                                          bool nontrivial_only,
                                          std::uint64_t budget) {
  require_modulus(modulus);
  const auto space = solve_mod(coloring_snf(d), modulus);
  if (space.count() > budget) {
    throw BudgetError("enumeration of " + space.count().str() +
                      " colorings exceeds the budget of " + std::to_string(budget));
  }

  const std::size_t arcs = space.transform.rows();
  const std::size_t free = space.transform.cols();
  std::vector<std::vector<long long>> c(arcs, std::vector<long long>(free));
  for (std::size_t i = 0; i < arcs; ++i) {
    for (std::size_t j = 0; j < free; ++j) c[i][j] = mod_floor(space.transform(i, j), modulus);
  }

  std::vector<Coloring> out;
  std::vector<int> counter(free, 0);
  while (true) {
    Coloring col{modulus, std::vector<int>(arcs, 0)};
    for (std::size_t i = 0; i < arcs; ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < free; ++j) {
        v = (v + c[i][j] * (1LL * counter[j] * space.step[j] % modulus)) % modulus;
      }
      col.values[i] = static_cast<int>(v);
    }
    if (!nontrivial_only || !col.is_trivial()) out.push_back(std::move(col));

    // Mixed-radix increment, last coordinate fastest.
    std::size_t k = free;
    while (k > 0) {
      --k;
      if (++counter[k] < space.size[k]) break;
      counter[k] = 0;
      if (k == 0) return out;
    }
    if (free == 0) return out;
  }
}

std::vector<Coloring> brute_force_colorings(const PlanarDiagram& d, int modulus) {
  require_modulus(modulus);
  const int arcs = d.arc_count();
  long double total = 1;
  for (int i = 0; i < arcs; ++i) total *= modulus;
  if (total > 1e7L) {
    throw BudgetError("brute force over " + std::to_string(modulus) + "^" +
                      std::to_string(arcs) + " assignments exceeds 10^7");
  }
  std::vector<Coloring> out;
  std::vector<int> values(arcs, 0);
  while (true) {
    if (satisfies_relations(d, modulus, values)) out.push_back({modulus, values});
    int k = arcs;
    while (k > 0) {
      --k;
      if (++values[k] < modulus) break;
      values[k] = 0;
      if (k == 0) return out;
    }
  }
}

Integer brute_force_count(const PlanarDiagram& d, int modulus) {
  require_modulus(modulus);
  const int arcs = d.arc_count();
  std::vector<std::vector<CrossingRelation>> ready(arcs);
  for (const auto& rel : d.relations()) {
    ready[std::max({rel.under_in, rel.under_out, rel.over})].push_back(rel);
  }
  std::vector<int> values(arcs, 0);
  Integer count = 0;
  auto search = [&](auto& self, int arc) -> void {
    if (arc == arcs) {
      ++count;
      return;
    }
    for (int v = 0; v < modulus; ++v) {
      values[arc] = v;
      bool ok = true;
      for (const auto& rel : ready[arc]) {
        const long long lhs = 1LL * values[rel.under_in] + values[rel.under_out] -
                              2LL * values[rel.over];
        if (lhs % modulus != 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, arc + 1);
    }
  };
  search(search, 0);
  return count;
}

ColoringProfile::ColoringProfile(const PlanarDiagram& d)
    : smith_(coloring_snf(d)),
      factors_(kernel_factors(smith_)),
      determinant_(link_determinant(smith_)) {}

int ColoringProfile::zeros_mod(int modulus) const {
  require_modulus(modulus);
  int n = 0;
  for (const auto& f : factors_) n += (f % modulus == 0);
  return n;
}

}  // namespace foxcolor
