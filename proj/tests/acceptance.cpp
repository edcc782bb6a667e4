// Acceptance criteria, one PASS/FAIL line each. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/linalg.hpp"
#include "foxcolor/orbits.hpp"
#include "support.hpp"

using namespace foxcolor;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

PlanarDiagram knot(const std::string& name) { return PlanarDiagram(catalog(name)); }

OrbitPartition partition(const PlanarDiagram& d, int m, GroupKind kind) {
  return orbit_partition(enumerate_colorings(d, m, true), build_group(kind, m));
}

bool all_equal(const std::vector<std::size_t>& v, std::size_t x) {
  return std::all_of(v.begin(), v.end(), [&](std::size_t s) { return s == x; });
}

Check ac1_trefoil() {
  Check c;
  const auto d = knot("3_1");
  const auto sd = coloring_snf(d);
  c.expect(kernel_factors(sd) == std::vector<Integer>{1, 3, 0}, "factors != (1,3,0)");
  c.expect(link_determinant(sd) == 3, "determinant != 3");
  c.expect(count_colorings(sd, 3) == 9, "3-colorings != 9");
  c.expect(enumerate_colorings(d, 3, true).size() == 6, "non-trivial != 6");
  c.expect(partition(d, 3, GroupKind::Aut).class_count() == 1, "Aut classes != 1");
  c.expect(partition(d, 3, GroupKind::Inn).class_count() == 1, "Inn classes != 1");
  c.expect(predicted_class_count(GroupKind::Aut, 3, 2) == 1 &&
               predicted_class_count(GroupKind::Inn, 3, 2) == 1,
           "formulas at p=3, n=2");
  return c;
}

Check ac2_figure_eight() {
  Check c;
  const auto d = knot("4_1");
  const auto sd = coloring_snf(d);
  c.expect(link_determinant(sd) == 5, "determinant != 5");
  c.expect(count_colorings(sd, 5) == 25, "5-colorings != 25");
  c.expect(enumerate_colorings(d, 5, true).size() == 20, "non-trivial != 20");
  const auto aut = partition(d, 5, GroupKind::Aut);
  c.expect(aut.orbit_sizes() == std::vector<std::size_t>{20}, "Aut != one class of 20");
  const auto inn = partition(d, 5, GroupKind::Inn);
  c.expect(inn.orbit_sizes() == std::vector<std::size_t>{10, 10}, "Inn != two classes of 10");
  return c;
}

Check ac3_nine_forty() {
  Check c;
  const auto d = knot("9_40");
  c.expect(p_nullity(coloring_snf(d), 5) == 3, "5-nullity != 3");
  c.expect(generating_arcs(d, 5).size() == 3, "generating arcs != 3");
  c.expect(enumerate_colorings(d, 5, true).size() == 120, "non-trivial != 120");
  const auto aut = partition(d, 5, GroupKind::Aut);
  c.expect(aut.class_count() == 6 && all_equal(aut.orbit_sizes(), 20),
           "Aut != six classes of 20");
  const auto inn = partition(d, 5, GroupKind::Inn);
  c.expect(inn.class_count() == 12 && all_equal(inn.orbit_sizes(), 10),
           "Inn != twelve classes of 10");
  return c;
}

Check ac4_formula_sweep() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  int cases = 0;
  for (const auto& name : catalog_names()) {
    const auto d = knot(name);
    const auto sd = coloring_snf(d);
    for (int p : {3, 5, 7, 11}) {
      const int n = p_nullity(sd, p);
      if (n < 2) continue;
      ++cases;
      const auto aut = partition(d, p, GroupKind::Aut).class_count();
      const auto inn = partition(d, p, GroupKind::Inn).class_count();
      c.expect(Integer(aut) == predicted_class_count(GroupKind::Aut, p, n),
               name + " Aut mod " + std::to_string(p));
      c.expect(Integer(inn) == predicted_class_count(GroupKind::Inn, p, n),
               name + " Inn mod " + std::to_string(p));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(cases > 0, "no (knot, p) pairs with n >= 2");
  c.expect(secs <= 60.0, "took " + std::to_string(secs) + " s");
  if (c.ok) c.note << cases << " pairs in " << secs << " s";
  return c;
}

Check ac5_composite_counts() {
  Check c;
  int cases = 0;
  for (const auto& name : catalog_names()) {
    const auto d = knot(name);
    if (d.arc_count() > 7) continue;
    const auto sd = coloring_snf(d);
    for (int m : {4, 6, 8, 9, 10, 12}) {
      ++cases;
      Integer formula = 1;
      for (const auto& f : kernel_factors(sd)) {
        formula *= std::gcd(static_cast<long long>(f), static_cast<long long>(m));
      }
      const auto fast = count_colorings(sd, m);
      const auto slow = brute_force_count(d, m);
      c.expect(fast == slow && fast == formula,
               name + " mod " + std::to_string(m) + ": " + fast.str() + " vs " + slow.str());
    }
  }
  if (c.ok) c.note << cases << " (knot, m) pairs";
  return c;
}

Check ac6_smith_oracle() {
  Check c;
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const auto m = testing::random_matrix(rng, 5, 9);
    const auto sd = smith_normal_form(m);
    const std::string tag = "matrix " + std::to_string(trial);
    c.expect(sd.r * m * sd.c == sd.s, tag + ": S != RMC");
    c.expect(testing::abs_det(sd.r) == 1 && testing::abs_det(sd.c) == 1,
             tag + ": not unimodular");
    bool diagonal = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (i != j && sd.s(i, j) != 0) diagonal = false;
      }
    }
    c.expect(diagonal, tag + ": S not diagonal");
    const auto& f = sd.invariant_factors;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const bool divides = f[i] == 0 ? f[i + 1] == 0 : f[i + 1] % f[i] == 0;
      c.expect(divides && f[i] >= 0, tag + ": chain broken");
    }
    c.expect(f == minor_gcd_factors(m), tag + ": minor gcds differ");
  }
  if (c.ok) c.note << "500 matrices";
  return c;
}

Check ac7_invariance() {
  Check c;
  for (const auto& name : catalog_names()) {
    const auto d = knot(name);
    const auto variants = move_variants(d, 3, 7);
    const auto sd = coloring_snf(d);
    for (const auto& v : variants) {
      const auto vsd = coloring_snf(v);
      for (int m = 2; m <= 12; ++m) {
        c.expect(count_colorings(vsd, m) == count_colorings(sd, m),
                 name + " variant count mod " + std::to_string(m));
      }
    }
    for (int p : {3, 5, 7, 11}) {
      const auto r = verify_counts(d, p, variants, name);
      c.expect(r.invariant_across_moves, name + " classes mod " + std::to_string(p));
    }
  }
  return c;
}

Check ac8_negative_control() {
  Check c;
  const auto d = knot("9_40");
  const std::vector<int> gens{0, 1, 2};
  const auto col = extend_from_generators(d, 5, gens);
  c.expect(!col.is_trivial(), "generated coloring is trivial");
  const std::vector<int> perm{1, 0, 3, 4, 2};  // (0 1)(2 3 4)
  c.expect(!apply_permutation_unchecked(d, perm, col).is_coloring,
           "(0 1)(2 3 4) kept the coloring");
  int preserved = 0;
  for (const auto& g : build_group(GroupKind::Aut, 5).elements) {
    std::vector<int> as_perm;
    for (int x = 0; x < 5; ++x) as_perm.push_back(g(x));
    preserved += apply_permutation_unchecked(d, as_perm, col).is_coloring;
  }
  c.expect(preserved == 20, std::to_string(preserved) + "/20 affine maps preserved it");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 trefoil invariants and classes", ac1_trefoil},
      {"AC2 figure-eight classes", ac2_figure_eight},
      {"AC3 9_40 classes", ac3_nine_forty},
      {"AC4 class-count formula sweep", ac4_formula_sweep},
      {"AC5 composite coloring counts", ac5_composite_counts},
      {"AC6 Smith normal form oracle", ac6_smith_oracle},
      {"AC7 invariance under R1/R2 variants", ac7_invariance},
      {"AC8 non-affine permutation control", ac8_negative_control},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS " : "FAIL ") << label;
    const auto note = c.note.str();
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << '\n';
  }
  return failed;
}
