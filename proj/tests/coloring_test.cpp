#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "foxcolor/coloring.hpp"
#include "foxcolor/errors.hpp"
#include "support.hpp"

namespace foxcolor {
namespace {

PlanarDiagram knot(const std::string& name) { return PlanarDiagram(catalog(name)); }

Integer ipow(int base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

TEST(ColoringMatrix, Trefoil) {
  const auto cm = coloring_matrix(knot("3_1"));
  EXPECT_EQ(cm.matrix, (IntegerMatrix{{1, 1, -2}, {-2, 1, 1}, {1, -2, 1}}));
  EXPECT_EQ(cm.arc_ids, (std::vector<int>{1, 2, 4}));
}

TEST(ColoringMatrix, RowsSumToZero) {
  for (const auto& d : testing::catalog_diagrams()) {
    if (d.crossing_count() == 0) continue;
    const auto m = coloring_matrix(d).matrix;
    EXPECT_EQ(m.rows(), static_cast<std::size_t>(d.crossing_count()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j);
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(ColoringMatrix, KinkedUnknotIsZero) {
  const PlanarDiagram d(parse_pd("[[1,2,2,1]]"));
  EXPECT_EQ(coloring_matrix(d).matrix, IntegerMatrix{{0}});
  EXPECT_THROW(coloring_matrix(knot("unknot")), InputError);
}

TEST(Determinant, Catalog) {
  const std::map<std::string, int> expected{
      {"unknot", 1}, {"3_1", 3},  {"4_1", 5},  {"5_1", 5},  {"5_2", 7},
      {"6_1", 9},    {"6_2", 11}, {"6_3", 13}, {"7_1", 7},  {"9_40", 75}};
  for (const auto& [name, det] : expected) {
    EXPECT_EQ(link_determinant(coloring_snf(knot(name))), det) << name;
  }
}

TEST(Determinant, HopfLink) {
  const PlanarDiagram d(parse_pd("[[4,1,3,2],[2,3,1,4]]"));
  const auto sd = coloring_snf(d);
  EXPECT_EQ(kernel_factors(sd), (std::vector<Integer>{2, 0}));
  EXPECT_EQ(link_determinant(sd), 2);
}

TEST(Determinant, RequiresAZeroFactor) {
  EXPECT_THROW(link_determinant(smith_normal_form(IntegerMatrix{{1}})), InputError);
}

TEST(KernelFactors, PaddedToArcCount) {
  EXPECT_EQ(kernel_factors(coloring_snf(knot("3_1"))), (std::vector<Integer>{1, 3, 0}));
  EXPECT_EQ(kernel_factors(coloring_snf(knot("unknot"))), std::vector<Integer>{0});
  const auto f = kernel_factors(coloring_snf(knot("9_40")));
  EXPECT_EQ(f, (std::vector<Integer>{1, 1, 1, 1, 1, 1, 5, 15, 0}));
}

TEST(Nullity, Examples) {
  EXPECT_EQ(p_nullity(coloring_snf(knot("3_1")), 3), 2);
  EXPECT_EQ(p_nullity(coloring_snf(knot("3_1")), 5), 1);
  EXPECT_EQ(p_nullity(coloring_snf(knot("9_40")), 5), 3);
  EXPECT_EQ(p_nullity(coloring_snf(knot("9_40")), 3), 2);
  EXPECT_EQ(p_nullity(coloring_snf(knot("unknot")), 7), 1);
}

TEST(Nullity, RejectsNonOddPrimes) {
  const auto sd = coloring_snf(knot("3_1"));
  for (int p : {-3, 0, 1, 2, 4, 9, 15}) EXPECT_THROW(p_nullity(sd, p), InputError) << p;
}

TEST(CountColorings, Examples) {
  EXPECT_EQ(count_colorings(coloring_snf(knot("3_1")), 3), 9);
  EXPECT_EQ(count_colorings(coloring_snf(knot("3_1")), 9), 27);
  EXPECT_EQ(count_colorings(coloring_snf(knot("4_1")), 7), 7);
  EXPECT_EQ(count_colorings(coloring_snf(knot("unknot")), 6), 6);
  EXPECT_THROW(count_colorings(coloring_snf(knot("3_1")), 1), InputError);
}

TEST(CountColorings, ProductOfGcds) {
  for (const auto& d : testing::catalog_diagrams()) {
    const auto sd = coloring_snf(d);
    for (int m = 2; m <= 30; ++m) {
      Integer want = 1;
      for (const auto& f : kernel_factors(sd)) {
        want *= std::gcd(static_cast<long long>(f), static_cast<long long>(m));
      }
      const auto got = count_colorings(sd, m);
      EXPECT_EQ(got, want);
      EXPECT_EQ(got % m, 0);
    }
  }
}

TEST(Enumerate, Examples) {
  const auto tre = enumerate_colorings(knot("3_1"), 3, true);
  ASSERT_EQ(tre.size(), 6u);
  for (const auto& c : tre) EXPECT_EQ(c.distinct_colors(), 3);
  EXPECT_EQ(enumerate_colorings(knot("4_1"), 5, true).size(), 20u);
  EXPECT_TRUE(enumerate_colorings(knot("unknot"), 4, true).empty());
  EXPECT_EQ(enumerate_colorings(knot("unknot"), 4, false).size(), 4u);
}

TEST(Enumerate, StartsWithZeroAndContainsTrivial) {
  for (const auto& d : testing::catalog_diagrams()) {
    for (int m = 2; m <= 12; ++m) {
      const auto all = enumerate_colorings(d, m, false);
      ASSERT_FALSE(all.empty());
      EXPECT_TRUE(std::all_of(all.front().values.begin(), all.front().values.end(),
                              [](int v) { return v == 0; }));
      int trivial = 0;
      for (const auto& c : all) trivial += c.is_trivial();
      EXPECT_EQ(trivial, m);
      EXPECT_EQ(Integer(all.size()), count_colorings(coloring_snf(d), m));
    }
  }
}

TEST(Enumerate, MatchesBruteForce) {
  for (const auto& d : testing::catalog_diagrams()) {
    for (int m = 2; m <= 12; ++m) {
      if (std::pow(double(m), d.arc_count()) > 1e7) continue;
      SCOPED_TRACE(format_pd(d.pd()) + " mod " + std::to_string(m));
      auto fast = enumerate_colorings(d, m, false, 10'000'000);
      std::sort(fast.begin(), fast.end());
      const auto slow = brute_force_colorings(d, m);
      EXPECT_EQ(fast, slow);
      for (const auto& c : fast) EXPECT_TRUE(satisfies_relations(d, m, c.values));
    }
  }
}

TEST(Enumerate, PrimeCountIsPowerOfNullity) {
  for (const auto& d : testing::catalog_diagrams()) {
    const auto sd = coloring_snf(d);
    for (int p : {3, 5, 7, 11}) {
      const int n = p_nullity(sd, p);
      EXPECT_EQ(Integer(enumerate_colorings(d, p, false).size()), ipow(p, n));
      EXPECT_EQ(Integer(enumerate_colorings(d, p, true).size()), ipow(p, n) - p);
    }
  }
}

TEST(Enumerate, BudgetExceeded) {
  EXPECT_THROW(enumerate_colorings(knot("9_40"), 5, false, 124), BudgetError);
  EXPECT_NO_THROW(enumerate_colorings(knot("9_40"), 5, false, 125));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_colorings(knot("3_1"), 3).size(), 9u);
  EXPECT_EQ(brute_force_colorings(knot("3_1"), 2).size(), 2u);
  EXPECT_EQ(brute_force_colorings(knot("4_1"), 5).size(), 25u);
  EXPECT_THROW(brute_force_colorings(knot("9_40"), 7), BudgetError);
}

TEST(BruteForce, CountAgreesWithList) {
  for (const auto& d : testing::catalog_diagrams()) {
    for (int m = 2; m <= 8; ++m) {
      if (std::pow(double(m), d.arc_count()) > 2e6) continue;
      EXPECT_EQ(brute_force_count(d, m), Integer(brute_force_colorings(d, m).size()));
    }
  }
}

TEST(Generators, Sizes) {
  EXPECT_EQ(generating_arcs(knot("3_1"), 3).size(), 2u);
  EXPECT_EQ(generating_arcs(knot("3_1"), 5).size(), 1u);
  EXPECT_EQ(generating_arcs(knot("9_40"), 5).size(), 3u);
  EXPECT_EQ(generating_arcs(knot("unknot"), 3), std::vector<int>{1});
}

// Every assignment on the generating arcs extends to exactly one coloring,
// and every coloring arises this way.
TEST(Generators, ExtensionIsABijection) {
  for (const auto& d : testing::catalog_diagrams()) {
    const auto sd = coloring_snf(d);
    for (int p : {3, 5, 7, 11}) {
      SCOPED_TRACE(format_pd(d.pd()) + " mod " + std::to_string(p));
      const auto gens = generating_arcs(d, p);
      const int n = p_nullity(sd, p);
      ASSERT_EQ(static_cast<int>(gens.size()), n);
      std::vector<int> gen_index;
      for (int id : gens) gen_index.push_back(d.arc_of_edge(id));

      const auto all = enumerate_colorings(d, p, false);
      std::set<Coloring> expected(all.begin(), all.end());
      std::set<Coloring> produced;
      std::vector<int> values(n, 0);
      while (true) {
        const auto c = extend_from_generators(d, p, values);
        EXPECT_TRUE(satisfies_relations(d, p, c.values));
        for (int k = 0; k < n; ++k) EXPECT_EQ(c.values[gen_index[k]], values[k]);
        produced.insert(c);
        int k = n;
        while (k > 0 && ++values[k - 1] == p) values[--k] = 0;
        if (k == 0) break;
      }
      EXPECT_EQ(produced, expected);
    }
  }
}

TEST(Generators, WrongValueCount) {
  const std::vector<int> two{0, 1};
  EXPECT_THROW(extend_from_generators(knot("9_40"), 5, two), InputError);
  EXPECT_THROW(generating_arcs(knot("3_1"), 4), InputError);
}

TEST(Profile, Trefoil) {
  const ColoringProfile prof(knot("3_1"));
  EXPECT_EQ(prof.determinant(), 3);
  EXPECT_EQ(prof.nullity(3), 2);
  EXPECT_EQ(prof.zeros_mod(9), 1);
  EXPECT_EQ(prof.zeros_mod(3), 2);
  EXPECT_EQ(prof.colorings(6), 18);
}

TEST(ColoringValue, TrivialAndDistinct) {
  EXPECT_TRUE((Coloring{5, {2, 2, 2}}).is_trivial());
  EXPECT_FALSE((Coloring{5, {2, 2, 3}}).is_trivial());
  EXPECT_EQ((Coloring{5, {0, 1, 1, 4}}).distinct_colors(), 3);
}

}  // namespace
}  // namespace foxcolor
