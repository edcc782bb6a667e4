#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "foxcolor/diagram.hpp"
#include "foxcolor/linalg.hpp"

namespace foxcolor::testing {

inline std::vector<PlanarDiagram> catalog_diagrams() {
  std::vector<PlanarDiagram> out;
  for (const auto& name : catalog_names()) out.emplace_back(catalog(name));
  return out;
}

// Smallest PD code among all relabellings of a knot diagram whose labels
// run consecutively along the strand: any starting edge, either direction.
inline std::vector<std::array<int, 4>> knot_canonical_form(const PdCode& pd) {
  const int e = pd.edge_count();
  std::vector<std::array<int, 4>> best;
  for (int start = 1; start <= e; ++start) {
    for (int dir : {1, -1}) {
      std::vector<std::array<int, 4>> cand;
      for (auto x : pd.crossings) {
        std::array<int, 4> y{};
        for (int i = 0; i < 4; ++i) {
          y[i] = ((dir * (x[i] - start)) % e + e) % e + 1;
        }
        // Reversing the strand moves the incoming under-edge to position 2.
        if (dir < 0) y = {y[2], y[3], y[0], y[1]};
        cand.push_back(y);
      }
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

// Labels advance by one along the under-strand at every crossing.
inline bool labels_follow_strand(const PdCode& pd) {
  const int e = pd.edge_count();
  for (const auto& x : pd.crossings) {
    if (x[2] != x[0] % e + 1) return false;
  }
  return true;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, int max_dim, int bound) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntegerMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  }
  return m;
}

inline Integer abs_det(const IntegerMatrix& m) {
  Integer d = determinant(m);
  return d < 0 ? Integer(-d) : d;
}

}  // namespace foxcolor::testing
