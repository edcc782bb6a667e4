#include "foxcolor/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "foxcolor/errors.hpp"

namespace foxcolor {

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(source, j) != 0) (*this)(target, j) += factor * (*this)(source, j);
  }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, source) != 0) (*this)(i, target) += factor * (*this)(i, source);
  }
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
  IntegerMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition sd{m, IntegerMatrix::identity(m.rows()),
                        IntegerMatrix::identity(m.cols()), {}};
  IntegerMatrix& s = sd.s;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool active = true;
    while (true) {
      // Least nonzero |entry| in the block [t.., t..].
      std::size_t pr = rows;
      std::size_t pc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          Integer v = abs(s(i, j));
          if (pr == rows || v < best) {
            best = std::move(v);
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        active = false;
        break;
      }
      s.swap_rows(t, pr);
      sd.r.swap_rows(t, pr);
      s.swap_cols(t, pc);
      sd.c.swap_cols(t, pc);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        sd.r.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        sd.c.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the rest of the block; otherwise pull an
      // offending row into row t and reduce again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      s.add_row_multiple(t, bad, 1);
      sd.r.add_row_multiple(t, bad, 1);
    }
    if (!active) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      sd.r.negate_row(t);
    }
  }

  sd.invariant_factors.reserve(diag);
  for (std::size_t i = 0; i < diag; ++i) sd.invariant_factors.push_back(s(i, i));
  return sd;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Leibniz expansion; kept separate from the elimination code paths so it
// can act as an oracle for them.
Integer permutation_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Integer term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += (inversions % 2 == 0) ? term : Integer(-term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const auto& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> minor_gcd_factors(const IntegerMatrix& m) {
  const std::size_t diag = std::min(m.rows(), m.cols());
  if (diag > 6) {
    throw InputError("minor-gcd oracle limited to min(rows, cols) <= 6, got " +
                     std::to_string(diag));
  }
  std::vector<Integer> factors;
  Integer previous = 1;
  for (std::size_t k = 1; k <= diag; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = gcd(g, abs(permutation_determinant(m.submatrix(rows, cols))));
      });
    });
    if (previous == 0 || g == 0) {
      factors.push_back(0);
      previous = 0;
    } else {
      factors.push_back(g / previous);
      previous = g;
    }
  }
  return factors;
}

Integer ModularSolutionSpace::count() const {
  Integer total = 1;
  for (int s : size) total *= s;
  return total;
}

ModularSolutionSpace solve_mod(const SmithDecomposition& sd, int modulus) {
  if (modulus < 2) throw InputError("modulus must be at least 2");
  ModularSolutionSpace space;
  space.modulus = modulus;
  space.transform = sd.c;
  const std::size_t unknowns = sd.c.cols();
  for (std::size_t i = 0; i < unknowns; ++i) {
    int g = modulus;
    if (i < sd.invariant_factors.size()) {
      const Integer residue = sd.invariant_factors[i] % modulus;
      g = std::gcd(static_cast<int>(residue), modulus);
    }
    space.size.push_back(g);
    space.step.push_back(modulus / g);
  }
  return space;
}

}  // namespace foxcolor
