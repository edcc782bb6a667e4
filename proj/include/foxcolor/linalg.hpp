#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace foxcolor {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  IntegerMatrix submatrix(const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// s = r * m * c with r, c unimodular and s diagonal. invariant_factors holds
/// the min(rows, cols) diagonal entries: positive d_1 | d_2 | ... followed by
/// zeros.
struct SmithDecomposition {
  IntegerMatrix s;
  IntegerMatrix r;
  IntegerMatrix c;
  std::vector<Integer> invariant_factors;
};

/// Smith normal form by unimodular row and column operations. The pivot is
/// always the nonzero entry of least absolute value in the active block,
/// ties broken by lowest (row, column), so the output is deterministic.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& m);

/// Invariant factors from gcds of k x k minors: d_1 ... d_k = gcd of all
/// k x k minors. Exponential; refuses matrices with min(rows, cols) > 6.
std::vector<Integer> minor_gcd_factors(const IntegerMatrix& m);

/// Solutions of M x = 0 (mod m) in the coordinates y = C^-1 x, where
/// S y = 0 decouples: y_i ranges over the multiples of step[i], which form a
/// cyclic group of order size[i]. Columns past the diagonal are free.
struct ModularSolutionSpace {
  int modulus = 0;
  std::vector<int> step;
  std::vector<int> size;
  IntegerMatrix transform;  // the column transform c

  Integer count() const;
};

ModularSolutionSpace solve_mod(const SmithDecomposition& sd, int modulus);

}  // namespace foxcolor
