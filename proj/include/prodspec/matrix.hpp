#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "prodspec/eigenvalue.hpp"
#include "prodspec/numbers.hpp"
#include "prodspec/polynomial.hpp"

namespace prodspec {

// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);
  static ExactMatrix diagonal(std::span<const BigInt> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const BigInt> entries() const noexcept { return data_; }

  bool is_symmetric() const;
  BigInt trace() const;
  BigInt entry_sum() const;
  ExactMatrix transpose() const;
  // Copy without row r and column c.
  ExactMatrix minor(std::size_t r, std::size_t c) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const BigInt& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const BigInt& s) { return a *= s; }
  friend ExactMatrix operator*(const BigInt& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Block (i, j) of the result is a(i, j) * b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

// [[top_left, top_right], [bottom_left, bottom_right]]; shapes must tile.
ExactMatrix block_matrix(const ExactMatrix& top_left, const ExactMatrix& top_right,
                         const ExactMatrix& bottom_left, const ExactMatrix& bottom_right);

// Fraction-free Bareiss elimination with row pivoting.
BigInt determinant(const ExactMatrix& m);

struct FaddeevLeVerrier {
  Polynomial char_poly;
  // adj(xI - M) = sum_k adjugate[k] * x^k, k = 0..n-1.
  std::vector<ExactMatrix> adjugate;
};

// Faddeev-LeVerrier recurrence with exact integer division at every step.
FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& m);

// det(xI - M): monic, integer coefficients, degree n.
Polynomial char_poly(const ExactMatrix& m);

std::vector<ExactMatrix> adjugate_series(const ExactMatrix& m);

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // off-diagonal target, times ||M||_F
  int max_sweeps = 100;
};

// Cyclic Jacobi rotations on a double copy of a symmetric matrix. Returns the
// eigenvalues ascending, each tagged with the achieved off-diagonal bound.
// Error(Precondition) for asymmetric input.
std::vector<Eigenvalue> symmetric_eigenvalues(const ExactMatrix& m, const JacobiOptions& options = {});

}  // namespace prodspec
