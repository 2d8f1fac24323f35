#include "prodspec/matrix.hpp"

#include <utility>

#include "prodspec/errors.hpp"

namespace prodspec {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorKind::Precondition, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (auto& v : m.data_) v = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const BigInt> diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

BigInt ExactMatrix::trace() const {
  if (!square()) fail(ErrorKind::Precondition, "trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt ExactMatrix::entry_sum() const {
  BigInt s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::minor(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::Precondition, "minor index out of range");
  ExactMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::Precondition, "matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::Precondition, "matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const BigInt& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::Precondition, "matrix shape mismatch in *");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const BigInt& s = a(i, l);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), s.get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  }
  return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const BigInt& s = a(i, j);
      if (s == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
    }
  return out;
}

ExactMatrix block_matrix(const ExactMatrix& tl, const ExactMatrix& tr, const ExactMatrix& bl,
                         const ExactMatrix& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols()) {
    fail(ErrorKind::Precondition, "block shapes do not tile");
  }
  ExactMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  auto place = [&](const ExactMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(r0 + i, c0 + j) = m(i, j);
  };
  place(tl, 0, 0);
  place(tr, 0, tl.cols());
  place(bl, tl.rows(), 0);
  place(br, tl.rows(), tl.cols());
  return out;
}

BigInt determinant(const ExactMatrix& input) {
  if (!input.square()) fail(ErrorKind::Precondition, "determinant of a non-square matrix");
  std::size_t n = input.rows();
  if (n == 0) return 1;
  ExactMatrix m = input;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

BigInt trace_of_product(const ExactMatrix& a, const ExactMatrix& b) {
  BigInt t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (a(i, l) != 0) mpz_addmul(t.get_mpz_t(), a(i, l).get_mpz_t(), b(l, i).get_mpz_t());
  return t;
}

FaddeevLeVerrier run_faddeev(const ExactMatrix& a, bool keep_adjugate) {
  if (!a.square()) fail(ErrorKind::Precondition, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  FaddeevLeVerrier out;
  if (keep_adjugate) out.adjugate.resize(n);
  if (n == 0) {
    out.char_poly = Polynomial::constant(1);
    return out;
  }

  // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  ExactMatrix mk = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix am;
    BigInt t;
    if (k < n) {
      am = a * mk;
      t = am.trace();
    } else {
      t = trace_of_product(a, mk);
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
    if (keep_adjugate) out.adjugate[n - k] = std::move(mk);
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
      mk = std::move(am);
    }
  }
  out.char_poly = Polynomial::from_integers(c);
  return out;
}

}  // namespace

FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& a) { return run_faddeev(a, true); }

Polynomial char_poly(const ExactMatrix& m) { return run_faddeev(m, false).char_poly; }

std::vector<ExactMatrix> adjugate_series(const ExactMatrix& m) { return faddeev_leverrier(m).adjugate; }

}  // namespace prodspec
