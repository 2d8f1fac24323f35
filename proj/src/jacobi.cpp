#include <algorithm>
#include <cmath>
#include <vector>

#include "prodspec/errors.hpp"
#include "prodspec/matrix.hpp"

namespace prodspec {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

std::vector<Eigenvalue> symmetric_eigenvalues(const ExactMatrix& m, const JacobiOptions& options) {
  if (!m.is_symmetric()) fail(ErrorKind::Precondition, "Jacobi eigenvalues need a symmetric matrix");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  double frobenius = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).get_d();
      frobenius += a[i * n + j] * a[i * n + j];
    }
  frobenius = std::sqrt(frobenius);
  const double target = options.relative_tolerance * frobenius;

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double off = off_diagonal_norm(a, n);
  for (int sweep = 0; sweep < options.max_sweeps && off > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = at(r, p);
          double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = c * arq + s * arp;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  std::sort(diag.begin(), diag.end());
  std::vector<Eigenvalue> out;
  out.reserve(n);
  const double bound = std::max(off, target);
  for (double v : diag) out.push_back(Eigenvalue::numeric(v, bound));
  return out;
}

}  // namespace prodspec
