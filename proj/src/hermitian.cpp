#include "riesz/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riesz/error.hpp"

namespace riesz {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

void check_hermitian(const ComplexMatrix& m) {
  double scale = 1.0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      scale = std::max(scale, std::abs(m(i, j)));
    }
  }
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = i; j < m.order(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTolerance * scale) {
        throw Error(ErrorKind::kNotHermitian, "not Hermitian");
      }
    }
  }
}

// Applies the rotation that annihilates a(p, q). A phase on index q first
// makes the pivot real, then a real Givens rotation finishes the job; the
// same unitary is accumulated into v when requested.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const std::size_t n = a.order();
  const Complex pivot = a(p, q);
  const double magnitude = std::abs(pivot);
  const Complex phase = pivot / magnitude;  // e^{i phi}

  // a <- D^H a D with D = diag(1, .., e^{-i phi} at q, .., 1).
  for (std::size_t k = 0; k < n; ++k) {
    a(q, k) *= phase;
    a(k, q) *= std::conj(phase);
  }
  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) (*v)(k, q) *= std::conj(phase);
  }

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  const double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // a <- R^T a R with R(p,p) = R(q,q) = c, R(p,q) = s, R(q,p) = -s.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

HermitianEigen jacobi(const ComplexMatrix& m, bool want_vectors,
                      double relative_tolerance) {
  check_hermitian(m);
  const std::size_t n = m.order();
  ComplexMatrix a = m;
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double threshold = relative_tolerance * m.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    double largest = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        largest = std::max(largest, std::abs(a(p, q)));
      }
    }
    if (largest < threshold || largest == 0.0) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // Entries already below the target are left alone; rotating them
        // only churns rounding noise.
        if (std::abs(a(p, q)) < threshold) continue;
        rotate(a, want_vectors ? &v : nullptr, p, q);
      }
    }
  }
  if (!converged) throw Error(ErrorKind::kEigenFailure, "eigen failure");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen result;
  result.values.reserve(n);
  for (std::size_t k : order) result.values.push_back(a(k, k).real());
  if (want_vectors) {
    result.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t row = 0; row < n; ++row) {
        result.vectors(row, col) = v(row, order[col]);
      }
    }
  }
  return result;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t order) {
  ComplexMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return jacobi(m, false, kJacobiTolerance).values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m,
                               double relative_tolerance) {
  return jacobi(m, true, relative_tolerance);
}

}  // namespace riesz
