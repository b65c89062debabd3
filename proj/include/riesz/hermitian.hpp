#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace riesz {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t order)
      : order_(order), data_(order * order) {}

  static ComplexMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * order_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * order_ + col];
  }

  double frobenius_norm() const;

 private:
  std::size_t order_ = 0;
  std::vector<Complex> data_;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps (row-major
// pivot order). Converged once every off-diagonal magnitude is below
// 1e-10 * ||M||_F. Throws kNotHermitian when entries differ from their
// mirrored conjugates by more than 1e-12 (scaled by the largest entry when
// that exceeds 1), kEigenFailure after 100 sweeps.
inline constexpr double kJacobiTolerance = 1e-10;

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Eigenvectors too. A smaller `relative_tolerance` runs the sweeps further,
// which resolves eigenvectors of eigenvalues far below the largest one.
HermitianEigen hermitian_eigen(const ComplexMatrix& m,
                               double relative_tolerance = kJacobiTolerance);

}  // namespace riesz
