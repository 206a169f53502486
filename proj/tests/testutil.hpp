#pragma once

#include <random>
#include <vector>

#include "qcert/qsim/types.hpp"

namespace testutil {

using qcert::qsim::Complex;
using qcert::qsim::Matrix;
using qcert::qsim::Vector;

inline qcert::qsim::PureState random_pure(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex{gauss(rng), gauss(rng)};
  return qcert::qsim::PureState::normalized(v);
}

inline qcert::qsim::DensityOperator random_density(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return qcert::qsim::DensityOperator(std::move(rho));
}

// Random instrument: Gaussian Kraus candidates rescaled by S^{-1/2} of
// their completeness sum, which makes Σ A†A = I hold to rounding.
inline qcert::qsim::Instrument random_instrument(int dim, int outcomes,
                                                 int kraus_per_outcome,
                                                 std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<Matrix>> kraus(outcomes);
  Matrix sum = Matrix::Zero(dim, dim);
  for (int d = 0; d < outcomes; ++d) {
    for (int j = 0; j < kraus_per_outcome; ++j) {
      Matrix a(dim, dim);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) a(r, c) = Complex{gauss(rng), gauss(rng)};
      }
      sum += a.adjoint() * a;
      kraus[d].push_back(std::move(a));
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sum);
  const Matrix inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().adjoint();
  for (auto& family : kraus) {
    for (Matrix& a : family) a = a * inv_sqrt;
  }
  return qcert::qsim::Instrument(std::move(kraus));
}

}  // namespace testutil
