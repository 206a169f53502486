#include "qcert/qsim/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qcert::qsim {

namespace {

std::vector<Matrix> qubit_bases() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  Matrix z(2, 2), x(2, 2), y(2, 2);
  z << 1, 0, 0, 1;
  x << s, s, s, -s;
  y << s, s, i * s, -i * s;
  return {z, x, y};
}

std::vector<Matrix> qutrit_bases() {
  std::vector<Matrix> bases{Matrix::Identity(3, 3)};
  const double norm = 1.0 / std::sqrt(3.0);
  for (int s = 0; s < 3; ++s) {
    Matrix b(3, 3);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int phase = (j * k + s * k * k) % 3;
        b(k, j) = norm * std::exp(Complex{0.0, 2.0 * std::numbers::pi *
                                                   double(phase) / 3.0});
      }
    }
    bases.push_back(b);
  }
  return bases;
}

}  // namespace

MubSet::MubSet(int dim, std::vector<Matrix> bases,
               std::vector<std::string> labels)
    : dim_(dim), bases_(std::move(bases)), labels_(std::move(labels)) {
  for (const Matrix& b : bases_) {
    if (max_abs_entry(b.adjoint() * b - Matrix::Identity(dim_, dim_)) >
        kAlgebraicTol) {
      throw std::logic_error("MubSet: basis not orthonormal");
    }
  }
  for (size_t k = 0; k < bases_.size(); ++k) {
    for (size_t l = k + 1; l < bases_.size(); ++l) {
      const Matrix overlap = bases_[k].adjoint() * bases_[l];
      for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
          if (std::abs(std::norm(overlap(i, j)) - 1.0 / dim_) > kAlgebraicTol) {
            throw std::logic_error("MubSet: bases not mutually unbiased");
          }
        }
      }
    }
  }
}

MubSet MubSet::make(int dim) {
  if (dim == 2) return MubSet(2, qubit_bases(), {"Z", "X", "Y"});
  if (dim == 3) {
    return MubSet(3, qutrit_bases(),
                  {"standard", "fourier0", "fourier1", "fourier2"});
  }
  throw std::invalid_argument("MubSet: dimension must be 2 or 3");
}

Matrix MubSet::projector(int k, int j) const {
  const Vector v = vec(k, j);
  return v * v.adjoint();
}

ProbTable state_to_probs(const DensityOperator& rho, const MubSet& mub) {
  if (rho.dim() != mub.dim()) {
    throw std::invalid_argument("state_to_probs: dimension mismatch");
  }
  ProbTable table(mub.basis_count(), std::vector<double>(mub.dim()));
  for (int k = 0; k < mub.basis_count(); ++k) {
    for (int j = 0; j < mub.dim(); ++j) {
      table[k][j] = (rho.matrix() * mub.projector(k, j)).trace().real();
    }
  }
  return table;
}

Reconstruction probs_to_state(const ProbTable& table, const MubSet& mub) {
  const int d = mub.dim();
  if (static_cast<int>(table.size()) != mub.basis_count()) {
    throw std::invalid_argument("probs_to_state: wrong row count");
  }
  Matrix rho = -Matrix::Identity(d, d);
  for (int k = 0; k < mub.basis_count(); ++k) {
    if (static_cast<int>(table[k].size()) != d) {
      throw std::invalid_argument("probs_to_state: wrong row length");
    }
    double row_sum = 0.0;
    for (int j = 0; j < d; ++j) row_sum += table[k][j];
    if (std::abs(row_sum - 1.0) > kSpectralTol) {
      throw std::invalid_argument("probs_to_state: row " + std::to_string(k) +
                                  " sums to " + std::to_string(row_sum));
    }
    for (int j = 0; j < d; ++j) rho += table[k][j] * mub.projector(k, j);
  }
  rho = (rho + rho.adjoint()) / 2.0;
  return Reconstruction{rho, min_eigenvalue(rho) >= -kSpectralTol};
}

}  // namespace qcert::qsim
