#include "qcert/qsim/choi.hpp"

#include <stdexcept>

namespace qcert::qsim {

Matrix choi_matrix(const Instrument& inst, int outcome) {
  const int d = inst.dim();
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix unit = Matrix::Zero(d, d);
      unit(i, j) = 1.0;
      const Matrix image = inst.apply(outcome, unit);
      // block (i, j) of the d²×d² matrix
      choi.block(i * d, j * d, d, d) = image;
    }
  }
  return choi;
}

Matrix reshuffle(const Matrix& choi, int dim) {
  if (choi.rows() != dim * dim || choi.cols() != dim * dim) {
    throw std::invalid_argument("reshuffle: dimension mismatch");
  }
  Matrix r(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          r(i * dim + j, k * dim + l) = choi(i * dim + k, j * dim + l);
        }
      }
    }
  }
  return r;
}

PreparationClass classify_preparation(const Instrument& inst, int outcome) {
  const int d = inst.dim();
  const Matrix choi = choi_matrix(inst, outcome);

  // tr E_d = Σ_i ⟨ii|C|ii⟩-style partial trace over the output factor.
  // A vanishing trace means the outcome map is zero.
  Matrix effect_t = Matrix::Zero(d, d);  // E_dᵀ = partial trace over output
  Matrix sigma_raw = Matrix::Zero(d, d);  // partial trace over input
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        effect_t(i, j) += choi(i * d + k, j * d + k);
        sigma_raw(i, j) += choi(k * d + i, k * d + j);
      }
    }
  }
  const double effect_trace = effect_t.trace().real();
  if (effect_trace <= kSpectralTol) return {PreparationKind::NotPreparation, {}};

  Eigen::JacobiSVD<Matrix> svd(reshuffle(choi, d));
  const auto& sv = svd.singularValues();
  for (int i = 1; i < sv.size(); ++i) {
    if (sv[i] > kSpectralTol) return {PreparationKind::NotPreparation, {}};
  }

  Matrix sigma = sigma_raw / effect_trace;
  sigma = (sigma + sigma.adjoint()) / 2.0;
  DensityOperator state{sigma};

  const Matrix effect = effect_t.transpose();
  const bool deterministic =
      max_abs_entry(effect - Matrix::Identity(d, d)) <= kAlgebraicTol;
  return {deterministic ? PreparationKind::Deterministic
                        : PreparationKind::Stochastic,
          std::move(state)};
}

}  // namespace qcert::qsim
