#include "qcert/qsim/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcert::qsim {

bool approx_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_entry(m - m.adjoint()) <= tol;
}

double max_abs_entry(const Matrix& m) {
  return m.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace_first(const Matrix& m, int da, int db) {
  Matrix out = Matrix::Zero(db, db);
  for (int k = 0; k < db; ++k) {
    for (int l = 0; l < db; ++l) {
      for (int i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
    }
  }
  return out;
}

Matrix partial_trace_second(const Matrix& m, int da, int db) {
  Matrix out = Matrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    }
  }
  return out;
}

// ---- PureState -----------------------------------------------------------

PureState::PureState(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw std::invalid_argument("PureState: empty vector");
  const double n2 = amp_.squaredNorm();
  if (std::abs(n2 - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("PureState: squared norm " +
                                std::to_string(n2) + " is not 1");
  }
}

PureState PureState::normalized(const Vector& amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("PureState: zero vector");
  return PureState(Vector(amplitudes / n));
}

PureState PureState::basis_state(int dim, int k) {
  if (k < 0 || k >= dim) throw std::invalid_argument("basis_state: bad index");
  Vector v = Vector::Zero(dim);
  v[k] = 1.0;
  return PureState(std::move(v));
}

// ---- DensityOperator -----------------------------------------------------

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
  if (!approx_hermitian(m_)) {
    throw std::invalid_argument("DensityOperator: not Hermitian");
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("DensityOperator: trace " +
                                std::to_string(tr) + " is not 1");
  }
  if (min_eigenvalue(m_) < -kSpectralTol) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                std::to_string(min_eigenvalue(m_)));
  }
}

DensityOperator DensityOperator::pure(const PureState& psi) {
  return DensityOperator(psi.projector());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  return DensityOperator(Matrix::Identity(dim, dim) / double(dim));
}

// ---- Effect / Povm -------------------------------------------------------

Effect::Effect(Matrix m) : m_(std::move(m)) {
  if (!approx_hermitian(m_)) {
    throw std::invalid_argument("Effect: not Hermitian");
  }
  if (min_eigenvalue(m_) < -kSpectralTol ||
      max_eigenvalue(m_) > 1.0 + kSpectralTol) {
    throw std::invalid_argument("Effect: spectrum outside [0, 1]");
  }
}

Effect Effect::identity(int dim) {
  return Effect(Matrix::Identity(dim, dim));
}

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("Povm: no effects");
  const int d = effects_.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Effect& e : effects_) {
    if (e.dim() != d) throw std::invalid_argument("Povm: mixed dimensions");
    sum += e.matrix();
  }
  if (max_abs_entry(sum - Matrix::Identity(d, d)) > kAlgebraicTol) {
    throw std::invalid_argument("Povm: effects do not sum to the identity");
  }
}

// ---- Instrument ----------------------------------------------------------

Instrument::Instrument(std::vector<std::vector<Matrix>> kraus_by_outcome)
    : kraus_(std::move(kraus_by_outcome)) {
  if (kraus_.empty()) throw std::invalid_argument("Instrument: no outcomes");
  for (const auto& family : kraus_) {
    for (const Matrix& a : family) {
      if (a.rows() != a.cols()) {
        throw std::invalid_argument("Instrument: non-square Kraus operator");
      }
      if (dim_ == 0) dim_ = static_cast<int>(a.rows());
      if (a.rows() != dim_) {
        throw std::invalid_argument("Instrument: mixed dimensions");
      }
    }
  }
  if (dim_ == 0) throw std::invalid_argument("Instrument: no Kraus operators");
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const auto& family : kraus_) {
    for (const Matrix& a : family) sum += a.adjoint() * a;
  }
  if (max_abs_entry(sum - Matrix::Identity(dim_, dim_)) > kAlgebraicTol) {
    throw std::invalid_argument("Instrument: Σ A†A differs from the identity");
  }
}

Instrument Instrument::identity(int dim) {
  return Instrument({{Matrix::Identity(dim, dim)}});
}

Instrument Instrument::projective(const std::vector<PureState>& basis) {
  if (basis.empty()) throw std::invalid_argument("projective: empty basis");
  std::vector<std::vector<Matrix>> kraus;
  kraus.reserve(basis.size());
  for (const PureState& b : basis) kraus.push_back({b.projector()});
  return Instrument(std::move(kraus));
}

const std::vector<Matrix>& Instrument::kraus(int outcome) const {
  return kraus_.at(outcome);
}

Effect Instrument::induced_effect(int outcome) const {
  Matrix e = Matrix::Zero(dim_, dim_);
  for (const Matrix& a : kraus_.at(outcome)) e += a.adjoint() * a;
  return Effect((e + e.adjoint()) / 2.0);
}

Povm Instrument::povm() const {
  std::vector<Effect> effects;
  effects.reserve(kraus_.size());
  for (int d = 0; d < outcomes(); ++d) effects.push_back(induced_effect(d));
  return Povm(std::move(effects));
}

Matrix Instrument::apply(int outcome, const Matrix& rho) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const Matrix& a : kraus_.at(outcome)) out += a * rho * a.adjoint();
  return out;
}

double Instrument::outcome_probability(int outcome,
                                       const DensityOperator& rho) const {
  return apply(outcome, rho.matrix()).trace().real();
}

Instrument Instrument::coarse_grained() const {
  std::vector<Matrix> all;
  for (const auto& family : kraus_) {
    all.insert(all.end(), family.begin(), family.end());
  }
  return Instrument({std::move(all)});
}

// ---- Observable ----------------------------------------------------------

Observable::Observable(std::vector<double> eigenvalues,
                       std::vector<PureState> axes)
    : eigenvalues_(std::move(eigenvalues)), axes_(std::move(axes)) {
  if (axes_.empty() || eigenvalues_.size() != axes_.size()) {
    throw std::invalid_argument("Observable: eigenvalue/axis count mismatch");
  }
  const int d = axes_.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i].dim() != d) {
      throw std::invalid_argument("Observable: mixed dimensions");
    }
    for (size_t j = i + 1; j < axes_.size(); ++j) {
      const double overlap =
          std::abs(axes_[i].amplitudes().dot(axes_[j].amplitudes()));
      if (overlap > kAlgebraicTol) {
        throw std::invalid_argument("Observable: projectors not orthogonal");
      }
    }
    sum += axes_[i].projector();
  }
  if (max_abs_entry(sum - Matrix::Identity(d, d)) > kAlgebraicTol) {
    throw std::invalid_argument("Observable: projectors incomplete");
  }
}

}  // namespace qcert::qsim
