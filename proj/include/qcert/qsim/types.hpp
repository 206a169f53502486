#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcert::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances: algebraic identities at 1e-12, spectral quantities and
// round trips at 1e-10. Dimension ≤ 9 dense arithmetic leaves headroom.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

bool approx_hermitian(const Matrix& m, double tol = kAlgebraicTol);
double max_abs_entry(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);
double max_eigenvalue(const Matrix& hermitian);

/// (1/2)·Σ |eig(a - b)| for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

/// Partial traces of a (da·db)×(da·db) matrix with first-factor-major
/// index convention (row = i·db + k).
Matrix partial_trace_first(const Matrix& m, int da, int db);   // db×db
Matrix partial_trace_second(const Matrix& m, int da, int db);  // da×da

/// Unit vector in C^d. Norm validated to within kAlgebraicTol.
class PureState {
 public:
  explicit PureState(Vector amplitudes);
  static PureState normalized(const Vector& amplitudes);
  static PureState basis_state(int dim, int k);

  int dim() const { return static_cast<int>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }
  Matrix projector() const { return amp_ * amp_.adjoint(); }

 private:
  Vector amp_;
};

/// Hermitian, unit-trace, positive semidefinite matrix (eigenvalue floor
/// -kSpectralTol).
class DensityOperator {
 public:
  explicit DensityOperator(Matrix m);
  static DensityOperator pure(const PureState& psi);
  static DensityOperator maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// POVM element: Hermitian with spectrum in [0, 1] (within kSpectralTol).
class Effect {
 public:
  explicit Effect(Matrix m);
  static Effect identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Complete family of effects: Σ_d E_d = I within kAlgebraicTol.
class Povm {
 public:
  explicit Povm(std::vector<Effect> effects);

  int dim() const { return effects_.front().dim(); }
  int size() const { return static_cast<int>(effects_.size()); }
  const Effect& effect(int d) const { return effects_.at(d); }

 private:
  std::vector<Effect> effects_;
};

/// Outcome-indexed Kraus families A_dj with Σ_d Σ_j A†A = I within
/// kAlgebraicTol.
class Instrument {
 public:
  explicit Instrument(std::vector<std::vector<Matrix>> kraus_by_outcome);

  static Instrument identity(int dim);
  /// Von Neumann measurement in an orthonormal basis.
  static Instrument projective(const std::vector<PureState>& basis);

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(kraus_.size()); }
  const std::vector<Matrix>& kraus(int outcome) const;

  /// E_d = Σ_j A†_dj A_dj.
  Effect induced_effect(int outcome) const;
  Povm povm() const;

  /// Unnormalized map Σ_j A ρ A† for one outcome.
  Matrix apply(int outcome, const Matrix& rho) const;
  double outcome_probability(int outcome, const DensityOperator& rho) const;

  /// Single-outcome instrument containing every Kraus operator; the
  /// trace-preserving operation of the device with outcomes discarded.
  Instrument coarse_grained() const;

 private:
  int dim_ = 0;
  std::vector<std::vector<Matrix>> kraus_;
};

/// O = Σ_k λ_k |φ_k⟩⟨φ_k| with orthonormal rank-1 projectors summing to
/// the identity.
class Observable {
 public:
  Observable(std::vector<double> eigenvalues, std::vector<PureState> axes);

  int dim() const { return axes_.front().dim(); }
  int size() const { return static_cast<int>(axes_.size()); }
  double eigenvalue(int k) const { return eigenvalues_.at(k); }
  const PureState& axis(int k) const { return axes_.at(k); }
  Matrix projector(int k) const { return axes_.at(k).projector(); }

 private:
  std::vector<double> eigenvalues_;
  std::vector<PureState> axes_;
};

}  // namespace qcert::qsim
