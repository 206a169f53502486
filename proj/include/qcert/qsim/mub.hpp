#pragma once

#include <string>
#include <vector>

#include "qcert/qsim/types.hpp"

namespace qcert::qsim {

/// Complete set of d+1 mutually unbiased bases for d ∈ {2, 3}.
///
/// d = 2: the Z, X and Y eigenbases. d = 3: the computational basis plus
/// the three Fourier-phase bases with components ω^(jk + s·k²)/√3 for
/// shift s ∈ {0, 1, 2}, ω = exp(2πi/3). Cross-basis overlaps satisfy
/// |⟨e^k_i|e^l_j⟩|² = 1/d within 1e-12 (checked at construction).
class MubSet {
 public:
  static MubSet make(int dim);

  int dim() const { return dim_; }
  int basis_count() const { return static_cast<int>(bases_.size()); }
  const std::string& label(int k) const { return labels_.at(k); }
  /// j-th vector of basis k (column view).
  Vector vec(int k, int j) const { return bases_.at(k).col(j); }
  Matrix projector(int k, int j) const;

 private:
  MubSet(int dim, std::vector<Matrix> bases, std::vector<std::string> labels);
  int dim_;
  std::vector<Matrix> bases_;  // columns are basis vectors
  std::vector<std::string> labels_;
};

/// Outcome probability rows, one per basis: table[k][j] = tr(ρ Π^k_j).
using ProbTable = std::vector<std::vector<double>>;

ProbTable state_to_probs(const DensityOperator& rho, const MubSet& mub);

/// Linear Born-rule inversion ρ = Σ_{k,j} p^k_j Π^k_j − I. The result is
/// Hermitian with unit trace for any table whose rows sum to 1 (within
/// 1e-10, else std::invalid_argument); `positive` records whether it is
/// also positive semidefinite, which only quantum-consistent tables
/// guarantee.
struct Reconstruction {
  Matrix matrix;
  bool positive;
};

Reconstruction probs_to_state(const ProbTable& table, const MubSet& mub);

}  // namespace qcert::qsim
