#pragma once

#include <optional>

#include "qcert/qsim/types.hpp"

namespace qcert::qsim {

/// Choi matrix Σ_ij |i⟩⟨j| ⊗ 𝒜_d(|i⟩⟨j|) of one outcome map, d²×d².
Matrix choi_matrix(const Instrument& inst, int outcome);

/// Index shuffle R[(i,j),(k,l)] = C[(i,k),(j,l)]. A map whose Choi
/// matrix factorizes as X ⊗ Y reshuffles to the rank-1 matrix
/// vec(X)·vec(Y)ᵀ, which is what the preparation test looks for.
Matrix reshuffle(const Matrix& choi, int dim);

enum class PreparationKind { NotPreparation, Stochastic, Deterministic };

struct PreparationClass {
  PreparationKind kind = PreparationKind::NotPreparation;
  std::optional<DensityOperator> state;  // σ with 𝒜_d(ρ) = p_d(ρ)·σ
};

/// Decides whether outcome d realizes a state preparation, i.e. whether
/// 𝒜_d(ρ) = p_d(ρ)·σ for a fixed σ: the reshuffled Choi matrix must
/// have all singular values beyond the first ≤ 1e-10, in which case the
/// Choi matrix is E_dᵀ ⊗ σ. Deterministic iff additionally E_d is the
/// identity within 1e-12.
PreparationClass classify_preparation(const Instrument& inst, int outcome);

}  // namespace qcert::qsim
