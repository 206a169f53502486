#pragma once

#include <optional>
#include <vector>

#include "qcert/qsim/types.hpp"

namespace qcert::qsim {

/// tr(ρE), clamped to [0, 1]. Throws std::invalid_argument on dimension
/// mismatch or when the raw value falls outside [-1e-12, 1+1e-12].
double born_prob(const DensityOperator& rho, const Effect& e);

/// Posterior state 𝒜_d(ρ)/p_d for the observed outcome. Conditioning on
/// an outcome with p_d ≤ 1e-12 throws std::domain_error.
DensityOperator update(const DensityOperator& rho, const Instrument& inst,
                       int outcome);

/// The eigenvalue λ_k whose projector carries probability ≥ 1 - 1e-10,
/// if any single projector does.
std::optional<double> certainty_check(const DensityOperator& rho,
                                      const Observable& obs);

/// Classical posterior: posterior_h ∝ likelihoods[datum][h] · prior[h].
/// Prior must sum to 1 within 1e-12; Pr(datum) = 0 throws
/// std::domain_error.
std::vector<double> bayes_update(
    const std::vector<double>& prior,
    const std::vector<std::vector<double>>& likelihoods, int datum);

}  // namespace qcert::qsim
