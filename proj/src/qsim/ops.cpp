#include "qcert/qsim/ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcert::qsim {

double born_prob(const DensityOperator& rho, const Effect& e) {
  if (rho.dim() != e.dim()) {
    throw std::invalid_argument("born_prob: dimension mismatch");
  }
  const double p = (rho.matrix() * e.matrix()).trace().real();
  if (p < -kAlgebraicTol || p > 1.0 + kAlgebraicTol) {
    throw std::invalid_argument("born_prob: value " + std::to_string(p) +
                                " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

DensityOperator update(const DensityOperator& rho, const Instrument& inst,
                       int outcome) {
  if (rho.dim() != inst.dim()) {
    throw std::invalid_argument("update: dimension mismatch");
  }
  const Matrix mapped = inst.apply(outcome, rho.matrix());
  const double p = mapped.trace().real();
  if (p <= 1e-12) {
    throw std::domain_error(
        "update: conditioning on an outcome of probability " +
        std::to_string(p));
  }
  return DensityOperator(mapped / p);
}

std::optional<double> certainty_check(const DensityOperator& rho,
                                      const Observable& obs) {
  for (int k = 0; k < obs.size(); ++k) {
    const double p = born_prob(rho, Effect(obs.projector(k)));
    if (p >= 1.0 - kSpectralTol) return obs.eigenvalue(k);
  }
  return std::nullopt;
}

std::vector<double> bayes_update(
    const std::vector<double>& prior,
    const std::vector<std::vector<double>>& likelihoods, int datum) {
  const double total = std::accumulate(prior.begin(), prior.end(), 0.0);
  if (std::abs(total - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("bayes_update: prior sums to " +
                                std::to_string(total));
  }
  if (datum < 0 || static_cast<size_t>(datum) >= likelihoods.size()) {
    throw std::invalid_argument("bayes_update: datum out of range");
  }
  const std::vector<double>& row = likelihoods[datum];
  if (row.size() != prior.size()) {
    throw std::invalid_argument("bayes_update: likelihood row size mismatch");
  }
  std::vector<double> posterior(prior.size());
  double p_datum = 0.0;
  for (size_t h = 0; h < prior.size(); ++h) {
    if (row[h] < 0.0 || row[h] > 1.0 + kAlgebraicTol) {
      throw std::invalid_argument("bayes_update: likelihood outside [0, 1]");
    }
    posterior[h] = row[h] * prior[h];
    p_datum += posterior[h];
  }
  if (p_datum <= 0.0) {
    throw std::domain_error("bayes_update: datum has probability 0");
  }
  for (double& v : posterior) v /= p_datum;
  return posterior;
}

}  // namespace qcert::qsim
