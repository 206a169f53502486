#include "qcert/stairs.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcert/qsim/ops.hpp"

namespace qcert::stairs {

using qsim::Complex;
using qsim::DensityOperator;
using qsim::Matrix;
using qsim::PureState;
using qsim::Vector;

BipartiteState::BipartiteState(Vector amplitudes) : amp_(std::move(amplitudes)) {
  const int n = static_cast<int>(amp_.size());
  dim_ = static_cast<int>(std::lround(std::sqrt(double(n))));
  if (dim_ * dim_ != n || dim_ < 2) {
    throw std::invalid_argument("BipartiteState: size is not a square");
  }
  if (std::abs(amp_.squaredNorm() - 1.0) > qsim::kAlgebraicTol) {
    throw std::invalid_argument("BipartiteState: not normalized");
  }
}

qsim::Matrix BipartiteState::reduced_b() const {
  const Matrix rho = amp_ * amp_.adjoint();
  return qsim::partial_trace_first(rho, dim_, dim_);
}

BipartiteState max_entangled(int dim) {
  Vector amp = Vector::Zero(dim * dim);
  const double c = 1.0 / std::sqrt(double(dim));
  for (int k = 0; k < dim; ++k) amp[k * dim + k] = c;
  return BipartiteState(std::move(amp));
}

PureState conjugate_state(const PureState& psi) {
  return PureState(psi.amplitudes().conjugate());
}

std::vector<SteeredOutcome> measure_at_A(
    const BipartiteState& state, const std::vector<PureState>& basis) {
  const int d = state.local_dim();
  if (static_cast<int>(basis.size()) != d) {
    throw std::invalid_argument("measure_at_A: basis size mismatch");
  }
  for (int i = 0; i < d; ++i) {
    if (basis[i].dim() != d) {
      throw std::invalid_argument("measure_at_A: basis dimension mismatch");
    }
    for (int j = 0; j < d; ++j) {
      const double overlap =
          std::abs(basis[i].amplitudes().dot(basis[j].amplitudes()));
      if (std::abs(overlap - (i == j ? 1.0 : 0.0)) > qsim::kAlgebraicTol) {
        throw std::invalid_argument("measure_at_A: basis not orthonormal");
      }
    }
  }

  std::vector<SteeredOutcome> outcomes;
  outcomes.reserve(d);
  for (const PureState& b : basis) {
    // ⟨b|_A Ψ⟩: unnormalized conditional amplitude vector of B.
    Vector cond = Vector::Zero(d);
    for (int a = 0; a < d; ++a) {
      const Complex w = std::conj(b.amplitudes()[a]);
      for (int k = 0; k < d; ++k) cond[k] += w * state.amplitudes()[a * d + k];
    }
    const double p = cond.squaredNorm();
    if (p <= 1e-12) {
      outcomes.push_back(SteeredOutcome{p, std::nullopt});
    } else {
      outcomes.push_back(
          SteeredOutcome{p, DensityOperator(cond * cond.adjoint() / p)});
    }
  }
  return outcomes;
}

StairsContext::StairsContext() : completion_(ks::complete_bases(ks::peres_33())) {
  embedded_.reserve(completion_.rays.size());
  for (const exact::Ray& r : completion_.rays.rays()) {
    Vector v(3);
    v << Complex{r.vec().x.to_double(), 0.0},
        Complex{r.vec().y.to_double(), 0.0},
        Complex{r.vec().z.to_double(), 0.0};
    embedded_.push_back(PureState::normalized(v));
  }
}

const PureState& StairsContext::embedded(int ray_id) const {
  return embedded_.at(ray_id);
}

ks::ColoringProblem StairsContext::coloring_problem() const {
  return ks::ColoringProblem{completion_.rays.size(), completion_.bases};
}

SteeringReport StairsContext::verify_certainties(
    std::optional<int> only_k) const {
  const int basis_count = static_cast<int>(completion_.bases.size());
  if (only_k && (*only_k < 1 || *only_k > basis_count)) {
    throw std::invalid_argument("verify_certainties: basis index out of range");
  }
  const BipartiteState psi = max_entangled(3);

  SteeringReport report;
  report.all_certain = true;
  const int k_first = only_k.value_or(1);
  const int k_last = only_k.value_or(basis_count);
  for (int k = k_first; k <= k_last; ++k) {
    const ks::Basis& basis = completion_.bases[k - 1];
    std::vector<PureState> steered;  // |ψ^k_j⟩, the Peres rays of basis k
    std::vector<PureState> measured;  // conjugate basis at A
    for (int r : basis.members) {
      steered.push_back(embedded_[r]);
      measured.push_back(conjugate_state(embedded_[r]));
    }

    // Every outcome j_k is realized in turn; the argument quantifies
    // over all of them, so nothing is sampled.
    const std::vector<SteeredOutcome> outcomes = measure_at_A(psi, measured);
    for (int jk = 0; jk < 3; ++jk) {
      const DensityOperator& cond = outcomes[jk].conditional_b.value();
      CertaintyRecord rec;
      rec.k = k;
      rec.outcome = jk + 1;
      rec.prob_at_a = outcomes[jk].probability;
      rec.fidelity_b =
          qsim::born_prob(cond, qsim::Effect(steered[jk].projector()));
      for (int j = 0; j < 3; ++j) {
        rec.certainty[j] =
            qsim::born_prob(cond, qsim::Effect(steered[j].projector()));
      }

      bool ok = std::abs(rec.prob_at_a - 1.0 / 3.0) <= qsim::kAlgebraicTol &&
                std::abs(rec.fidelity_b - 1.0) <= qsim::kAlgebraicTol;
      for (int j = 0; j < 3; ++j) {
        const double expected = j == jk ? 1.0 : 0.0;
        ok = ok && std::abs(rec.certainty[j] - expected) <= qsim::kSpectralTol;
      }
      report.all_certain = report.all_certain && ok;
      report.records.push_back(rec);
    }
  }

  if (!only_k) {
    report.coloring = locality_contradiction().result;
  }
  return report;
}

ks::SearchCertificate StairsContext::locality_contradiction() const {
  return ks::solve_coloring(coloring_problem());
}

}  // namespace qcert::stairs
