#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qcert/coloring.hpp"
#include "qcert/qsim/types.hpp"
#include "qcert/rayset.hpp"

namespace qcert::stairs {

/// Pure state of a d×d system, A-major amplitude ordering
/// (index = a·d + b).
class BipartiteState {
 public:
  explicit BipartiteState(qsim::Vector amplitudes);

  int local_dim() const { return dim_; }
  const qsim::Vector& amplitudes() const { return amp_; }
  qsim::Matrix reduced_b() const;

 private:
  qsim::Vector amp_;
  int dim_;
};

/// (1/√d) Σ_k |kk⟩.
BipartiteState max_entangled(int dim);

/// Component-wise complex conjugation in the computational basis.
qsim::PureState conjugate_state(const qsim::PureState& psi);

struct SteeredOutcome {
  double probability;
  /// Renormalized conditional state of B; absent when the outcome has
  /// probability ≤ 1e-12 and conditioning is undefined.
  std::optional<qsim::DensityOperator> conditional_b;
};

/// Von Neumann measurement of an orthonormal basis on particle A:
/// outcome probabilities and the renormalized conditional states of B.
/// Throws std::invalid_argument when the basis is not orthonormal
/// within 1e-12.
std::vector<SteeredOutcome> measure_at_A(
    const BipartiteState& state, const std::vector<qsim::PureState>& basis);

/// One verified (k, j_k) pair: measuring the conjugate basis k at A with
/// outcome j_k, plus the certainty checks on B's conditional state.
struct CertaintyRecord {
  int k = 0;        // basis index, 1-based
  int outcome = 0;  // j_k ∈ {1, 2, 3}
  double prob_at_a = 0.0;
  double fidelity_b = 0.0;
  std::array<double, 3> certainty{};  // born prob of O^k_j, j = 1..3
};

struct SteeringReport {
  std::vector<CertaintyRecord> records;
  bool all_certain = false;
  std::optional<ks::Coloring> coloring;  // set by the full pipeline
};

/// The Peres 33-ray set, its 40-basis completion, and the float
/// embedding of all 57 rays used by the simulator layer.
class StairsContext {
 public:
  StairsContext();

  const ks::RaySet& rays() const { return completion_.rays; }
  const std::vector<ks::Basis>& bases() const { return completion_.bases; }
  const qsim::PureState& embedded(int ray_id) const;

  ks::ColoringProblem coloring_problem() const;

  /// Iterates every basis (or one, 1-based index) and every outcome;
  /// each record checks prob 1/3 at A, fidelity 1 at B, and the
  /// 1/0/0 certainty pattern for the three observables O^k_j.
  /// all_certain aggregates the tolerance checks; a full run also
  /// attaches the coloring verdict.
  SteeringReport verify_certainties(std::optional<int> only_k = {}) const;

  /// The hypothetical noncontextual value map as a coloring problem,
  /// solved to exhaustion.
  ks::SearchCertificate locality_contradiction() const;

 private:
  ks::BasisCompletion completion_;
  std::vector<qsim::PureState> embedded_;
};

}  // namespace qcert::stairs
