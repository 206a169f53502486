#pragma once

#include <map>

#include "qcert/qsim/types.hpp"

namespace qcert::qsim {

/// The three preparation-device circuits on a system/apparatus qubit pair.
///
///   A: CNOT (system controls apparatus), measure the apparatus in the
///      computational basis, flip the system when the outcome is 1.
///   B: the flip moved before the measurement as a second CNOT with the
///      apparatus as control; no measurement remains.
///   C: circuit B with the apparatus prepared in |1⟩.
enum class Fig1Circuit { A, B, C };

struct Fig1Result {
  DensityOperator system_out;
  DensityOperator apparatus_out;
  std::map<int, double> outcome_distribution;  // empty for B and C
};

/// Runs one circuit. Both inputs must be qubits; circuit C requires the
/// apparatus input |1⟩. Outputs are the unconditional (outcome-averaged)
/// marginal states.
Fig1Result run_fig1(Fig1Circuit circuit, const PureState& system_in,
                    const PureState& apparatus_in);

/// The two-outcome instrument that circuit A induces on the system qubit
/// for a fixed apparatus input: K_m = X^m · diag(app_m, app_{m⊕1}).
/// Its coarse graining is the whole-device preparation operation.
Instrument fig1a_instrument(const PureState& apparatus_in);

}  // namespace qcert::qsim
