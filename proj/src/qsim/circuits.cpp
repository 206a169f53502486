#include "qcert/qsim/circuits.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qcert::qsim {

namespace {

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

// Joint index convention: system-major, row = s*2 + a.
Matrix cnot_system_control() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = 1;  // |0a⟩ fixed
  u(3, 2) = u(2, 3) = 1;  // |1a⟩ -> |1,a⊕1⟩
  return u;
}

Matrix cnot_apparatus_control() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(2, 2) = 1;  // a = 0 fixed
  u(3, 1) = u(1, 3) = 1;  // a = 1 flips the system
  return u;
}

}  // namespace

Fig1Result run_fig1(Fig1Circuit circuit, const PureState& system_in,
                    const PureState& apparatus_in) {
  if (system_in.dim() != 2 || apparatus_in.dim() != 2) {
    throw std::invalid_argument("run_fig1: inputs must be qubits");
  }
  if (circuit == Fig1Circuit::C &&
      std::norm(apparatus_in.amplitudes()[1]) < 1.0 - kAlgebraicTol) {
    throw std::invalid_argument("run_fig1: circuit C requires apparatus |1⟩");
  }

  Vector joint(4);
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 2; ++a) {
      joint[s * 2 + a] =
          system_in.amplitudes()[s] * apparatus_in.amplitudes()[a];
    }
  }
  joint = cnot_system_control() * joint;

  if (circuit == Fig1Circuit::A) {
    // Apparatus measurement as an instrument outcome on the classical
    // wire, then the conditional flip X^a on the system.
    Matrix system_out = Matrix::Zero(2, 2);
    Matrix apparatus_out = Matrix::Zero(2, 2);
    std::map<int, double> distribution;
    const Matrix x = pauli_x();
    for (int m = 0; m < 2; ++m) {
      Vector branch(2);
      branch << joint[0 * 2 + m], joint[1 * 2 + m];
      const double p = branch.squaredNorm();
      if (m == 1) branch = x * branch;
      system_out += branch * branch.adjoint();
      apparatus_out(m, m) = p;
      distribution[m] = p;
    }
    return Fig1Result{DensityOperator(system_out),
                      DensityOperator(apparatus_out),
                      std::move(distribution)};
  }

  joint = cnot_apparatus_control() * joint;
  const Matrix rho = joint * joint.adjoint();
  return Fig1Result{DensityOperator(partial_trace_second(rho, 2, 2)),
                    DensityOperator(partial_trace_first(rho, 2, 2)),
                    {}};
}

Instrument fig1a_instrument(const PureState& apparatus_in) {
  if (apparatus_in.dim() != 2) {
    throw std::invalid_argument("fig1a_instrument: apparatus must be a qubit");
  }
  const Vector& app = apparatus_in.amplitudes();
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = app[0];
  k0(1, 1) = app[1];
  Matrix k1 = Matrix::Zero(2, 2);
  // X applied after projecting the apparatus onto |1⟩
  k1(0, 1) = app[0];
  k1(1, 0) = app[1];
  return Instrument({{k0}, {k1}});
}

}  // namespace qcert::qsim
