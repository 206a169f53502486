#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qcert/qsim/mub.hpp"
#include "testutil.hpp"

using namespace qcert::qsim;

TEST_CASE("mub sets are unbiased for d = 2 and 3") {
  for (int dim : {2, 3}) {
    const MubSet mub = MubSet::make(dim);
    REQUIRE(mub.basis_count() == dim + 1);
    for (int k = 0; k < mub.basis_count(); ++k) {
      for (int l = 0; l < mub.basis_count(); ++l) {
        if (k == l) continue;
        for (int i = 0; i < dim; ++i) {
          for (int j = 0; j < dim; ++j) {
            const double overlap = std::norm(mub.vec(k, i).dot(mub.vec(l, j)));
            CHECK(std::abs(overlap - 1.0 / dim) <= 1e-12);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(MubSet::make(4), std::invalid_argument);
}

TEST_CASE("probability rows of |0⟩⟨0| in the Z/X/Y bases") {
  const MubSet mub = MubSet::make(2);
  const DensityOperator rho = DensityOperator::pure(PureState::basis_state(2, 0));
  const ProbTable table = state_to_probs(rho, mub);
  CHECK(table[0][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(table[0][1] == doctest::Approx(0.0).epsilon(1e-12));
  for (int k : {1, 2}) {
    CHECK(table[k][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(table[k][1] == doctest::Approx(0.5).epsilon(1e-12));
  }

  const Reconstruction rec = probs_to_state(table, mub);
  CHECK(rec.positive);
  CHECK(trace_distance(rec.matrix, rho.matrix()) < 1e-12);
}

TEST_CASE("maximally mixed state has flat rows") {
  const MubSet mub = MubSet::make(2);
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  const ProbTable table = state_to_probs(rho, mub);
  for (const auto& row : table) {
    for (double p : row) CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
  }
  const Reconstruction rec = probs_to_state(table, mub);
  CHECK(trace_distance(rec.matrix, rho.matrix()) < 1e-12);
}

TEST_CASE("random round trips for d = 2 and 3") {
  for (int dim : {2, 3}) {
    const MubSet mub = MubSet::make(dim);
    std::mt19937 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
      const DensityOperator rho = testutil::random_density(dim, rng);
      const Reconstruction rec = probs_to_state(state_to_probs(rho, mub), mub);
      CHECK(rec.positive);
      CHECK(trace_distance(rec.matrix, rho.matrix()) < 1e-10);
    }
  }
}

TEST_CASE("non-quantum tables reconstruct without positivity") {
  const MubSet mub = MubSet::make(2);
  // Deterministic rows in every basis cannot come from a quantum state.
  const ProbTable table{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
  const Reconstruction rec = probs_to_state(table, mub);
  CHECK_FALSE(rec.positive);
  CHECK(std::abs(rec.matrix.trace().real() - 1.0) < 1e-12);
  CHECK(approx_hermitian(rec.matrix));
}

TEST_CASE("malformed tables are rejected") {
  const MubSet mub = MubSet::make(2);
  CHECK_THROWS_AS(probs_to_state({{1.0, 0.0}, {0.5, 0.5}}, mub),
                  std::invalid_argument);
  CHECK_THROWS_AS(probs_to_state({{1.0}, {0.5, 0.5}, {0.5, 0.5}}, mub),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      probs_to_state({{0.9, 0.0}, {0.5, 0.5}, {0.5, 0.5}}, mub),
      std::invalid_argument);
}
