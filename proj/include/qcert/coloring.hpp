#pragma once

#include <cstdint>
#include <vector>

#include "qcert/rayset.hpp"

namespace qcert::ks {

/// Exactly-one-of-three constraints over {0,1}-valued rays.
struct ColoringProblem {
  int ray_count = 0;
  std::vector<Basis> bases;
};

enum class Coloring { Sat, Unsat };

/// Search outcome plus statistics. A Sat certificate carries an
/// assignment that has been re-checked against every constraint;
/// node and depth counts are deterministic in single-threaded runs.
struct SearchCertificate {
  Coloring result = Coloring::Unsat;
  std::vector<std::uint8_t> assignment;  // indexed by ray id; empty when Unsat
  std::uint64_t nodes_explored = 0;
  std::uint32_t max_depth = 0;
};

/// Complete backtracking search with unit propagation. Branch variables
/// are ordered by descending basis-membership degree, ties by id; each
/// branch tries value 1 before 0. Rays in no basis stay 0.
SearchCertificate solve_coloring(const ColoringProblem& p);

/// True iff every basis has exactly one member assigned 1. Independent
/// of the solver. Throws std::out_of_range when a basis references a
/// ray id the assignment does not cover.
bool check_assignment(const ColoringProblem& p,
                      const std::vector<std::uint8_t>& assignment);

}  // namespace qcert::ks
