#include "qcert/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcert::ks {

namespace {

constexpr std::int8_t kUnset = -1;

struct Searcher {
  const ColoringProblem& problem;
  std::vector<std::int8_t> value;      // per ray: -1, 0, 1
  std::vector<int> order;              // branch variables
  std::uint64_t nodes = 0;
  std::uint32_t depth = 0;
  std::uint32_t max_depth = 0;

  explicit Searcher(const ColoringProblem& p)
      : problem(p), value(p.ray_count, kUnset) {
    std::vector<int> degree(p.ray_count, 0);
    for (const Basis& b : p.bases) {
      for (int r : b.members) {
        if (r < 0 || r >= p.ray_count) {
          throw std::out_of_range("solve_coloring: basis references ray " +
                                  std::to_string(r));
        }
        ++degree[r];
      }
    }
    for (int r = 0; r < p.ray_count; ++r) {
      if (degree[r] > 0) order.push_back(r);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return a < b;
    });
  }

  // Fixed-point unit propagation. A basis with a 1 forces its other
  // members to 0; a basis with two 0s forces the third to 1. Returns
  // false on contradiction (two 1s, or all members 0). Assignments are
  // appended to the trail for backtracking.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Basis& b : problem.bases) {
        int ones = 0, zeros = 0;
        for (int r : b.members) {
          if (value[r] == 1) ++ones;
          else if (value[r] == 0) ++zeros;
        }
        if (ones > 1 || zeros == 3) return false;
        if (ones == 1) {
          for (int r : b.members) {
            if (value[r] == kUnset) {
              value[r] = 0;
              trail.push_back(r);
              changed = true;
            }
          }
        } else if (ones == 0 && zeros == 2) {
          for (int r : b.members) {
            if (value[r] == kUnset) {
              value[r] = 1;
              trail.push_back(r);
              changed = true;
            }
          }
        }
      }
    }
    return true;
  }

  bool dfs() {
    int var = -1;
    for (int r : order) {
      if (value[r] == kUnset) {
        var = r;
        break;
      }
    }
    if (var < 0) return true;  // all constrained rays assigned

    ++depth;
    max_depth = std::max(max_depth, depth);
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
      ++nodes;
      std::vector<int> trail{var};
      value[var] = v;
      if (propagate(trail) && dfs()) {
        --depth;
        return true;
      }
      for (int r : trail) value[r] = kUnset;
    }
    --depth;
    return false;
  }
};

}  // namespace

SearchCertificate solve_coloring(const ColoringProblem& p) {
  Searcher s(p);
  SearchCertificate cert;

  std::vector<int> root_trail;
  bool sat = s.propagate(root_trail) && s.dfs();
  cert.nodes_explored = s.nodes;
  cert.max_depth = s.max_depth;

  if (!sat) {
    cert.result = Coloring::Unsat;
    return cert;
  }
  cert.result = Coloring::Sat;
  cert.assignment.assign(p.ray_count, 0);
  for (int r = 0; r < p.ray_count; ++r) {
    if (s.value[r] == 1) cert.assignment[r] = 1;
  }
  if (!check_assignment(p, cert.assignment)) {
    throw std::logic_error("solve_coloring: produced an invalid assignment");
  }
  return cert;
}

bool check_assignment(const ColoringProblem& p,
                      const std::vector<std::uint8_t>& assignment) {
  for (const Basis& b : p.bases) {
    int ones = 0;
    for (int r : b.members) {
      if (r < 0 || static_cast<size_t>(r) >= assignment.size()) {
        throw std::out_of_range("check_assignment: ray id " +
                                std::to_string(r) + " not covered");
      }
      ones += assignment[r] != 0;
    }
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace qcert::ks
