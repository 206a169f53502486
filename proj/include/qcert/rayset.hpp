#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcert/vec3.hpp"

namespace qcert::ks {

using exact::Ray;

/// Deduplicated, stably numbered collection of canonical rays.
class RaySet {
 public:
  /// Inserts a ray unless already present; returns its id either way.
  int add(Ray r);

  std::optional<int> find(const Ray& r) const;
  int size() const { return static_cast<int>(rays_.size()); }
  const Ray& operator[](int id) const { return rays_.at(id); }
  const std::vector<Ray>& rays() const { return rays_; }

 private:
  std::vector<Ray> rays_;
  std::map<Ray, int, Ray::Less> index_;
};

/// Unordered triple of pairwise-orthogonal ray ids, stored sorted.
struct Basis {
  std::array<int, 3> members;

  /// Sorts the ids; throws std::invalid_argument on repeated ids.
  static Basis of(int a, int b, int c);

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

/// The 33 rays generated by the four seed orbits (0,0,1), (0,1,1),
/// (0,1,√2), (1,1,√2) under coordinate permutations and sign flips,
/// modulo projective equivalence. Orbit sizes 3, 6, 12, 12.
RaySet peres_33();

struct BasisCompletion {
  RaySet rays;               // input rays first, completion rays appended
  std::vector<Basis> bases;  // deduplicated orthonormal triples
};

/// Completes every exactly-orthogonal pair of the input set with its
/// cross-product ray. For the Peres set this yields 40 bases on 57 rays.
BasisCompletion complete_bases(const RaySet& s);

/// Edges (i, j), i < j, between exactly orthogonal rays.
std::vector<std::pair<int, int>> orthogonality_graph(const RaySet& s);

/// Text format: one ray per line, three whitespace-separated QuadRat
/// strings; '#' starts a comment. Throws std::invalid_argument with a
/// line diagnostic on malformed input.
RaySet parse_ray_set(std::istream& in);
void write_ray_set(std::ostream& out, const RaySet& s);

/// DOT export; node label = ray id, tooltip = canonical components.
void write_dot(std::ostream& out, const RaySet& s,
               const std::vector<std::pair<int, int>>& edges);

}  // namespace qcert::ks
