#pragma once

#include <string>

#include "qcert/quadrat.hpp"

namespace qcert::exact {

/// 3-vector over Q(√2).
struct Vec3Exact {
  QuadRat x;
  QuadRat y;
  QuadRat z;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  friend bool operator==(const Vec3Exact&, const Vec3Exact&) = default;
};

/// Exact real inner product.
QuadRat dot(const Vec3Exact& u, const Vec3Exact& v);

/// Exact cross product; throws std::domain_error when the inputs are
/// parallel (the result would be the zero vector).
Vec3Exact cross(const Vec3Exact& u, const Vec3Exact& v);

/// Projective ray in canonical form: the representative is scaled so that
/// its first nonzero component equals 1. Two rays are equal iff their
/// canonical representatives are equal.
class Ray {
 public:
  const Vec3Exact& vec() const { return v_; }

  /// "x y z" with canonical QuadRat components.
  std::string str() const;

  friend bool operator==(const Ray&, const Ray&) = default;

  /// Representation order for containers.
  struct Less {
    bool operator()(const Ray& p, const Ray& q) const;
  };

 private:
  friend Ray canonicalize(const Vec3Exact& v);
  explicit Ray(Vec3Exact v) : v_(std::move(v)) {}
  Vec3Exact v_;
};

/// Canonical projective representative; throws std::domain_error on the
/// zero vector. Idempotent: canonicalize(r.vec()) == r.
Ray canonicalize(const Vec3Exact& v);

std::ostream& operator<<(std::ostream& os, const Ray& r);

}  // namespace qcert::exact
