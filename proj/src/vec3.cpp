#include "qcert/vec3.hpp"

#include <ostream>
#include <stdexcept>

namespace qcert::exact {

QuadRat dot(const Vec3Exact& u, const Vec3Exact& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

Vec3Exact cross(const Vec3Exact& u, const Vec3Exact& v) {
  Vec3Exact w{u.y * v.z - u.z * v.y,
              u.z * v.x - u.x * v.z,
              u.x * v.y - u.y * v.x};
  if (w.is_zero()) throw std::domain_error("cross: parallel inputs");
  return w;
}

Ray canonicalize(const Vec3Exact& v) {
  const QuadRat* lead = nullptr;
  if (!v.x.is_zero()) {
    lead = &v.x;
  } else if (!v.y.is_zero()) {
    lead = &v.y;
  } else if (!v.z.is_zero()) {
    lead = &v.z;
  } else {
    throw std::domain_error("canonicalize: zero vector");
  }
  const QuadRat inv = lead->inverse();
  return Ray(Vec3Exact{v.x * inv, v.y * inv, v.z * inv});
}

std::string Ray::str() const {
  return v_.x.str() + " " + v_.y.str() + " " + v_.z.str();
}

bool Ray::Less::operator()(const Ray& p, const Ray& q) const {
  if (!(p.vec().x == q.vec().x)) return repr_less(p.vec().x, q.vec().x);
  if (!(p.vec().y == q.vec().y)) return repr_less(p.vec().y, q.vec().y);
  return repr_less(p.vec().z, q.vec().z);
}

std::ostream& operator<<(std::ostream& os, const Ray& r) {
  return os << r.str();
}

}  // namespace qcert::exact
