#include "geo/projective.hpp"

namespace geo {
namespace detail {

void canonicalize(std::array<BigInt, 3>& c) {
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
    throw GeomError(ErrKind::InvalidCoordinates,
                    "homogeneous triple must not be all zero");
  }
  BigInt g = gcd(gcd(c[0], c[1]), c[2]);  // mpz gcd is nonnegative
  c[0] /= g;
  c[1] /= g;
  c[2] /= g;
  for (auto& v : c) {
    if (v != 0) {
      if (v < 0) {
        c[0] = -c[0];
        c[1] = -c[1];
        c[2] = -c[2];
      }
      break;
    }
  }
}

std::array<BigInt, 3> cross(const std::array<BigInt, 3>& u,
                            const std::array<BigInt, 3>& v) {
  return {BigInt(u[1] * v[2] - u[2] * v[1]),
          BigInt(u[2] * v[0] - u[0] * v[2]),
          BigInt(u[0] * v[1] - u[1] * v[0])};
}

BigInt det3(const std::array<BigInt, 3>& r0, const std::array<BigInt, 3>& r1,
            const std::array<BigInt, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
         r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

std::string triple_str(const std::array<BigInt, 3>& c) {
  return "[" + c[0].get_str() + ":" + c[1].get_str() + ":" + c[2].get_str() +
         "]";
}

}  // namespace detail

ProjPoint ProjPoint::from_affine(const Rational& x, const Rational& y) {
  BigInt d = lcm(x.den(), y.den());
  return ProjPoint(x.num() * (d / x.den()), y.num() * (d / y.den()), d);
}

ProjPoint ProjPoint::ideal(const Rational& dx, const Rational& dy) {
  BigInt d = lcm(dx.den(), dy.den());
  return ProjPoint(dx.num() * (d / dx.den()), dy.num() * (d / dy.den()), 0);
}

std::pair<Rational, Rational> ProjPoint::to_affine() const {
  if (is_ideal()) {
    throw GeomError(ErrKind::IdealPoint, "no affine image for " + str());
  }
  return {Rational(c_[0], c_[2]), Rational(c_[1], c_[2])};
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  auto c = detail::cross(p.coords(), q.coords());
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
    throw GeomError(ErrKind::CoincidentPoints, "join of " + p.str() + " with itself");
  }
  return ProjLine(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  auto c = detail::cross(l.coeffs(), m.coeffs());
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
    throw GeomError(ErrKind::CoincidentLines, "meet of " + l.str() + " with itself");
  }
  return ProjPoint(c[0], c[1], c[2]);
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return l.a() * p.x() + l.b() * p.y() + l.c() * p.z() == 0;
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return detail::det3(p.coords(), q.coords(), r.coords()) == 0;
}

bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return detail::det3(l.coeffs(), m.coeffs(), n.coeffs()) == 0;
}

ProjPoint midpoint(const ProjPoint& p, const ProjPoint& q) {
  if (p.is_ideal() || q.is_ideal()) {
    throw GeomError(ErrKind::IdealPoint, "midpoint of ideal point " +
                                             (p.is_ideal() ? p.str() : q.str()));
  }
  return ProjPoint(p.x() * q.z() + q.x() * p.z(),
                   p.y() * q.z() + q.y() * p.z(), 2 * p.z() * q.z());
}

Rational signed_ratio(const ProjPoint& x, const ProjPoint& a,
                      const ProjPoint& b) {
  if (x.is_ideal() || a.is_ideal() || b.is_ideal()) {
    throw GeomError(ErrKind::IdealPoint, "signed ratio needs finite points");
  }
  if (x == a || x == b) {
    throw GeomError(ErrKind::CoincidentWithEndpoint,
                    "base point " + x.str() + " coincides with an endpoint");
  }
  if (!collinear(x, a, b)) {
    throw GeomError(ErrKind::NotCollinear, x.str() + ", " + a.str() + ", " +
                                               b.str() + " not collinear");
  }
  auto [xx, xy] = x.to_affine();
  auto [ax, ay] = a.to_affine();
  auto [bx, by] = b.to_affine();
  Rational xa_x = ax - xx;
  Rational xb_x = bx - xx;
  if (!xb_x.is_zero()) return xa_x / xb_x;
  return (ay - xy) / (by - xy);  // x != b, so XB has a nonzero component
}

}  // namespace geo
