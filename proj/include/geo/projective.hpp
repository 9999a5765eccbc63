#pragma once

#include <array>
#include <string>
#include <utility>

#include "geo/rational.hpp"

namespace geo {

namespace detail {

// Divides out the gcd and flips signs so the first nonzero component is
// positive. Throws InvalidCoordinates on the zero triple.
void canonicalize(std::array<BigInt, 3>& c);

std::array<BigInt, 3> cross(const std::array<BigInt, 3>& u,
                            const std::array<BigInt, 3>& v);

BigInt det3(const std::array<BigInt, 3>& r0, const std::array<BigInt, 3>& r1,
            const std::array<BigInt, 3>& r2);

std::string triple_str(const std::array<BigInt, 3>& c);

}  // namespace detail

/// A point of the rational projective plane in canonical homogeneous
/// coordinates [x : y : z]. z == 0 marks an ideal (at-infinity) point.
/// Canonical form makes operator== a plain component comparison.
class ProjPoint {
 public:
  ProjPoint(const BigInt& x, const BigInt& y, const BigInt& z) : c_{x, y, z} {
    detail::canonicalize(c_);
  }

  /// Clears denominators: (x, y) -> [x*d : y*d : d]. Never ideal.
  static ProjPoint from_affine(const Rational& x, const Rational& y);

  /// Canonicalized [dx : dy : 0], the ideal point of direction (dx, dy).
  static ProjPoint ideal(const Rational& dx, const Rational& dy);

  const BigInt& x() const { return c_[0]; }
  const BigInt& y() const { return c_[1]; }
  const BigInt& z() const { return c_[2]; }
  const std::array<BigInt, 3>& coords() const { return c_; }

  bool is_ideal() const { return c_[2] == 0; }

  /// (x/z, y/z). Throws IdealPoint when z == 0.
  std::pair<Rational, Rational> to_affine() const;

  std::string str() const { return detail::triple_str(c_); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) {
    return a.c_ != b.c_;
  }

 private:
  std::array<BigInt, 3> c_;
};

/// A line [a : b : c] of the rational projective plane; a point [x:y:z] lies
/// on it iff a*x + b*y + c*z == 0. Same canonical form as ProjPoint.
/// [0 : 0 : 1] is the line at infinity.
class ProjLine {
 public:
  ProjLine(const BigInt& a, const BigInt& b, const BigInt& c) : c_{a, b, c} {
    detail::canonicalize(c_);
  }

  static ProjLine infinity_line() { return ProjLine(0, 0, 1); }

  const BigInt& a() const { return c_[0]; }
  const BigInt& b() const { return c_[1]; }
  const BigInt& c() const { return c_[2]; }
  const std::array<BigInt, 3>& coeffs() const { return c_; }

  bool is_infinity() const { return c_[0] == 0 && c_[1] == 0; }

  std::string str() const { return detail::triple_str(c_); }

  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) {
    return a.c_ != b.c_;
  }

 private:
  std::array<BigInt, 3> c_;
};

/// The line through two projectively distinct points (cross product).
/// Throws CoincidentPoints when p == q.
ProjLine join(const ProjPoint& p, const ProjPoint& q);

/// The common point of two projectively distinct lines (cross product).
/// Parallel affine lines meet in an ideal point; that is not an error.
/// Throws CoincidentLines when l == m.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// Exact incidence: a*x + b*y + c*z == 0.
bool incident(const ProjPoint& p, const ProjLine& l);

/// Exact 3x3 determinant test on the coordinate triples.
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Dual of collinear: determinant test on the coefficient triples.
bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n);

/// Affine midpoint of two finite points. Throws IdealPoint otherwise.
ProjPoint midpoint(const ProjPoint& p, const ProjPoint& q);

/// The unique t with directed segments XA = t * XB, for finite collinear
/// x, a, b with x distinct from both endpoints. x == midpoint(a, b) gives -1.
/// Throws IdealPoint, NotCollinear, or CoincidentWithEndpoint.
Rational signed_ratio(const ProjPoint& x, const ProjPoint& a,
                      const ProjPoint& b);

inline bool eq_projective(const ProjPoint& u, const ProjPoint& v) { return u == v; }
inline bool eq_projective(const ProjLine& u, const ProjLine& v) { return u == v; }

}  // namespace geo
