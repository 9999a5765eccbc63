#include "geo/menelaus.hpp"

namespace geo {

Triangle::Triangle(ProjPoint a, ProjPoint b, ProjPoint c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == b_ || b_ == c_ || c_ == a_) {
    throw GeomError(ErrKind::DegenerateTriangle,
                    "coincident vertices in " + str());
  }
  if (collinear(a_, b_, c_)) {
    throw GeomError(ErrKind::DegenerateTriangle,
                    "collinear vertices in " + str());
  }
}

const ProjPoint& Triangle::vertex(int i) const {
  switch (i) {
    case 0: return a_;
    case 1: return b_;
    default: return c_;
  }
}

std::string Triangle::str() const {
  return a_.str() + " " + b_.str() + " " + c_.str();
}

TransversalFeet make_feet(const Triangle& tri, const ProjPoint& n,
                          const ProjPoint& m, const ProjPoint& p) {
  if (!incident(n, tri.side_ab()) || !incident(m, tri.side_bc()) ||
      !incident(p, tri.side_ca())) {
    throw GeomError(ErrKind::DegenerateTransversal,
                    "foot not on its side line");
  }
  for (const auto* foot : {&n, &m, &p}) {
    if (*foot == tri.a() || *foot == tri.b() || *foot == tri.c()) {
      throw GeomError(ErrKind::DegenerateTransversal,
                      "foot " + foot->str() + " is a vertex");
    }
  }
  return {n, m, p};
}

TransversalFeet transversal_feet(const Triangle& tri, const ProjLine& l) {
  for (const auto& side : {tri.side_ab(), tri.side_bc(), tri.side_ca()}) {
    if (l == side) {
      throw GeomError(ErrKind::DegenerateTransversal,
                      "transversal coincides with side " + side.str());
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (incident(tri.vertex(i), l)) {
      throw GeomError(ErrKind::DegenerateTransversal,
                      "transversal passes through vertex " + tri.vertex(i).str());
    }
  }
  return {meet(l, tri.side_ab()), meet(l, tri.side_bc()),
          meet(l, tri.side_ca())};
}

Rational menelaus_product(const Triangle& tri, const TransversalFeet& feet) {
  if (feet.n.is_ideal() || feet.m.is_ideal() || feet.p.is_ideal()) {
    throw GeomError(ErrKind::IdealFoot,
                    "ratio product undefined for an ideal foot; use the "
                    "determinant criterion");
  }
  return signed_ratio(feet.n, tri.a(), tri.b()) *
         signed_ratio(feet.m, tri.b(), tri.c()) *
         signed_ratio(feet.p, tri.c(), tri.a());
}

bool is_menelaus_transversal(const Triangle& /*tri*/,
                             const TransversalFeet& feet) {
  return collinear(feet.n, feet.m, feet.p);
}

}  // namespace geo
