#pragma once

#include "geo/projective.hpp"

namespace geo {

/// Ordered vertex triple (A, B, C), pairwise distinct and not collinear.
/// The order is semantic: it fixes side naming and pair correspondences.
class Triangle {
 public:
  Triangle(ProjPoint a, ProjPoint b, ProjPoint c);

  const ProjPoint& a() const { return a_; }
  const ProjPoint& b() const { return b_; }
  const ProjPoint& c() const { return c_; }
  const ProjPoint& vertex(int i) const;  // 0, 1, 2

  ProjLine side_ab() const { return join(a_, b_); }
  ProjLine side_bc() const { return join(b_, c_); }
  ProjLine side_ca() const { return join(c_, a_); }

  std::string str() const;

 private:
  ProjPoint a_, b_, c_;
};

/// Feet of a transversal on the three side lines: n on AB, m on BC, p on CA.
struct TransversalFeet {
  ProjPoint n, m, p;
};

/// Validates the foot invariants (incidence with the stated side, no foot on
/// a vertex) for externally supplied feet. Throws DegenerateTransversal.
TransversalFeet make_feet(const Triangle& tri, const ProjPoint& n,
                          const ProjPoint& m, const ProjPoint& p);

/// Cuts the three side lines with l. Throws DegenerateTransversal when l
/// coincides with a side or passes through a vertex. Ideal feet are allowed
/// (transversal parallel to a side).
TransversalFeet transversal_feet(const Triangle& tri, const ProjLine& l);

/// signed_ratio(N;A,B) * signed_ratio(M;B,C) * signed_ratio(P;C,A).
/// Exactly 1 iff the feet are collinear. Requires finite feet; throws
/// IdealFoot otherwise (callers fall back to the determinant criterion).
Rational menelaus_product(const Triangle& tri, const TransversalFeet& feet);

/// The total determinant form of the criterion: collinear(N, M, P).
bool is_menelaus_transversal(const Triangle& tri, const TransversalFeet& feet);

}  // namespace geo
