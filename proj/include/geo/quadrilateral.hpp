#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "geo/homology.hpp"

namespace geo {

/// Quadrilateral ABCD together with the derived points of its complete
/// quadrilateral: E = AB^CD, F = BC^AD, O = AC^BD, P = BD^EF, R = AC^EF.
/// build() rejects inputs for which any of these is ideal or coincident.
class CompleteQuadrilateral {
 public:
  static CompleteQuadrilateral build(const ProjPoint& a, const ProjPoint& b,
                                     const ProjPoint& c, const ProjPoint& d);

  const ProjPoint& a() const { return a_; }
  const ProjPoint& b() const { return b_; }
  const ProjPoint& c() const { return c_; }
  const ProjPoint& d() const { return d_; }
  const ProjPoint& e() const { return e_; }
  const ProjPoint& f() const { return f_; }
  const ProjPoint& p() const { return p_; }
  const ProjPoint& r() const { return r_; }
  const ProjPoint& o() const { return o_; }

 private:
  CompleteQuadrilateral(ProjPoint a, ProjPoint b, ProjPoint c, ProjPoint d,
                        ProjPoint e, ProjPoint f, ProjPoint p, ProjPoint r,
                        ProjPoint o)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
        e_(std::move(e)), f_(std::move(f)), p_(std::move(p)), r_(std::move(r)),
        o_(std::move(o)) {}

  ProjPoint a_, b_, c_, d_, e_, f_, p_, r_, o_;
};

/// The twelve segment midpoints, in the fixed assignment
/// G,H,I,J,K,L,M,N,Q,U,V,T = mid of (AB),(BF),(AF),(AD),(AE),(DE),(CE),(BE),
/// (BC),(CF),(DF),(DC).
struct MidpointSet {
  ProjPoint g, h, i, j, k, l, m, n, q, u, v, t;
};

/// Midpoints of the three diagonals (AC), (BD), (EF) and the line they span.
struct NewtonGaussData {
  ProjPoint o1, o2, o3;
  ProjLine line;
};

/// Medial triangles of ABF, ADE, BCE, CDF assembled from the MidpointSet.
struct MedialTriangles {
  Triangle ghi, jkl, mnq, uvt;
};

/// Triangle (P, O, R) of the three diagonal points.
Triangle diagonal_triangle(const CompleteQuadrilateral& q);

MidpointSet midpoint_set(const CompleteQuadrilateral& q);

/// Midpoints of the diagonals and their common line. Collinearity is a
/// theorem; a violation raises TheoremFalsification. Coincident midpoints
/// (possible only in configurations the generator excludes) raise
/// AxisUndetermined.
NewtonGaussData newton_gauss(const CompleteQuadrilateral& q);

MedialTriangles medial_triangles(const CompleteQuadrilateral& q);

/// Outcome of one sub-check inside a verification report.
enum class Verdict { Holds, Fails, Degenerate };

const char* verdict_name(Verdict v);

/// Projective concurrency test with an exact witness either way: the common
/// point when the three lines are concurrent, or two distinct candidate
/// intersection points when they are not.
struct ConcurrencyCheck {
  bool holds = false;
  std::optional<ProjPoint> common;
  std::optional<std::pair<ProjPoint, ProjPoint>> counterexample;
};

ConcurrencyCheck check_concurrency(const ProjLine& l, const ProjLine& m,
                                   const ProjLine& n);

/// One homology sub-check of verify_problem2: whether the pair is
/// perspective, its center and axis, whether the axis is exactly the
/// Newton-Gauss line, and whether the side intersections are exactly
/// (O1, O3, O2).
struct PairVerdict {
  Verdict verdict = Verdict::Degenerate;
  std::optional<ProjPoint> center;
  std::optional<ProjLine> axis;
  bool axis_is_newton_gauss = false;
  bool side_points_are_diagonal_midpoints = false;
  std::string note;
};

struct Problem2Report {
  NewtonGaussData ng;
  PairVerdict por_ghi, por_jkl, por_mnq, por_uvt;  // claim i, four pairs
  PairVerdict ghi_jkl;                             // claim ii
  PairVerdict mnq_uvt;                             // claim iii
  Verdict centers_iv = Verdict::Degenerate;        // claim iv
  Verdict centers_v = Verdict::Degenerate;         // claim v
  std::optional<std::array<ProjPoint, 3>> iv_centers;
  std::optional<std::array<ProjPoint, 3>> v_centers;

  bool core_claims_hold() const;  // i..iii plus axis == Newton-Gauss
};

Problem2Report verify_problem2(const CompleteQuadrilateral& q);

/// Parallelogram ABCD with A1 on AB, B1 on BC, C1 on CD, D1 on DA, built so
/// that A1D1, BD, B1C1 are concurrent at pc by construction.
struct Problem1Config {
  ProjPoint a, b, c, d;
  ProjPoint a1, b1, c1, d1;
  ProjPoint pc;
};

/// Constructive builder: pc = B + pt*(D-B), a1 = A + ta*(B-A),
/// b1 = B + tb*(C-B), d1 = A1Pc^AD, c1 = B1Pc^CD. Throws DegenerateConfig
/// when a constructed point is ideal or lands on a vertex, or when ABCD is
/// not an exact parallelogram.
Problem1Config build_problem1_config(const ProjPoint& a, const ProjPoint& b,
                                     const ProjPoint& c, const ProjPoint& d,
                                     const Rational& pt, const Rational& ta,
                                     const Rational& tb);

struct Problem1Report {
  ConcurrencyCheck literal_a;     // AC, A1C1, B1D1
  ConcurrencyCheck variant_a_bd;  // BD, A1C1, B1D1
  ConcurrencyCheck claim_b;       // A1B1, C1D1, AC
};

Problem1Report verify_problem1(const Problem1Config& cfg);

}  // namespace geo
