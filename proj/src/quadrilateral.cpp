#include "geo/quadrilateral.hpp"

namespace geo {

namespace {

ProjPoint affine_interp(const ProjPoint& p, const ProjPoint& q,
                        const Rational& t) {
  auto [px, py] = p.to_affine();
  auto [qx, qy] = q.to_affine();
  return ProjPoint::from_affine(px + t * (qx - px), py + t * (qy - py));
}

bool parallel_directions(const ProjPoint& p, const ProjPoint& q,
                         const ProjPoint& r, const ProjPoint& s) {
  // (q - p) x (s - r) == 0 on affine vectors
  auto [px, py] = p.to_affine();
  auto [qx, qy] = q.to_affine();
  auto [rx, ry] = r.to_affine();
  auto [sx, sy] = s.to_affine();
  return ((qx - px) * (sy - ry) - (qy - py) * (sx - rx)).is_zero();
}

std::string ng_dump(const CompleteQuadrilateral& q, const ProjPoint& o1,
                    const ProjPoint& o2, const ProjPoint& o3) {
  return "theorem falsified: diagonal midpoints not collinear\n  A=" +
         q.a().str() + " B=" + q.b().str() + " C=" + q.c().str() +
         " D=" + q.d().str() + "\n  O1=" + o1.str() + " O2=" + o2.str() +
         " O3=" + o3.str();
}

// Homology sub-check with the vertex correspondence already encoded in the
// argument order. Never throws; degeneracies become verdicts.
PairVerdict check_pair(const Triangle& first, const Triangle& second,
                       const NewtonGaussData& ng) {
  PairVerdict out;
  try {
    TrianglePair pair(first, second);
    SidePoints sp = side_intersections(pair);
    if (!collinear(sp.n, sp.m, sp.p)) {
      out.verdict = Verdict::Fails;
      out.note = "side points not collinear";
      return out;
    }
    HomologyReport rep = check_reciprocal(pair);
    out.verdict = Verdict::Holds;
    out.center = rep.center;
    out.axis = rep.axis;
    out.axis_is_newton_gauss = rep.axis && *rep.axis == ng.line;
    out.side_points_are_diagonal_midpoints =
        sp.n == ng.o1 && sp.m == ng.o3 && sp.p == ng.o2;
  } catch (const TheoremFalsification& tf) {
    out.verdict = Verdict::Fails;
    out.note = tf.what();
  } catch (const GeomError& ge) {
    out.verdict = Verdict::Degenerate;
    out.note = ge.what();
  }
  return out;
}

Verdict centers_collinear(const PairVerdict& x, const PairVerdict& y,
                          const PairVerdict& z,
                          std::optional<std::array<ProjPoint, 3>>& witness) {
  if (x.verdict != Verdict::Holds || y.verdict != Verdict::Holds ||
      z.verdict != Verdict::Holds) {
    return Verdict::Degenerate;
  }
  witness = std::array<ProjPoint, 3>{*x.center, *y.center, *z.center};
  return collinear(*x.center, *y.center, *z.center) ? Verdict::Holds
                                                    : Verdict::Fails;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Degenerate: return "degenerate";
  }
  return "?";
}

CompleteQuadrilateral CompleteQuadrilateral::build(const ProjPoint& a,
                                                   const ProjPoint& b,
                                                   const ProjPoint& c,
                                                   const ProjPoint& d) {
  for (const auto* v : {&a, &b, &c, &d}) {
    if (v->is_ideal()) {
      throw GeomError(ErrKind::DegenerateQuadrilateral,
                      "ideal vertex " + v->str());
    }
  }
  const ProjPoint* pts[4] = {&a, &b, &c, &d};
  const char* names = "ABCD";
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (*pts[i] == *pts[j] || *pts[j] == *pts[k] || *pts[i] == *pts[k] ||
            collinear(*pts[i], *pts[j], *pts[k])) {
          throw GeomError(ErrKind::DegenerateQuadrilateral,
                          std::string("collinear vertices ") + names[i] +
                              names[j] + names[k]);
        }
      }
    }
  }
  ProjLine ab = join(a, b), cd = join(c, d);
  ProjLine bc = join(b, c), ad = join(a, d);
  ProjLine ac = join(a, c), bd = join(b, d);
  ProjPoint e = meet(ab, cd);
  if (e.is_ideal()) {
    throw GeomError(ErrKind::DegenerateQuadrilateral,
                    "AB parallel to CD; E ideal at " + e.str());
  }
  ProjPoint f = meet(bc, ad);
  if (f.is_ideal()) {
    throw GeomError(ErrKind::DegenerateQuadrilateral,
                    "BC parallel to AD; F ideal at " + f.str());
  }
  ProjPoint o = meet(ac, bd);
  if (o.is_ideal()) {
    throw GeomError(ErrKind::DegenerateQuadrilateral,
                    "AC parallel to BD; O ideal at " + o.str());
  }
  ProjLine ef = join(e, f);  // E != F for any non-collinear input
  ProjPoint p = meet(bd, ef);
  if (p.is_ideal()) {
    throw GeomError(ErrKind::DegenerateQuadrilateral,
                    "BD parallel to EF; P ideal at " + p.str());
  }
  ProjPoint r = meet(ac, ef);
  if (r.is_ideal()) {
    throw GeomError(ErrKind::DegenerateQuadrilateral,
                    "AC parallel to EF; R ideal at " + r.str());
  }
  const ProjPoint* derived[5] = {&e, &f, &p, &r, &o};
  const char* dnames = "EFPRO";
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (*derived[i] == *derived[j]) {
        throw GeomError(ErrKind::DegenerateQuadrilateral,
                        std::string("derived points ") + dnames[i] + " and " +
                            dnames[j] + " coincide at " + derived[i]->str());
      }
    }
  }
  return CompleteQuadrilateral(a, b, c, d, e, f, p, r, o);
}

Triangle diagonal_triangle(const CompleteQuadrilateral& q) {
  return Triangle(q.p(), q.o(), q.r());
}

MidpointSet midpoint_set(const CompleteQuadrilateral& q) {
  return {midpoint(q.a(), q.b()), midpoint(q.b(), q.f()),
          midpoint(q.a(), q.f()), midpoint(q.a(), q.d()),
          midpoint(q.a(), q.e()), midpoint(q.d(), q.e()),
          midpoint(q.c(), q.e()), midpoint(q.b(), q.e()),
          midpoint(q.b(), q.c()), midpoint(q.c(), q.f()),
          midpoint(q.d(), q.f()), midpoint(q.d(), q.c())};
}

NewtonGaussData newton_gauss(const CompleteQuadrilateral& q) {
  ProjPoint o1 = midpoint(q.a(), q.c());
  ProjPoint o2 = midpoint(q.b(), q.d());
  ProjPoint o3 = midpoint(q.e(), q.f());
  if (o1 == o2 || o2 == o3 || o1 == o3) {
    throw GeomError(ErrKind::AxisUndetermined,
                    "coincident diagonal midpoints");
  }
  if (!collinear(o1, o2, o3)) {
    throw TheoremFalsification(ng_dump(q, o1, o2, o3));
  }
  return {o1, o2, o3, join(o1, o3)};
}

MedialTriangles medial_triangles(const CompleteQuadrilateral& q) {
  MidpointSet ms = midpoint_set(q);
  return {Triangle(ms.g, ms.h, ms.i), Triangle(ms.j, ms.k, ms.l),
          Triangle(ms.m, ms.n, ms.q), Triangle(ms.u, ms.v, ms.t)};
}

ConcurrencyCheck check_concurrency(const ProjLine& l, const ProjLine& m,
                                   const ProjLine& n) {
  ConcurrencyCheck out;
  out.holds = concurrent(l, m, n);
  if (out.holds) {
    if (l != m) {
      out.common = meet(l, m);
    } else if (l != n) {
      out.common = meet(l, n);
    }
    // all three coincident: a pencil, no single witness point
  } else {
    // not concurrent implies the lines are pairwise distinct and the two
    // candidates differ
    out.counterexample = std::make_pair(meet(l, m), meet(l, n));
  }
  return out;
}

bool Problem2Report::core_claims_hold() const {
  for (const PairVerdict* pv :
       {&por_ghi, &por_jkl, &por_mnq, &por_uvt, &ghi_jkl, &mnq_uvt}) {
    if (pv->verdict != Verdict::Holds || !pv->axis_is_newton_gauss) {
      return false;
    }
  }
  return true;
}

Problem2Report verify_problem2(const CompleteQuadrilateral& q) {
  NewtonGaussData ng = newton_gauss(q);
  MidpointSet ms = midpoint_set(q);

  // Vertex correspondences are forced by the shared side points: each listed
  // side of the diagonal triangle (O,R,P) meets its partner side in O1, O3,
  // O2 respectively.
  Triangle orp(q.o(), q.r(), q.p());
  Triangle gih(ms.g, ms.i, ms.h);
  Triangle jkl(ms.j, ms.k, ms.l);
  Triangle qmn(ms.q, ms.m, ms.n);
  Triangle tuv(ms.t, ms.u, ms.v);

  Problem2Report rep{ng, {}, {}, {}, {}, {}, {}, Verdict::Degenerate,
                     Verdict::Degenerate, std::nullopt, std::nullopt};
  rep.por_ghi = check_pair(orp, gih, ng);
  rep.por_jkl = check_pair(orp, jkl, ng);
  rep.por_mnq = check_pair(orp, qmn, ng);
  rep.por_uvt = check_pair(orp, tuv, ng);
  rep.ghi_jkl = check_pair(gih, jkl, ng);
  rep.mnq_uvt = check_pair(qmn, tuv, ng);

  rep.centers_iv =
      centers_collinear(rep.por_ghi, rep.por_jkl, rep.ghi_jkl, rep.iv_centers);
  rep.centers_v =
      centers_collinear(rep.por_mnq, rep.por_uvt, rep.mnq_uvt, rep.v_centers);
  return rep;
}

Problem1Config build_problem1_config(const ProjPoint& a, const ProjPoint& b,
                                     const ProjPoint& c, const ProjPoint& d,
                                     const Rational& pt, const Rational& ta,
                                     const Rational& tb) {
  for (const auto* v : {&a, &b, &c, &d}) {
    if (v->is_ideal()) {
      throw GeomError(ErrKind::DegenerateConfig, "ideal vertex " + v->str());
    }
  }
  if (a == b || b == c || c == d || d == a || a == c || b == d ||
      collinear(a, b, c)) {
    throw GeomError(ErrKind::DegenerateConfig, "degenerate parallelogram");
  }
  if (!parallel_directions(a, b, d, c) || !parallel_directions(a, d, b, c)) {
    throw GeomError(ErrKind::DegenerateConfig, "ABCD is not a parallelogram");
  }
  ProjPoint pc = affine_interp(b, d, pt);
  ProjPoint a1 = affine_interp(a, b, ta);
  ProjPoint b1 = affine_interp(b, c, tb);
  if (pc == b || pc == d) {
    throw GeomError(ErrKind::DegenerateConfig,
                    "concurrency point on vertex " + pc.str());
  }
  if (a1 == a || a1 == b) {
    throw GeomError(ErrKind::DegenerateConfig, "A1 on vertex " + a1.str());
  }
  if (b1 == b || b1 == c) {
    throw GeomError(ErrKind::DegenerateConfig, "B1 on vertex " + b1.str());
  }
  if (a1 == pc || b1 == pc) {
    throw GeomError(ErrKind::DegenerateConfig,
                    "concurrency point coincides with a constructed point");
  }
  ProjPoint d1 = meet(join(a1, pc), join(a, d));
  if (d1.is_ideal() || d1 == a || d1 == d) {
    throw GeomError(ErrKind::DegenerateConfig, "D1 degenerate at " + d1.str());
  }
  ProjPoint c1 = meet(join(b1, pc), join(c, d));
  if (c1.is_ideal() || c1 == c || c1 == d) {
    throw GeomError(ErrKind::DegenerateConfig, "C1 degenerate at " + c1.str());
  }
  if (a1 == d1 || b1 == c1) {
    throw GeomError(ErrKind::DegenerateConfig, "constructed points coincide");
  }
  return {a, b, c, d, a1, b1, c1, d1, pc};
}

Problem1Report verify_problem1(const Problem1Config& cfg) {
  ProjLine ac = join(cfg.a, cfg.c);
  ProjLine bd = join(cfg.b, cfg.d);
  ProjLine a1c1 = join(cfg.a1, cfg.c1);
  ProjLine b1d1 = join(cfg.b1, cfg.d1);
  ProjLine a1b1 = join(cfg.a1, cfg.b1);
  ProjLine c1d1 = join(cfg.c1, cfg.d1);
  return {check_concurrency(ac, a1c1, b1d1), check_concurrency(bd, a1c1, b1d1),
          check_concurrency(a1b1, c1d1, ac)};
}

}  // namespace geo
