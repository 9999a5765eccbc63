#include "geo/homology.hpp"

namespace geo {

namespace {

std::string falsification_dump(const char* claim, const TrianglePair& pair,
                               const SidePoints& sp) {
  std::string out = "theorem falsified: ";
  out += claim;
  out += "\n  first  = " + pair.first().str();
  out += "\n  second = " + pair.second().str();
  out += "\n  N = " + sp.n.str() + "  M = " + sp.m.str() + "  P = " + sp.p.str();
  return out;
}

}  // namespace

TrianglePair::TrianglePair(Triangle first, Triangle second)
    : first_(std::move(first)), second_(std::move(second)) {
  for (int i = 0; i < 3; ++i) {
    if (first_.vertex(i) == second_.vertex(i)) {
      throw GeomError(ErrKind::DegeneratePair,
                      "corresponding vertices coincide at " +
                          first_.vertex(i).str());
    }
  }
  if (first_.side_ab() == second_.side_ab() ||
      first_.side_bc() == second_.side_bc() ||
      first_.side_ca() == second_.side_ca()) {
    throw GeomError(ErrKind::DegeneratePair, "corresponding sides coincide");
  }
}

std::string TrianglePair::str() const {
  return first_.str() + " / " + second_.str();
}

SidePoints side_intersections(const TrianglePair& pair) {
  return {meet(pair.first().side_ab(), pair.second().side_ab()),
          meet(pair.first().side_bc(), pair.second().side_bc()),
          meet(pair.first().side_ca(), pair.second().side_ca())};
}

std::optional<ProjPoint> perspective_center(const TrianglePair& pair) {
  ProjLine ja = join(pair.first().a(), pair.second().a());
  ProjLine jb = join(pair.first().b(), pair.second().b());
  ProjLine jc = join(pair.first().c(), pair.second().c());
  if (ja == jb || jb == jc || jc == ja) {
    throw GeomError(ErrKind::DegeneratePair,
                    "vertex-join lines coincide; center ill-defined");
  }
  if (!concurrent(ja, jb, jc)) return std::nullopt;
  return meet(ja, jb);
}

std::optional<ProjLine> homology_axis(const TrianglePair& pair) {
  SidePoints sp = side_intersections(pair);
  if (!collinear(sp.n, sp.m, sp.p)) return std::nullopt;
  if (sp.n != sp.m) return join(sp.n, sp.m);
  if (sp.n != sp.p) return join(sp.n, sp.p);
  throw GeomError(ErrKind::AxisUndetermined,
                  "all side intersections coincide at " + sp.n.str());
}

HomologyReport check_forward(const TrianglePair& pair) {
  auto center = perspective_center(pair);
  if (!center) {
    throw GeomError(ErrKind::NotPerspective,
                    "vertex joins not concurrent for " + pair.str());
  }
  SidePoints sp = side_intersections(pair);
  auto axis = homology_axis(pair);
  if (!axis) {
    throw TheoremFalsification(falsification_dump(
        "concurrent vertex joins but side points not collinear", pair, sp));
  }
  return {center, sp, axis, true};
}

HomologyReport check_reciprocal(const TrianglePair& pair) {
  SidePoints sp = side_intersections(pair);
  if (!collinear(sp.n, sp.m, sp.p)) {
    throw GeomError(ErrKind::AxisMissing,
                    "side points not collinear for " + pair.str());
  }
  auto axis = homology_axis(pair);
  auto center = perspective_center(pair);
  if (!center) {
    throw TheoremFalsification(falsification_dump(
        "collinear side points but vertex joins not concurrent", pair, sp));
  }
  return {center, sp, axis, true};
}

}  // namespace geo
