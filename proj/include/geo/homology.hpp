#pragma once

#include <optional>

#include "geo/menelaus.hpp"

namespace geo {

/// Two triangles with a positional vertex correspondence (A<->A1, B<->B1,
/// C<->C1). Corresponding vertices and corresponding side lines must be
/// projectively distinct; the constructor throws DegeneratePair otherwise.
class TrianglePair {
 public:
  TrianglePair(Triangle first, Triangle second);

  const Triangle& first() const { return first_; }
  const Triangle& second() const { return second_; }

  /// The pair with the two triangles exchanged.
  TrianglePair swapped() const { return TrianglePair(second_, first_); }

  std::string str() const;

 private:
  Triangle first_, second_;
};

/// Intersections of corresponding sides: n = AB^A1B1, m = BC^B1C1,
/// p = CA^C1A1. Any of them may be ideal.
struct SidePoints {
  ProjPoint n, m, p;
};

struct HomologyReport {
  std::optional<ProjPoint> center;
  SidePoints side_points;
  std::optional<ProjLine> axis;
  bool is_homological = false;
};

SidePoints side_intersections(const TrianglePair& pair);

/// The common point of the three vertex-join lines, when they are concurrent.
/// Throws DegeneratePair when two of the joins coincide (center ill-defined).
std::optional<ProjPoint> perspective_center(const TrianglePair& pair);

/// The line through the side intersections, when they are collinear. Throws
/// AxisUndetermined if all three side points coincide (unreachable for a
/// valid pair, kept as a guard).
std::optional<ProjLine> homology_axis(const TrianglePair& pair);

/// Perspective-from-a-point implies perspective-from-a-line: requires the
/// center to exist (else NotPerspective) and asserts the axis exists. A
/// missing axis is a TheoremFalsification, never a silent result.
HomologyReport check_forward(const TrianglePair& pair);

/// The reciprocal direction: requires collinear side points (else
/// AxisMissing) and asserts the center exists.
HomologyReport check_reciprocal(const TrianglePair& pair);

}  // namespace geo
