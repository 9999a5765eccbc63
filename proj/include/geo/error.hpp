#pragma once

#include <stdexcept>
#include <string>

namespace geo {

// Every failure mode of the kernel and the construction layers. Predicates
// never throw; constructions throw when their result would be undefined.
enum class ErrKind {
  DivisionByZero,
  InvalidCoordinates,      // homogeneous triple with all components zero
  IdealPoint,              // finite point required
  CoincidentPoints,        // join of projectively equal points
  CoincidentLines,         // meet of projectively equal lines
  NotCollinear,
  CoincidentWithEndpoint,  // signed ratio with base point on an endpoint
  DegenerateTriangle,
  DegenerateTransversal,
  IdealFoot,
  DegeneratePair,
  NotPerspective,
  AxisMissing,
  AxisUndetermined,
  DegenerateQuadrilateral,
  DegenerateConfig,
};

const char* err_kind_name(ErrKind kind);

class GeomError : public std::runtime_error {
 public:
  GeomError(ErrKind kind, const std::string& detail)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

// A theorem check's postcondition failed. With exact arithmetic this means an
// implementation bug, never numeric noise; the message carries the full exact
// coordinate dump of the offending configuration.
class TheoremFalsification : public std::runtime_error {
 public:
  explicit TheoremFalsification(const std::string& dump)
      : std::runtime_error(dump) {}
};

}  // namespace geo
