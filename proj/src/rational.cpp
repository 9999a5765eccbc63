#include "geo/rational.hpp"

namespace geo {

const char* err_kind_name(ErrKind kind) {
  switch (kind) {
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::InvalidCoordinates: return "InvalidCoordinates";
    case ErrKind::IdealPoint: return "IdealPoint";
    case ErrKind::CoincidentPoints: return "CoincidentPoints";
    case ErrKind::CoincidentLines: return "CoincidentLines";
    case ErrKind::NotCollinear: return "NotCollinear";
    case ErrKind::CoincidentWithEndpoint: return "CoincidentWithEndpoint";
    case ErrKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrKind::DegenerateTransversal: return "DegenerateTransversal";
    case ErrKind::IdealFoot: return "IdealFoot";
    case ErrKind::DegeneratePair: return "DegeneratePair";
    case ErrKind::NotPerspective: return "NotPerspective";
    case ErrKind::AxisMissing: return "AxisMissing";
    case ErrKind::AxisUndetermined: return "AxisUndetermined";
    case ErrKind::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
    case ErrKind::DegenerateConfig: return "DegenerateConfig";
  }
  return "GeomError";
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw GeomError(ErrKind::InvalidCoordinates, "malformed rational '" + text + "'");
  }
}

}  // namespace geo
