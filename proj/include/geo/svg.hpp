#pragma once

#include <string>

#include "geo/dsl.hpp"

namespace geo::svg {

/// Deterministic SVG rendering of an evaluated construction: the viewBox is
/// the bounding box of the finite points plus a 10% margin, finite points
/// become radius-3 labelled circles, lines are clipped to the viewBox, and
/// ideal points are listed in a text legend. Element order follows
/// declaration order; rendering the same report twice yields identical bytes.
std::string render(const dsl::EvalReport& report, const std::string& title);

}  // namespace geo::svg
