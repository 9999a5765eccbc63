#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "geo/svg.hpp"

namespace geo::svg {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  // avoid "-0.0000"
  if (buf[0] == '-' && std::string_view(buf + 1).find_first_not_of("0.") ==
                           std::string_view::npos) {
    return buf + 1;
  }
  return buf;
}

std::string fmt(const Rational& v) { return fmt(v.to_double()); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  Rational x_min, x_max, y_min, y_max;

  bool contains(const Rational& x, const Rational& y) const {
    return x_min <= x && x <= x_max && y_min <= y && y <= y_max;
  }
};

using Endpoints = std::pair<std::pair<Rational, Rational>,
                            std::pair<Rational, Rational>>;

// Exact clip of a line to the box: intersect with the four border lines,
// keep the finite intersections inside the box, and take the two
// lexicographic extremes (the candidates are collinear).
std::optional<Endpoints> clip_line(const ProjLine& l, const Box& box) {
  if (l.is_infinity()) return std::nullopt;
  // border x = p/q as q*x - p = 0, y = p/q as q*y - p = 0
  const ProjLine edges[4] = {
      ProjLine(box.x_min.den(), 0, -box.x_min.num()),
      ProjLine(box.x_max.den(), 0, -box.x_max.num()),
      ProjLine(0, box.y_min.den(), -box.y_min.num()),
      ProjLine(0, box.y_max.den(), -box.y_max.num()),
  };
  const std::pair<Rational, Rational> edge_corners[4][2] = {
      {{box.x_min, box.y_min}, {box.x_min, box.y_max}},
      {{box.x_max, box.y_min}, {box.x_max, box.y_max}},
      {{box.x_min, box.y_min}, {box.x_max, box.y_min}},
      {{box.x_min, box.y_max}, {box.x_max, box.y_max}},
  };
  std::vector<std::pair<Rational, Rational>> cands;
  auto add = [&](const Rational& x, const Rational& y) {
    if (!box.contains(x, y)) return;
    for (const auto& c : cands) {
      if (c.first == x && c.second == y) return;
    }
    cands.emplace_back(x, y);
  };
  for (int i = 0; i < 4; ++i) {
    if (l == edges[i]) {
      add(edge_corners[i][0].first, edge_corners[i][0].second);
      add(edge_corners[i][1].first, edge_corners[i][1].second);
      continue;
    }
    ProjPoint p = meet(l, edges[i]);
    if (p.is_ideal()) continue;
    auto [x, y] = p.to_affine();
    add(x, y);
  }
  if (cands.size() < 2) return std::nullopt;
  size_t lo = 0, hi = 0;
  auto less = [](const std::pair<Rational, Rational>& a,
                 const std::pair<Rational, Rational>& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  };
  for (size_t i = 1; i < cands.size(); ++i) {
    if (less(cands[i], cands[lo])) lo = i;
    if (less(cands[hi], cands[i])) hi = i;
  }
  return Endpoints{cands[lo], cands[hi]};
}

}  // namespace

std::string render(const dsl::EvalReport& report, const std::string& title) {
  bool any = false;
  Rational x_min, x_max, y_min, y_max;
  for (const auto& [name, value] : report.bindings) {
    const auto* p = std::get_if<ProjPoint>(&value);
    if (p == nullptr || p->is_ideal()) continue;
    auto [x, y] = p->to_affine();
    if (!any) {
      x_min = x_max = x;
      y_min = y_max = y;
      any = true;
    } else {
      if (x < x_min) x_min = x;
      if (x > x_max) x_max = x;
      if (y < y_min) y_min = y;
      if (y > y_max) y_max = y;
    }
  }
  if (!any) {
    x_min = y_min = Rational(-1);
    x_max = y_max = Rational(1);
  }
  Rational span_x = x_max - x_min;
  Rational span_y = y_max - y_min;
  Rational margin_x = span_x.is_zero() ? Rational(1) : span_x * Rational(1, 10);
  Rational margin_y = span_y.is_zero() ? Rational(1) : span_y * Rational(1, 10);
  Box box{x_min - margin_x, x_max + margin_x, y_min - margin_y,
          y_max + margin_y};

  double w = (box.x_max - box.x_min).to_double();
  double h = (box.y_max - box.y_min).to_double();
  // screen space flips y so the figure reads with y upward
  double view_x = box.x_min.to_double();
  double view_y = (-box.y_max).to_double();

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(view_x)
     << " " << fmt(view_y) << " " << fmt(w) << " " << fmt(h)
     << "\" width=\"800\" height=\"" << fmt(800.0 * h / w) << "\">\n";
  os << "  <title>" << escape(title) << "</title>\n";

  std::vector<std::string> legend;
  for (const auto& [name, value] : report.bindings) {
    if (const auto* l = std::get_if<ProjLine>(&value)) {
      if (l->is_infinity()) {
        legend.push_back(name + " = line at infinity " + l->str());
        continue;
      }
      auto seg = clip_line(*l, box);
      if (!seg) continue;  // outside the view
      os << "  <line id=\"" << escape(name) << "\" x1=\""
         << fmt(seg->first.first) << "\" y1=\"" << fmt(-seg->first.second)
         << "\" x2=\"" << fmt(seg->second.first) << "\" y2=\""
         << fmt(-seg->second.second)
         << "\" stroke=\"#7a7a7a\" stroke-width=\"1\"/>\n";
    } else {
      const auto& p = std::get<ProjPoint>(value);
      if (p.is_ideal()) {
        legend.push_back(name + " = ideal point " + p.str());
        continue;
      }
      auto [x, y] = p.to_affine();
      os << "  <circle id=\"" << escape(name) << "\" cx=\"" << fmt(x)
         << "\" cy=\"" << fmt(-y) << "\" r=\"3\" fill=\"#20507a\"/>\n";
      os << "  <text x=\"" << fmt(x.to_double() + 5.0) << "\" y=\""
         << fmt(-y.to_double() - 5.0)
         << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#111\">"
         << escape(name) << "</text>\n";
    }
  }
  for (size_t i = 0; i < legend.size(); ++i) {
    os << "  <text x=\"" << fmt(view_x + 0.02 * w) << "\" y=\""
       << fmt(view_y + 0.05 * h + 14.0 * static_cast<double>(i))
       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#444\">"
       << escape(legend[i]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace geo::svg
