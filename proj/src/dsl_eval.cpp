#include <map>

#include "geo/dsl.hpp"

namespace geo::dsl {

namespace {

// Raised when an expression references a binding whose declaration failed.
struct PoisonedRef {
  std::string name;
};

class Evaluator {
 public:
  EvalReport run(const Program& p) {
    for (const Statement& st : p.statements) {
      if (const auto* pd = std::get_if<PointDecl>(&st)) {
        declare(pd->name, pd->expr, pd->span);
      } else if (const auto* ld = std::get_if<LineDecl>(&st)) {
        declare(ld->name, ld->expr, ld->span);
      } else {
        assertion(std::get<AssertStmt>(st));
      }
    }
    return std::move(report_);
  }

 private:
  void declare(const std::string& name, const Expr& expr,
               const SourceSpan& span) {
    try {
      Value v = eval(expr);
      env_.emplace(name, v);
      report_.bindings.emplace_back(name, std::move(v));
    } catch (const GeomError& ge) {
      // the name stays unbound; statements referencing it are skipped
      report_.errors.push_back({span, ge.what()});
    } catch (const PoisonedRef& pr) {
      report_.errors.push_back(
          {span, "skipped: depends on failed binding '" + pr.name + "'"});
    }
  }

  void assertion(const AssertStmt& st) {
    std::vector<Value> values;
    try {
      values.reserve(st.args.size());
      for (const Expr& e : st.args) values.push_back(eval(e));
      report_.assertions.push_back(verdict(st, values));
    } catch (const GeomError& ge) {
      report_.errors.push_back({st.span, ge.what()});
      report_.assertions.push_back({st.span, st.kind, Outcome::Error, ge.what()});
    } catch (const PoisonedRef& pr) {
      std::string msg = "skipped: depends on failed binding '" + pr.name + "'";
      report_.errors.push_back({st.span, msg});
      report_.assertions.push_back({st.span, st.kind, Outcome::Error, msg});
    }
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::AffineLit:
        return ProjPoint::from_affine(e.rx, e.ry);
      case Expr::Kind::IdealLit:
        if (e.rx.is_zero() && e.ry.is_zero()) {
          throw GeomError(ErrKind::InvalidCoordinates,
                          "ideal(0, 0) has no direction");
        }
        return ProjPoint::ideal(e.rx, e.ry);
      case Expr::Kind::Meet:
        return meet(std::get<ProjLine>(eval(e.args[0])),
                    std::get<ProjLine>(eval(e.args[1])));
      case Expr::Kind::Mid:
        return midpoint(std::get<ProjPoint>(eval(e.args[0])),
                        std::get<ProjPoint>(eval(e.args[1])));
      case Expr::Kind::Join:
        return join(std::get<ProjPoint>(eval(e.args[0])),
                    std::get<ProjPoint>(eval(e.args[1])));
      case Expr::Kind::InfinityLine:
        return ProjLine::infinity_line();
      case Expr::Kind::NameRef: {
        auto it = env_.find(e.name);
        if (it == env_.end()) throw PoisonedRef{e.name};
        return it->second;
      }
    }
    throw GeomError(ErrKind::InvalidCoordinates, "unreachable expression kind");
  }

  AssertionResult verdict(const AssertStmt& st, const std::vector<Value>& vals) {
    switch (st.kind) {
      case AssertKind::Collinear: {
        std::vector<ProjPoint> pts;
        for (const Value& v : vals) pts.push_back(std::get<ProjPoint>(v));
        return rank_check(st, pts);
      }
      case AssertKind::Concurrent: {
        std::vector<ProjLine> lines;
        for (const Value& v : vals) lines.push_back(std::get<ProjLine>(v));
        return dual_rank_check(st, lines);
      }
      case AssertKind::Incident: {
        const auto& p = std::get<ProjPoint>(vals[0]);
        const auto& l = std::get<ProjLine>(vals[1]);
        BigInt residual = l.a() * p.x() + l.b() * p.y() + l.c() * p.z();
        if (residual == 0) {
          return {st.span, st.kind, Outcome::Holds, p.str() + " on " + l.str()};
        }
        return {st.span, st.kind, Outcome::Fails,
                "residual " + residual.get_str() + " for " + p.str() + " on " +
                    l.str()};
      }
      case AssertKind::Parallel: {
        // sugar: the common point must lie on the line at infinity
        const auto& l = std::get<ProjLine>(vals[0]);
        const auto& m = std::get<ProjLine>(vals[1]);
        ProjPoint common = meet(l, m);  // coincident lines -> EvalError
        if (common.is_ideal()) {
          return {st.span, st.kind, Outcome::Holds,
                  "common ideal point " + common.str()};
        }
        return {st.span, st.kind, Outcome::Fails,
                "lines meet at finite point " + common.str()};
      }
      case AssertKind::Equal: {
        bool eq;
        std::string witness;
        if (vals[0].index() == 0) {
          const auto& u = std::get<ProjPoint>(vals[0]);
          const auto& v = std::get<ProjPoint>(vals[1]);
          eq = u == v;
          witness = u.str() + " vs " + v.str();
        } else {
          const auto& u = std::get<ProjLine>(vals[0]);
          const auto& v = std::get<ProjLine>(vals[1]);
          eq = u == v;
          witness = u.str() + " vs " + v.str();
        }
        return {st.span, st.kind, eq ? Outcome::Holds : Outcome::Fails, witness};
      }
    }
    return {st.span, st.kind, Outcome::Error, "unreachable"};
  }

  AssertionResult rank_check(const AssertStmt& st,
                             const std::vector<ProjPoint>& pts) {
    size_t second = 1;
    while (second < pts.size() && pts[second] == pts[0]) ++second;
    if (second == pts.size()) {
      return {st.span, st.kind, Outcome::Holds,
              "all points coincide at " + pts[0].str()};
    }
    ProjLine l = join(pts[0], pts[second]);
    for (const ProjPoint& p : pts) {
      if (!incident(p, l)) {
        return {st.span, st.kind, Outcome::Fails,
                p.str() + " not on " + l.str()};
      }
    }
    return {st.span, st.kind, Outcome::Holds, "line " + l.str()};
  }

  AssertionResult dual_rank_check(const AssertStmt& st,
                                  const std::vector<ProjLine>& lines) {
    size_t second = 1;
    while (second < lines.size() && lines[second] == lines[0]) ++second;
    if (second == lines.size()) {
      return {st.span, st.kind, Outcome::Holds,
              "all lines coincide with " + lines[0].str()};
    }
    ProjPoint common = meet(lines[0], lines[second]);
    for (const ProjLine& l : lines) {
      if (!incident(common, l)) {
        return {st.span, st.kind, Outcome::Fails,
                "candidate " + common.str() + " not on " + l.str()};
      }
    }
    return {st.span, st.kind, Outcome::Holds, "common point " + common.str()};
  }

  std::map<std::string, Value> env_;
  EvalReport report_;
};

}  // namespace

bool EvalReport::all_passed() const {
  if (!errors.empty()) return false;
  for (const AssertionResult& r : assertions) {
    if (r.outcome != Outcome::Holds) return false;
  }
  return true;
}

EvalReport evaluate(const Program& p) { return Evaluator().run(p); }

}  // namespace geo::dsl
