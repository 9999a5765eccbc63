#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "geo/fuzz.hpp"

namespace geo::fuzz {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxAttempts = 100000;

std::array<std::string, 3> triple(const ProjPoint& p) {
  return {p.x().get_str(), p.y().get_str(), p.z().get_str()};
}

std::array<std::string, 3> triple(const ProjLine& l) {
  return {l.a().get_str(), l.b().get_str(), l.c().get_str()};
}

ProjPoint along(const ProjPoint& from, const ProjPoint& to, const Rational& t) {
  auto [fx, fy] = from.to_affine();
  auto [tx, ty] = to.to_affine();
  return ProjPoint::from_affine(fx + t * (tx - fx), fy + t * (ty - fy));
}

ProjPoint translated(const ProjPoint& p, std::int64_t dx, std::int64_t dy) {
  auto [x, y] = p.to_affine();
  return ProjPoint::from_affine(x + Rational(dx), y + Rational(dy));
}

// Per-trial sampling context; every draw comes from the one derived stream,
// so a trial is a pure function of (seed, index).
struct Ctx {
  Splitmix64 rng;
  std::int64_t bound;
  std::uint64_t rejections = 0;

  Ctx(std::uint64_t derived_seed, std::int64_t bound_)
      : rng(derived_seed), bound(bound_) {}

  ProjPoint point() {
    return ProjPoint::from_affine(Rational(rng.next_in(-bound, bound)),
                                  Rational(rng.next_in(-bound, bound)));
  }

  // rational in (0, 1) with denominator <= bound
  Rational unit() {
    std::int64_t den = rng.next_in(2, bound);
    std::int64_t num = rng.next_in(1, den - 1);
    return Rational(num, den);
  }

  // nonzero rational, != 1, |num| <= bound, 1 <= den <= bound
  Rational scale() {
    for (int i = 0; i < kMaxAttempts; ++i) {
      std::int64_t num = rng.next_in(-bound, bound);
      std::int64_t den = rng.next_in(1, bound);
      if (num != 0 && num != den) return Rational(num, den);
    }
    throw std::runtime_error("scale sampling stuck");
  }

  // any rational with |num| <= bound, 1 <= den <= bound, excluding 0 and 1
  Rational parameter() { return scale(); }

  void reject() { ++rejections; }
};

struct PerspectiveConfig {
  ProjPoint a, b, c, o, a1, b1, c1;
  TrianglePair pair;
};

// Constructive Desargues instance: A1 = O + ta*(A - O) etc., so the vertex
// joins pass through O exactly. Rejection handles only the residual
// degeneracies (collinear triangles, O on a side, coincident sides).
PerspectiveConfig sample_perspective_pair(Ctx& ctx) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ProjPoint a = ctx.point(), b = ctx.point(), c = ctx.point();
    if (collinear(a, b, c)) {
      ctx.reject();
      continue;
    }
    ProjPoint o = ctx.point();
    Triangle first(a, b, c);
    if (incident(o, first.side_ab()) || incident(o, first.side_bc()) ||
        incident(o, first.side_ca())) {
      ctx.reject();
      continue;
    }
    ProjPoint a1 = along(o, a, ctx.scale());
    ProjPoint b1 = along(o, b, ctx.scale());
    ProjPoint c1 = along(o, c, ctx.scale());
    if (collinear(a1, b1, c1)) {
      ctx.reject();
      continue;
    }
    try {
      TrianglePair pair(first, Triangle(a1, b1, c1));
      return {a, b, c, o, a1, b1, c1, std::move(pair)};
    } catch (const GeomError&) {
      ctx.reject();
    }
  }
  throw std::runtime_error("perspective pair sampling stuck");
}

void record_points(TrialRecord& rec, const PerspectiveConfig& cfg) {
  rec.points = {{"A", cfg.a},   {"B", cfg.b},   {"C", cfg.c},  {"O", cfg.o},
                {"A1", cfg.a1}, {"B1", cfg.b1}, {"C1", cfg.c1}};
}

void desargues_trial(Ctx& ctx, TrialRecord& rec) {
  PerspectiveConfig cfg = sample_perspective_pair(ctx);
  record_points(rec, cfg);
  HomologyReport rep = check_forward(cfg.pair);  // falsification throws
  bool center_equals_o = rep.center && *rep.center == cfg.o;
  rec.verdicts = {{"center_present", rep.center.has_value()},
                  {"center_equals_O", center_equals_o},
                  {"axis_collinear", rep.axis.has_value()}};
  rec.witnesses = {{"center", triple(*rep.center)},
                   {"axis", triple(*rep.axis)},
                   {"N", triple(rep.side_points.n)},
                   {"M", triple(rep.side_points.m)},
                   {"P", triple(rep.side_points.p)}};
  rec.falsified = !(center_equals_o && rep.axis.has_value());
}

void reciprocal_trial(Ctx& ctx, TrialRecord& rec) {
  PerspectiveConfig cfg = sample_perspective_pair(ctx);
  record_points(rec, cfg);
  // axis-bearing direction: the constructively perspective pair has
  // collinear side points, so the reciprocal check must recover the center
  HomologyReport rep = check_reciprocal(cfg.pair);
  bool center_equals_o = rep.center && *rep.center == cfg.o;

  // contrapositive control: perturb one vertex until the side points are
  // not collinear, then the joins must not be concurrent either
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxAttempts) {
      throw std::runtime_error("perturbation sampling stuck");
    }
    std::int64_t dx = ctx.rng.next_in(-ctx.bound, ctx.bound);
    std::int64_t dy = ctx.rng.next_in(-ctx.bound, ctx.bound);
    if (dx == 0 && dy == 0) {
      ctx.reject();
      continue;
    }
    ProjPoint c1p = translated(cfg.c1, dx, dy);
    try {
      TrianglePair perturbed(Triangle(cfg.a, cfg.b, cfg.c),
                             Triangle(cfg.a1, cfg.b1, c1p));
      SidePoints sp = side_intersections(perturbed);
      if (collinear(sp.n, sp.m, sp.p)) {
        ctx.reject();  // landed back on the codimension-1 set
        continue;
      }
      auto center = perspective_center(perturbed);
      rec.points.emplace_back("C1_perturbed", c1p);
      rec.verdicts = {{"axis_collinear", true},
                      {"center_recovered", center_equals_o},
                      {"perturbed_axis_fails", true},
                      {"perturbed_center_fails", !center.has_value()}};
      rec.witnesses = {{"center", triple(*rep.center)},
                       {"axis", triple(*rep.axis)}};
      rec.falsified = !center_equals_o || center.has_value();
      if (center) {
        rec.falsification_note =
            "perturbed pair has non-collinear side points but a perspective "
            "center at " + center->str();
      }
      return;
    } catch (const GeomError&) {
      ctx.reject();
    }
  }
}

void menelaus_trial(Ctx& ctx, TrialRecord& rec) {
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxAttempts) {
      throw std::runtime_error("menelaus sampling stuck");
    }
    ProjPoint a = ctx.point(), b = ctx.point(), c = ctx.point();
    if (collinear(a, b, c)) {
      ctx.reject();
      continue;
    }
    ProjPoint p1 = ctx.point(), p2 = ctx.point();
    if (p1 == p2) {
      ctx.reject();
      continue;
    }
    ProjLine l = join(p1, p2);
    Triangle tri(a, b, c);
    if (incident(a, l) || incident(b, l) || incident(c, l)) {
      ctx.reject();
      continue;
    }
    TransversalFeet feet = transversal_feet(tri, l);
    if (feet.n.is_ideal() || feet.m.is_ideal() || feet.p.is_ideal()) {
      ctx.reject();  // transversal parallel to a side
      continue;
    }
    Rational product = menelaus_product(tri, feet);
    bool det_ok = is_menelaus_transversal(tri, feet);
    bool product_one = product == Rational(1);

    // slide the AB-foot to a different admissible position
    ProjPoint moved = feet.n;
    for (int inner = 0; inner < kMaxAttempts; ++inner) {
      moved = along(a, b, ctx.unit());
      if (moved != feet.n) break;
      ctx.reject();
    }
    TransversalFeet perturbed = make_feet(tri, moved, feet.m, feet.p);
    Rational product2 = menelaus_product(tri, perturbed);
    bool det2 = is_menelaus_transversal(tri, perturbed);

    rec.points = {{"A", a}, {"B", b}, {"C", c}};
    rec.verdicts = {{"product_one", product_one},
                    {"determinant_collinear", det_ok},
                    {"criteria_agree", product_one == det_ok},
                    {"perturbed_product_not_one", product2 != Rational(1)},
                    {"perturbed_not_collinear", !det2},
                    {"perturbed_criteria_agree", (product2 == Rational(1)) == det2}};
    rec.witnesses = {{"transversal", triple(l)},
                     {"N", triple(feet.n)},
                     {"M", triple(feet.m)},
                     {"P", triple(feet.p)},
                     {"N_perturbed", triple(moved)}};
    for (const auto& [name, ok] : rec.verdicts) {
      if (!ok) rec.falsified = true;
    }
    return;
  }
}

CompleteQuadrilateral sample_quadrilateral(Ctx& ctx) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      CompleteQuadrilateral q = CompleteQuadrilateral::build(
          ctx.point(), ctx.point(), ctx.point(), ctx.point());
      ProjPoint o1 = midpoint(q.a(), q.c());
      ProjPoint o2 = midpoint(q.b(), q.d());
      ProjPoint o3 = midpoint(q.e(), q.f());
      if (o1 == o2 || o2 == o3 || o1 == o3) {
        ctx.reject();  // newton_gauss would flag AxisUndetermined
        continue;
      }
      return q;
    } catch (const GeomError&) {
      ctx.reject();
    }
  }
  throw std::runtime_error("quadrilateral sampling stuck");
}

void record_quad_points(TrialRecord& rec, const CompleteQuadrilateral& q) {
  rec.points = {{"A", q.a()}, {"B", q.b()}, {"C", q.c()}, {"D", q.d()},
                {"E", q.e()}, {"F", q.f()}, {"P", q.p()}, {"R", q.r()},
                {"O", q.o()}};
}

void newton_gauss_trial(Ctx& ctx, TrialRecord& rec) {
  CompleteQuadrilateral q = sample_quadrilateral(ctx);
  record_quad_points(rec, q);
  NewtonGaussData ng = newton_gauss(q);  // falsification throws
  rec.verdicts = {{"newton_gauss_collinear", true}};
  rec.witnesses = {{"O1", triple(ng.o1)},
                   {"O2", triple(ng.o2)},
                   {"O3", triple(ng.o3)},
                   {"newton_gauss_line", triple(ng.line)}};
}

void problem2_trial(Ctx& ctx, TrialRecord& rec) {
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxAttempts) {
      throw std::runtime_error("problem2 sampling stuck");
    }
    CompleteQuadrilateral q = sample_quadrilateral(ctx);
    Problem2Report rep = verify_problem2(q);
    const std::pair<const char*, const PairVerdict*> pairs[] = {
        {"i_por_ghi", &rep.por_ghi}, {"i_por_jkl", &rep.por_jkl},
        {"i_por_mnq", &rep.por_mnq}, {"i_por_uvt", &rep.por_uvt},
        {"ii_ghi_jkl", &rep.ghi_jkl}, {"iii_mnq_uvt", &rep.mnq_uvt}};
    bool degenerate = false;
    for (const auto& [name, pv] : pairs) {
      if (pv->verdict == Verdict::Degenerate) degenerate = true;
    }
    if (degenerate) {
      ctx.reject();
      continue;
    }
    record_quad_points(rec, q);
    for (const auto& [name, pv] : pairs) {
      bool ok = pv->verdict == Verdict::Holds && pv->axis_is_newton_gauss &&
                pv->side_points_are_diagonal_midpoints;
      rec.verdicts.emplace_back(name, ok);
      if (!ok) {
        rec.falsified = true;
        rec.falsification_note = std::string(name) + ": " +
                                 verdict_name(pv->verdict) +
                                 (pv->note.empty() ? "" : " (" + pv->note + ")");
      }
    }
    // iv and v are reported, not gating; a false instance is a finding
    rec.verdicts.emplace_back("iv_centers_collinear",
                              rep.centers_iv == Verdict::Holds);
    rec.verdicts.emplace_back("v_centers_collinear",
                              rep.centers_v == Verdict::Holds);
    rec.witnesses = {{"newton_gauss_line", triple(rep.ng.line)},
                     {"O1", triple(rep.ng.o1)},
                     {"O2", triple(rep.ng.o2)},
                     {"O3", triple(rep.ng.o3)}};
    if (rep.iv_centers) {
      rec.witnesses.emplace_back("iv_center_ghi_por", triple((*rep.iv_centers)[0]));
      rec.witnesses.emplace_back("iv_center_jkl_por", triple((*rep.iv_centers)[1]));
      rec.witnesses.emplace_back("iv_center_ghi_jkl", triple((*rep.iv_centers)[2]));
    }
    if (rep.v_centers) {
      rec.witnesses.emplace_back("v_center_mnq_por", triple((*rep.v_centers)[0]));
      rec.witnesses.emplace_back("v_center_uvt_por", triple((*rep.v_centers)[1]));
      rec.witnesses.emplace_back("v_center_mnq_uvt", triple((*rep.v_centers)[2]));
    }
    return;
  }
}

void problem1_trial(Ctx& ctx, TrialRecord& rec) {
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxAttempts) {
      throw std::runtime_error("problem1 sampling stuck");
    }
    ProjPoint a = ctx.point(), b = ctx.point(), d = ctx.point();
    if (collinear(a, b, d)) {
      ctx.reject();
      continue;
    }
    auto [ax, ay] = a.to_affine();
    auto [bx, by] = b.to_affine();
    auto [dx, dy] = d.to_affine();
    ProjPoint c = ProjPoint::from_affine(bx + dx - ax, by + dy - ay);
    try {
      Problem1Config cfg = build_problem1_config(a, b, c, d, ctx.parameter(),
                                                 ctx.unit(), ctx.unit());
      Problem1Report rep = verify_problem1(cfg);
      rec.points = {{"A", cfg.a},   {"B", cfg.b},   {"C", cfg.c},
                    {"D", cfg.d},   {"A1", cfg.a1}, {"B1", cfg.b1},
                    {"C1", cfg.c1}, {"D1", cfg.d1}, {"Pc", cfg.pc}};
      rec.verdicts = {{"claim_b", rep.claim_b.holds},
                      {"literal_a", rep.literal_a.holds},
                      {"variant_a_bd", rep.variant_a_bd.holds}};
      auto witness = [&rec](const char* name, const ConcurrencyCheck& check) {
        if (check.holds && check.common) {
          rec.witnesses.emplace_back(std::string(name) + "_common",
                                     triple(*check.common));
        } else if (check.counterexample) {
          rec.witnesses.emplace_back(std::string(name) + "_candidate1",
                                     triple(check.counterexample->first));
          rec.witnesses.emplace_back(std::string(name) + "_candidate2",
                                     triple(check.counterexample->second));
        }
      };
      witness("claim_b", rep.claim_b);
      witness("literal_a", rep.literal_a);
      witness("variant_a_bd", rep.variant_a_bd);
      rec.falsified = !rep.claim_b.holds;
      if (rec.falsified) {
        rec.falsification_note = "claim b failed: A1B1, C1D1, AC not concurrent";
      }
      return;
    } catch (const GeomError&) {
      ctx.reject();
    }
  }
}

}  // namespace

std::optional<Theorem> theorem_from_name(const std::string& name) {
  if (name == "desargues") return Theorem::Desargues;
  if (name == "reciprocal") return Theorem::Reciprocal;
  if (name == "menelaus") return Theorem::Menelaus;
  if (name == "newton-gauss") return Theorem::NewtonGauss;
  if (name == "problem1") return Theorem::Problem1;
  if (name == "problem2") return Theorem::Problem2;
  return std::nullopt;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Desargues: return "desargues";
    case Theorem::Reciprocal: return "reciprocal";
    case Theorem::Menelaus: return "menelaus";
    case Theorem::NewtonGauss: return "newton-gauss";
    case Theorem::Problem1: return "problem1";
    case Theorem::Problem2: return "problem2";
  }
  return "?";
}

TrialRecord run_trial(const FuzzSpec& spec, std::uint64_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.derived_seed = Splitmix64::derive(spec.seed, index);
  Ctx ctx(rec.derived_seed, spec.coordinate_bound);
  try {
    switch (spec.theorem) {
      case Theorem::Desargues: desargues_trial(ctx, rec); break;
      case Theorem::Reciprocal: reciprocal_trial(ctx, rec); break;
      case Theorem::Menelaus: menelaus_trial(ctx, rec); break;
      case Theorem::NewtonGauss: newton_gauss_trial(ctx, rec); break;
      case Theorem::Problem1: problem1_trial(ctx, rec); break;
      case Theorem::Problem2: problem2_trial(ctx, rec); break;
    }
  } catch (const TheoremFalsification& tf) {
    rec.falsified = true;
    rec.falsification_note = tf.what();
    rec.verdicts.emplace_back("theorem_holds", false);
  }
  rec.rejections = ctx.rejections;
  return rec;
}

FuzzSummary run_fuzz(const FuzzSpec& spec, std::ostream& out, bool json) {
  FuzzSummary summary;
  summary.trials = spec.trials;
  for (std::uint64_t i = 0; i < spec.trials; ++i) {
    TrialRecord rec = run_trial(spec, i);
    summary.total_rejections += rec.rejections;
    if (rec.falsified) ++summary.falsifications;
    for (const auto& [name, ok] : rec.verdicts) {
      if (ok) ++summary.verdict_true_counts[name];
      else summary.verdict_true_counts.try_emplace(name, 0);
    }
    if (json) {
      ordered_json j;
      j["index"] = rec.index;
      j["seed"] = rec.derived_seed;
      ordered_json points = ordered_json::object();
      for (const auto& [name, p] : rec.points) {
        points[name] = {p.x().get_str(), p.y().get_str(), p.z().get_str()};
      }
      j["points"] = std::move(points);
      ordered_json verdicts = ordered_json::object();
      for (const auto& [name, ok] : rec.verdicts) verdicts[name] = ok;
      j["verdicts"] = std::move(verdicts);
      ordered_json witnesses = ordered_json::object();
      for (const auto& [name, w] : rec.witnesses) witnesses[name] = w;
      j["witnesses"] = std::move(witnesses);
      j["rejections"] = rec.rejections;
      out << j.dump() << "\n";
    }
    if (rec.falsified && !rec.falsification_note.empty()) {
      out << "# falsification at trial " << rec.index << ": "
          << rec.falsification_note << "\n";
    }
  }
  if (json) {
    ordered_json s;
    s["summary"]["theorem"] = theorem_name(spec.theorem);
    s["summary"]["trials"] = spec.trials;
    s["summary"]["seed"] = spec.seed;
    s["summary"]["bound"] = spec.coordinate_bound;
    s["summary"]["falsifications"] = summary.falsifications;
    s["summary"]["rejections"] = summary.total_rejections;
    ordered_json counts = ordered_json::object();
    for (const auto& [name, n] : summary.verdict_true_counts) counts[name] = n;
    s["summary"]["verdict_true_counts"] = std::move(counts);
    out << s.dump() << "\n";
  } else {
    out << "theorem " << theorem_name(spec.theorem) << ": " << spec.trials
        << " trials, seed " << spec.seed << ", bound "
        << spec.coordinate_bound << "\n";
    for (const auto& [name, n] : summary.verdict_true_counts) {
      out << "  " << name << ": " << n << "/" << spec.trials << " true\n";
    }
    out << "  rejections: " << summary.total_rejections << "\n";
    out << "  falsifications: " << summary.falsifications << "\n";
    out << (summary.falsifications == 0 ? "PASS" : "FAIL") << "\n";
  }
  return summary;
}

}  // namespace geo::fuzz

