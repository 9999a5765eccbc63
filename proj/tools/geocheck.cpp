// geocheck: exact-arithmetic checker for plane projective incidence
// constructions. Subcommands: check (run a .geo file), fuzz (deterministic
// randomized theorem instances), figure (SVG rendering), demo (built-in
// worked configurations).
//
// Exit codes: 0 pass, 1 falsification or assertion failure, 2 usage or parse
// error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geo/dsl.hpp"
#include "geo/fuzz.hpp"
#include "geo/quadrilateral.hpp"
#include "geo/svg.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* outcome_name(geo::dsl::Outcome o) {
  switch (o) {
    case geo::dsl::Outcome::Holds: return "holds";
    case geo::dsl::Outcome::Fails: return "fails";
    case geo::dsl::Outcome::Error: return "error";
  }
  return "?";
}

// Affine rendering "(x, y)" for finite points, homogeneous for ideal ones.
std::string aff_str(const geo::ProjPoint& p) {
  if (p.is_ideal()) return p.str() + " (ideal)";
  auto [x, y] = p.to_affine();
  return "(" + x.str() + ", " + y.str() + ")";
}

int cmd_check(const std::string& path, bool json, std::ostream& out) {
  auto source = read_file(path);
  if (!source) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitIo;
  }
  geo::dsl::Program prog;
  try {
    prog = geo::dsl::parse(*source);
  } catch (const geo::dsl::ParseException& pe) {
    std::cerr << path << ":" << pe.error().message << "\n";
    return kExitUsage;
  }
  geo::dsl::EvalReport report = geo::dsl::evaluate(prog);
  if (json) {
    ordered_json j;
    j["file"] = path;
    ordered_json bindings = ordered_json::object();
    for (const auto& [name, value] : report.bindings) {
      const auto* p = std::get_if<geo::ProjPoint>(&value);
      ordered_json b;
      b["kind"] = p != nullptr ? "point" : "line";
      if (p != nullptr) {
        b["coords"] = {p->x().get_str(), p->y().get_str(), p->z().get_str()};
      } else {
        const auto& l = std::get<geo::ProjLine>(value);
        b["coords"] = {l.a().get_str(), l.b().get_str(), l.c().get_str()};
      }
      bindings[name] = std::move(b);
    }
    j["bindings"] = std::move(bindings);
    j["assertions"] = ordered_json::array();
    for (const auto& a : report.assertions) {
      ordered_json ja;
      ja["line"] = a.span.line;
      ja["col_begin"] = a.span.col_begin;
      ja["col_end"] = a.span.col_end;
      ja["kind"] = geo::dsl::assert_kind_name(a.kind);
      ja["outcome"] = outcome_name(a.outcome);
      ja["witness"] = a.witness;
      j["assertions"].push_back(std::move(ja));
    }
    j["errors"] = ordered_json::array();
    for (const auto& e : report.errors) {
      ordered_json je;
      je["line"] = e.span.line;
      je["col_begin"] = e.span.col_begin;
      je["col_end"] = e.span.col_end;
      je["message"] = e.message;
      j["errors"].push_back(std::move(je));
    }
    j["pass"] = report.all_passed();
    out << j.dump(2) << "\n";
  } else {
    out << path << ": " << prog.statements.size() << " statements, "
        << report.assertions.size() << " assertions\n";
    for (const auto& a : report.assertions) {
      out << "  " << a.span.line << ":" << a.span.col_begin << " "
          << geo::dsl::assert_kind_name(a.kind) << ": "
          << outcome_name(a.outcome) << " (" << a.witness << ")\n";
    }
    for (const auto& e : report.errors) {
      out << "  " << e.span.line << ":" << e.span.col_begin
          << " error: " << e.message << "\n";
    }
    out << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_figure(const std::string& path, const std::string& out_path) {
  auto source = read_file(path);
  if (!source) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitIo;
  }
  geo::dsl::Program prog;
  try {
    prog = geo::dsl::parse(*source);
  } catch (const geo::dsl::ParseException& pe) {
    std::cerr << path << ":" << pe.error().message << "\n";
    return kExitUsage;
  }
  geo::dsl::EvalReport report = geo::dsl::evaluate(prog);
  if (!report.all_passed()) {
    for (const auto& e : report.errors) {
      std::cerr << path << ":" << e.span.line << ":" << e.span.col_begin
                << ": " << e.message << "\n";
    }
    for (const auto& a : report.assertions) {
      if (a.outcome != geo::dsl::Outcome::Holds) {
        std::cerr << path << ":" << a.span.line << ":" << a.span.col_begin
                  << ": assertion " << outcome_name(a.outcome) << " ("
                  << a.witness << ")\n";
      }
    }
    return kExitFail;
  }
  std::string svg = geo::svg::render(report, path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitIo;
  }
  out << svg;
  return out.good() ? kExitPass : kExitIo;
}

void print_concurrency(std::ostream& out, const char* label,
                       const geo::ConcurrencyCheck& check) {
  out << "  " << label << ": ";
  if (check.holds) {
    out << "holds";
    if (check.common) {
      out << ", common point " << check.common->str();
      if (check.common->is_ideal()) out << " (ideal)";
    }
    out << "\n";
  } else {
    out << "FAILS\n";
    out << "      candidates " << check.counterexample->first.str() << " vs "
        << check.counterexample->second.str() << "\n";
  }
}

int demo_problem1(std::ostream& out) {
  using geo::ProjPoint;
  using geo::Rational;
  out << "problem1 demo\n";
  out << "parallelogram A=(0,0) B=(4,0) C=(6,2) D=(2,2); A1 on AB, B1 on BC,\n";
  out << "D1 = A1Pc^AD, C1 = B1Pc^CD, with Pc on BD, so A1D1, BD, B1C1 are\n";
  out << "concurrent at Pc by construction.\n";
  ProjPoint a = ProjPoint::from_affine(0, 0);
  ProjPoint b = ProjPoint::from_affine(4, 0);
  ProjPoint c = ProjPoint::from_affine(6, 2);
  ProjPoint d = ProjPoint::from_affine(2, 2);
  struct Params {
    Rational pt, ta, tb;
  };
  const Params configs[2] = {{Rational(-1, 2), Rational(3, 4), Rational(1, 4)},
                             {Rational(3, 2), Rational(1, 2), Rational(1, 2)}};
  for (int i = 0; i < 2; ++i) {
    geo::Problem1Config cfg = geo::build_problem1_config(
        a, b, c, d, configs[i].pt, configs[i].ta, configs[i].tb);
    geo::Problem1Report rep = geo::verify_problem1(cfg);
    out << "\nconfig " << (i + 1) << ": Pc=" << aff_str(cfg.pc)
        << " A1=" << aff_str(cfg.a1) << " B1=" << aff_str(cfg.b1)
        << " -> D1=" << aff_str(cfg.d1) << " C1=" << aff_str(cfg.c1) << "\n";
    print_concurrency(out, "claim b   (A1B1, C1D1, AC)", rep.claim_b);
    print_concurrency(out, "claim a   (AC, A1C1, B1D1)", rep.literal_a);
    print_concurrency(out, "variant   (BD, A1C1, B1D1)", rep.variant_a_bd);
  }
  out << "\ndiscrepancy note: the literal claim a fails in these\n";
  out << "configurations (two distinct candidate points are printed as the\n";
  out << "counterexample); claim b holds projectively, with an ideal common\n";
  out << "point here. The fuzzer reports pass rates for all three readings.\n";
  return kExitPass;
}

int demo_problem2(std::ostream& out) {
  using geo::ProjPoint;
  out << "problem2 demo\n";
  out << "quadrilateral A=(0,0) B=(4,0) C=(5,3) D=(1,2) with derived points\n";
  out << "E = AB^CD, F = BC^AD, O = AC^BD, P = BD^EF, R = AC^EF.\n";
  geo::CompleteQuadrilateral q = geo::CompleteQuadrilateral::build(
      ProjPoint::from_affine(0, 0), ProjPoint::from_affine(4, 0),
      ProjPoint::from_affine(5, 3), ProjPoint::from_affine(1, 2));
  out << "E=" << aff_str(q.e()) << " F=" << aff_str(q.f())
      << " O=" << aff_str(q.o()) << " P=" << aff_str(q.p())
      << " R=" << aff_str(q.r()) << "\n";
  geo::Problem2Report rep = geo::verify_problem2(q);
  out << "newton-gauss: O1=" << aff_str(rep.ng.o1) << " O2="
      << aff_str(rep.ng.o2) << " O3=" << aff_str(rep.ng.o3) << " on line "
      << rep.ng.line.str() << "\n";
  auto pair_line = [&](const char* label, const geo::PairVerdict& pv) {
    out << "  " << label << ": " << geo::verdict_name(pv.verdict);
    if (pv.center) out << ", center " << pv.center->str();
    if (pv.axis) {
      out << ", axis " << pv.axis->str()
          << (pv.axis_is_newton_gauss ? " = newton-gauss line"
                                      : " != newton-gauss line");
    }
    if (!pv.note.empty()) out << " (" << pv.note << ")";
    out << "\n";
  };
  out << "claim i (diagonal triangle vs the four medial triangles):\n";
  pair_line("POR ~ GHI", rep.por_ghi);
  pair_line("POR ~ JKL", rep.por_jkl);
  pair_line("POR ~ MNQ", rep.por_mnq);
  pair_line("POR ~ UVT", rep.por_uvt);
  out << "claim ii:\n";
  pair_line("GHI ~ JKL", rep.ghi_jkl);
  out << "claim iii:\n";
  pair_line("MNQ ~ UVT", rep.mnq_uvt);
  out << "claim iv (centers of POR/GHI, POR/JKL, GHI/JKL collinear): "
      << geo::verdict_name(rep.centers_iv) << "\n";
  if (rep.iv_centers) {
    out << "  centers " << (*rep.iv_centers)[0].str() << " "
        << (*rep.iv_centers)[1].str() << " " << (*rep.iv_centers)[2].str()
        << "\n";
  }
  out << "claim v (centers of POR/MNQ, POR/UVT, MNQ/UVT collinear): "
      << geo::verdict_name(rep.centers_v) << "\n";
  if (rep.v_centers) {
    out << "  centers " << (*rep.v_centers)[0].str() << " "
        << (*rep.v_centers)[1].str() << " " << (*rep.v_centers)[2].str()
        << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact projective incidence checker"};
  app.require_subcommand(1);

  std::string check_path;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "evaluate a .geo file");
  check->add_option("file", check_path, "construction file")->required();
  check->add_flag("--json", check_json, "machine-readable report");

  std::string fuzz_theorem;
  std::uint64_t fuzz_trials = 0;
  std::uint64_t fuzz_seed = 0;
  std::int64_t fuzz_bound = 10;
  bool fuzz_json = false;
  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized theorem instances");
  fuzz->add_option("--theorem", fuzz_theorem, "one of desargues, reciprocal, "
                   "menelaus, newton-gauss, problem1, problem2")->required();
  fuzz->add_option("--trials", fuzz_trials, "number of trials")->required();
  fuzz->add_option("--seed", fuzz_seed, "base seed (default 0)");
  fuzz->add_option("--bound", fuzz_bound, "coordinate box half-width (default 10)");
  fuzz->add_flag("--json", fuzz_json, "one JSON record per trial");

  std::string figure_path;
  std::string figure_out;
  CLI::App* figure = app.add_subcommand("figure", "render a .geo file as SVG");
  figure->add_option("file", figure_path, "construction file")->required();
  figure->add_option("-o,--output", figure_out, "output SVG path")->required();

  std::string demo_name;
  CLI::App* demo = app.add_subcommand("demo", "built-in worked configurations");
  demo->add_option("name", demo_name, "problem1 or problem2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, check_json, std::cout);
    if (figure->parsed()) return cmd_figure(figure_path, figure_out);
    if (fuzz->parsed()) {
      auto theorem = geo::fuzz::theorem_from_name(fuzz_theorem);
      if (!theorem) {
        std::cerr << "error: unknown theorem '" << fuzz_theorem << "'\n";
        return kExitUsage;
      }
      geo::fuzz::FuzzSpec spec{*theorem, fuzz_trials, fuzz_seed, fuzz_bound};
      if (!spec.valid()) {
        std::cerr << "error: trials must be >= 1 and bound >= 2\n";
        return kExitUsage;
      }
      geo::fuzz::FuzzSummary summary =
          geo::fuzz::run_fuzz(spec, std::cout, fuzz_json);
      return summary.falsifications == 0 ? kExitPass : kExitFail;
    }
    if (demo->parsed()) {
      if (demo_name == "problem1") return demo_problem1(std::cout);
      if (demo_name == "problem2") return demo_problem2(std::cout);
      std::cerr << "error: unknown demo '" << demo_name
                << "' (expected problem1 or problem2)\n";
      return kExitUsage;
    }
  } catch (const geo::TheoremFalsification& tf) {
    std::cerr << tf.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
