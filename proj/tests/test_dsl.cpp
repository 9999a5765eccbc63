#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geo/dsl.hpp"

using namespace geo::dsl;
using geo::ProjLine;
using geo::ProjPoint;
using geo::Rational;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParseError parse_failure(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseException& pe) {
    return pe.error();
  }
  FAIL("expected a parse failure");
  return {};
}

}  // namespace

TEST_CASE("three-statement program parses") {
  Program p = parse("point A = (0, 0)\npoint B = (4/1, 0)\nline l = join(A, B)\n");
  REQUIRE(p.statements.size() == 3);
  CHECK(std::holds_alternative<PointDecl>(p.statements[0]));
  CHECK(std::holds_alternative<PointDecl>(p.statements[1]));
  const auto& ld = std::get<LineDecl>(p.statements[2]);
  CHECK(ld.name == "l");
  CHECK(ld.expr.kind == Expr::Kind::Join);
  CHECK(ld.span.line == 3);
}

TEST_CASE("name errors carry byte-accurate spans") {
  ParseError e = parse_failure("point A = meet(l, m)\n");
  CHECK(e.kind == ParseError::Kind::Name);
  CHECK(e.span.line == 1);
  CHECK(e.span.col_begin == 16);  // column of `l`

  e = parse_failure("point A = (0, 0)\npoint A = (1, 1)\n");
  CHECK(e.kind == ParseError::Kind::Name);
  CHECK(e.span.line == 2);
  CHECK(e.span.col_begin == 7);
}

TEST_CASE("collinear arity is a syntax error") {
  ParseError e = parse_failure("point A = (0, 0)\npoint B = (1, 1)\nassert collinear(A, B)\n");
  CHECK(e.kind == ParseError::Kind::Syntax);
  CHECK(e.span.line == 3);
  CHECK(e.message.find("at least 3") != std::string::npos);
}

TEST_CASE("more parse failures") {
  CHECK(parse_failure("point A = (1/0, 2)\n").message.find("zero denominator") !=
        std::string::npos);
  CHECK(parse_failure("point A = (1, )\n").kind == ParseError::Kind::Syntax);
  CHECK(parse_failure("line point = infinity\n").kind == ParseError::Kind::Syntax);
  CHECK(parse_failure("point A = (0,0)\nline l = A\n").kind ==
        ParseError::Kind::Syntax);  // A is a point, not a line
  CHECK(parse_failure("point A = (0,0) point B = (1,1)\n").message.find(
            "end of line") != std::string::npos);
  // incident wants (point, line)
  CHECK(parse_failure("point A = (0,0)\npoint B = (1,1)\nassert incident(A, B)\n")
            .kind == ParseError::Kind::Syntax);
}

TEST_CASE("evaluating the perspective-triangles construction") {
  Program p = parse(
      "point A = (1, 0)\n"
      "point B = (0, 1)\n"
      "point C = (1, 1)\n"
      "point A1 = (2, 0)\n"
      "point B1 = (0, 3)\n"
      "point C1 = (4, 4)\n"
      "line ja = join(A, A1)\n"
      "line jb = join(B, B1)\n"
      "line jc = join(C, C1)\n"
      "assert concurrent(ja, jb, jc)\n"
      "point N = meet(join(A, B), join(A1, B1))\n"
      "point M = meet(join(B, C), join(B1, C1))\n"
      "point P = meet(join(C, A), join(C1, A1))\n"
      "assert collinear(N, M, P)\n");
  EvalReport rep = evaluate(p);
  CHECK(rep.errors.empty());
  REQUIRE(rep.assertions.size() == 2);
  CHECK(rep.assertions[0].outcome == Outcome::Holds);
  CHECK(rep.assertions[1].outcome == Outcome::Holds);
  CHECK(rep.all_passed());
  // verdicts reproducible through the kernel on the bound values
  const ProjPoint* n = nullptr;
  const ProjPoint* m = nullptr;
  const ProjPoint* pp = nullptr;
  for (const auto& [name, value] : rep.bindings) {
    if (name == "N") n = &std::get<ProjPoint>(value);
    if (name == "M") m = &std::get<ProjPoint>(value);
    if (name == "P") pp = &std::get<ProjPoint>(value);
  }
  REQUIRE(n != nullptr);
  CHECK(*n == ProjPoint::from_affine(Rational(4), Rational(-3)));
  CHECK(collinear(*n, *m, *pp));
}

TEST_CASE("mid of a point with itself binds the point") {
  Program p = parse("point A = (2, 5)\npoint M = mid(A, A)\nassert equal(M, A)\n");
  EvalReport rep = evaluate(p);
  CHECK(rep.all_passed());
}

TEST_CASE("incidence axiom as an equal assertion") {
  Program p = parse(
      "point A = (0, 0)\npoint B = (3, 1)\npoint C = (1, 4)\n"
      "assert equal(meet(join(A, B), join(A, C)), A)\n");
  CHECK(evaluate(p).all_passed());
}

TEST_CASE("degenerate operations poison only dependents") {
  Program p = parse(
      "point A = (1, 1)\n"
      "point B = (1, 1)\n"
      "line l = join(A, B)\n"
      "point X = meet(l, infinity)\n"
      "point C = (2, 3)\n"
      "assert incident(X, infinity)\n"
      "assert equal(C, C)\n");
  EvalReport rep = evaluate(p);
  // join failed; X skipped; the first assert errors; the last one still runs
  REQUIRE(rep.errors.size() == 3);
  CHECK(rep.errors[0].span.line == 3);
  CHECK(rep.errors[1].span.line == 4);
  CHECK(rep.errors[2].span.line == 6);
  REQUIRE(rep.assertions.size() == 2);
  CHECK(rep.assertions[0].outcome == Outcome::Error);
  CHECK(rep.assertions[1].outcome == Outcome::Holds);
  CHECK_FALSE(rep.all_passed());
  // bindings hold only the successes
  CHECK(rep.bindings.size() == 3);  // A, B, C
}

TEST_CASE("parallel is exact sugar over the ideal meet") {
  Program p = parse(
      "point A = (0, 0)\npoint B = (2, 1)\npoint C = (0, 1)\npoint D = (2, 2)\n"
      "assert parallel(join(A, B), join(C, D))\n"
      "assert parallel(join(A, B), join(A, C))\n");
  EvalReport rep = evaluate(p);
  CHECK(rep.assertions[0].outcome == Outcome::Holds);
  CHECK(rep.assertions[1].outcome == Outcome::Fails);

  // coincident lines leave the sugar undefined: recorded as an error
  Program q = parse(
      "point A = (0, 0)\npoint B = (2, 1)\n"
      "line l = join(A, B)\n"
      "assert parallel(l, l)\n");
  EvalReport rq = evaluate(q);
  CHECK(rq.assertions[0].outcome == Outcome::Error);
}

TEST_CASE("ideal literals") {
  Program p = parse(
      "point I = ideal(2, 2)\npoint J = ideal(-1, -1)\nassert equal(I, J)\n");
  CHECK(evaluate(p).all_passed());
  EvalReport rep = evaluate(parse("point Z = ideal(0, 0)\n"));
  CHECK(rep.errors.size() == 1);
}

TEST_CASE("format and reparse is structurally identical") {
  const char* src =
      "# comment lines vanish\n"
      "point A = (1/2, -3)\n"
      "point I = ideal(1, 0)\n"
      "line l = join(A, I)\n"
      "point M = mid(A, A)\n"
      "point X = meet(l, infinity)\n"
      "assert collinear(A, I, X)\n"
      "assert equal(M, A)\n"
      "assert parallel(l, infinity)\n";
  Program p = parse(src);
  std::string printed = format(p);
  Program q = parse(printed);
  CHECK(structurally_equal(p, q));
  CHECK(format(q) == printed);  // canonical form is a fixed point
}

TEST_CASE("corpus round-trips") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(GEO_CORPUS_DIR)) {
    if (entry.path().extension() != ".geo") continue;
    ++seen;
    INFO("file ", entry.path().string());
    Program p = parse(slurp(entry.path()));
    Program q = parse(format(p));
    CHECK(structurally_equal(p, q));
  }
  CHECK(seen >= 10);
}

TEST_CASE("evaluation is order-independent for independent declarations") {
  Program p1 = parse(
      "point A = (0, 0)\npoint B = (4, 0)\npoint C = (0, 4)\n"
      "line ab = join(A, B)\nline ac = join(A, C)\n"
      "assert equal(meet(ab, ac), A)\n");
  Program p2 = parse(
      "point C = (0, 4)\npoint B = (4, 0)\npoint A = (0, 0)\n"
      "line ac = join(A, C)\nline ab = join(A, B)\n"
      "assert equal(meet(ab, ac), A)\n");
  EvalReport r1 = evaluate(p1);
  EvalReport r2 = evaluate(p2);
  CHECK(r1.all_passed());
  CHECK(r2.all_passed());
  for (const auto& [name, value] : r1.bindings) {
    bool found = false;
    for (const auto& [name2, value2] : r2.bindings) {
      if (name2 != name) continue;
      found = true;
      if (const auto* pt = std::get_if<ProjPoint>(&value)) {
        CHECK(*pt == std::get<ProjPoint>(value2));
      } else {
        CHECK(std::get<ProjLine>(value) == std::get<ProjLine>(value2));
      }
    }
    CHECK(found);
  }
}
