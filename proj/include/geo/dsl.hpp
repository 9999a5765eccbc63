#pragma once

#include <string>
#include <variant>
#include <vector>

#include "geo/projective.hpp"

namespace geo::dsl {

/// Byte-accurate location of a construct: 1-based line, 1-based inclusive
/// column range within that line.
struct SourceSpan {
  int line = 0;
  int col_begin = 0;
  int col_end = 0;
};

enum class ValueKind { Point, Line };

/// Expression node. Point-valued: AffineLit, IdealLit, Meet, Mid, or a
/// NameRef bound to a point. Line-valued: Join, InfinityLine, or a NameRef
/// bound to a line. The parser resolves every NameRef and records the kind.
struct Expr {
  enum class Kind { AffineLit, IdealLit, Meet, Mid, Join, InfinityLine, NameRef };

  Kind kind;
  SourceSpan span;
  ValueKind value_kind = ValueKind::Point;
  Rational rx, ry;         // AffineLit / IdealLit
  std::string name;        // NameRef
  std::vector<Expr> args;  // Meet(2), Mid(2), Join(2)
};

struct PointDecl {
  SourceSpan span;
  std::string name;
  Expr expr;
};

struct LineDecl {
  SourceSpan span;
  std::string name;
  Expr expr;
};

enum class AssertKind { Collinear, Concurrent, Incident, Parallel, Equal };

const char* assert_kind_name(AssertKind kind);

struct AssertStmt {
  SourceSpan span;
  AssertKind kind;
  std::vector<Expr> args;
};

using Statement = std::variant<PointDecl, LineDecl, AssertStmt>;

struct Program {
  std::vector<Statement> statements;
};

/// Parse failure: either a grammar violation (with the expected-set folded
/// into the message) or a name resolution failure. Both carry the offending
/// span.
struct ParseError {
  enum class Kind { Syntax, Name };
  Kind kind;
  SourceSpan span;
  std::string message;
};

class ParseException : public std::runtime_error {
 public:
  explicit ParseException(ParseError err)
      : std::runtime_error(err.message), err_(std::move(err)) {}
  const ParseError& error() const { return err_; }

 private:
  ParseError err_;
};

/// Parses a `.geo` source. Name use-before-declaration, redeclaration, and
/// argument kind/arity violations are all caught here, so a returned Program
/// always evaluates without lookup failures.
Program parse(const std::string& source);

/// Canonical text form; parse(format(p)) is structurally identical to p.
std::string format(const Program& p);

/// Structural equality ignoring source spans.
bool structurally_equal(const Program& a, const Program& b);

using Value = std::variant<ProjPoint, ProjLine>;

enum class Outcome { Holds, Fails, Error };

struct AssertionResult {
  SourceSpan span;
  AssertKind kind;
  Outcome outcome;
  std::string witness;  // exact value: common point, separating point, ...
};

struct EvalError {
  SourceSpan span;
  std::string message;
};

struct EvalReport {
  std::vector<std::pair<std::string, Value>> bindings;  // declaration order
  std::vector<AssertionResult> assertions;              // one per assert stmt
  std::vector<EvalError> errors;

  bool all_passed() const;
};

/// Evaluates statements in order with exact arithmetic. A degenerate
/// operation (join of coincident points, meet of coincident lines, midpoint
/// with an ideal argument, zero ideal direction) records an EvalError and
/// poisons the declared name; only statements depending on a poisoned name
/// are skipped. Failed assertions never stop evaluation.
EvalReport evaluate(const Program& p);

}  // namespace geo::dsl
