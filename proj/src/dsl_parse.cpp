#include <cstdint>
#include <map>
#include <sstream>

#include "geo/dsl.hpp"

namespace geo::dsl {

namespace {

enum class Tok {
  KwPoint, KwLine, KwAssert,
  KwMeet, KwMid, KwJoin, KwIdeal, KwInfinity,
  KwCollinear, KwConcurrent, KwIncident, KwParallel, KwEqual,
  Ident, Int,
  LParen, RParen, Comma, Equals, Slash, Minus,
  Newline, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"point", Tok::KwPoint},       {"line", Tok::KwLine},
    {"assert", Tok::KwAssert},     {"meet", Tok::KwMeet},
    {"mid", Tok::KwMid},           {"join", Tok::KwJoin},
    {"ideal", Tok::KwIdeal},       {"infinity", Tok::KwInfinity},
    {"collinear", Tok::KwCollinear}, {"concurrent", Tok::KwConcurrent},
    {"incident", Tok::KwIncident}, {"parallel", Tok::KwParallel},
    {"equal", Tok::KwEqual},
};

[[noreturn]] void syntax_error(const SourceSpan& span, const std::string& msg) {
  std::ostringstream os;
  os << span.line << ":" << span.col_begin << ": syntax error: " << msg;
  throw ParseException({ParseError::Kind::Syntax, span, os.str()});
}

[[noreturn]] void name_error(const SourceSpan& span, const std::string& msg) {
  std::ostringstream os;
  os << span.line << ":" << span.col_begin << ": name error: " << msg;
  throw ParseException({ParseError::Kind::Name, span, os.str()});
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto push = [&](Tok kind, const std::string& text, int begin_col) {
    out.push_back({kind, text, {line, begin_col, col - 1}});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        ++i;
        ++col;
      }
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", {line, col, col}});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    int begin = col;
    if (ident_start(c)) {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word = src.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      auto kw = kKeywords.find(word);
      push(kw != kKeywords.end() ? kw->second : Tok::Ident, word, begin);
      continue;
    }
    if (digit(c)) {
      size_t j = i;
      while (j < src.size() && digit(src[j])) ++j;
      std::string num = src.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      push(Tok::Int, num, begin);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case '/': kind = Tok::Slash; break;
      case '-': kind = Tok::Minus; break;
      default:
        syntax_error({line, col, col},
                     std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
    push(kind, std::string(1, c), begin);
  }
  out.push_back({Tok::End, "", {line, col, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    Program prog;
    for (;;) {
      while (at(Tok::Newline)) advance();
      if (at(Tok::End)) break;
      prog.statements.push_back(statement());
      if (!at(Tok::Newline) && !at(Tok::End)) {
        syntax_error(peek().span, "expected end of line, got '" + peek().text + "'");
      }
    }
    return prog;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() { return toks_[pos_++]; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      syntax_error(peek().span,
                   std::string("expected ") + what + ", got '" +
                       (peek().kind == Tok::End ? "end of input"
                        : peek().kind == Tok::Newline ? "end of line"
                                                      : peek().text) +
                       "'");
    }
    return advance();
  }

  Statement statement() {
    if (at(Tok::KwPoint)) {
      SourceSpan begin = advance().span;
      const Token& name = expect(Tok::Ident, "identifier");
      check_fresh(name);
      expect(Tok::Equals, "'='");
      Expr e = pexpr();
      declared_[name.text] = ValueKind::Point;
      return PointDecl{stmt_span(begin), name.text, std::move(e)};
    }
    if (at(Tok::KwLine)) {
      SourceSpan begin = advance().span;
      const Token& name = expect(Tok::Ident, "identifier");
      check_fresh(name);
      expect(Tok::Equals, "'='");
      Expr e = lexpr();
      declared_[name.text] = ValueKind::Line;
      return LineDecl{stmt_span(begin), name.text, std::move(e)};
    }
    if (at(Tok::KwAssert)) {
      SourceSpan begin = advance().span;
      AssertKind kind = assert_kind();
      expect(Tok::LParen, "'('");
      std::vector<Expr> args;
      args.push_back(arg_expr());
      while (at(Tok::Comma)) {
        advance();
        args.push_back(arg_expr());
      }
      const Token& close = expect(Tok::RParen, "')' or ','");
      validate_assert(kind, args, close.span);
      return AssertStmt{stmt_span(begin), kind, std::move(args)};
    }
    syntax_error(peek().span, "expected 'point', 'line', or 'assert', got '" +
                                  peek().text + "'");
  }

  SourceSpan stmt_span(const SourceSpan& begin) const {
    const SourceSpan& last = toks_[pos_ - 1].span;
    return {begin.line, begin.col_begin, last.col_end};
  }

  AssertKind assert_kind() {
    switch (peek().kind) {
      case Tok::KwCollinear: advance(); return AssertKind::Collinear;
      case Tok::KwConcurrent: advance(); return AssertKind::Concurrent;
      case Tok::KwIncident: advance(); return AssertKind::Incident;
      case Tok::KwParallel: advance(); return AssertKind::Parallel;
      case Tok::KwEqual: advance(); return AssertKind::Equal;
      default:
        syntax_error(peek().span,
                     "expected assertion kind (collinear, concurrent, "
                     "incident, parallel, equal), got '" + peek().text + "'");
    }
  }

  void check_fresh(const Token& name) {
    if (declared_.count(name.text) != 0) {
      name_error(name.span, "redeclaration of '" + name.text + "'");
    }
  }

  ValueKind lookup(const Token& name) {
    auto it = declared_.find(name.text);
    if (it == declared_.end()) {
      name_error(name.span, "undefined identifier '" + name.text + "'");
    }
    return it->second;
  }

  Rational rational() {
    bool negative = false;
    if (at(Tok::Minus)) {
      advance();
      negative = true;
    }
    const Token& num = expect(Tok::Int, "integer");
    BigInt n(num.text);
    if (negative) n = -n;
    if (at(Tok::Slash)) {
      advance();
      const Token& den = expect(Tok::Int, "integer denominator");
      BigInt d(den.text);
      if (d == 0) syntax_error(den.span, "zero denominator");
      return Rational(n, d);
    }
    return Rational(n, BigInt(1));
  }

  Expr name_ref(ValueKind want, const char* what) {
    const Token& name = expect(Tok::Ident, what);
    ValueKind kind = lookup(name);
    if (kind != want) {
      syntax_error(name.span, std::string("expected ") + what + "; '" +
                                  name.text + "' is a " +
                                  (kind == ValueKind::Point ? "point" : "line"));
    }
    Expr e;
    e.kind = Expr::Kind::NameRef;
    e.span = name.span;
    e.value_kind = want;
    e.name = name.text;
    return e;
  }

  Expr pexpr() {
    SourceSpan begin = peek().span;
    if (at(Tok::LParen)) {
      advance();
      Expr e;
      e.kind = Expr::Kind::AffineLit;
      e.value_kind = ValueKind::Point;
      e.rx = rational();
      expect(Tok::Comma, "','");
      e.ry = rational();
      expect(Tok::RParen, "')'");
      e.span = span_from(begin);
      return e;
    }
    if (at(Tok::KwIdeal)) {
      advance();
      expect(Tok::LParen, "'('");
      Expr e;
      e.kind = Expr::Kind::IdealLit;
      e.value_kind = ValueKind::Point;
      e.rx = rational();
      expect(Tok::Comma, "','");
      e.ry = rational();
      expect(Tok::RParen, "')'");
      e.span = span_from(begin);
      return e;
    }
    if (at(Tok::KwMeet)) {
      advance();
      expect(Tok::LParen, "'('");
      Expr e;
      e.kind = Expr::Kind::Meet;
      e.value_kind = ValueKind::Point;
      e.args.push_back(lexpr());
      expect(Tok::Comma, "','");
      e.args.push_back(lexpr());
      expect(Tok::RParen, "')'");
      e.span = span_from(begin);
      return e;
    }
    if (at(Tok::KwMid)) {
      advance();
      expect(Tok::LParen, "'('");
      Expr e;
      e.kind = Expr::Kind::Mid;
      e.value_kind = ValueKind::Point;
      e.args.push_back(name_ref(ValueKind::Point, "point name"));
      expect(Tok::Comma, "','");
      e.args.push_back(name_ref(ValueKind::Point, "point name"));
      expect(Tok::RParen, "')'");
      e.span = span_from(begin);
      return e;
    }
    syntax_error(begin, "expected a point expression "
                        "('(x, y)', 'meet', 'mid', or 'ideal'), got '" +
                            peek().text + "'");
  }

  Expr lexpr() {
    SourceSpan begin = peek().span;
    if (at(Tok::Ident)) return name_ref(ValueKind::Line, "line name");
    if (at(Tok::KwInfinity)) {
      advance();
      Expr e;
      e.kind = Expr::Kind::InfinityLine;
      e.value_kind = ValueKind::Line;
      e.span = begin;
      return e;
    }
    if (at(Tok::KwJoin)) {
      advance();
      expect(Tok::LParen, "'('");
      Expr e;
      e.kind = Expr::Kind::Join;
      e.value_kind = ValueKind::Line;
      e.args.push_back(name_ref(ValueKind::Point, "point name"));
      expect(Tok::Comma, "','");
      e.args.push_back(name_ref(ValueKind::Point, "point name"));
      expect(Tok::RParen, "')'");
      e.span = span_from(begin);
      return e;
    }
    syntax_error(begin, "expected a line expression "
                        "(name, 'join', or 'infinity'), got '" +
                            peek().text + "'");
  }

  // Assertion arguments accept any point or line expression; a bare
  // identifier takes the kind of its declaration.
  Expr arg_expr() {
    switch (peek().kind) {
      case Tok::LParen:
      case Tok::KwIdeal:
      case Tok::KwMeet:
      case Tok::KwMid:
        return pexpr();
      case Tok::KwJoin:
      case Tok::KwInfinity:
        return lexpr();
      case Tok::Ident: {
        const Token& name = peek();
        ValueKind kind = lookup(name);
        return name_ref(kind, kind == ValueKind::Point ? "point name"
                                                       : "line name");
      }
      default:
        syntax_error(peek().span,
                     "expected a point or line expression, got '" +
                         peek().text + "'");
    }
  }

  void validate_assert(AssertKind kind, const std::vector<Expr>& args,
                       const SourceSpan& close) {
    auto want_kind = [&](const Expr& e, ValueKind want, const char* what) {
      if (e.value_kind != want) {
        syntax_error(e.span, std::string(assert_kind_name(kind)) +
                                 " requires " + what);
      }
    };
    switch (kind) {
      case AssertKind::Collinear:
        if (args.size() < 3) {
          syntax_error(close, "collinear requires at least 3 arguments");
        }
        for (const Expr& e : args) want_kind(e, ValueKind::Point, "point arguments");
        break;
      case AssertKind::Concurrent:
        if (args.size() < 3) {
          syntax_error(close, "concurrent requires at least 3 arguments");
        }
        for (const Expr& e : args) want_kind(e, ValueKind::Line, "line arguments");
        break;
      case AssertKind::Incident:
        if (args.size() != 2) {
          syntax_error(close, "incident requires exactly 2 arguments");
        }
        want_kind(args[0], ValueKind::Point, "a point first argument");
        want_kind(args[1], ValueKind::Line, "a line second argument");
        break;
      case AssertKind::Parallel:
        if (args.size() != 2) {
          syntax_error(close, "parallel requires exactly 2 arguments");
        }
        for (const Expr& e : args) want_kind(e, ValueKind::Line, "line arguments");
        break;
      case AssertKind::Equal:
        if (args.size() != 2) {
          syntax_error(close, "equal requires exactly 2 arguments");
        }
        if (args[0].value_kind != args[1].value_kind) {
          syntax_error(args[1].span,
                       "equal requires two points or two lines");
        }
        break;
    }
  }

  SourceSpan span_from(const SourceSpan& begin) const {
    const SourceSpan& last = toks_[pos_ - 1].span;
    return {begin.line, begin.col_begin, last.col_end};
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::map<std::string, ValueKind> declared_;
};

void format_expr(std::ostringstream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::AffineLit:
      os << "(" << e.rx.str() << ", " << e.ry.str() << ")";
      break;
    case Expr::Kind::IdealLit:
      os << "ideal(" << e.rx.str() << ", " << e.ry.str() << ")";
      break;
    case Expr::Kind::Meet:
      os << "meet(";
      format_expr(os, e.args[0]);
      os << ", ";
      format_expr(os, e.args[1]);
      os << ")";
      break;
    case Expr::Kind::Mid:
      os << "mid(" << e.args[0].name << ", " << e.args[1].name << ")";
      break;
    case Expr::Kind::Join:
      os << "join(" << e.args[0].name << ", " << e.args[1].name << ")";
      break;
    case Expr::Kind::InfinityLine:
      os << "infinity";
      break;
    case Expr::Kind::NameRef:
      os << e.name;
      break;
  }
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value_kind != b.value_kind) return false;
  switch (a.kind) {
    case Expr::Kind::AffineLit:
    case Expr::Kind::IdealLit:
      return a.rx == b.rx && a.ry == b.ry;
    case Expr::Kind::NameRef:
      return a.name == b.name;
    case Expr::Kind::InfinityLine:
      return true;
    default:
      if (a.args.size() != b.args.size()) return false;
      for (size_t i = 0; i < a.args.size(); ++i) {
        if (!expr_equal(a.args[i], b.args[i])) return false;
      }
      return true;
  }
}

}  // namespace

const char* assert_kind_name(AssertKind kind) {
  switch (kind) {
    case AssertKind::Collinear: return "collinear";
    case AssertKind::Concurrent: return "concurrent";
    case AssertKind::Incident: return "incident";
    case AssertKind::Parallel: return "parallel";
    case AssertKind::Equal: return "equal";
  }
  return "?";
}

Program parse(const std::string& source) {
  return Parser(lex(source)).run();
}

std::string format(const Program& p) {
  std::ostringstream os;
  for (const Statement& st : p.statements) {
    if (const auto* pd = std::get_if<PointDecl>(&st)) {
      os << "point " << pd->name << " = ";
      format_expr(os, pd->expr);
    } else if (const auto* ld = std::get_if<LineDecl>(&st)) {
      os << "line " << ld->name << " = ";
      format_expr(os, ld->expr);
    } else {
      const auto& as = std::get<AssertStmt>(st);
      os << "assert " << assert_kind_name(as.kind) << "(";
      for (size_t i = 0; i < as.args.size(); ++i) {
        if (i > 0) os << ", ";
        format_expr(os, as.args[i]);
      }
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

bool structurally_equal(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i) {
    const Statement& sa = a.statements[i];
    const Statement& sb = b.statements[i];
    if (sa.index() != sb.index()) return false;
    if (const auto* pa = std::get_if<PointDecl>(&sa)) {
      const auto& pb = std::get<PointDecl>(sb);
      if (pa->name != pb.name || !expr_equal(pa->expr, pb.expr)) return false;
    } else if (const auto* la = std::get_if<LineDecl>(&sa)) {
      const auto& lb = std::get<LineDecl>(sb);
      if (la->name != lb.name || !expr_equal(la->expr, lb.expr)) return false;
    } else {
      const auto& aa = std::get<AssertStmt>(sa);
      const auto& ab = std::get<AssertStmt>(sb);
      if (aa.kind != ab.kind || aa.args.size() != ab.args.size()) return false;
      for (size_t j = 0; j < aa.args.size(); ++j) {
        if (!expr_equal(aa.args[j], ab.args[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace geo::dsl
