#include "umpf/dsl.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "umpf/errors.h"

namespace umpf {
namespace {

// Intermediate expressions may exceed the final cap before gcd reduction.
constexpr int kIntermediateDegreeCap = 64;

enum class Tok { kNumber, kX, kInf, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen,
                 kLBracket, kRBracket, kComma, kColon, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

[[noreturn]] void syntax(const std::string& msg, int line, int column) {
  SyntaxError e(msg);
  e.set_location(line, column);
  throw e;
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '.') {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      std::string text(line.substr(i, j - i));
      if (text == ".") syntax("malformed number", line_no, col);
      out.push_back({Tok::kNumber, text, col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && std::isalnum(static_cast<unsigned char>(line[j]))) ++j;
      std::string word(line.substr(i, j - i));
      if (word == "x") {
        out.push_back({Tok::kX, word, col});
      } else if (word == "inf") {
        out.push_back({Tok::kInf, word, col});
      } else {
        syntax("unknown identifier '" + word + "'", line_no, col);
      }
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case ',': kind = Tok::kComma; break;
      case ':': kind = Tok::kColon; break;
      default: syntax(std::string("unexpected character '") + c + "'", line_no, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::kEnd, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : toks_(std::move(tokens)), line_(line) {}

  Segment parse_segment() {
    Interval domain;
    const Token& open = next();
    if (open.kind != Tok::kLBracket && open.kind != Tok::kLParen) {
      fail("expected '[' or '(' to start an interval", open);
    }
    domain.lo_closed = open.kind == Tok::kLBracket;
    domain.lo = parse_endpoint();
    expect(Tok::kComma, "expected ','");
    if (peek().kind == Tok::kInf) {
      next();
      domain.hi.reset();
    } else {
      domain.hi = parse_endpoint();
    }
    const Token& close = next();
    if (close.kind != Tok::kRBracket && close.kind != Tok::kRParen) {
      fail("expected ']' or ')' to close the interval", close);
    }
    domain.hi_closed = close.kind == Tok::kRBracket;
    if (!domain.hi && domain.hi_closed) fail("an infinite end must be open", close);
    expect(Tok::kColon, "expected ':' after the interval");
    if (peek().kind == Tok::kEnd) fail("missing formula", peek());
    RationalFunction formula = parse_expr();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'", peek());
    return {domain, formula};
  }

  RationalFunction parse_formula_only() {
    RationalFunction f = parse_expr();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'", peek());
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  void expect(Tok kind, const std::string& msg) {
    if (peek().kind != kind) fail(msg, peek());
    next();
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) { syntax(msg, line_, at.column); }

  Rational number_literal(const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
      fail("malformed number '" + t.text + "'", t);
    }
  }

  // RATIONAL := NUMBER ('/' NUMBER)?
  Rational parse_endpoint() {
    const Token& t = next();
    if (t.kind == Tok::kMinus) fail("interval ends must be nonnegative", t);
    if (t.kind != Tok::kNumber) fail("expected a rational interval end", t);
    Rational value = number_literal(t);
    if (peek().kind == Tok::kSlash) {
      next();
      const Token& d = next();
      if (d.kind != Tok::kNumber) fail("expected a denominator", d);
      Rational den = number_literal(d);
      if (den == 0) fail("zero denominator", d);
      value /= den;
    }
    return value;
  }

  void check_degree(const RationalFunction& f, const Token& at) {
    if (f.num.degree() > kIntermediateDegreeCap || f.den.degree() > kIntermediateDegreeCap) {
      DegreeError e("formula degree exceeds " + std::to_string(kMaxSegmentDegree));
      e.set_location(line_, at.column);
      throw e;
    }
  }

  RationalFunction parse_expr() {
    RationalFunction acc = parse_term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      bool plus = next().kind == Tok::kPlus;
      RationalFunction rhs = parse_term();
      Polynomial n = plus ? acc.num * rhs.den + rhs.num * acc.den
                          : acc.num * rhs.den - rhs.num * acc.den;
      acc = RationalFunction{n, acc.den * rhs.den}.reduced();
    }
    return acc;
  }

  bool starts_factor(Tok k) const {
    return k == Tok::kNumber || k == Tok::kX || k == Tok::kLParen;
  }

  RationalFunction parse_term() {
    RationalFunction acc = parse_unary();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::kStar || starts_factor(t.kind)) {
        if (t.kind == Tok::kStar) next();
        RationalFunction rhs = parse_unary();
        acc = RationalFunction{acc.num * rhs.num, acc.den * rhs.den}.reduced();
        check_degree(acc, t);
      } else if (t.kind == Tok::kSlash) {
        next();
        RationalFunction rhs = parse_unary();
        if (rhs.num.is_zero()) {
          PoleError e("division by zero");
          e.set_location(line_, t.column);
          throw e;
        }
        acc = RationalFunction{acc.num * rhs.den, acc.den * rhs.num}.reduced();
        check_degree(acc, t);
      } else {
        return acc;
      }
    }
  }

  RationalFunction parse_unary() {
    if (peek().kind == Tok::kMinus) {
      next();
      RationalFunction r = parse_unary();
      return {-r.num, r.den};
    }
    if (peek().kind == Tok::kPlus) {
      next();
      return parse_unary();
    }
    return parse_power();
  }

  RationalFunction parse_power() {
    RationalFunction base = parse_primary();
    if (peek().kind != Tok::kCaret) return base;
    const Token& caret = next();
    const Token& e = next();
    if (e.kind != Tok::kNumber || e.text.find('.') != std::string::npos) {
      fail("exponent must be a nonnegative integer", e);
    }
    Integer exponent(e.text, 10);
    if (exponent > kIntermediateDegreeCap) {
      DegreeError err("exponent " + e.text + " exceeds the degree cap");
      err.set_location(line_, e.column);
      throw err;
    }
    unsigned k = static_cast<unsigned>(exponent.get_ui());
    RationalFunction r{base.num.pow(k), base.den.pow(k)};
    check_degree(r, caret);
    return r;
  }

  RationalFunction parse_primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNumber:
        return {Polynomial(number_literal(t)), Polynomial(1)};
      case Tok::kX:
        return {Polynomial::x(), Polynomial(1)};
      case Tok::kLParen: {
        RationalFunction inner = parse_expr();
        expect(Tok::kRParen, "expected ')'");
        return inner;
      }
      case Tok::kEnd:
        fail("unexpected end of formula", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int line_;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

PiecewiseFunction parse_function(std::string_view text) {
  std::vector<Segment> segments;
  std::vector<int> lines;
  bool header = false;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;
    std::string_view line = strip_comment(raw);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (!header) {
      size_t b = line.find_first_not_of(" \t");
      size_t e = line.find_last_not_of(" \t");
      if (line.substr(b, e - b + 1) != "piecewise") {
        syntax("expected 'piecewise' header", line_no, static_cast<int>(b) + 1);
      }
      header = true;
    } else {
      LineParser parser(tokenize(line, line_no), line_no);
      segments.push_back(parser.parse_segment());
      lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!header) syntax("expected 'piecewise' header", line_no == 0 ? 1 : line_no, 1);
  if (segments.empty()) {
    DomainGapError e("no segments");
    e.set_location(line_no, 1);
    throw e;
  }
  try {
    return PiecewiseFunction(std::move(segments));
  } catch (FunctionError& e) {
    int at = e.segment() ? lines[*e.segment()] : line_no;
    e.set_location(at, 1);
    throw;
  }
}

PiecewiseFunction load_function(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_function(os.str());
}

RationalFunction parse_formula(std::string_view text) {
  LineParser parser(tokenize(text, 1), 1);
  return parser.parse_formula_only();
}

}  // namespace umpf
