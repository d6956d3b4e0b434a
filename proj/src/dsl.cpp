#include "dnc/dsl.hpp"

#include <cctype>
#include <sstream>

namespace dnc {

namespace {

struct Token {
  enum class Kind { ident, number, punct, eof };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::eof;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += advance();
      return t;
    }
    // multi-char puncts: -> and ..
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      t.kind = Token::Kind::punct;
      t.text = "->";
      advance();
      advance();
      return t;
    }
    if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
      t.kind = Token::Kind::punct;
      t.text = "..";
      advance();
      advance();
      return t;
    }
    if (c == '"') {
      advance();
      t.kind = Token::Kind::ident;  // quoted string as one token
      while (pos_ < text_.size() && text_[pos_] != '"') t.text += advance();
      if (pos_ >= text_.size()) err(t.line, t.col, "unterminated string");
      advance();
      return t;
    }
    t.kind = Token::Kind::punct;
    t.text = std::string(1, advance());
    return t;
  }

  [[noreturn]] static void err(int line, int col, const std::string& msg) {
    fail(Errc::ParseError,
         "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { bump(); }

  Token cur_;
  Lexer lex_;

  void bump() { cur_ = lex_.next(); }
  bool at_punct(const std::string& p) const {
    return cur_.kind == Token::Kind::punct && cur_.text == p;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p)) Lexer::err(cur_.line, cur_.col, "expected '" + p + "'");
    bump();
  }
  std::string expect_ident() {
    if (cur_.kind != Token::Kind::ident)
      Lexer::err(cur_.line, cur_.col, "expected identifier");
    std::string s = cur_.text;
    bump();
    return s;
  }
  long expect_int() {
    bool neg = false;
    if (at_punct("-")) {
      neg = true;
      bump();
    }
    if (cur_.kind != Token::Kind::number) Lexer::err(cur_.line, cur_.col, "expected integer");
    long v = std::stol(cur_.text);
    bump();
    return neg ? -v : v;
  }
};

class PolyParser {
 public:
  PolyParser(const ContextPtr& ctx, Parser& p) : ctx_(ctx), p_(p) {}

  Polynomial expr() {
    Polynomial r = term();
    while (p_.at_punct("+") || p_.at_punct("-")) {
      bool minus = p_.at_punct("-");
      p_.bump();
      Polynomial t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }

 private:
  Polynomial term() {
    Polynomial r = factor();
    while (p_.at_punct("*")) {
      p_.bump();
      r = r * factor();
    }
    return r;
  }
  Polynomial factor() {
    Polynomial b = base();
    if (p_.at_punct("^")) {
      p_.bump();
      long e = p_.expect_int();
      if (e < 0) Lexer::err(p_.cur_.line, p_.cur_.col, "negative exponent");
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }
  Polynomial base() {
    if (p_.at_punct("-")) {
      p_.bump();
      return -factor();
    }
    if (p_.at_punct("(")) {
      p_.bump();
      Polynomial e = expr();
      p_.expect_punct(")");
      return e;
    }
    if (p_.cur_.kind == Token::Kind::number) {
      Integer num(p_.cur_.text);
      p_.bump();
      Rational c(num);
      if (p_.at_punct("/")) {
        p_.bump();
        if (p_.cur_.kind != Token::Kind::number)
          Lexer::err(p_.cur_.line, p_.cur_.col, "expected denominator");
        Integer den(p_.cur_.text);
        p_.bump();
        if (den == 0) Lexer::err(p_.cur_.line, p_.cur_.col, "zero denominator");
        c = Rational(num, den);
      }
      return Polynomial::constant(ctx_, c);
    }
    if (p_.cur_.kind == Token::Kind::ident) {
      int idx = ctx_->index_of(p_.cur_.text);
      if (idx < 0)
        fail(Errc::UnknownVariable, "line " + std::to_string(p_.cur_.line) + ", col " +
                                        std::to_string(p_.cur_.col) + ": unknown variable '" +
                                        p_.cur_.text + "'");
      p_.bump();
      return Polynomial::variable(ctx_, idx);
    }
    Lexer::err(p_.cur_.line, p_.cur_.col, "expected polynomial");
  }

  const ContextPtr& ctx_;
  Parser& p_;
};

std::vector<std::string> parse_ring_decl(Parser& p) {
  std::string field = p.expect_ident();
  if (field != "Q") Lexer::err(p.cur_.line, p.cur_.col, "only Q coefficients are supported");
  p.expect_punct("[");
  std::vector<std::string> vars;
  if (!p.at_punct("]")) {
    vars.push_back(p.expect_ident());
    while (p.at_punct(",")) {
      p.bump();
      vars.push_back(p.expect_ident());
    }
  }
  p.expect_punct("]");
  p.expect_punct(";");
  return vars;
}

// polynomial strings are echoed in canonical printed form
std::vector<std::string> parse_poly_list(Parser& p, const ContextPtr& ctx,
                                         std::vector<Polynomial>* out) {
  p.expect_punct("(");
  std::vector<std::string> strs;
  if (!p.at_punct(")")) {
    while (true) {
      PolyParser pp(ctx, p);
      Polynomial q = pp.expr();
      strs.push_back(q.str());
      if (out) out->push_back(q);
      if (p.at_punct(",")) {
        p.bump();
        continue;
      }
      break;
    }
  }
  p.expect_punct(")");
  return strs;
}

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
  Parser p(text);
  PolyParser pp(ctx, p);
  Polynomial q = pp.expr();
  if (p.cur_.kind != Token::Kind::eof)
    Lexer::err(p.cur_.line, p.cur_.col, "trailing input after polynomial");
  return q;
}

ProblemSpec parse_problem(const std::string& text) {
  Parser p(text);
  ProblemSpec spec;
  bool saw_ring = false, saw_center = false;

  while (p.cur_.kind != Token::Kind::eof) {
    std::string kw = p.expect_ident();
    if (kw == "ring") {
      if (saw_ring) Lexer::err(p.cur_.line, p.cur_.col, "duplicate ring statement");
      spec.ring_vars = parse_ring_decl(p);
      spec.ambient = make_context(spec.ring_vars);
      saw_ring = true;
    } else if (kw == "center") {
      if (!saw_ring) Lexer::err(p.cur_.line, p.cur_.col, "center before ring");
      if (saw_center) Lexer::err(p.cur_.line, p.cur_.col, "duplicate center statement");
      spec.center_strs = parse_poly_list(p, spec.ambient, &spec.center);
      p.expect_punct(";");
      saw_center = true;
    } else if (kw == "cutoff") {
      spec.cutoff = static_cast<int>(p.expect_int());
      if (spec.cutoff < 0) Lexer::err(p.cur_.line, p.cur_.col, "cutoff must be >= 0");
      p.expect_punct(";");
    } else if (kw == "hdeg") {
      spec.hdeg_lo = static_cast<int>(p.expect_int());
      p.expect_punct("..");
      spec.hdeg_hi = static_cast<int>(p.expect_int());
      p.expect_punct(";");
    } else if (kw == "weight") {
      spec.weight_lo = static_cast<int>(p.expect_int());
      p.expect_punct("..");
      spec.weight_hi = static_cast<int>(p.expect_int());
      p.expect_punct(";");
    } else if (kw == "out") {
      spec.out_path = p.expect_ident();
      p.expect_punct(";");
    } else if (kw == "ring2") {
      spec.ring2_vars = parse_ring_decl(p);
      spec.ambient2 = make_context(spec.ring2_vars);
    } else if (kw == "center2") {
      if (!spec.ambient2) Lexer::err(p.cur_.line, p.cur_.col, "center2 before ring2");
      spec.center2_strs = parse_poly_list(p, spec.ambient2, &spec.center2);
      p.expect_punct(";");
    } else if (kw == "map") {
      if (!saw_ring || !spec.ambient2)
        Lexer::err(p.cur_.line, p.cur_.col, "map requires ring and ring2");
      p.expect_punct("(");
      spec.map_images.assign(spec.ring_vars.size(), Polynomial::zero(spec.ambient2));
      std::vector<char> seen(spec.ring_vars.size(), 0);
      if (!p.at_punct(")")) {
        while (true) {
          std::string v = p.expect_ident();
          int idx = spec.ambient->index_of(v);
          if (idx < 0) fail(Errc::UnknownVariable, "map source variable '" + v + "'");
          if (seen[idx]) fail(Errc::DuplicateVariable, "map lists '" + v + "' twice");
          seen[idx] = 1;
          p.expect_punct("->");
          PolyParser pp(spec.ambient2, p);
          Polynomial img = pp.expr();
          spec.map_entries.push_back({v, img.str()});
          spec.map_images[idx] = img;
          if (p.at_punct(",")) {
            p.bump();
            continue;
          }
          break;
        }
      }
      p.expect_punct(")");
      p.expect_punct(";");
      for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
          fail(Errc::ParseError, "map misses image of variable '" + spec.ring_vars[i] + "'");
    } else if (kw == "lift") {
      if (!spec.ambient2) Lexer::err(p.cur_.line, p.cur_.col, "lift requires ring2");
      p.expect_punct("(");
      while (true) {
        std::vector<Polynomial> row;
        std::vector<std::string> row_strs = parse_poly_list(p, spec.ambient2, &row);
        spec.lift_rows.push_back(row_strs);
        spec.lift.push_back(row);
        if (p.at_punct(",")) {
          p.bump();
          continue;
        }
        break;
      }
      p.expect_punct(")");
      p.expect_punct(";");
    } else {
      Lexer::err(p.cur_.line, p.cur_.col, "unknown statement '" + kw + "'");
    }
  }
  if (!saw_ring) fail(Errc::ParseError, "missing ring statement");
  if (!saw_center) fail(Errc::ParseError, "missing center statement");
  return spec;
}

std::string print_problem(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "ring Q[";
  for (size_t i = 0; i < spec.ring_vars.size(); ++i)
    os << (i ? "," : "") << spec.ring_vars[i];
  os << "];\n";
  os << "center (";
  for (size_t i = 0; i < spec.center_strs.size(); ++i)
    os << (i ? ", " : "") << spec.center_strs[i];
  os << ");\n";
  os << "cutoff " << spec.cutoff << ";\n";
  os << "hdeg " << spec.hdeg_lo << ".." << spec.hdeg_hi << ";\n";
  os << "weight " << spec.weight_lo << ".." << spec.weight_hi << ";\n";
  if (!spec.out_path.empty()) os << "out \"" << spec.out_path << "\";\n";
  if (spec.ambient2) {
    os << "ring2 Q[";
    for (size_t i = 0; i < spec.ring2_vars.size(); ++i)
      os << (i ? "," : "") << spec.ring2_vars[i];
    os << "];\n";
    os << "center2 (";
    for (size_t i = 0; i < spec.center2_strs.size(); ++i)
      os << (i ? ", " : "") << spec.center2_strs[i];
    os << ");\n";
    os << "map (";
    for (size_t i = 0; i < spec.map_entries.size(); ++i)
      os << (i ? ", " : "") << spec.map_entries[i].first << " -> " << spec.map_entries[i].second;
    os << ");\n";
    if (!spec.lift_rows.empty()) {
      os << "lift (";
      for (size_t i = 0; i < spec.lift_rows.size(); ++i) {
        os << (i ? ", (" : "(");
        for (size_t j = 0; j < spec.lift_rows[i].size(); ++j)
          os << (j ? ", " : "") << spec.lift_rows[i][j];
        os << ")";
      }
      os << ");\n";
    }
  }
  return os.str();
}

}  // namespace dnc
