#include <cctype>
#include <set>
#include <sstream>

#include "tri/error.hpp"
#include "tri/gcl.hpp"

namespace tri::gcl {

std::string_view to_string(Mode mode) { return mode == Mode::Pow ? "pow" : "dist"; }

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Demonic: return "demonic";
    case Flavor::Angelic: return "angelic";
    case Flavor::Expectation: return "expectation";
  }
  return "?";
}

Mode mode_from_string(std::string_view name) {
  if (name == "pow") return Mode::Pow;
  if (name == "dist") return Mode::Dist;
  fail(ErrorKind::InvalidArgument, "unknown mode '" + std::string(name) + "'");
}

Flavor flavor_from_string(std::string_view name) {
  for (auto f : {Flavor::Demonic, Flavor::Angelic, Flavor::Expectation})
    if (to_string(f) == name) return f;
  fail(ErrorKind::InvalidArgument, "unknown flavor '" + std::string(name) + "'");
}

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, End } kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

std::string where(const Token& t) { return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col); }

std::vector<Token> lex(const std::string& src) {
  static const std::vector<std::string> symbols = {"..", ":=", "==", "!=", "<=", ">=", "&&", "||", "[]", ";", ":",
                                                   ",",  "<",  ">",  "+",  "-",  "*",  "/",  "%",  "(",  ")", "{",
                                                   "}",  "[",  "]",  "!"};
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else {
      bool matched = false;
      for (const auto& s : symbols)
        if (src.compare(i, s.size(), s) == 0) {
          t.kind = Token::Kind::Sym;
          t.text = s;
          advance(s.size());
          matched = true;
          break;
        }
      if (!matched) {
        fail(ErrorKind::SyntaxError, where(t) + ": unexpected character '" + std::string(1, c) + "'");
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

const std::set<std::string> kKeywords = {"vars", "in",     "body", "post", "skip", "abort", "if",
                                         "else", "choose", "prob", "true", "false"};

Expr make(Expr::Op op, std::vector<Expr> args) {
  Expr e;
  e.op = op;
  e.args = std::move(args);
  return e;
}

Expr constant(Rat v) {
  Expr e;
  e.op = Expr::Op::Const;
  e.value = std::move(v);
  return e;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<VarDecl> vars) : toks_(std::move(tokens)), vars_(std::move(vars)) {}

  Program program() {
    Program p;
    expect_word("vars");
    do {
      p.vars.push_back(decl(p.vars));
    } while (accept(","));
    expect(";");
    vars_ = p.vars;
    expect_word("body");
    expect(":");
    p.body = sequence();
    if (accept_word("post")) {
      expect(":");
      p.post = expr();
      accept(";");
    }
    if (peek().kind != Token::Kind::End) error("expected end of program");
    return p;
  }

  Expr lone_expr() {
    Expr e = expr();
    accept(";");
    if (peek().kind != Token::Kind::End) error("unexpected text after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(const std::string& msg) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    fail(ErrorKind::SyntaxError, where(t) + ": " + msg + ", found " + found);
  }

  bool is_sym(const std::string& s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool is_word(const std::string& s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }
  bool accept(const std::string& s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  bool accept_word(const std::string& s) {
    if (!is_word(s)) return false;
    next();
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) error("expected '" + s + "'");
  }
  void expect_word(const std::string& s) {
    if (!accept_word(s)) error("expected '" + s + "'");
  }

  std::int64_t integer(bool allow_sign) {
    bool negative = allow_sign && accept("-");
    if (peek().kind != Token::Kind::Int) error("expected an integer");
    const Token t = next();
    if (t.text.size() > 15) fail(ErrorKind::RangeError, where(t) + ": integer literal too large");
    const std::int64_t v = std::stoll(t.text);
    return negative ? -v : v;
  }

  VarDecl decl(const std::vector<VarDecl>& seen) {
    if (peek().kind != Token::Kind::Ident || kKeywords.count(peek().text)) error("expected a variable name");
    const Token name = next();
    for (const auto& d : seen)
      if (d.name == name.text)
        fail(ErrorKind::SyntaxError, where(name) + ": variable '" + name.text + "' declared twice");
    expect_word("in");
    const Token at = peek();
    VarDecl d{name.text, integer(true), 0};
    expect("..");
    d.hi = integer(true);
    if (d.hi < d.lo) fail(ErrorKind::RangeError, where(at) + ": empty range for '" + d.name + "'");
    return d;
  }

  std::size_t variable(const Token& t) const {
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (vars_[v].name == t.text) return v;
    fail(ErrorKind::UndeclaredVariable, where(t) + ": variable '" + t.text + "' is not declared");
  }

  bool at_statement_end() const {
    return peek().kind == Token::Kind::End || is_sym("}") || is_word("post");
  }

  Stmt sequence() {
    std::vector<Stmt> parts;
    parts.push_back(statement());
    while (accept(";")) {
      if (at_statement_end()) break;
      parts.push_back(statement());
    }
    if (parts.size() == 1) return std::move(parts.front());
    Stmt s;
    s.kind = Stmt::Kind::Seq;
    s.body = std::move(parts);
    return s;
  }

  Stmt block() {
    expect("{");
    Stmt s = sequence();
    expect("}");
    return s;
  }

  Stmt statement() {
    Stmt s;
    if (accept_word("skip")) return s;
    if (accept_word("abort")) {
      s.kind = Stmt::Kind::Abort;
      return s;
    }
    if (is_sym("{")) return block();
    if (accept_word("if")) {
      s.kind = Stmt::Kind::If;
      expect("(");
      s.expr = expr();
      expect(")");
      s.body.push_back(block());
      s.body.push_back(accept_word("else") ? block() : Stmt{});
      return s;
    }
    if (accept_word("choose")) {
      s.kind = Stmt::Kind::Choose;
      s.body.push_back(block());
      expect("[]");
      s.body.push_back(block());
      return s;
    }
    if (accept_word("prob")) {
      s.kind = Stmt::Kind::Prob;
      const Token at = peek();
      const std::int64_t num = integer(true);
      std::int64_t den = 1;
      if (accept("/")) den = integer(false);
      if (den == 0) fail(ErrorKind::RangeError, where(at) + ": zero denominator");
      s.weight = Rat(num, den);
      if (!in_unit_interval(s.weight)) {
        fail(ErrorKind::RangeError, where(at) + ": probability " + rat_string(s.weight) + " is outside [0,1]");
      }
      s.body.push_back(block());
      s.body.push_back(block());
      return s;
    }
    if (peek().kind == Token::Kind::Ident && !kKeywords.count(peek().text)) {
      const Token name = next();
      s.kind = Stmt::Kind::Assign;
      s.var = variable(name);
      expect(":=");
      s.expr = expr();
      return s;
    }
    error("expected a statement");
  }

  Expr expr() {
    Expr e = conj();
    while (accept("||")) e = make(Expr::Op::Or, {std::move(e), conj()});
    return e;
  }
  Expr conj() {
    Expr e = negation();
    while (accept("&&")) e = make(Expr::Op::And, {std::move(e), negation()});
    return e;
  }
  Expr negation() {
    if (accept("!")) return make(Expr::Op::Not, {negation()});
    return comparison();
  }
  Expr comparison() {
    Expr e = sum();
    static const std::vector<std::pair<std::string, Expr::Op>> rel = {
        {"==", Expr::Op::Eq}, {"!=", Expr::Op::Ne}, {"<=", Expr::Op::Le},
        {">=", Expr::Op::Ge}, {"<", Expr::Op::Lt},  {">", Expr::Op::Gt}};
    for (const auto& [sym, op] : rel)
      if (accept(sym)) return make(op, {std::move(e), sum()});
    return e;
  }
  Expr sum() {
    Expr e = term();
    while (true) {
      if (accept("+")) {
        e = make(Expr::Op::Add, {std::move(e), term()});
      } else if (accept("-")) {
        e = make(Expr::Op::Sub, {std::move(e), term()});
      } else {
        return e;
      }
    }
  }
  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept("*")) {
        e = make(Expr::Op::Mul, {std::move(e), unary()});
      } else if (accept("/")) {
        const Token at = peek();
        Expr rhs = unary();
        // Literal fractions fold to constants so that a/b is stored exactly.
        if (e.op == Expr::Op::Const && rhs.op == Expr::Op::Const) {
          if (rhs.value == 0) fail(ErrorKind::EvalError, where(at) + ": division by zero");
          e = constant(e.value / rhs.value);
        } else {
          e = make(Expr::Op::Div, {std::move(e), std::move(rhs)});
        }
      } else if (accept("%")) {
        e = make(Expr::Op::Mod, {std::move(e), unary()});
      } else {
        return e;
      }
    }
  }
  Expr unary() {
    if (accept("-")) {
      Expr e = unary();
      if (e.op == Expr::Op::Const) return constant(-e.value);
      return make(Expr::Op::Neg, {std::move(e)});
    }
    return atom();
  }
  Expr atom() {
    if (peek().kind == Token::Kind::Int) return constant(Rat(integer(false)));
    if (accept_word("true")) return constant(1);
    if (accept_word("false")) return constant(0);
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (accept("[")) {
      Expr e = make(Expr::Op::Iverson, {expr()});
      expect("]");
      return e;
    }
    if (peek().kind == Token::Kind::Ident && !kKeywords.count(peek().text)) {
      Expr e;
      e.op = Expr::Op::Var;
      e.var = variable(next());
      return e;
    }
    error("expected an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<VarDecl> vars_;
};

// Fully parenthesized, so precedence never matters on the way back.
void print_expr(std::ostream& os, const Program& p, const Expr& e) {
  using Op = Expr::Op;
  auto binary = [&](const char* sym) {
    os << "(";
    print_expr(os, p, e.args[0]);
    os << " " << sym << " ";
    print_expr(os, p, e.args[1]);
    os << ")";
  };
  switch (e.op) {
    case Op::Const:
      if (e.value < 0) {
        os << "(-" << rat_string(-e.value) << ")";
      } else if (!is_integer(e.value)) {
        os << "(" << rat_string(e.value) << ")";
      } else {
        os << rat_string(e.value);
      }
      return;
    case Op::Var: os << p.vars.at(e.var).name; return;
    case Op::Neg:
      os << "(-";
      print_expr(os, p, e.args[0]);
      os << ")";
      return;
    case Op::Not:
      os << "(!";
      print_expr(os, p, e.args[0]);
      os << ")";
      return;
    case Op::Iverson:
      os << "[";
      print_expr(os, p, e.args[0]);
      os << "]";
      return;
    case Op::Add: return binary("+");
    case Op::Sub: return binary("-");
    case Op::Mul: return binary("*");
    case Op::Div: return binary("/");
    case Op::Mod: return binary("%");
    case Op::Eq: return binary("==");
    case Op::Ne: return binary("!=");
    case Op::Lt: return binary("<");
    case Op::Le: return binary("<=");
    case Op::Gt: return binary(">");
    case Op::Ge: return binary(">=");
    case Op::And: return binary("&&");
    case Op::Or: return binary("||");
  }
}

void print_stmt(std::ostream& os, const Program& p, const Stmt& s, int indent);

void print_block(std::ostream& os, const Program& p, const Stmt& s, int indent) {
  os << "{\n";
  print_stmt(os, p, s, indent + 2);
  os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "}";
}

void print_stmt(std::ostream& os, const Program& p, const Stmt& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  switch (s.kind) {
    case Stmt::Kind::Skip: os << pad << "skip"; return;
    case Stmt::Kind::Abort: os << pad << "abort"; return;
    case Stmt::Kind::Assign:
      os << pad << p.vars.at(s.var).name << " := ";
      print_expr(os, p, s.expr);
      return;
    case Stmt::Kind::Seq:
      for (std::size_t i = 0; i < s.body.size(); ++i) {
        if (i) os << ";\n";
        // Nested sequences keep their braces so the tree shape survives.
        if (s.body[i].kind == Stmt::Kind::Seq) {
          os << pad;
          print_block(os, p, s.body[i], indent);
        } else {
          print_stmt(os, p, s.body[i], indent);
        }
      }
      return;
    case Stmt::Kind::If:
      os << pad << "if (";
      print_expr(os, p, s.expr);
      os << ") ";
      print_block(os, p, s.body[0], indent);
      os << " else ";
      print_block(os, p, s.body[1], indent);
      return;
    case Stmt::Kind::Choose:
      os << pad << "choose ";
      print_block(os, p, s.body[0], indent);
      os << " [] ";
      print_block(os, p, s.body[1], indent);
      return;
    case Stmt::Kind::Prob:
      os << pad << "prob " << rat_string(s.weight) << " ";
      print_block(os, p, s.body[0], indent);
      os << " ";
      print_block(os, p, s.body[1], indent);
      return;
  }
}

}  // namespace

Program parse(const std::string& source) { return Parser(lex(source), {}).program(); }

Expr parse_expr(const Program& program, const std::string& source) {
  return Parser(lex(source), program.vars).lone_expr();
}

std::string to_source(const Program& program, const Expr& e) {
  std::ostringstream os;
  print_expr(os, program, e);
  return os.str();
}

std::string to_source(const Program& program) {
  std::ostringstream os;
  os << "vars ";
  for (std::size_t v = 0; v < program.vars.size(); ++v) {
    const auto& d = program.vars[v];
    os << (v ? ", " : "") << d.name << " in " << d.lo << ".." << d.hi;
  }
  os << ";\nbody:\n";
  print_stmt(os, program, program.body, 2);
  os << ";\n";
  if (program.post) {
    os << "post: ";
    print_expr(os, program, *program.post);
    os << ";\n";
  }
  return os.str();
}

}  // namespace tri::gcl
