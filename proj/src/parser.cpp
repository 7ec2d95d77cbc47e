#include "ringkit/parser.hpp"

#include <gmpxx.h>

#include <cctype>
#include <set>

namespace ringkit {

namespace {

const std::set<std::string> kKeywords = {
    "ring",  "ideal",     "module",   "check", "split", "decompose",
    "classify", "in",     "over",     "at",    "coker", "local",
    "QQ",    "GF"};

struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text = "<end of input>";
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        take();
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        take();
      tok_.kind = Token::Kind::Int;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    static const std::string kSyms = ";,=()[]+-*^/";
    if (kSyms.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Sym;
      tok_.text = std::string(1, c);
      take();
      return;
    }
    throw parse_error(line_, col_, std::string("unexpected character '") + c +
                                       "'");
  }
  void take() {
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw parse_error(t.line, t.col, msg + " (found '" + t.text + "')");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Program run() {
    while (lex_.peek().kind != Token::Kind::End) statement();
    return std::move(prog_);
  }

  Polynomial poly_in(const RingPtr& ring) {
    Polynomial p = expr(ring);
    if (lex_.peek().kind != Token::Kind::End)
      fail(lex_.peek(), "trailing input after polynomial");
    return p;
  }

 private:
  bool accept_sym(const std::string& s) {
    if (lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s) {
      lex_.next();
      return true;
    }
    return false;
  }
  Token expect_sym(const std::string& s) {
    if (lex_.peek().kind != Token::Kind::Sym || lex_.peek().text != s)
      fail(lex_.peek(), "expected '" + s + "'");
    return lex_.next();
  }
  bool accept_kw(const std::string& kw) {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == kw) {
      lex_.next();
      return true;
    }
    return false;
  }
  Token expect_kw(const std::string& kw) {
    if (lex_.peek().kind != Token::Kind::Ident || lex_.peek().text != kw)
      fail(lex_.peek(), "expected '" + kw + "'");
    return lex_.next();
  }
  Token expect_name() {
    Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident) fail(t, "expected a name");
    if (kKeywords.count(t.text)) fail(t, "'" + t.text + "' is a keyword");
    return lex_.next();
  }
  Token expect_int() {
    if (lex_.peek().kind != Token::Kind::Int) fail(lex_.peek(), "expected a number");
    return lex_.next();
  }
  unsigned long small_int(const Token& t, unsigned long max) {
    mpz_class v(t.text);
    if (v < 0 || v > max)
      throw parse_error(t.line, t.col, "number out of range: " + t.text);
    return v.get_ui();
  }

  void statement() {
    Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident) fail(t, "expected a statement");
    if (accept_kw("ring")) return ring_stmt();
    if (accept_kw("ideal")) return ideal_stmt();
    if (accept_kw("module")) return module_stmt();
    if (accept_kw("check")) return check_stmt(t);
    if (accept_kw("split")) return split_stmt(t);
    if (accept_kw("decompose")) return op_stmt(t, Program::Statement::Kind::Decompose);
    if (accept_kw("classify")) return op_stmt(t, Program::Statement::Kind::Classify);
    fail(t, "unknown statement");
  }

  void ring_stmt() {
    Token name = expect_name();
    if (prog_.find_ring(name.text))
      fail(name, "ring '" + name.text + "' already declared");
    expect_sym("=");
    FieldDesc field;
    if (accept_kw("QQ")) {
      field.p = 0;
    } else if (accept_kw("GF")) {
      expect_sym("(");
      Token p = expect_int();
      field.p = small_int(p, 1000000);
      if (!modulus_is_prime(field.p))
        throw parse_error(p.line, p.col, "modulus " + p.text + " is not prime");
      expect_sym(")");
    } else {
      fail(lex_.peek(), "expected 'QQ' or 'GF'");
    }
    expect_sym("[");
    std::vector<std::string> vars;
    if (!accept_sym("]")) {
      do {
        Token v = expect_name();
        for (const auto& seen : vars)
          if (seen == v.text)
            throw parse_error(v.line, v.col, "duplicate variable " + v.text);
        vars.push_back(v.text);
      } while (accept_sym(","));
      expect_sym("]");
    }
    // Scratch ambient ring to parse the generators in; make() re-tags them.
    RingPtr scratch = RingPresentation::make(vars, field, {});
    std::vector<Polynomial> defining;
    if (accept_sym("/")) {
      expect_sym("(");
      if (!accept_sym(")")) {
        do defining.push_back(expr(scratch));
        while (accept_sym(","));
        expect_sym(")");
      }
    }
    bool local = accept_kw("local");
    Token semi = expect_sym(";");
    try {
      prog_.rings.push_back(
          {name.text, RingPresentation::make(vars, field, defining, local)});
    } catch (const input_error& e) {
      throw parse_error(semi.line, semi.col, e.what());
    }
  }

  RingPtr named_ring(const Token& t) {
    const RingPtr* r = prog_.find_ring(t.text);
    if (!r) fail(t, "unknown ring '" + t.text + "'");
    return *r;
  }

  void ideal_stmt() {
    Token name = expect_name();
    if (prog_.find_ideal(name.text))
      fail(name, "ideal '" + name.text + "' already declared");
    expect_kw("in");
    Token rname = expect_name();
    RingPtr ring = named_ring(rname);
    expect_sym("=");
    expect_sym("(");
    std::vector<Polynomial> gens;
    if (!accept_sym(")")) {
      do gens.push_back(expr(ring));
      while (accept_sym(","));
      expect_sym(")");
    }
    expect_sym(";");
    prog_.ideals.push_back(
        {name.text, rname.text, IdealHandle(ring, std::move(gens))});
  }

  void module_stmt() {
    Token name = expect_name();
    if (prog_.find_module(name.text))
      fail(name, "module '" + name.text + "' already declared");
    expect_kw("over");
    Token rname = expect_name();
    RingPtr ring = named_ring(rname);
    expect_sym("=");
    expect_kw("coker");
    Token open = expect_sym("[");
    std::vector<std::vector<Polynomial>> rows;
    if (!accept_sym("]")) {
      do {
        expect_sym("[");
        std::vector<Polynomial> row;
        do row.push_back(expr(ring));
        while (accept_sym(","));
        expect_sym("]");
        if (!rows.empty() && rows.front().size() != row.size())
          fail(lex_.peek(), "rows of different lengths");
        rows.push_back(std::move(row));
      } while (accept_sym(","));
      expect_sym("]");
    }
    expect_sym(";");
    if (rows.empty())
      throw parse_error(open.line, open.col, "module needs at least one row");
    // Rows are generators; entry j of row i is the i-th coordinate of
    // relation column j.
    std::vector<Vec> cols(rows.front().size(), Vec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        cols[j][i] = rows[i][j];
    prog_.modules.push_back(
        {name.text, rname.text, FPModule(ring, rows.size(), std::move(cols))});
  }

  void check_stmt(const Token& at) {
    Token prop = lex_.next();
    if (prop.kind != Token::Kind::Ident) fail(prop, "expected a property");
    bool known = false;
    for (const auto& p : check_properties()) known = known || p == prop.text;
    if (!known) fail(prop, "unknown property '" + prop.text + "'");
    Token target = expect_name();
    Program::Statement st;
    st.kind = Program::Statement::Kind::Check;
    st.property = prop.text;
    st.target = target.text;
    st.line = at.line;
    if (accept_kw("at")) {
      Token id = expect_name();
      if (!prog_.find_ideal(id.text)) fail(id, "unknown ideal '" + id.text + "'");
      st.at = id.text;
    }
    expect_sym(";");
    validate_check(st, prop, target);
    prog_.statements.push_back(std::move(st));
  }

  void validate_check(const Program::Statement& st, const Token& prop,
                      const Token& target) {
    bool ring_prop = st.property == "reduced" || st.property == "vnr" ||
                     st.property == "regular" || st.property == "dedekind" ||
                     st.property == "tq_dim";
    if (ring_prop && !prog_.find_ring(st.target))
      fail(target, "unknown ring '" + st.target + "'");
    if (st.property == "prime" && !prog_.find_ideal(st.target))
      fail(target, "unknown ideal '" + st.target + "'");
    bool module_prop = st.property == "torsion_free" || st.property == "flat";
    if (module_prop && !prog_.find_module(st.target))
      fail(target, "unknown module '" + st.target + "'");
    if (st.at && st.property != "torsion_free")
      fail(prop, "'at' applies to torsion_free only");
  }

  void split_stmt(const Token& at) {
    Token rname = expect_name();
    if (!prog_.find_ring(rname.text)) fail(rname, "unknown ring '" + rname.text + "'");
    expect_kw("at");
    Token id = expect_name();
    if (!prog_.find_ideal(id.text)) fail(id, "unknown ideal '" + id.text + "'");
    expect_sym(";");
    Program::Statement st;
    st.kind = Program::Statement::Kind::Split;
    st.target = rname.text;
    st.at = id.text;
    st.line = at.line;
    prog_.statements.push_back(std::move(st));
  }

  void op_stmt(const Token& at, Program::Statement::Kind kind) {
    Token rname = expect_name();
    if (!prog_.find_ring(rname.text)) fail(rname, "unknown ring '" + rname.text + "'");
    expect_sym(";");
    Program::Statement st;
    st.kind = kind;
    st.target = rname.text;
    st.line = at.line;
    prog_.statements.push_back(std::move(st));
  }

  // expr := ['-'] term (('+'|'-') term)*
  Polynomial expr(const RingPtr& ring) {
    const MonomialOrder& ord = ring->order();
    Polynomial p;
    if (accept_sym("-"))
      p = neg(term(ring));
    else
      p = term(ring);
    for (;;) {
      if (accept_sym("+"))
        p = add(p, term(ring), ord);
      else if (accept_sym("-"))
        p = sub(p, term(ring), ord);
      else
        return p;
    }
  }

  Polynomial term(const RingPtr& ring) {
    Polynomial p = factor(ring);
    while (accept_sym("*")) p = mul(p, factor(ring), ring->order());
    return p;
  }

  Polynomial factor(const RingPtr& ring) {
    Polynomial p = base(ring);
    if (accept_sym("^")) {
      Token e = expect_int();
      p = poly_pow(p, static_cast<unsigned>(small_int(e, 100000)),
                   ring->order());
    }
    return p;
  }

  Polynomial base(const RingPtr& ring) {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      lex_.next();
      Coeff c = Coeff::of(ring->field(), mpq_class(mpz_class(t.text)));
      if (accept_sym("/")) {
        Token d = expect_int();
        Coeff den = Coeff::of(ring->field(), mpq_class(mpz_class(d.text)));
        if (den.is_zero())
          throw parse_error(d.line, d.col, "zero denominator");
        c = c / den;
      }
      return Polynomial::constant(ring->id(), ring->arity(), c);
    }
    if (t.kind == Token::Kind::Ident) {
      lex_.next();
      auto idx = ring->var_index(t.text);
      if (!idx) fail(t, "unknown variable '" + t.text + "'");
      return ring->var(*idx);
    }
    if (accept_sym("(")) {
      Polynomial p = expr(ring);
      expect_sym(")");
      return p;
    }
    fail(t, "expected a polynomial");
  }

  Lexer lex_;
  Program prog_;
};

}  // namespace

const RingPtr* Program::find_ring(const std::string& name) const {
  for (const auto& r : rings)
    if (r.name == name) return &r.ring;
  return nullptr;
}

const Program::NamedIdeal* Program::find_ideal(const std::string& name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

const Program::NamedModule* Program::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

const std::vector<std::string>& check_properties() {
  static const std::vector<std::string> props = {
      "reduced", "vnr", "regular", "dedekind",
      "tq_dim",  "prime", "torsion_free", "flat"};
  return props;
}

Program parse_declarations(const std::string& text) { return Parser(text).run(); }

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text).poly_in(ring);
}

}  // namespace ringkit
