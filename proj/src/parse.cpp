#include "qconf/parse.hpp"

#include "qconf/catalog.hpp"

#include <cctype>
#include <sstream>

namespace qconf {

namespace {

enum class Tok { Int, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;  // 1-based
};

std::vector<Token> lex(const std::string& s, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = col0 + i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), line, col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
      i = j;
    } else if (std::string("+-*/()[],=^:").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), line, col});
      ++i;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col0 + s.size()});
  return out;
}

bool is_unit_name(const std::string& s) { return s == "i" || s == "sqrt2"; }

/// One term: coefficient times at most two labels (one label, or a wedge).
struct Term {
  Scalar coeff{1};
  std::vector<Token> labels;
  bool wedge = false;
};

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  const Token& peek() const { return t_[pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::End; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  Token take() { return t_[pos_++]; }
  void expect(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'" + found());
    ++pos_;
  }
  std::string found() const {
    return at_end() ? " at end of input" : ", found '" + peek().text + "'";
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  Scalar scalar_sum() {
    Scalar acc;
    bool first = true;
    while (true) {
      Scalar sign(1);
      if (at_sym("+") || at_sym("-")) {
        if (take().text == "-") sign = Scalar(-1);
      } else if (!first) {
        break;
      }
      acc += sign * scalar_product();
      first = false;
      if (!at_sym("+") && !at_sym("-")) break;
    }
    return acc;
  }

  Scalar scalar_product() {
    Scalar acc = scalar_factor();
    while (at_sym("*")) {
      ++pos_;
      acc *= scalar_factor();
    }
    return acc;
  }

  Scalar scalar_factor() {
    const Token& tok = peek();
    if (tok.kind == Tok::Int) {
      ++pos_;
      Rational v = Rational::parse(tok.text);
      if (at_sym("/")) {
        ++pos_;
        if (peek().kind != Tok::Int) fail("expected an integer denominator" + found());
        const Token d = take();
        const Rational den = Rational::parse(d.text);
        if (den.is_zero()) fail_at(d, "zero denominator");
        v /= den;
      }
      return Scalar(v);
    }
    if (tok.kind == Tok::Ident && is_unit_name(tok.text)) {
      ++pos_;
      return tok.text == "i" ? Scalar::i() : Scalar::sqrt2();
    }
    if (at_sym("(")) {
      ++pos_;
      Scalar s = scalar_sum();
      expect(")");
      return s;
    }
    fail("expected a number, 'i', 'sqrt2' or '('" + found());
  }

  /// Factor chain: scalars and labels joined by '*', with an optional
  /// `label ^ label` wedge.
  Term term() {
    Term out;
    while (true) {
      const Token& tok = peek();
      if (tok.kind == Tok::Ident && !is_unit_name(tok.text)) {
        out.labels.push_back(take());
        if (at_sym("^")) {
          const Token op = take();
          if (at_end()) fail_at(op, "dangling '^' with no right-hand label");
          if (peek().kind != Tok::Ident || is_unit_name(peek().text)) fail("expected a label after '^'" + found());
          out.labels.push_back(take());
          out.wedge = true;
        }
      } else {
        out.coeff *= scalar_factor();
      }
      if (!at_sym("*")) break;
      ++pos_;
    }
    return out;
  }

  std::vector<Term> sum() {
    std::vector<Term> out;
    bool first = true;
    while (true) {
      Scalar sign(1);
      if (at_sym("+") || at_sym("-")) {
        const Token op = take();
        if (op.text == "-") sign = Scalar(-1);
        if (at_end()) fail_at(op, "dangling '" + op.text + "' at end of input");
      } else if (!first) {
        break;
      }
      if (at_end()) fail("expected a term at end of input");
      Term t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      if (!at_sym("+") && !at_sym("-")) break;
    }
    return out;
  }

private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

std::size_t resolve(const AlgebraPtr& g, const Token& label) {
  if (!g->has_label(label.text)) Parser::fail_at(label, "unknown label '" + label.text + "' in " + g->name());
  return g->index(label.text);
}

Element element_from(Parser& p, const AlgebraPtr& g) {
  Element out = g->zero();
  if (p.at_end()) p.fail("expected a linear combination");
  if (p.peek().kind == Tok::Int && p.peek().text == "0") {
    p.take();
    return out;
  }
  for (const auto& t : p.sum()) {
    if (t.wedge) Parser::fail_at(t.labels.front(), "wedge in a linear combination");
    if (t.labels.empty()) p.fail("term without a basis label");
    if (t.labels.size() != 1) Parser::fail_at(t.labels[1], "product of two labels");
    out += t.coeff * g->basis(resolve(g, t.labels.front()));
  }
  return out;
}

TwoTensor wedges_from(Parser& p, const AlgebraPtr& g) {
  TwoTensor out(g);
  if (p.at_end()) p.fail("expected a wedge sum");
  if (p.peek().kind == Tok::Int && p.peek().text == "0") {
    p.take();
    return out;
  }
  for (const auto& t : p.sum()) {
    if (t.labels.empty()) p.fail("expected a term 'c * A ^ B'");
    if (!t.wedge || t.labels.size() != 2) Parser::fail_at(t.labels.front(), "expected a term 'c * A ^ B'");
    const std::size_t a = resolve(g, t.labels[0]), b = resolve(g, t.labels[1]);
    out.add(a, b, t.coeff);
    out.add(b, a, -t.coeff);
  }
  return out;
}

struct Statement {
  std::size_t line;
  std::string text;  ///< first line
  std::vector<std::pair<std::size_t, std::string>> more;  ///< continuation lines
};

std::vector<Statement> statements(const std::string& text) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if ((raw[b] == '+' || raw[b] == '-') && !out.empty()) {
      out.back().more.emplace_back(n, raw);
      continue;
    }
    out.push_back({n, raw, {}});
  }
  return out;
}

/// Lexes a possibly multi-line statement starting after column `from` of its first line.
std::vector<Token> lex_statement(const Statement& s, std::size_t from) {
  const std::size_t offset = std::min(from, s.text.size());
  std::vector<Token> out = lex(s.text.substr(offset), s.line, offset + 1);
  for (const auto& [line, text] : s.more) {
    out.pop_back();
    auto toks = lex(text, line, 1);
    out.insert(out.end(), toks.begin(), toks.end());
  }
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Parser p(lex(text, 1, 1));
  if (p.at_end()) p.fail("empty scalar");
  Scalar s = p.scalar_sum();
  p.expect_end();
  return s;
}

Element parse_element(const std::string& text, const AlgebraPtr& g) {
  Parser p(lex(text, 1, 1));
  Element e = element_from(p, g);
  p.expect_end();
  return e;
}

TwoTensor parse_wedge_sum(const std::string& text, const AlgebraPtr& g) {
  Parser p(lex(text, 1, 1));
  TwoTensor r = wedges_from(p, g);
  p.expect_end();
  return r;
}

Definitions parse_definitions(const std::string& text, const AlgebraPtr& fallback) {
  std::string name;
  std::size_t name_line = 0;
  std::optional<std::vector<std::string>> basis;
  struct Entry {
    std::size_t line, col_a, col_b;
    std::string a, b;
    Statement rhs;
    std::size_t rhs_from;
  };
  std::vector<Entry> entries;
  std::optional<std::pair<Statement, std::size_t>> r_stmt;

  for (const auto& st : statements(text)) {
    auto toks = lex(st.text, st.line, 1);
    const Token& t0 = toks.front();
    if (t0.kind == Tok::Ident && t0.text == "algebra") {
      if (toks[1].kind != Tok::Ident) throw ParseError(st.line, toks[1].column, "expected an algebra name");
      // Names may contain hyphens, e.g. sl2-phys.
      std::string full = toks[1].text;
      std::size_t k = 2;
      while (toks[k].kind == Tok::Sym && toks[k].text == "-" && toks[k + 1].kind != Tok::End &&
             toks[k].column == toks[k - 1].column + toks[k - 1].text.size() &&
             toks[k + 1].column == toks[k].column + 1) {
        full += "-" + toks[k + 1].text;
        k += 2;
      }
      if (toks[k].kind != Tok::End) throw ParseError(st.line, toks[k].column, "unexpected '" + toks[k].text + "'");
      if (!name.empty()) throw ParseError(st.line, t0.column, "second algebra header");
      name = full;
      name_line = st.line;
    } else if (t0.kind == Tok::Ident && t0.text == "basis") {
      if (!(toks[1].kind == Tok::Sym && toks[1].text == ":")) throw ParseError(st.line, toks[1].column, "expected ':'");
      std::vector<std::string> labels;
      for (std::size_t k = 2; toks[k].kind != Tok::End; ++k) {
        if (toks[k].kind == Tok::Sym && toks[k].text == ",") continue;
        if (toks[k].kind != Tok::Ident || is_unit_name(toks[k].text))
          throw ParseError(st.line, toks[k].column, "expected a basis label, found '" + toks[k].text + "'");
        labels.push_back(toks[k].text);
      }
      if (labels.empty()) throw ParseError(st.line, toks[1].column, "empty basis");
      basis = std::move(labels);
    } else if (t0.kind == Tok::Sym && t0.text == "[") {
      if (toks[1].kind != Tok::Ident || !(toks[2].kind == Tok::Sym && toks[2].text == ",") || toks[3].kind != Tok::Ident ||
          !(toks[4].kind == Tok::Sym && toks[4].text == "]") || !(toks[5].kind == Tok::Sym && toks[5].text == "="))
        throw ParseError(st.line, t0.column, "expected '[A,B] = <combination>'");
      entries.push_back({st.line, toks[1].column, toks[3].column, toks[1].text, toks[3].text, st, toks[5].column});
    } else if (t0.kind == Tok::Ident && t0.text == "r" && toks[1].kind == Tok::Sym && toks[1].text == "=") {
      if (r_stmt) throw ParseError(st.line, t0.column, "second r-matrix definition");
      r_stmt = std::make_pair(st, toks[1].column);
    } else {
      throw ParseError(st.line, t0.column, "unrecognized statement starting with '" + t0.text + "'");
    }
  }

  Definitions out;
  if (basis) {
    std::vector<std::string> labels = *basis;
    // Labels first, then the table, so brackets can refer to any basis element.
    AlgebraPtr shell;
    try {
      shell = LieAlgebra::create(name.empty() ? "custom" : name, labels, {});
    } catch (const std::invalid_argument& e) {
      throw ParseError(name_line ? name_line : 1, 1, e.what());
    }
    StructureTable table;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& e : entries) {
      if (!shell->has_label(e.a)) throw ParseError(e.line, e.col_a, "unknown label '" + e.a + "'");
      if (!shell->has_label(e.b)) throw ParseError(e.line, e.col_b, "unknown label '" + e.b + "'");
      std::size_t a = shell->index(e.a), b = shell->index(e.b);
      Parser p(lex_statement(e.rhs, e.rhs_from));
      Element v = element_from(p, shell);
      p.expect_end();
      if (a == b) {
        if (!v.is_zero()) throw ParseError(e.line, e.col_a, "[" + e.a + "," + e.a + "] must vanish");
        continue;
      }
      if (a > b) {
        std::swap(a, b);
        v = -v;
      }
      if (auto it = seen.find({a, b}); it != seen.end()) {
        Sparse& prev = table[{a, b}];
        if (!(Element(shell, prev) == v))
          throw ParseError(e.line, e.col_a, "bracket conflicts with line " + std::to_string(it->second));
        continue;
      }
      seen.emplace(std::make_pair(a, b), e.line);
      if (!v.is_zero()) table[{a, b}] = v.terms();
    }
    out.algebra = LieAlgebra::create(name.empty() ? "custom" : name, labels, std::move(table));
  } else {
    if (!entries.empty()) throw ParseError(entries.front().line, 1, "bracket given without a 'basis:' line");
    if (!name.empty()) {
      try {
        out.algebra = algebra_by_name(name);
      } catch (const UnknownLabel&) {
        throw ParseError(name_line, 9, "unknown catalog algebra '" + name + "'");
      }
    } else {
      out.algebra = fallback;
    }
  }
  if (r_stmt) {
    if (!out.algebra) throw ParseError(r_stmt->first.line, 1, "r-matrix without an algebra");
    Parser p(lex_statement(r_stmt->first, r_stmt->second));
    out.r = wedges_from(p, out.algebra);
    p.expect_end();
  }
  return out;
}

std::string serialize(const AlgebraPtr& g) {
  std::ostringstream os;
  os << "algebra " << g->name() << "\nbasis:";
  for (std::size_t i = 0; i < g->dim(); ++i) os << (i ? ", " : " ") << g->label(i);
  os << "\n";
  for (const auto& [ab, v] : g->table())
    if (!v.empty()) os << "[" << g->label(ab.first) << "," << g->label(ab.second) << "] = " << Element(g, v).str() << "\n";
  return os.str();
}

std::string serialize(const TwoTensor& r) { return "r = " + r.str() + "\n"; }

}  // namespace qconf
