#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "quivalg/element.hpp"
#include "quivalg/presets.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

// Plain-text presentation format, one declaration per line:
//
//   # comment
//   vertex 1
//   arrow α: 1 -> 2
//   relation β.ν.δ = β.γ.σ + L*(β.γ.σ.α)^1.β.γ.σ
//   relation (α.β.γ.σ)^2.α = 0
//
// Coefficients are rationals or `L` for the lambda parameter; paths are
// `.`-separated arrow names with `(...)^k` power sugar.

namespace qpa_detail {

struct Token {
  std::string text;
  int line;
  int col;
  bool symbol;  // one of : -> = + - * . ( ) ^
};

inline std::vector<Token> tokenize_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  auto issym = [](char c) {
    return c == ':' || c == '=' || c == '+' || c == '-' || c == '*' || c == '.' || c == '(' ||
           c == ')' || c == '^';
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", lineno, col, true});
      i += 2;
      continue;
    }
    if (issym(c)) {
      out.push_back({std::string(1, c), lineno, col, true});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           !issym(line[j]) && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), lineno, col, false});
    i = j;
  }
  return out;
}

template <FieldType F>
class RelationParser {
 public:
  RelationParser(const F& f, const typename F::Elem& lambda, const Quiver& q,
                 const std::vector<Token>& toks, size_t pos)
      : f_(f), lambda_(lambda), q_(q), toks_(toks), pos_(pos) {}

  AlgebraElement<F> parse_lincomb() {
    AlgebraElement<F> acc;
    bool negative = false;
    if (peek_symbol("-")) {
      negative = true;
      ++pos_;
    }
    parse_term(acc, negative);
    while (pos_ < toks_.size() && (peek_symbol("+") || peek_symbol("-"))) {
      negative = toks_[pos_].text == "-";
      ++pos_;
      parse_term(acc, negative);
    }
    return acc;
  }

  size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg, int line, int col) const {
    throw ParseError(msg, line, col);
  }
  [[noreturn]] void fail_here(const std::string& msg) const {
    if (pos_ < toks_.size()) fail(msg, toks_[pos_].line, toks_[pos_].col);
    fail(msg + " (at end of line)", toks_.empty() ? 0 : toks_.back().line,
         toks_.empty() ? 0 : toks_.back().col + 1);
  }

 private:
  bool peek_symbol(const char* s) const {
    return pos_ < toks_.size() && toks_[pos_].symbol && toks_[pos_].text == s;
  }

  const Token& expect_any(const char* what) {
    if (pos_ >= toks_.size()) fail_here(std::string("expected ") + what);
    return toks_[pos_];
  }

  // coefficient: integer, rational n/d, or L
  std::optional<typename F::Elem> try_coefficient(const Token& t) const {
    if (t.symbol) return std::nullopt;
    if (t.text == "L") return lambda_;
    if (!std::isdigit(static_cast<unsigned char>(t.text[0]))) return std::nullopt;
    auto v = f_.parse(t.text);
    if (!v) throw ParseError("bad coefficient '" + t.text + "'", t.line, t.col);
    return v;
  }

  void parse_term(AlgebraElement<F>& acc, bool negative) {
    const Token& head = expect_any("term");
    if (!head.symbol && head.text == "0") {
      ++pos_;
      return;  // explicit zero
    }
    typename F::Elem coeff = f_.one();
    if (auto c = try_coefficient(head)) {
      coeff = *c;
      ++pos_;
      if (!peek_symbol("*")) fail_here("expected '*' after coefficient");
      ++pos_;
    }
    Path p = parse_path();
    if (negative) coeff = f_.neg(coeff);
    add_term(f_, acc, p, coeff);
  }

  Path parse_path() {
    Path p = parse_factor();
    while (peek_symbol(".")) {
      ++pos_;
      Path next = parse_factor();
      auto c = compose(p, next);
      if (!c)
        fail("arrows do not compose at this point of the path", toks_[pos_ - 1].line,
             toks_[pos_ - 1].col);
      p = *c;
    }
    return p;
  }

  Path parse_factor() {
    const Token& t = expect_any("arrow name or '('");
    if (t.symbol && t.text == "(") {
      int line = t.line, col = t.col;
      ++pos_;
      Path inner = parse_path();
      if (!peek_symbol(")")) fail_here("expected ')'");
      ++pos_;
      if (peek_symbol("^")) {
        ++pos_;
        const Token& e = expect_any("exponent");
        int k = 0;
        try {
          k = std::stoi(e.text);
        } catch (const std::exception&) {
          fail("bad exponent '" + e.text + "'", e.line, e.col);
        }
        if (k < 1) fail("exponent must be >= 1", e.line, e.col);
        ++pos_;
        if (inner.src != inner.tgt && k > 1)
          fail("power of a non-cycle path", line, col);
        return power(inner, k);
      }
      return inner;
    }
    if (t.symbol) fail("expected arrow name, found '" + t.text + "'", t.line, t.col);
    auto a = q_.find_arrow(t.text);
    if (!a) fail("unknown arrow name '" + t.text + "'", t.line, t.col);
    ++pos_;
    return arrow_path(q_, *a);
  }

  const F& f_;
  typename F::Elem lambda_;
  const Quiver& q_;
  const std::vector<Token>& toks_;
  size_t pos_;
};

}  // namespace qpa_detail

template <FieldType F>
Presentation<F> parse_presentation(const F& f, const std::string& text,
                                   const typename F::Elem& lambda) {
  using qpa_detail::Token;
  Presentation<F> P;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = qpa_detail::tokenize_line(line, lineno);
    if (toks.empty()) continue;
    const Token& head = toks[0];
    if (head.symbol) throw ParseError("unexpected symbol '" + head.text + "'", lineno, head.col);
    if (head.text == "vertex") {
      if (toks.size() != 2 || toks[1].symbol)
        throw ParseError("expected: vertex <name>", lineno, head.col);
      P.quiver.add_vertex(toks[1].text);
    } else if (head.text == "arrow") {
      // arrow NAME : SRC -> TGT
      if (toks.size() != 6 || toks[1].symbol || toks[2].text != ":" || toks[3].symbol ||
          toks[4].text != "->" || toks[5].symbol)
        throw ParseError("expected: arrow <name>: <src> -> <tgt>", lineno, head.col);
      try {
        P.quiver.add_arrow(toks[1].text, toks[3].text, toks[5].text);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, toks[1].col);
      }
    } else if (head.text == "relation") {
      qpa_detail::RelationParser<F> rp(f, lambda, P.quiver, toks, 1);
      AlgebraElement<F> lhs = rp.parse_lincomb();
      size_t pos = rp.pos();
      if (pos >= toks.size() || toks[pos].text != "=")
        throw ParseError("expected '=' in relation", lineno,
                         pos < toks.size() ? toks[pos].col : head.col);
      qpa_detail::RelationParser<F> rp2(f, lambda, P.quiver, toks, pos + 1);
      AlgebraElement<F> rhs = rp2.parse_lincomb();
      if (rp2.pos() != toks.size())
        throw ParseError("trailing tokens after relation", lineno, toks[rp2.pos()].col);
      AlgebraElement<F> rel = sub(f, lhs, rhs);
      if (!rel.parallel())
        throw NonParallelRelation("line " + std::to_string(lineno) +
                                  ": relation terms do not share source and target");
      P.relations.push_back(std::move(rel));
    } else {
      throw ParseError("unknown declaration '" + head.text + "'", lineno, head.col);
    }
  }
  int maxdeg = 2;
  for (const auto& r : P.relations)
    if (!r.is_zero()) maxdeg = std::max(maxdeg, r.leading().first.length());
  P.default_degree_cap = 2 * maxdeg + 4;
  return P;
}

template <FieldType F>
std::string serialize_presentation(const F& f, const Presentation<F>& P) {
  std::ostringstream out;
  const Quiver& q = P.quiver;
  for (int v = 0; v < q.vertex_count(); ++v) out << "vertex " << q.vertex_name(v) << "\n";
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    out << "arrow " << ar.name << ": " << q.vertex_name(ar.source) << " -> "
        << q.vertex_name(ar.target) << "\n";
  }
  for (const auto& rel : P.relations) {
    out << "relation ";
    if (rel.is_zero()) {
      out << "0 = 0\n";
      continue;
    }
    bool first = true;
    for (const auto& [p, c] : rel.terms) {
      std::string cs = f.str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      first = false;
      std::string mag = neg ? cs.substr(1) : cs;
      if (mag != "1") out << mag << "*";
      out << path_to_string(q, p, ".");
    }
    out << " = 0\n";
  }
  return out.str();
}

}  // namespace quivalg
