#include "tenscert/io.hpp"

#include <cctype>
#include <sstream>

#include "tenscert/errors.hpp"

namespace tenscert::io {

using algebra::Letter;
using algebra::Monomial;
using algebra::Rational;
using algebra::TermList;

namespace {

class Parser {
 public:
  Parser(std::string_view src, const VarSet& vars, int first_line)
      : src_(src), vars_(vars), line_(first_line) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      advance();
    }
    Polynomial acc = term();
    if (sign < 0) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      Polynomial rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner.pow(optional_power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == 't' || c == 'x' || c == 'y' || c == 'z' || c == 'u') return variable();
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial rational() {
    const std::string num = digits();
    std::string den;
    skip_ws();
    if (peek() == '/') {
      advance();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
    }
    Rational r = Rational::parse(den.empty() ? num : num + "/" + den);
    return Polynomial::constant(vars_, r);
  }

  Polynomial variable() {
    const int col = col_;
    const char letter = peek();
    advance();
    VarId_ id = 0;
    if (letter == 't' && !std::isdigit(static_cast<unsigned char>(peek()))) {
      if (!vars_.has_t()) fail_at("variable t not in ring", col);
      id = algebra::VarSet::t();
    } else {
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail_at(std::string("variable '") + letter + "' needs an index", col);
      const std::string idx = digits();
      if (letter == 't') fail_at("unknown variable 't" + idx + "'", col);
      const int i = idx.size() > 3 ? 1000 : std::stoi(idx);
      const Letter l = letter == 'x' ? Letter::X
                       : letter == 'y' ? Letter::Y
                       : letter == 'z' ? Letter::Z
                                       : Letter::U;
      try {
        id = vars_.var(l, i);
      } catch (const DomainError& e) {
        fail_at(e.what(), col);
      }
    }
    const int e = optional_power();
    return Polynomial::term(vars_, Monomial::var(id, e), Rational(1));
  }

  int optional_power() {
    skip_ws();
    if (peek() != '^') return 1;
    advance();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const std::string d = digits();
    if (d.size() > 3 || std::stoi(d) > 255) fail("exponent too large");
    return std::stoi(d);
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      s.push_back(peek());
      advance();
    }
    return s;
  }

  using VarId_ = algebra::VarId;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  [[noreturn]] void fail_at(const std::string& msg, int col) const {
    throw ParseError(msg, line_, col);
  }

  std::string_view src_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string render_terms(const Polynomial& f, const TermList& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = t.coeff.sign() < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational mag = neg ? -t.coeff : t.coeff;
    const bool unit = mag.is_one();
    if (t.mono.is_one()) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    bool first_var = true;
    for (std::size_t id = 0; id < algebra::kMaxVars; ++id) {
      const int e = t.mono[static_cast<algebra::VarId>(id)];
      if (e == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << f.vars().name(static_cast<algebra::VarId>(id));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const VarSet& vars) {
  return Parser(src, vars, 1).parse();
}

std::string render_polynomial(const Polynomial& f, const MonomialOrder& ord) {
  return render_terms(f, algebra::terms_in_order(f, ord));
}

std::string render_polynomial(const Polynomial& f) { return render_terms(f, f.terms()); }

std::vector<Polynomial> parse_ideal(std::string_view text, const VarSet& vars) {
  std::vector<Polynomial> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#')
      out.push_back(Parser(line, vars, line_no).parse());
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

VarSet infer_varset(const std::vector<std::string>& texts) {
  int n = 1;
  bool t = false;
  for (const auto& s : texts) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      if (c == '#') {
        i = s.find('\n', i);
        if (i == std::string::npos) break;
        continue;
      }
      if (c == 't') t = true;
      if (c != 'x' && c != 'y' && c != 'z') continue;
      std::size_t j = i + 1;
      int v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && v < 1000)
        v = v * 10 + (s[j++] - '0');
      n = std::max(n, v);
    }
  }
  if (1 + 3 * n > static_cast<int>(algebra::kMaxVars))
    throw ConfigError("ideal uses index " + std::to_string(n) + ", beyond the supported range");
  return VarSet::tensorial(n, t);
}

}  // namespace tenscert::io
