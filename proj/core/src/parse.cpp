#include "pspec/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "pspec/error.hpp"

namespace pspec {

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;  // 0-based offset in the expression
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line, std::size_t col0) : text_(text), line_(line), col0_(col0) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (is_digit(c)) {
        while (i < text_.size() && is_digit(text_[i])) ++i;
        if (i < text_.size() && (text_[i] == '.' || is_ident_start(text_[i]))) {
          fail("malformed number", i);
        }
        out.push_back({Tok::number, text_.substr(start, i - start), start});
        continue;
      }
      if (is_ident_start(c)) {
        while (i < text_.size() && is_ident_char(text_[i])) ++i;
        out.push_back({Tok::ident, text_.substr(start, i - start), start});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default: fail(std::string("unexpected character '") + c + "'", i);
      }
      out.push_back({kind, text_.substr(i, 1), i});
      ++i;
    }
    out.push_back({Tok::end, {}, text_.size()});
    return out;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, line_, col0_ + pos + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
};

// Recursive descent over the token stream:
//   sum     := signed (('+' | '-') signed)*
//   signed  := ('-' | '+') signed | product
//   product := power ('*' power)*
//   power   := atom ('^' integer)?
//   atom    := integer ('/' integer)? | ident | '(' sum ')'
class Parser {
 public:
  Parser(std::vector<Token> toks, std::span<const std::string> names, std::size_t line, std::size_t col0)
      : toks_(std::move(toks)), names_(names), line_(line), col0_(col0) {}

  Poly parse() {
    Poly p = sum();
    if (peek().kind != Tok::end) fail("unexpected '" + std::string(peek().text) + "'", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, line_, col0_ + pos + 1);
  }

  std::size_t n() const { return names_.size(); }

  Poly sum() {
    Poly acc = signed_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Poly rhs = signed_term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Poly signed_term() {
    if (peek().kind == Tok::minus) {
      next();
      return -signed_term();
    }
    if (peek().kind == Tok::plus) {
      next();
      return signed_term();
    }
    return product();
  }

  Poly product() {
    Poly acc = power();
    while (peek().kind == Tok::star) {
      next();
      acc *= power();
    }
    if (peek().kind == Tok::slash) fail("division is not allowed in polynomial position", peek().pos);
    if (peek().kind == Tok::ident || peek().kind == Tok::number || peek().kind == Tok::lparen) {
      fail("missing '*' between factors", peek().pos);
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    const Token& e = peek();
    if (e.kind != Tok::number) fail("malformed exponent: expected a non-negative integer", e.pos);
    next();
    unsigned long long k = 0;
    for (char c : e.text) {
      k = k * 10 + static_cast<unsigned>(c - '0');
      if (k > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large", e.pos);
    }
    if (peek().kind == Tok::caret) fail("chained exponents need parentheses", peek().pos);
    try {
      return pow(base, static_cast<std::uint32_t>(k));
    } catch (const OverflowError& err) {
      fail(err.what(), e.pos);
    }
  }

  Poly atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number: {
        Integer num(std::string(t.text), 10);
        if (peek().kind == Tok::slash) {
          next();
          const Token& d = peek();
          if (d.kind != Tok::number) fail("division is not allowed in polynomial position", d.pos - 1);
          next();
          Integer den(std::string(d.text), 10);
          if (den == 0) fail("zero denominator", d.pos);
          Coeff c(num, den);
          c.canonicalize();
          return Poly::constant(n(), c);
        }
        return Poly::constant(n(), Coeff(num));
      }
      case Tok::ident: {
        const auto it = std::find(names_.begin(), names_.end(), t.text);
        if (it == names_.end()) fail("unknown identifier '" + std::string(t.text) + "'", t.pos);
        return Poly::variable(n(), static_cast<std::size_t>(it - names_.begin()));
      }
      case Tok::lparen: {
        Poly inner = sum();
        if (peek().kind != Tok::rparen) fail("expected ')'", peek().pos);
        next();
        return inner;
      }
      case Tok::end:
        fail("unexpected end of expression", t.pos);
      default:
        fail("unexpected '" + std::string(t.text) + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::span<const std::string> names_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

// Splits on commas at parenthesis depth zero; returns (piece, offset) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool wrap_in_parens(const Poly& p) { return p.size() > 1; }

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> names, std::size_t line,
                std::size_t column_offset) {
  Lexer lexer(text, line, column_offset);
  Parser parser(lexer.run(), names, line, column_offset);
  return parser.parse();
}

std::vector<Poly> parse_poly_list(std::string_view text, std::span<const std::string> names) {
  std::vector<Poly> out;
  if (blank(text)) return out;
  for (const auto& [piece, offset] : split_commas(text)) {
    if (blank(piece)) throw ParseError("empty list element", 1, offset + 1);
    out.push_back(parse_poly(piece, names, 1, offset));
  }
  return out;
}

std::vector<Coeff> parse_coeff_list(std::string_view text) {
  std::vector<Coeff> out;
  if (blank(text)) return out;
  for (const auto& [piece, offset] : split_commas(text)) {
    try {
      out.push_back(parse_coeff(piece));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), 1, offset + 1);
    }
  }
  return out;
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw ArityError("to_string: need one name per variable");
  if (p.is_zero()) return "0";
  std::vector<const Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  const MonomialOrder grlex(OrderKind::grlex);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term* a, const Term* b) { return grlex.greater(a->monomial, b->monomial); });
  std::string out;
  bool first = true;
  for (const Term* tp : terms) {
    const Term& t = *tp;
    const bool negative = sgn(t.coeff) < 0;
    const Coeff mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(t.monomial, names);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

std::string to_string(const Poly& p) { return to_string(p, default_variable_names(p.nvars())); }

std::string to_string(const RatFunc& f, std::span<const std::string> names) {
  const std::string num = to_string(f.num(), names);
  if (f.is_polynomial()) return num;
  const std::string den = to_string(f.den(), names);
  return (wrap_in_parens(f.num()) ? "(" + num + ")" : num) + "/" +
         (wrap_in_parens(f.den()) ? "(" + den + ")" : den);
}

PoissonStructure parse_structure(std::string_view text) {
  std::vector<std::string> names;
  bool have_vars = false;
  std::vector<GeneratorPair> pairs;
  std::vector<std::size_t> pair_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const bool last = end == text.size();
    start = end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (blank(line)) {
      if (last) break;
      continue;
    }

    const std::size_t indent = line.find_first_not_of(" \t\v\f");
    std::string_view body = trim(line);
    if (body.starts_with("vars:")) {
      if (have_vars) throw ParseError("duplicate 'vars:' line", line_no, indent + 1);
      have_vars = true;
      std::string_view rest = body.substr(5);
      std::size_t col = indent + 5;
      std::size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        const std::size_t s = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        const std::string_view name = rest.substr(s, i - s);
        if (!is_ident_start(name.front()) || !std::all_of(name.begin(), name.end(), is_ident_char)) {
          throw ParseError("invalid variable name '" + std::string(name) + "'", line_no, col + s + 1);
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError("duplicate variable name '" + std::string(name) + "'", line_no, col + s + 1);
        }
        names.emplace_back(name);
      }
      if (names.size() < 3) throw ParseError("need at least 3 variables", line_no, indent + 1);
    } else if (body.starts_with("pair:")) {
      if (!have_vars) throw ParseError("'pair:' before 'vars:'", line_no, indent + 1);
      const std::string_view rest = body.substr(5);
      const std::size_t col = indent + 5;
      const auto semi = rest.find(';');
      if (semi == std::string_view::npos) throw ParseError("expected ';' between s and t", line_no, col + 1);
      auto side = [&](std::string_view part, std::size_t part_col, char which) {
        const auto eq = part.find('=');
        const std::string_view lhs = trim(part.substr(0, eq == std::string_view::npos ? 0 : eq));
        if (eq == std::string_view::npos || lhs != std::string_view(&which, 1)) {
          throw ParseError(std::string("expected '") + which + " = <expr>'", line_no, part_col + 1);
        }
        const std::string_view expr = part.substr(eq + 1);
        if (blank(expr)) throw ParseError("empty expression", line_no, part_col + eq + 2);
        return parse_poly(expr, names, line_no, part_col + eq + 1);
      };
      Poly s = side(rest.substr(0, semi), col, 's');
      Poly t = side(rest.substr(semi + 1), col + semi + 1, 't');
      pairs.push_back({std::move(s), std::move(t)});
      pair_lines.push_back(line_no);
    } else {
      throw ParseError("expected 'vars:' or 'pair:'", line_no, indent + 1);
    }
    if (last) break;
  }

  if (!have_vars) throw ParseError("missing 'vars:' line", line_no, 1);
  if (pairs.size() != names.size() - 2) {
    throw ParseError("expected " + std::to_string(names.size() - 2) + " pairs for " +
                         std::to_string(names.size()) + " variables, found " + std::to_string(pairs.size()),
                     line_no, 1);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].t.is_zero()) throw ParseError("t is zero", pair_lines[i], 1);
    if (!gcd(pairs[i].s, pairs[i].t).is_one()) throw ParseError("s and t not coprime", pair_lines[i], 1);
  }
  const std::size_t n = names.size();
  return PoissonStructure::build(n, std::move(pairs), std::move(names));
}

PoissonStructure load_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open structure file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DomainError("error reading structure file '" + path.string() + "'");
  return parse_structure(buf.str());
}

std::string to_structure_text(const PoissonStructure& s) {
  std::string out = "vars:";
  for (const auto& name : s.names()) out += " " + name;
  out += '\n';
  for (const auto& [sp, tp] : s.pairs()) {
    out += "pair: s = " + to_string(sp, s.names()) + " ; t = " + to_string(tp, s.names()) + "\n";
  }
  return out;
}

}  // namespace pspec
