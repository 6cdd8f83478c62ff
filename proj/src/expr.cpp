#include "lct/expr.hpp"

#include "lct/errors.hpp"
#include "lct/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

namespace lct {

namespace {

enum class NameStyle { Unknown, Plain, Indexed };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  struct Term {
    Rat coefficient;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // 0-based variable, exponent
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
      terms.push_back(term(negative));
    }
    return terms;
  }

  std::size_t max_index() const { return max_index_; }
  char letter() const { return letter_; }
  NameStyle style() const { return style_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool digit_next() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
  bool alpha_next() const { return !at_end() && std::isalpha(static_cast<unsigned char>(peek())); }

  std::string digits() {
    const std::size_t start = pos_;
    while (digit_next()) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t small_uint(std::uint64_t limit, const char* what) {
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 18 || std::stoull(d) > limit) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return std::stoull(d);
  }

  Term term(bool negative) {
    skip_space();
    Term t{Rat(1), {}};
    if (digit_next()) {
      BigInt num(digits(), 10);
      BigInt den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = BigInt(digits(), 10);
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      t.coefficient = Rat(num, den);
      t.coefficient.canonicalize();
      skip_space();
      if (at_end() || peek() != '*') {
        if (negative) t.coefficient = -t.coefficient;
        return t;  // constant term
      }
      ++pos_;
      skip_space();
    }
    t.factors.push_back(factor());
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
      t.factors.push_back(factor());
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  std::pair<std::size_t, std::uint32_t> factor() {
    if (!alpha_next()) {
      if (!at_end() && peek() == '-') fail("negative exponents and signs inside a term are not allowed");
      fail("expected a variable");
    }
    const std::size_t name_pos = pos_;
    const char c = peek();
    ++pos_;
    std::size_t index;
    if (digit_next()) {
      const std::uint64_t i = small_uint(kMaxParseDimension, "variable index");
      if (i == 0) {
        pos_ = name_pos;
        fail("variable indices start at 1");
      }
      claim(NameStyle::Indexed, c, name_pos);
      index = static_cast<std::size_t>(i) - 1;
    } else {
      const std::string plain = "xyzw";
      const auto k = plain.find(c);
      if (k == std::string::npos) {
        pos_ = name_pos;
        fail(std::string("unknown variable '") + c + "'");
      }
      claim(NameStyle::Plain, c, name_pos);
      index = k;
    }
    if (alpha_next()) fail("unexpected letter after variable name");
    max_index_ = std::max(max_index_, index + 1);

    std::uint32_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (!at_end() && peek() == '-') fail("negative exponent");
      exponent = static_cast<std::uint32_t>(small_uint(std::numeric_limits<std::uint32_t>::max(), "exponent"));
    }
    return {index, exponent};
  }

  void claim(NameStyle s, char letter, std::size_t at) {
    if (style_ == NameStyle::Unknown) {
      style_ = s;
      letter_ = letter;
      return;
    }
    if (style_ != s) {
      pos_ = at;
      fail("cannot mix plain variables (x, y, z, w) with indexed ones (x1, x2, ...)");
    }
    if (s == NameStyle::Indexed && letter != letter_) {
      pos_ = at;
      fail(std::string("indexed variables must share one letter, found '") + letter_ + "' and '" + letter + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  NameStyle style_ = NameStyle::Unknown;
  char letter_ = 'x';
};

std::string format_coefficient(const Rat& c) { return to_display_string(c); }

}  // namespace

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 4) {
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, "xyzw"[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

PolyExpr parse_poly_expr(std::string_view text, std::optional<std::size_t> n_hint, bool generic_coefficients) {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (static_cast<unsigned char>(text[i]) >= 0x80) throw ParseError("non-ASCII character", i);

  Parser parser(text);
  const auto terms = parser.parse();

  std::size_t n = std::max<std::size_t>(parser.max_index(), 1);
  if (n_hint) {
    if (*n_hint == 0 || *n_hint > kMaxParseDimension)
      throw ParseError("dimension hint " + std::to_string(*n_hint) + " out of range", 0);
    if (parser.max_index() > *n_hint)
      throw ParseError("variable index " + std::to_string(parser.max_index()) + " exceeds dimension " +
                           std::to_string(*n_hint),
                       0);
    n = *n_hint;
  }

  Poly::Terms acc;
  for (const auto& t : terms) {
    std::vector<std::uint32_t> e(n, 0);
    for (const auto& [i, k] : t.factors) {
      if (std::uint64_t{e[i]} + k > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("exponent overflow", 0);
      e[i] += k;
    }
    acc[ExponentVector(std::move(e))] += t.coefficient;
  }

  std::vector<std::string> names;
  if (parser.style() == NameStyle::Indexed) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, parser.letter()) + std::to_string(i + 1));
  } else {
    names = default_variable_names(n);
  }
  return {std::string(text), Poly(n, std::move(acc), generic_coefficients), std::move(names)};
}

Poly parse_poly(std::string_view text, std::optional<std::size_t> n_hint, bool generic_coefficients) {
  return parse_poly_expr(text, n_hint, generic_coefficients).poly;
}

std::string format_poly(const Poly& f, const std::vector<std::string>& names) {
  if (names.size() != f.dimension()) throw std::invalid_argument("variable name table has the wrong size");
  if (f.is_zero()) return "0";

  std::vector<const Poly::Terms::value_type*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const auto da = a->first.total_degree(), db = b->first.total_degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Rat& c = t->second;
    const bool negative = c < 0;
    const Rat magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      const auto e = t->first[i];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += names[i];
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      out += format_coefficient(magnitude);
    } else {
      if (magnitude != 1) out += format_coefficient(magnitude) + "*";
      out += monomial;
    }
  }
  return out;
}

std::string format_poly(const Poly& f) { return format_poly(f, default_variable_names(f.dimension())); }

}  // namespace lct
