#include "lct/rational.hpp"

#include "lct/errors.hpp"

#include <cctype>

namespace lct {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t slash = text.find('/', pos);
  const std::string_view num = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  if (!all_digits(num)) throw ParseError("expected integer numerator in '" + std::string(text) + "'", pos);

  BigInt n(std::string(num), 10);
  BigInt d = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("expected integer denominator in '" + std::string(text) + "'", slash + 1);
    d = BigInt(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  }
  if (negative) n = -n;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_decimal_string(const Rat& q, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt num = abs(q.get_num()) * scale;
  const BigInt& den = q.get_den();
  // round half away from zero
  BigInt scaled = (2 * num + den) / (2 * den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;

  std::string out = (q < 0 && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
  }
  return out;
}

BigInt floor(const Rat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace lct
