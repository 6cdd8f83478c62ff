#pragma once

#include "lct/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

/// Hard ceiling on the number of variables the parser accepts.
inline constexpr std::size_t kMaxParseDimension = 64;

/// A parsed polynomial together with its source and variable names.
struct PolyExpr {
  std::string source;
  Poly poly;
  std::vector<std::string> names;  ///< names[i] is variable i
};

/// Parses ASCII text in the grammar
///
///   poly   := ["+"|"-"] term (("+"|"-") term)*
///   term   := rat | [rat "*"] factor ("*" factor)*
///   factor := var ["^" uint]
///   rat    := uint ["/" uint]
///   var    := x | y | z | w | letter uint
///
/// Plain x, y, z, w are variables 1..4. Indexed names (x1, z3, ...) are
/// 1-based and must all use one letter; the two styles cannot be mixed. The
/// dimension is the largest index used, or `n_hint` when given. Throws
/// ParseError on malformed input, an out-of-range exponent, an index above
/// kMaxParseDimension, or an index beyond `n_hint`.
PolyExpr parse_poly_expr(std::string_view text, std::optional<std::size_t> n_hint = std::nullopt,
                         bool generic_coefficients = true);

Poly parse_poly(std::string_view text, std::optional<std::size_t> n_hint = std::nullopt,
                bool generic_coefficients = true);

/// x, y, z, w for up to four variables, otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Renders f so that parse_poly gives it back; terms in graded lexicographic
/// order, descending.
std::string format_poly(const Poly& f, const std::vector<std::string>& names);
std::string format_poly(const Poly& f);

}  // namespace lct
