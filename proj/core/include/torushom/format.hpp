#pragma once

#include <array>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "torushom/rat_func.hpp"

namespace torushom {

/// Display names for the three variable slots.
using VarNames = std::array<std::string_view, kNumVars>;
inline constexpr VarNames kHomologyVars{"A", "Q", "T"};
inline constexpr VarNames kHeckeVars{"a", "q", "z"};

// JSON: {"num": [[e1,e2,e3,"coeff"],...], "den": [[d1,d2,d3,mult],...]},
// terms and factors in ascending lexicographic order.
nlohmann::json to_json(const RatFunc& value);
RatFunc rat_func_from_json(const nlohmann::json& j);

/// "3*A*Q^2 - T^-1", terms in ascending lex order; "0" for zero.
std::string to_text(const LaurentPoly& p, const VarNames& vars = kHomologyVars);
/// "(num)/((1 - Q)^2*(1 - T))", or the bare numerator when denominator-free.
std::string to_text(const RatFunc& value, const VarNames& vars = kHomologyVars);
/// "\frac{num}{(1 - Q)^{2}(1 - T)}".
std::string to_latex(const RatFunc& value, const VarNames& vars = kHomologyVars);

/// Parses the text format (and general +,-,*,/,^ expressions whose divisors
/// are units times products of binomials 1 - monomial). Throws ParseError.
RatFunc parse_rat_func(std::string_view text, const VarNames& vars = kHomologyVars);

}  // namespace torushom
