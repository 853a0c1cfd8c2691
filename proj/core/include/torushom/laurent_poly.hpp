#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torushom/monomial.hpp"

namespace torushom {

using Integer = boost::multiprecision::cpp_int;

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by ascending lexicographic monomial order with no
/// zero coefficients, so structural equality is value equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c, const Monomial& m = {});
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  static LaurentPoly var(std::size_t index, std::int32_t power = 1);
  /// 1 - x^d
  static LaurentPoly one_minus(const Monomial& d);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }
  /// A single term with coefficient +1 or -1.
  bool is_unit() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Largest term in lex order. Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }
  /// Smallest term in lex order. Precondition: nonzero.
  const Term& trailing() const { return terms_.front(); }

  /// Per-variable minimum and maximum exponent. Precondition: nonzero.
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  /// Coefficient of x^m (zero if absent).
  Integer coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& mul_term(const Monomial& m, const Integer& c = 1);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned k) const;

  /// Exact quotient by `divisor`, or nullopt if the division leaves a remainder.
  /// Quotient terms are confined to the per-variable exponent box implied by
  /// degree additivity, which makes the long division terminate.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Exact quotient by (1 - x^d), d != 0, or nullopt.
  std::optional<LaurentPoly> divide_by_one_minus(const Monomial& d) const;

  /// True iff (1 - x^d) divides this polynomial.
  bool divisible_by_one_minus(const Monomial& d) const;

  LaurentPoly map_exponents(const ExponentMap& map) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms, int /*tag*/)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

/// ∏_{j=1}^{k} (1 + Q + ... + Q^{j-1}) in the Q slot.
LaurentPoly gaussian_factorial(unsigned k);

}  // namespace torushom
