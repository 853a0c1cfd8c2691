#pragma once

#include <optional>
#include <span>
#include <vector>

#include "torushom/laurent_poly.hpp"

namespace torushom {

/// Denominator factor (1 - x^d)^multiplicity with d lexicographically positive.
struct DenomFactor {
  Monomial d;
  int multiplicity = 1;

  friend bool operator==(const DenomFactor&, const DenomFactor&) = default;
};

/// Sign and monomial u with a = u * b, as returned by equal_up_to_monomial.
struct Unit {
  int sign = 1;
  Monomial mono;

  friend bool operator==(const Unit&, const Unit&) = default;
};

/// num / ∏ (1 - x^d_i)^{m_i}.
///
/// Denominator factors are canonically oriented and sorted by d. Every
/// operation simplifies greedily: a factor is cancelled whenever it divides
/// the numerator. The representation is not fully canonical (1 - Q^2 and
/// (1 - Q)(1 + Q) coexist), so equality cross-multiplies.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(std::int64_t c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  /// Builds num / ∏ factors, re-orienting any factor with a negative exponent
  /// vector and simplifying. Throws ZeroDenominator on a factor with d = 0.
  RatFunc(LaurentPoly num, std::span<const DenomFactor> factors);

  static RatFunc monomial(const Monomial& m, const Integer& c = 1);
  /// 1 / (1 - x^d)
  static RatFunc inverse_one_minus(const Monomial& d, int multiplicity = 1);

  const LaurentPoly& num() const { return num_; }
  std::span<const DenomFactor> den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Total count of denominator factors with multiplicity.
  int den_degree() const;

  /// The expanded denominator polynomial ∏ (1 - x^d)^m.
  LaurentPoly den_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc pow(unsigned k) const;

  /// Exact quotient by a polynomial; throws NotDivisible if the numerator
  /// does not divide.
  RatFunc div_exact(const LaurentPoly& p) const;

  /// Applies an exponent substitution to numerator and denominator,
  /// re-orienting factors. Throws ZeroDenominator if a factor collapses to
  /// (1 - 1).
  RatFunc map_exponents(const ExponentMap& map) const;
  /// Substitutes variable `var` by `replacement`.
  RatFunc subst(std::size_t var, const Monomial& replacement) const;
  /// Exchanges the Q and T slots.
  RatFunc swap_QT() const;

  /// Re-runs greedy cancellation. Idempotent.
  void simplify();

  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  void normalize_den();

  LaurentPoly num_;
  std::vector<DenomFactor> den_;
};

/// Returns (sign, m) with a = sign * m * b if such a unit exists. Zero is
/// associated only with zero, via the unit (+, 1).
std::optional<Unit> equal_up_to_monomial(const RatFunc& a, const RatFunc& b);

}  // namespace torushom
