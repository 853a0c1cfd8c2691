#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace torushom {

/// Number of formal variables. Slot meaning depends on context:
/// (A, Q, T) for homology values, (a, q, unused) for the Hecke oracle.
inline constexpr std::size_t kNumVars = 3;

inline constexpr std::size_t kVarA = 0;
inline constexpr std::size_t kVarQ = 1;
inline constexpr std::size_t kVarT = 2;

/// A Laurent monomial x^e = x1^e1 x2^e2 x3^e3, ordered lexicographically.
struct Monomial {
  std::array<std::int32_t, kNumVars> exps{};

  constexpr Monomial() = default;
  constexpr Monomial(std::int32_t e1, std::int32_t e2, std::int32_t e3)
      : exps{e1, e2, e3} {}

  static constexpr Monomial var(std::size_t index, std::int32_t power = 1) {
    Monomial m;
    m.exps[index] = power;
    return m;
  }

  constexpr std::int32_t operator[](std::size_t i) const { return exps[i]; }
  constexpr std::int32_t& operator[](std::size_t i) { return exps[i]; }

  constexpr bool is_one() const {
    return exps[0] == 0 && exps[1] == 0 && exps[2] == 0;
  }

  /// Lexicographically positive: the first nonzero exponent is > 0.
  constexpr bool is_positive() const {
    for (auto e : exps) {
      if (e != 0) return e > 0;
    }
    return false;
  }

  constexpr Monomial inverse() const { return {-exps[0], -exps[1], -exps[2]}; }

  constexpr Monomial pow(std::int32_t k) const {
    return {exps[0] * k, exps[1] * k, exps[2] * k};
  }

  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exps[0] + b.exps[0], a.exps[1] + b.exps[1], a.exps[2] + b.exps[2]};
  }
  friend constexpr Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.exps[0] - b.exps[0], a.exps[1] - b.exps[1], a.exps[2] - b.exps[2]};
  }

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps) {
      h ^= static_cast<std::uint32_t>(e);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Integer-linear change of exponents: new_exps = matrix * old_exps.
/// Covers variable substitution by a monomial and permutation of variables.
class ExponentMap {
 public:
  using Matrix = std::array<std::array<std::int32_t, kNumVars>, kNumVars>;

  static ExponentMap identity();
  /// Replace variable `var` by `replacement` (other variables untouched).
  static ExponentMap substitute(std::size_t var, const Monomial& replacement);
  static ExponentMap swap(std::size_t i, std::size_t j);

  Monomial operator()(const Monomial& m) const;

  const Matrix& matrix() const { return m_; }

 private:
  explicit ExponentMap(const Matrix& m) : m_(m) {}
  Matrix m_{};
};

inline ExponentMap ExponentMap::identity() {
  Matrix m{};
  for (std::size_t i = 0; i < kNumVars; ++i) m[i][i] = 1;
  return ExponentMap(m);
}

inline ExponentMap ExponentMap::substitute(std::size_t var, const Monomial& replacement) {
  Matrix m{};
  for (std::size_t i = 0; i < kNumVars; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < kNumVars; ++i) m[i][var] = replacement[i];
  return ExponentMap(m);
}

inline ExponentMap ExponentMap::swap(std::size_t i, std::size_t j) {
  Matrix m{};
  for (std::size_t k = 0; k < kNumVars; ++k) m[k][k] = 1;
  m[i][i] = m[j][j] = 0;
  m[i][j] = m[j][i] = 1;
  return ExponentMap(m);
}

inline Monomial ExponentMap::operator()(const Monomial& x) const {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    std::int32_t acc = 0;
    for (std::size_t j = 0; j < kNumVars; ++j) acc += m_[i][j] * x[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace torushom

template <>
struct std::hash<torushom::Monomial> : torushom::MonomialHash {};
