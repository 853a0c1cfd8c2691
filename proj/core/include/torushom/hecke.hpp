#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "torushom/laurent_poly.hpp"
#include "torushom/permutation.hpp"
#include "torushom/rat_func.hpp"

// Type-A Hecke algebra H_n over Z[a^±, q^±] in the standard basis {T_σ},
// with (T_i - q)(T_i + q^-1) = 0, and the Jones–Ocneanu trace. Variables
// live in the Monomial slots (a, q) = (0, 1); slot 2 is unused.
namespace torushom::hecke {

inline constexpr std::size_t kVarSmallA = 0;
inline constexpr std::size_t kVarSmallQ = 1;

/// q - q^-1
LaurentPoly q_minus_q_inverse();

/// Reduced word (i_1, ..., i_k) with σ = s_{i_1} s_{i_2} ... s_{i_k}.
std::vector<std::size_t> reduced_word(const Permutation& sigma);

class HeckeElement {
 public:
  /// The zero element of H_n.
  explicit HeckeElement(std::size_t strands) : n_(strands) {}
  static HeckeElement identity(std::size_t strands);
  static HeckeElement basis(const Permutation& sigma, const LaurentPoly& coeff = LaurentPoly(1));

  std::size_t strands() const { return n_; }
  const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Right multiplication by T_{s_i}, 1 ≤ i ≤ n-1. Throws IndexOutOfRange.
  HeckeElement& mul_gen(std::size_t i);
  /// Right multiplication by T_{s_i}^{-1} = T_{s_i} - (q - q^-1).
  HeckeElement& mul_gen_inverse(std::size_t i);
  /// Right multiplication by the image of a braid word (signed 1-based generators).
  HeckeElement& mul_braid(const std::vector<int>& word);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator*=(const LaurentPoly& scalar);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  void add_term(const Permutation& sigma, const LaurentPoly& coeff);

  std::size_t n_;
  std::map<Permutation, LaurentPoly> terms_;
};

/// Image of a braid word in H_n.
HeckeElement braid_image(const std::vector<int>& word, std::size_t strands);

/// Trace constants: z = (q - q^-1)/(1 - a^2), μ = (1 - a^2)/(a(q - q^-1)),
/// λ = a. They satisfy λμz = 1 and μ(z - (q - q^-1)) = λ.
struct TraceParams {
  static RatFunc z();
  static RatFunc mu();
  static RatFunc lambda();
};

/// Jones–Ocneanu trace: χ(1) = 1, χ(xy) = χ(yx), χ(u T_{n-1} v) = z χ(uv)
/// for u, v ∈ H_{n-1}. Values on basis elements are cached per instance.
class JonesTrace {
 public:
  RatFunc operator()(const HeckeElement& x);
  RatFunc basis(const Permutation& sigma);

 private:
  std::map<Permutation, RatFunc> cache_;
};

RatFunc jones_trace(const HeckeElement& x);

/// "1,1,-2" = σ1 σ1 σ2^-1. Throws InvalidInput.
std::vector<int> parse_braid_word(std::string_view text);

/// Number of components of the closure of a braid word.
std::size_t closure_components(const std::vector<int>& word, std::size_t strands);

/// HOMFLYPT polynomial of the braid closure with a^-1 P(L+) - a P(L-) = (q - q^-1) P(L0)
/// and P(unknot) = 1, computed as a^{writhe} μ^{n-1} χ(image). For a closure
/// with c components the value times (q - q^-1)^{c-1} is a Laurent
/// polynomial; NonPolynomialResult is thrown if any other denominator
/// survives (so knots always give a polynomial).
RatFunc homfly_braid_closure(const std::vector<int>& word, std::size_t strands);

/// Closure of (σ1 σ2 ... σ_{m-1})^n on m strands.
RatFunc homfly_torus(std::size_t m, std::size_t n);

}  // namespace torushom::hecke
