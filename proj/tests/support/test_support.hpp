#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <vector>

#include "torushom/format.hpp"
#include "torushom/hecke.hpp"
#include "torushom/permutation.hpp"
#include "torushom/rat_func.hpp"
#include "torushom/state.hpp"

namespace torushom {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << to_text(p); }
inline void PrintTo(const RatFunc& r, std::ostream* os) { *os << to_text(r); }
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << "[" << p.to_string() << "]"; }

}  // namespace torushom

namespace torushom::testing {

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 4, int spread = 2) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> exp(-spread, spread);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> terms;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({Monomial(exp(rng), exp(rng), exp(rng)), Integer(coeff(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline RatFunc random_rat(std::mt19937& rng) {
  static const Monomial kPool[] = {Monomial(0, 1, 0), Monomial(0, 0, 1), Monomial(0, -1, 1),
                                   Monomial(0, 1, 1), Monomial(1, 0, 0), Monomial(0, 2, -1)};
  std::uniform_int_distribution<int> n_factors(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPool) - 1);
  std::uniform_int_distribution<int> mult(1, 2);
  std::vector<DenomFactor> den;
  const int n = n_factors(rng);
  for (int i = 0; i < n; ++i) den.push_back({kPool[pick(rng)], mult(rng)});
  return RatFunc(random_poly(rng), den);
}

/// Random signed braid word on `strands` strands.
inline std::vector<int> random_braid(std::mt19937& rng, std::size_t strands, std::size_t max_len = 6) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, static_cast<int>(strands) - 1);
  std::bernoulli_distribution negative(0.3);
  std::vector<int> word(len(rng));
  for (int& g : word) g = negative(rng) ? -gen(rng) : gen(rng);
  return word;
}

/// Random element of H_n with small coefficients.
inline hecke::HeckeElement random_hecke(std::mt19937& rng, std::size_t strands) {
  hecke::HeckeElement x(strands);
  std::uniform_int_distribution<int> n_terms(1, 3);
  std::uniform_int_distribution<int> exp(-1, 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> images(strands);
    for (std::size_t j = 0; j < strands; ++j) images[j] = static_cast<std::uint8_t>(j + 1);
    std::shuffle(images.begin(), images.end(), rng);
    x += hecke::HeckeElement::basis(Permutation(images),
                                    LaurentPoly(Integer(coeff(rng)), Monomial(exp(rng), exp(rng), 0)));
  }
  return x;
}

/// All permutations of {1..n} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i + 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Every state (v, w, σ) with 1 ≤ |v|, |w| ≤ max_len and |σ| ≤ max_ones.
inline std::vector<State> all_states(std::size_t max_len, std::size_t max_ones, Theory theory = Theory::Column) {
  std::vector<std::vector<Word>> by_ones(max_ones + 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      const Word w(s);
      if (w.ones() <= max_ones) by_ones[w.ones()].push_back(w);
    }
  }
  std::vector<State> out;
  for (std::size_t j = 0; j <= max_ones; ++j) {
    const auto perms = all_permutations(j);
    for (const auto& v : by_ones[j])
      for (const auto& w : by_ones[j])
        for (const auto& sigma : perms) out.emplace_back(v, w, sigma, theory);
  }
  return out;
}

}  // namespace torushom::testing
