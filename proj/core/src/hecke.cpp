#include "torushom/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "torushom/errors.hpp"

namespace torushom::hecke {

namespace {

Permutation swap_positions(const Permutation& sigma, std::size_t i) {
  std::vector<std::uint8_t> images = sigma.images();
  std::swap(images[i - 1], images[i]);
  return Permutation(std::move(images));
}

// Drops trailing fixed points: σ ∈ S_n with σ(n) = n is σ ∈ S_{n-1}.
Permutation trim(const Permutation& sigma) {
  std::vector<std::uint8_t> images = sigma.images();
  while (!images.empty() && images.back() == images.size()) images.pop_back();
  return Permutation(std::move(images));
}

}  // namespace

LaurentPoly q_minus_q_inverse() {
  return LaurentPoly::var(kVarSmallQ) - LaurentPoly::var(kVarSmallQ, -1);
}

std::vector<std::size_t> reduced_word(const Permutation& sigma) {
  std::vector<std::size_t> word;
  Permutation cur = sigma;
  for (;;) {
    std::size_t descent = 0;
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (cur(i) > cur(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    cur = swap_positions(cur, descent);
    word.push_back(descent);
  }
  // σ = cur_final * s_{w_k} ... s_{w_1} with cur_final = e.
  std::reverse(word.begin(), word.end());
  return word;
}

HeckeElement HeckeElement::identity(std::size_t strands) {
  return basis(Permutation::identity(strands));
}

HeckeElement HeckeElement::basis(const Permutation& sigma, const LaurentPoly& coeff) {
  HeckeElement x(sigma.size());
  x.add_term(sigma, coeff);
  return x;
}

void HeckeElement::add_term(const Permutation& sigma, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::mul_gen(std::size_t i) {
  if (i < 1 || i + 1 > n_) {
    throw IndexOutOfRange("generator s_" + std::to_string(i) + " outside H_" + std::to_string(n_));
  }
  const LaurentPoly shift = q_minus_q_inverse();
  HeckeElement out(n_);
  for (const auto& [sigma, c] : terms_) {
    const Permutation next = swap_positions(sigma, i);
    if (sigma(i) < sigma(i + 1)) {
      out.add_term(next, c);
    } else {
      // T_σ T_i = (q - q^-1) T_σ + T_{σ s_i} when ℓ(σ s_i) < ℓ(σ)
      out.add_term(sigma, c * shift);
      out.add_term(next, c);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

HeckeElement& HeckeElement::mul_gen_inverse(std::size_t i) {
  HeckeElement shifted = *this;
  shifted *= -q_minus_q_inverse();
  mul_gen(i);
  return *this += shifted;
}

HeckeElement& HeckeElement::mul_braid(const std::vector<int>& word) {
  for (int g : word) {
    if (g == 0) throw IndexOutOfRange("braid generator 0");
    if (g > 0) {
      mul_gen(static_cast<std::size_t>(g));
    } else {
      mul_gen_inverse(static_cast<std::size_t>(-g));
    }
  }
  return *this;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.n_ != n_) throw SizeMismatch("Hecke elements on different strand counts");
  for (const auto& [sigma, c] : other.terms_) add_term(sigma, c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, c] : terms_) c *= scalar;
  return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.n_ != b.n_) throw SizeMismatch("Hecke elements on different strand counts");
  HeckeElement out(a.n_);
  for (const auto& [sigma, c] : b.terms_) {
    HeckeElement part = a;
    for (std::size_t g : reduced_word(sigma)) part.mul_gen(g);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElement braid_image(const std::vector<int>& word, std::size_t strands) {
  HeckeElement x = HeckeElement::identity(strands);
  return x.mul_braid(word);
}

RatFunc TraceParams::z() {
  const DenomFactor f{Monomial::var(kVarSmallA, 2), 1};
  return RatFunc(q_minus_q_inverse(), std::span<const DenomFactor>(&f, 1));
}

RatFunc TraceParams::mu() {
  // (1 - a^2)/(a (q - q^-1)) = -a^-1 q (1 - a^2) / (1 - q^2)
  LaurentPoly num = LaurentPoly::one_minus(Monomial::var(kVarSmallA, 2));
  num.mul_term(Monomial(-1, 1, 0), -1);
  const DenomFactor f{Monomial::var(kVarSmallQ, 2), 1};
  return RatFunc(std::move(num), std::span<const DenomFactor>(&f, 1));
}

RatFunc TraceParams::lambda() { return RatFunc::monomial(Monomial::var(kVarSmallA)); }

RatFunc JonesTrace::basis(const Permutation& sigma_in) {
  const Permutation sigma = trim(sigma_in);
  const std::size_t n = sigma.size();
  if (n == 0) return RatFunc(1);
  if (auto it = cache_.find(sigma); it != cache_.end()) return it->second;

  // σ = w · d with w ∈ S_{n-1} and d = s_{n-1} s_{n-2} ... s_j the minimal
  // coset representative, j = σ^{-1}(n); lengths add, so
  // T_σ = T_w T_{n-1} T_{d'} with d' = s_{n-2} ... s_j and
  // χ(T_σ) = z χ(T_w T_{d'}).
  const std::size_t j = sigma.inverse()(n);
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i - 1] = static_cast<std::uint8_t>(i < j ? i : (i == j ? n : i - 1));
  }
  const Permutation w = compose(sigma, Permutation(std::move(d)).inverse());
  std::vector<std::uint8_t> w_small(w.images().begin(), w.images().end() - 1);
  HeckeElement x = HeckeElement::basis(Permutation(std::move(w_small)));
  for (std::size_t g = n - 1; g > j; --g) x.mul_gen(g - 1);

  RatFunc value = TraceParams::z() * (*this)(x);
  cache_.emplace(sigma, value);
  return value;
}

RatFunc JonesTrace::operator()(const HeckeElement& x) {
  RatFunc total;
  for (const auto& [sigma, c] : x.terms()) total += RatFunc(c) * basis(sigma);
  return total;
}

RatFunc jones_trace(const HeckeElement& x) {
  JonesTrace chi;
  return chi(x);
}

std::vector<int> parse_braid_word(std::string_view text) {
  std::vector<int> word;
  if (text.empty()) return word;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int g = std::stoi(item, &used);
      if (used != item.size() || g == 0) throw InvalidInput("");
      word.push_back(g);
    } catch (const std::exception&) {
      throw InvalidInput("bad braid generator \"" + item + "\"");
    }
  }
  return word;
}

std::size_t closure_components(const std::vector<int>& word, std::size_t strands) {
  std::vector<std::size_t> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    const auto i = static_cast<std::size_t>(g < 0 ? -g : g);
    if (i == 0 || i >= strands) {
      throw IndexOutOfRange("generator " + std::to_string(g) + " on " + std::to_string(strands) + " strands");
    }
    std::swap(perm[i - 1], perm[i]);
  }
  std::size_t cycles = 0;
  std::vector<bool> seen(strands, false);
  for (std::size_t i = 0; i < strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

RatFunc homfly_braid_closure(const std::vector<int>& word, std::size_t strands) {
  if (strands == 0) throw InvalidInput("a braid needs at least one strand");
  const std::size_t components = closure_components(word, strands);
  int writhe = 0;
  for (int g : word) writhe += g > 0 ? 1 : -1;
  RatFunc p = RatFunc::monomial(Monomial::var(kVarSmallA, writhe)) *
              TraceParams::mu().pow(static_cast<unsigned>(strands - 1)) *
              jones_trace(braid_image(word, strands));
  const RatFunc cleared = p * RatFunc(q_minus_q_inverse().pow(static_cast<unsigned>(components - 1)));
  if (!cleared.is_polynomial()) {
    throw NonPolynomialResult("HOMFLYPT closure keeps a denominator beyond (q - q^-1)^" +
                              std::to_string(components - 1));
  }
  return p;
}

RatFunc homfly_torus(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidInput("torus link parameters must be positive");
  std::vector<int> word;
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (std::size_t g = 1; g < m; ++g) word.push_back(static_cast<int>(g));
  }
  return homfly_braid_closure(word, m);
}

}  // namespace torushom::hecke
