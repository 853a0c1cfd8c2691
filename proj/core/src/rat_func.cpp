#include "torushom/rat_func.hpp"

#include <algorithm>
#include <map>

#include "torushom/errors.hpp"

namespace torushom {

namespace {

using FactorMap = std::map<Monomial, int>;

FactorMap to_map(std::span<const DenomFactor> den) {
  FactorMap m;
  for (const auto& f : den) m[f.d] += f.multiplicity;
  return m;
}

LaurentPoly expand(const FactorMap& factors) {
  LaurentPoly out(1);
  for (const auto& [d, mult] : factors) {
    out *= LaurentPoly::one_minus(d).pow(static_cast<unsigned>(mult));
  }
  return out;
}

// Factors of `a` not covered by `b`, i.e. the multiset difference a \ b.
FactorMap difference(const FactorMap& a, const FactorMap& b) {
  FactorMap out;
  for (const auto& [d, mult] : a) {
    auto it = b.find(d);
    const int rest = mult - (it == b.end() ? 0 : it->second);
    if (rest > 0) out.emplace(d, rest);
  }
  return out;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, std::span<const DenomFactor> factors) : num_(std::move(num)) {
  den_.assign(factors.begin(), factors.end());
  normalize_den();
  simplify();
}

RatFunc RatFunc::monomial(const Monomial& m, const Integer& c) {
  return RatFunc(LaurentPoly::monomial(m, c));
}

RatFunc RatFunc::inverse_one_minus(const Monomial& d, int multiplicity) {
  const DenomFactor f{d, multiplicity};
  return RatFunc(LaurentPoly(1), std::span<const DenomFactor>(&f, 1));
}

int RatFunc::den_degree() const {
  int total = 0;
  for (const auto& f : den_) total += f.multiplicity;
  return total;
}

LaurentPoly RatFunc::den_poly() const { return expand(to_map(den_)); }

void RatFunc::normalize_den() {
  FactorMap merged;
  for (const auto& f : den_) {
    if (f.multiplicity == 0) continue;
    if (f.multiplicity < 0) throw InvalidInput("negative denominator multiplicity");
    if (f.d.is_one()) throw ZeroDenominator("denominator factor (1 - 1)");
    if (f.d.is_positive()) {
      merged[f.d] += f.multiplicity;
    } else {
      // 1/(1 - x^d) = -x^{-d} / (1 - x^{-d})
      const Monomial pos = f.d.inverse();
      num_.mul_term(pos.pow(f.multiplicity), f.multiplicity % 2 == 0 ? 1 : -1);
      merged[pos] += f.multiplicity;
    }
  }
  den_.clear();
  for (const auto& [d, mult] : merged) den_.push_back({d, mult});
}

void RatFunc::simplify() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.multiplicity > 0) {
      if (!num_.divisible_by_one_minus(f.d)) break;
      num_ = *num_.divide_by_one_minus(f.d);
      --f.multiplicity;
    }
  }
  std::erase_if(den_, [](const DenomFactor& f) { return f.multiplicity == 0; });
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const FactorMap fa = to_map(a.den_);
  const FactorMap fb = to_map(b.den_);
  RatFunc out;
  out.num_ = a.num_ * expand(difference(fb, fa)) + b.num_ * expand(difference(fa, fb));
  FactorMap lcd = fa;
  for (const auto& [d, mult] : fb) lcd[d] = std::max(lcd[d], mult);
  for (const auto& [d, mult] : lcd) out.den_.push_back({d, mult});
  out.simplify();
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatFunc out;
  out.num_ = a.num_ * b.num_;
  FactorMap merged = to_map(a.den_);
  for (const auto& f : b.den_) merged[f.d] += f.multiplicity;
  for (const auto& [d, mult] : merged) out.den_.push_back({d, mult});
  out.simplify();
  return out;
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc result(1);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

RatFunc RatFunc::div_exact(const LaurentPoly& p) const {
  // Factors (1 - x^d) of p may already have cancelled against the numerator;
  // move them into the denominator instead.
  LaurentPoly rest = p;
  std::vector<DenomFactor> den = den_;
  auto q = num_.divide_exact(rest);
  for (auto& f : den) {
    while (!q) {
      auto r = rest.divide_by_one_minus(f.d);
      if (!r) break;
      rest = std::move(*r);
      ++f.multiplicity;
      q = num_.divide_exact(rest);
    }
  }
  if (!q) throw NotDivisible("numerator is not divisible by the given polynomial");
  RatFunc out;
  out.num_ = std::move(*q);
  out.den_ = std::move(den);
  out.simplify();
  return out;
}

RatFunc RatFunc::map_exponents(const ExponentMap& map) const {
  RatFunc out;
  out.num_ = num_.map_exponents(map);
  for (const auto& f : den_) {
    const Monomial d = map(f.d);
    if (d.is_one()) throw ZeroDenominator("substitution maps a denominator factor to (1 - 1)");
    out.den_.push_back({d, f.multiplicity});
  }
  out.normalize_den();
  out.simplify();
  return out;
}

RatFunc RatFunc::subst(std::size_t var, const Monomial& replacement) const {
  return map_exponents(ExponentMap::substitute(var, replacement));
}

RatFunc RatFunc::swap_QT() const { return map_exponents(ExponentMap::swap(kVarQ, kVarT)); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.den_ == b.den_) return a.num_ == b.num_;
  const FactorMap fa = to_map(a.den_);
  const FactorMap fb = to_map(b.den_);
  return a.num_ * expand(difference(fb, fa)) == b.num_ * expand(difference(fa, fb));
}

std::optional<Unit> equal_up_to_monomial(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return Unit{};
    return std::nullopt;
  }
  const FactorMap fa = to_map(a.den());
  const FactorMap fb = to_map(b.den());
  // a = u b  <=>  a.num * den(b) = u * b.num * den(a), after cancelling shared factors.
  const LaurentPoly lhs = a.num() * expand(difference(fb, fa));
  const LaurentPoly rhs = b.num() * expand(difference(fa, fb));
  if (lhs.size() != rhs.size()) return std::nullopt;
  const Term& la = lhs.leading();
  const Term& lb = rhs.leading();
  int sign = 0;
  if (la.coeff == lb.coeff) {
    sign = 1;
  } else if (la.coeff == -lb.coeff) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  const Monomial m = la.mono / lb.mono;
  LaurentPoly scaled = rhs;
  scaled.mul_term(m, sign);
  if (scaled != lhs) return std::nullopt;
  return Unit{sign, m};
}

}  // namespace torushom
