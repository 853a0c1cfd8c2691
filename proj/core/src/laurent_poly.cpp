#include "torushom/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "torushom/errors.hpp"

namespace torushom {

namespace {

std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  std::int32_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t first_nonzero(const Monomial& d) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (d[i] != 0) return i;
  }
  return kNumVars;
}

// Splits x^m = x^rep * (x^d)^t with rep the canonical coset representative
// of m modulo the lattice generated by d (d lexicographically positive).
std::pair<Monomial, std::int32_t> coset_split(const Monomial& m, const Monomial& d,
                                              std::size_t pivot) {
  const std::int32_t t = floor_div(m[pivot], d[pivot]);
  return {m / d.pow(t), t};
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c, const Monomial& m) {
  if (c != 0) terms_.push_back({m, c});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  return LaurentPoly(c, m);
}

LaurentPoly LaurentPoly::var(std::size_t index, std::int32_t power) {
  return monomial(Monomial::var(index, power));
}

LaurentPoly LaurentPoly::one_minus(const Monomial& d) {
  return LaurentPoly(1) - monomial(d);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(std::move(out), 0);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

Monomial LaurentPoly::min_exponents() const {
  Monomial out = terms_.front().mono;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) out[i] = std::min(out[i], t.mono[i]);
  }
  return out;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial out = terms_.front().mono;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) out[i] = std::max(out[i], t.mono[i]);
  }
  return out;
}

Integer LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->mono < b->mono) {
      out.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::mul_term(const Monomial& m, const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  // Multiplying by a monomial preserves the lex order.
  for (auto& t : terms_) {
    t.mono = t.mono * m;
    if (c != 1) t.coeff *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return LaurentPoly(b).mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return LaurentPoly(a).mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() <= 4) {
    // Sum of shifted copies; each shift keeps the big operand sorted.
    LaurentPoly acc;
    for (const auto& t : small.terms_) acc += LaurentPoly(big).mul_term(t.mono, t.coeff);
    return acc;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[x.mono * y.mono] += x.coeff * y.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.mono < r.mono; });
  return LaurentPoly(std::move(terms), 0);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (is_zero()) return LaurentPoly{};
  if (divisor.is_monomial()) {
    const Term& d = divisor.terms_[0];
    LaurentPoly out = *this;
    for (auto& t : out.terms_) {
      if (t.coeff % d.coeff != 0) return std::nullopt;
      t.coeff /= d.coeff;
      t.mono = t.mono / d.mono;
    }
    return out;
  }

  const Monomial lo = min_exponents() / divisor.min_exponents();
  const Monomial hi = max_exponents() / divisor.max_exponents();
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (lo[i] > hi[i]) return std::nullopt;
  }
  auto in_box = [&](const Monomial& m) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] < lo[i] || m[i] > hi[i]) return false;
    }
    return true;
  };

  std::map<Monomial, Integer> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  const Term& lead = divisor.leading();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial qm = top->first / lead.mono;
    if (!in_box(qm)) return std::nullopt;
    if (top->second % lead.coeff != 0) return std::nullopt;
    const Integer qc = top->second / lead.coeff;
    for (const auto& t : divisor.terms_) {
      const Monomial m = t.mono * qm;
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qm, qc});
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly(std::move(quotient), 0);
}

bool LaurentPoly::divisible_by_one_minus(const Monomial& d) const {
  if (d.is_one()) throw ZeroDenominator("binomial 1 - x^0 is zero");
  const Monomial dir = d.is_positive() ? d : d.inverse();
  const std::size_t pivot = first_nonzero(dir);
  std::unordered_map<Monomial, Integer, MonomialHash> sums;
  for (const auto& t : terms_) sums[coset_split(t.mono, dir, pivot).first] += t.coeff;
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

std::optional<LaurentPoly> LaurentPoly::divide_by_one_minus(const Monomial& d) const {
  if (d.is_one()) throw ZeroDenominator("binomial 1 - x^0 is zero");
  if (!d.is_positive()) {
    // 1 - x^d = -x^d (1 - x^{-d})
    auto q = divide_by_one_minus(d.inverse());
    if (!q) return std::nullopt;
    q->mul_term(d.inverse(), -1);
    return q;
  }
  const std::size_t pivot = first_nonzero(d);
  std::map<Monomial, std::vector<std::pair<std::int32_t, Integer>>> chains;
  for (const auto& t : terms_) {
    auto [rep, step] = coset_split(t.mono, d, pivot);
    chains[rep].emplace_back(step, t.coeff);
  }
  std::vector<Term> out;
  for (auto& [rep, chain] : chains) {
    std::sort(chain.begin(), chain.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // f = (1 - x^d) g  <=>  g_t = sum_{s <= t} f_s along each coset chain.
    Integer running = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      running += chain[i].second;
      const std::int32_t next = i + 1 < chain.size() ? chain[i + 1].first : chain[i].first;
      if (running == 0) continue;
      if (i + 1 == chain.size()) return std::nullopt;
      for (std::int32_t s = chain[i].first; s < next; ++s) out.push_back({rep * d.pow(s), running});
    }
    if (running != 0) return std::nullopt;
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::map_exponents(const ExponentMap& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({map(t.mono), t.coeff});
  return from_terms(std::move(out));
}

LaurentPoly gaussian_factorial(unsigned k) {
  LaurentPoly result(1);
  for (unsigned j = 1; j <= k; ++j) {
    LaurentPoly qint;
    for (unsigned i = 0; i < j; ++i) qint += LaurentPoly::var(kVarQ, static_cast<std::int32_t>(i));
    result *= qint;
  }
  return result;
}

}  // namespace torushom
