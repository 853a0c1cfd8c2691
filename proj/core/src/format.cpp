#include "torushom/format.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "torushom/errors.hpp"

namespace torushom {

namespace {

std::string coeff_string(const Integer& c) { return c.str(); }

// "A*Q^2*T^-1"; empty for the unit monomial.
std::string monomial_text(const Monomial& m, const VarNames& vars) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string monomial_latex(const Monomial& m, const VarNames& vars) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    out += vars[i];
    if (m[i] != 1) out += "^{" + std::to_string(m[i]) + "}";
  }
  return out;
}

template <typename MonoFn>
std::string poly_string(const LaurentPoly& p, MonoFn mono_fn, std::string_view times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = mono_fn(t.mono);
    if (mono.empty()) {
      out += coeff_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coeff_string(mag);
      out += times;
      out += mono;
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const RatFunc& value) {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& t : value.num().terms()) {
    num.push_back({t.mono[0], t.mono[1], t.mono[2], coeff_string(t.coeff)});
  }
  nlohmann::json den = nlohmann::json::array();
  for (const auto& f : value.den()) den.push_back({f.d[0], f.d[1], f.d[2], f.multiplicity});
  return {{"num", std::move(num)}, {"den", std::move(den)}};
}

RatFunc rat_func_from_json(const nlohmann::json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("num")) {
      if (!t.is_array() || t.size() != 4) throw ParseError("numerator term must have 4 entries");
      Monomial m(t[0].get<std::int32_t>(), t[1].get<std::int32_t>(), t[2].get<std::int32_t>());
      terms.push_back({m, Integer(t[3].get<std::string>())});
    }
    std::vector<DenomFactor> den;
    for (const auto& f : j.at("den")) {
      if (!f.is_array() || f.size() != 4) throw ParseError("denominator factor must have 4 entries");
      Monomial d(f[0].get<std::int32_t>(), f[1].get<std::int32_t>(), f[2].get<std::int32_t>());
      const int mult = f[3].get<int>();
      if (mult <= 0) throw ParseError("denominator multiplicity must be positive");
      den.push_back({d, mult});
    }
    return RatFunc(LaurentPoly::from_terms(std::move(terms)), den);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rational-function JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw ParseError(std::string("malformed coefficient: ") + e.what());
  }
}

std::string to_text(const LaurentPoly& p, const VarNames& vars) {
  return poly_string(p, [&](const Monomial& m) { return monomial_text(m, vars); }, "*");
}

std::string to_text(const RatFunc& value, const VarNames& vars) {
  if (value.is_polynomial()) return to_text(value.num(), vars);
  std::string den;
  for (const auto& f : value.den()) {
    if (!den.empty()) den += '*';
    den += "(1 - " + monomial_text(f.d, vars) + ")";
    if (f.multiplicity != 1) den += '^' + std::to_string(f.multiplicity);
  }
  const bool single = value.den().size() == 1 && value.den()[0].multiplicity == 1;
  return "(" + to_text(value.num(), vars) + ")/" + (single ? den : "(" + den + ")");
}

std::string to_latex(const RatFunc& value, const VarNames& vars) {
  const std::string num =
      poly_string(value.num(), [&](const Monomial& m) { return monomial_latex(m, vars); }, "");
  if (value.is_polynomial()) return num;
  std::string den;
  for (const auto& f : value.den()) {
    den += "(1 - " + monomial_latex(f.d, vars) + ")";
    if (f.multiplicity != 1) den += "^{" + std::to_string(f.multiplicity) + "}";
  }
  return "\\frac{" + num + "}{" + den + "}";
}

namespace {

// value = coeff * ∏ (1 - x^d)^e with e of either sign; keeps binomials
// factored so they can be divided out again.
struct Factored {
  LaurentPoly coeff;
  std::map<Monomial, int> binom;

  static Factored from(const RatFunc& r) {
    Factored f;
    f.coeff = r.num();
    for (const auto& d : r.den()) f.binom[d.d] -= d.multiplicity;
    f.extract_binomial();
    return f;
  }

  // c*m1 - c*m2 = c*m1*(1 - m2/m1)
  void extract_binomial() {
    if (coeff.size() != 2) return;
    const Term& lo = coeff.terms()[0];
    const Term& hi = coeff.terms()[1];
    if (lo.coeff != -hi.coeff) return;
    Monomial d = hi.mono / lo.mono;  // lex positive
    const Term base{lo.mono, lo.coeff};
    coeff = LaurentPoly::monomial(base.mono, base.coeff);
    binom[d] += 1;
  }

  RatFunc to_rat_func() const {
    LaurentPoly num = coeff;
    std::vector<DenomFactor> den;
    for (const auto& [d, e] : binom) {
      if (e > 0) num *= LaurentPoly::one_minus(d).pow(static_cast<unsigned>(e));
      if (e < 0) den.push_back({d, -e});
    }
    return RatFunc(std::move(num), den);
  }

  Factored& operator*=(const Factored& o) {
    coeff *= o.coeff;
    for (const auto& [d, e] : o.binom) binom[d] += e;
    return *this;
  }

  Factored& operator/=(const Factored& o) {
    if (o.coeff.is_zero()) throw ParseError("division by zero");
    if (!o.coeff.is_monomial()) {
      throw ParseError("divisor must be a monomial times binomials (1 - monomial)");
    }
    auto q = coeff.divide_exact(o.coeff);
    if (!q) throw ParseError("non-integral coefficient in division");
    coeff = std::move(*q);
    for (const auto& [d, e] : o.binom) binom[d] -= e;
    return *this;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const VarNames& vars) : s_(text), vars_(vars) {}

  RatFunc parse() {
    Factored v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v.to_rat_func();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Factored expr() {
    Factored acc = term();
    for (;;) {
      if (accept('+')) {
        acc = Factored::from(acc.to_rat_func() + term().to_rat_func());
      } else if (accept('-')) {
        acc = Factored::from(acc.to_rat_func() - term().to_rat_func());
      } else {
        return acc;
      }
    }
  }

  Factored term() {
    Factored acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        acc /= unary();
      } else {
        return acc;
      }
    }
  }

  Factored unary() {
    if (accept('-')) {
      Factored v = unary();
      v.coeff = -v.coeff;
      return v;
    }
    if (accept('+')) return unary();
    return power();
  }

  Factored power() {
    Factored base = primary();
    if (!accept('^')) return base;
    const bool braced = accept('{') || accept('(');
    const long e = signed_int();
    if (braced && !(accept('}') || accept(')'))) fail("unbalanced exponent");
    Factored out;
    out.coeff = LaurentPoly(1);
    const long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) out *= base;
    if (e < 0) {
      Factored one;
      one.coeff = LaurentPoly(1);
      one /= out;
      return one;
    }
    return out;
  }

  long signed_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Factored primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Factored v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    Factored out;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      out.coeff = LaurentPoly(Integer(std::string(s_.substr(start, pos_ - start))));
      out.extract_binomial();
      return out;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const auto name = vars_[i];
      if (s_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        out.coeff = LaurentPoly::var(i);
        return out;
      }
    }
    fail("unknown symbol");
  }

  std::string_view s_;
  const VarNames& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_rat_func(std::string_view text, const VarNames& vars) {
  return Parser(text, vars).parse();
}

}  // namespace torushom
