#include "torushom/torus.hpp"

#include <numeric>

#include "torushom/errors.hpp"
#include "torushom/format.hpp"
#include "torushom/hecke.hpp"

namespace torushom {

namespace {

constexpr std::string_view kNormalizationNote =
    "graded dimension determined up to an overall sign and monomial in (A, Q, T)";

RatFunc one_over(const Monomial& d) { return RatFunc::inverse_one_minus(d); }

UnitCheck positive_unit(const RatFunc& a, const RatFunc& b) {
  UnitCheck out;
  out.unit = equal_up_to_monomial(a, b);
  out.pass = out.unit.has_value() && out.unit->sign == 1;
  return out;
}

}  // namespace

void TorusLinkSpec::validate() const {
  if (m == 0 || n == 0 || k == 0) throw InvalidInput("torus link parameters m, n, k must be >= 1");
  if (m > 255 || n > 255 || k > 255) throw InvalidInput("torus link parameters must be < 256");
}

std::size_t TorusLinkSpec::components() const { return std::gcd(m, n); }

State torus_state(const TorusLinkSpec& spec) {
  spec.validate();
  const std::size_t d = spec.components();
  const std::size_t k = spec.k;
  auto zeros = [&](std::size_t x) { return (x / d) * (d - 1) + k * (x / d - 1); };
  const Word ones = Word::repeat('1', k);
  return State(ones.concat(Word::repeat('0', zeros(spec.m))), ones.concat(Word::repeat('0', zeros(spec.n))),
               Permutation::identity(k), spec.theory);
}

RatFunc column_prefactor(std::size_t k) {
  RatFunc out(1);
  for (std::size_t i = 2; i <= k; ++i) out *= one_over(Monomial(0, 1 - static_cast<std::int32_t>(i), 1));
  return out;
}

RatFunc row_prefactor(std::size_t k) {
  RatFunc out(1);
  for (std::size_t i = 2; i <= k; ++i) out *= one_over(Monomial(0, 1, 1 - static_cast<std::int32_t>(i)));
  return out;
}

RatFunc column_invariant(const TorusLinkSpec& spec, const Engine& engine) {
  if (spec.theory != Theory::Column) throw InvalidInput("column_invariant expects theory = column");
  return column_prefactor(spec.k) * p_column(torus_state(spec), engine);
}

RatFunc row_invariant(const TorusLinkSpec& spec, const Engine& engine) {
  if (spec.theory != Theory::Row) throw InvalidInput("row_invariant expects theory = row");
  return row_prefactor(spec.k) * p_row(torus_state(spec), engine);
}

RatFunc invariant(const TorusLinkSpec& spec, const Engine& engine) {
  return spec.theory == Theory::Column ? column_invariant(spec, engine) : row_invariant(spec, engine);
}

RatFunc column_unknot_closed_form(std::size_t k) {
  RatFunc out(1);
  for (std::size_t i = 1; i <= k; ++i) {
    const auto e = static_cast<std::int32_t>(i) - 1;
    out *= RatFunc(LaurentPoly::var(kVarQ, e) + LaurentPoly::var(kVarA)) * one_over(Monomial(0, 1, 0)) *
           one_over(Monomial(0, -e, 1));
  }
  return out;
}

RatFunc row_unknot_closed_form(std::size_t k) {
  RatFunc out(1);
  for (std::size_t i = 1; i <= k; ++i) {
    const auto e = static_cast<std::int32_t>(i) - 1;
    out *= RatFunc(LaurentPoly::var(kVarT, e) + LaurentPoly::var(kVarA)) * one_over(Monomial(0, 0, 1)) *
           one_over(Monomial(0, 1, e));
  }
  return out;
}

RatFunc hrw_unknot(std::size_t k) {
  RatFunc out(gaussian_factorial(static_cast<unsigned>(k)));
  for (std::size_t i = 1; i <= k; ++i) {
    const auto e = static_cast<std::int32_t>(i);
    out *= RatFunc(LaurentPoly(1) + LaurentPoly::monomial(Monomial(1, 1 - e, 0))) *
           one_over(Monomial(0, e, 0)) * one_over(Monomial(0, 1 - e, 1));
  }
  return out;
}

RatFunc reduced_invariant(const RatFunc& value, std::size_t components) {
  LaurentPoly factor = LaurentPoly::one_minus(Monomial::var(kVarT)).pow(static_cast<unsigned>(components)) *
                       LaurentPoly::one_minus(Monomial::var(kVarQ));
  return (value * RatFunc(std::move(factor))).div_exact(LaurentPoly(1) + LaurentPoly::var(kVarA));
}

RatFunc specialize_homfly(const RatFunc& value) { return value.subst(kVarT, Monomial::var(kVarQ, -1)); }

RatFunc twist_a(const RatFunc& value, int sign) {
  if (sign == 1) return value;
  if (sign != -1) throw InvalidInput("twist sign must be +1 or -1");
  std::vector<Term> terms;
  for (const auto& t : value.num().terms()) terms.push_back({t.mono, t.mono[kVarA] % 2 == 0 ? t.coeff : Integer(-t.coeff)});
  for (const auto& f : value.den()) {
    if (f.d[kVarA] % 2 != 0) throw InvalidInput("A -> -A twist of a denominator with odd A exponent");
  }
  return RatFunc(LaurentPoly::from_terms(std::move(terms)), value.den());
}

RatFunc halve_oracle_exponents(const RatFunc& p) {
  auto halve = [](const Monomial& x) {
    if (x[0] % 2 != 0 || x[1] % 2 != 0 || x[2] != 0) {
      throw InternalContradiction("oracle value has an odd exponent");
    }
    return Monomial(x[0] / 2, x[1] / 2, 0);
  };
  std::vector<Term> terms;
  for (const auto& t : p.num().terms()) terms.push_back({halve(t.mono), t.coeff});
  std::vector<DenomFactor> den;
  for (const auto& f : p.den()) den.push_back({halve(f.d), f.multiplicity});
  return RatFunc(LaurentPoly::from_terms(std::move(terms)), den);
}

UnitCheck mirror_verify(std::size_t m, std::size_t n, std::size_t k, const Engine& engine) {
  const RatFunc col = column_invariant({m, n, k, Theory::Column}, engine);
  const RatFunc row = row_invariant({m, n, k, Theory::Row}, engine);
  return positive_unit(row.swap_QT(), col);
}

UnitCheck invariance_verify(std::size_t m, std::size_t n, std::size_t k, const Engine& engine) {
  return positive_unit(column_invariant({m, n, k, Theory::Column}, engine),
                       column_invariant({n, m, k, Theory::Column}, engine));
}

UnitCheck uncolored_mirror_verify(std::size_t m, std::size_t n, const Engine& engine) {
  if (m == 0 || n == 0) throw InvalidInput("m and n must be >= 1");
  const RatFunc p = p_column(
      State(Word::repeat('0', m), Word::repeat('0', n), Permutation(), Theory::Column), engine);
  return positive_unit(p, p.swap_QT());
}

UnitCheck hrw_ratio_check(std::size_t k, const Engine& engine) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  return positive_unit(column_invariant({1, 1, k, Theory::Column}, engine), hrw_unknot(k));
}

HomflyCheck homfly_verify(std::size_t m, std::size_t n, const Engine& engine, int twist) {
  const TorusLinkSpec spec{m, n, 1, Theory::Column};
  const RatFunc reduced = reduced_invariant(column_invariant(spec, engine), spec.components());
  HomflyCheck out{twist_a(specialize_homfly(reduced), twist), halve_oracle_exponents(hecke::homfly_torus(m, n)),
                  std::nullopt, false};
  out.unit = equal_up_to_monomial(out.specialized, out.oracle);
  out.pass = out.unit.has_value();
  return out;
}

int calibrate_homfly_twist(const Engine& engine) {
  std::vector<int> matching;
  for (int sign : {1, -1}) {
    if (homfly_verify(1, 1, engine, sign).pass && homfly_verify(2, 3, engine, sign).pass) {
      matching.push_back(sign);
    }
  }
  if (matching.size() != 1) {
    throw InternalContradiction("HOMFLYPT twist calibration found " + std::to_string(matching.size()) +
                                " matching signs");
  }
  return matching.front();
}

InvariantReport make_report(const TorusLinkSpec& spec, const Engine& engine, bool reduced, bool with_mirror) {
  InvariantReport out{spec, invariant(spec, engine), std::nullopt, std::nullopt, std::string(kNormalizationNote)};
  if (reduced) out.reduced = reduced_invariant(out.value, spec.components());
  if (with_mirror) {
    TorusLinkSpec other = spec;
    other.theory = spec.theory == Theory::Column ? Theory::Row : Theory::Column;
    out.unit_vs_mirror = equal_up_to_monomial(out.value, invariant(other, engine).swap_QT());
  }
  return out;
}

nlohmann::json to_json(const Unit& unit) {
  return {{"sign", unit.sign}, {"monomial", {unit.mono[0], unit.mono[1], unit.mono[2]}}};
}

nlohmann::json to_json(const InvariantReport& report) {
  nlohmann::json j;
  j["m"] = report.spec.m;
  j["n"] = report.spec.n;
  j["k"] = report.spec.k;
  j["theory"] = std::string(to_string(report.spec.theory));
  j["value"] = to_json(report.value);
  j["reduced"] = report.reduced ? to_json(*report.reduced) : nlohmann::json(nullptr);
  j["unit_vs_mirror"] = report.unit_vs_mirror ? to_json(*report.unit_vs_mirror) : nlohmann::json(nullptr);
  j["normalization"] = report.normalization_note;
  return j;
}

std::string to_latex(const InvariantReport& report) {
  const auto& s = report.spec;
  const std::string color = s.theory == Theory::Column ? "\\wedge^{" : "\\mathrm{Sym}^{";
  std::string out = "\\[\n  \\mathcal{P}^{y}_{" + color + std::to_string(s.k) + "}}(T(" + std::to_string(s.m) +
                    ", " + std::to_string(s.n) + ")) = " + to_latex(report.value) + "\n\\]\n";
  if (report.reduced) {
    out += "\\[\n  \\overline{\\mathcal{P}}^{y}_{" + color + std::to_string(s.k) + "}}(T(" + std::to_string(s.m) +
           ", " + std::to_string(s.n) + ")) = " + to_latex(*report.reduced) + "\n\\]\n";
  }
  return out;
}

std::string to_text(const InvariantReport& report) {
  const auto& s = report.spec;
  std::string out = "T(" + std::to_string(s.m) + "," + std::to_string(s.n) + ") k=" + std::to_string(s.k) + " " +
                    std::string(to_string(s.theory)) + ": " + to_text(report.value) + "\n";
  if (report.reduced) out += "reduced: " + to_text(*report.reduced) + "\n";
  return out;
}

}  // namespace torushom
