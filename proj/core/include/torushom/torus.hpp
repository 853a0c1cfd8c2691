#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "torushom/engine.hpp"
#include "torushom/rat_func.hpp"
#include "torushom/state.hpp"

namespace torushom {

/// Positive torus link T(m, n) with the first component colored by the
/// k-th column (exterior) or row (symmetric) partition.
struct TorusLinkSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;
  Theory theory = Theory::Column;

  /// Throws InvalidInput unless m, n, k ≥ 1.
  void validate() const;
  /// gcd(m, n), also the number of components.
  std::size_t components() const;
};

/// (1^k 0^a, 1^k 0^b, e) with a = (m/d)(d-1) + k(m/d - 1), b likewise for n.
State torus_state(const TorusLinkSpec& spec);

/// ∏_{i=2}^k 1/(1 - Q^{1-i} T)
RatFunc column_prefactor(std::size_t k);
/// ∏_{i=2}^k 1/(1 - Q T^{1-i})
RatFunc row_prefactor(std::size_t k);

RatFunc column_invariant(const TorusLinkSpec& spec, const Engine& engine);
RatFunc row_invariant(const TorusLinkSpec& spec, const Engine& engine);
/// Dispatches on spec.theory.
RatFunc invariant(const TorusLinkSpec& spec, const Engine& engine);

/// ∏_{i=1}^k (Q^{i-1} + A)/((1 - Q)(1 - Q^{1-i} T))
RatFunc column_unknot_closed_form(std::size_t k);
/// ∏_{i=1}^k (T^{i-1} + A)/((1 - T)(1 - Q T^{i-1}))
RatFunc row_unknot_closed_form(std::size_t k);
/// [k]! ∏_{i=1}^k (1 + A Q^{1-i})/((1 - Q^i)(1 - T Q^{1-i}))
RatFunc hrw_unknot(std::size_t k);

/// value · (1 - T)^r (1 - Q) / (1 + A). Throws NotDivisible.
RatFunc reduced_invariant(const RatFunc& value, std::size_t components);

/// T ↦ Q^-1. Throws ZeroDenominator.
RatFunc specialize_homfly(const RatFunc& value);

/// Sign of the A ↦ ±A twist that matches the specialized invariant with the
/// Hecke oracle. Fixed once by calibrate_homfly_twist on unknot and trefoil.
inline constexpr int kHomflyTwist = -1;

/// A ↦ sign·A on a polynomial or rational function in (A, Q).
RatFunc twist_a(const RatFunc& value, int sign);

/// Oracle value in (a, q) re-expressed in (A, Q) := (a^2, q^2).
/// Throws InternalContradiction on an odd exponent.
RatFunc halve_oracle_exponents(const RatFunc& p);

/// Outcome of an up-to-unit comparison.
struct UnitCheck {
  std::optional<Unit> unit;
  bool pass = false;
};

/// equal_up_to_monomial(swap_QT(row), column); pass iff the sign is +.
UnitCheck mirror_verify(std::size_t m, std::size_t n, std::size_t k, const Engine& engine);
/// column(m, n, k) against column(n, m, k); pass iff the sign is +.
UnitCheck invariance_verify(std::size_t m, std::size_t n, std::size_t k, const Engine& engine);
/// p_e(0^m, 0^n) against its own Q ↔ T swap; pass iff the sign is +.
UnitCheck uncolored_mirror_verify(std::size_t m, std::size_t n, const Engine& engine);
/// column(1, 1, k) against hrw_unknot(k); pass iff the sign is + (the unit
/// is expected to be Q^{k(k-1)/2}).
UnitCheck hrw_ratio_check(std::size_t k, const Engine& engine);

struct HomflyCheck {
  RatFunc specialized;  // twisted, in (A, Q)
  RatFunc oracle;       // halved, in (A, Q)
  std::optional<Unit> unit;
  bool pass = false;
};

/// Specialized reduced column invariant of T(m, n) (twisted by `twist`)
/// against homfly_torus(m, n); pass iff any unit exists.
HomflyCheck homfly_verify(std::size_t m, std::size_t n, const Engine& engine, int twist = kHomflyTwist);

/// Returns the unique sign s ∈ {+1, -1} for which A ↦ sA makes both the unknot
/// and the trefoil agree with the oracle. Throws InternalContradiction if no
/// sign or both signs work.
int calibrate_homfly_twist(const Engine& engine);

struct InvariantReport {
  TorusLinkSpec spec;
  RatFunc value;
  std::optional<RatFunc> reduced;
  std::optional<Unit> unit_vs_mirror;
  std::string normalization_note;
};

/// Evaluates `spec`, optionally reduces, and compares against the mirror theory.
InvariantReport make_report(const TorusLinkSpec& spec, const Engine& engine, bool reduced,
                            bool with_mirror = true);

nlohmann::json to_json(const Unit& unit);
nlohmann::json to_json(const InvariantReport& report);
/// A displayed equation with factored denominators.
std::string to_latex(const InvariantReport& report);
std::string to_text(const InvariantReport& report);

}  // namespace torushom
