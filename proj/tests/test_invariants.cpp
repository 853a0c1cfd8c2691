#include <gtest/gtest.h>

#include <numeric>

#include "support/test_support.hpp"
#include "torushom/errors.hpp"
#include "torushom/format.hpp"
#include "torushom/torus.hpp"

namespace torushom {
namespace {

RatFunc rf(const char* s) { return parse_rat_func(s); }

class Invariants : public ::testing::Test {
 protected:
  Engine engine;
  RatFunc column(std::size_t m, std::size_t n, std::size_t k) {
    return column_invariant({m, n, k, Theory::Column}, engine);
  }
  RatFunc row(std::size_t m, std::size_t n, std::size_t k) { return row_invariant({m, n, k, Theory::Row}, engine); }
};

TEST(TorusState, Examples) {
  EXPECT_EQ(torus_state({1, 1, 3}), State(Word("111"), Word("111"), Permutation::identity(3)));
  EXPECT_EQ(torus_state({2, 3, 1}), State(Word("10"), Word("100"), Permutation::identity(1)));
  EXPECT_EQ(torus_state({2, 2, 2}), State(Word("110"), Word("110"), Permutation::identity(2)));
  EXPECT_EQ(torus_state({3, 4, 2}), State(Word("11" + std::string(4, '0')), Word("11" + std::string(6, '0')),
                                          Permutation::identity(2)));
  EXPECT_THROW(torus_state({0, 1, 1}), InvalidInput);
  EXPECT_EQ((TorusLinkSpec{4, 6, 1}).components(), 2u);
}

TEST_F(Invariants, ColumnUnknot) {
  EXPECT_EQ(column(1, 1, 1), rf("(1 + A)/((1 - Q)*(1 - T))"));
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(column(1, 1, k), column_unknot_closed_form(k)) << k;
}

TEST_F(Invariants, ColumnK1IsUncoloredState) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const State zero(Word::repeat('0', m), Word::repeat('0', n), Permutation());
      EXPECT_EQ(column(m, n, 1), p_column(zero, engine));
    }
  }
}

TEST_F(Invariants, RowUnknot) {
  EXPECT_EQ(row(1, 1, 1), rf("(1 + A)/((1 - Q)*(1 - T))"));
  EXPECT_EQ(row(1, 1, 1), row_unknot_closed_form(1));
  // The row theory is the Q <-> T image of the column theory.
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(row(1, 1, k), column_unknot_closed_form(k).swap_QT()) << k;
}

TEST_F(Invariants, RowIsStructuralSwap) {
  EXPECT_EQ(row(2, 3, 1), column(2, 3, 1).swap_QT());
  EXPECT_EQ(invariant({2, 3, 1, Theory::Row}, engine), row(2, 3, 1));
  EXPECT_THROW(column_invariant({2, 3, 1, Theory::Row}, engine), InvalidInput);
}

TEST_F(Invariants, Reduced) {
  EXPECT_EQ(reduced_invariant(column(1, 1, 1), 1), RatFunc(1));
  EXPECT_EQ(reduced_invariant(column(1, 1, 2), 1), rf("(Q + A)/((1 - Q)*(1 - Q^-1*T))"));
  const RatFunc trefoil = reduced_invariant(column(2, 3, 1), 1);
  EXPECT_EQ(trefoil, rf("(A + Q + T)/Q"));
  EXPECT_TRUE(trefoil.is_polynomial());
  EXPECT_THROW(reduced_invariant(RatFunc(LaurentPoly(1) + LaurentPoly::var(kVarQ)), 1), NotDivisible);
}

TEST_F(Invariants, KnotPositivity) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const RatFunc r = reduced_invariant(column(m, n, 1), 1);
      ASSERT_TRUE(r.is_polynomial()) << m << "," << n;
      for (const auto& t : r.num().terms()) EXPECT_GT(t.coeff, 0) << m << "," << n;
    }
  }
}

TEST_F(Invariants, MirrorExamples) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const UnitCheck c = mirror_verify(1, 1, k, engine);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(*c.unit, (Unit{1, Monomial()}));
  }
  EXPECT_TRUE(mirror_verify(2, 2, 1, engine).pass);
  EXPECT_TRUE(mirror_verify(2, 3, 2, engine).pass);
}

TEST_F(Invariants, UncoloredSelfMirrorHasNontrivialUnit) {
  const UnitCheck c = uncolored_mirror_verify(2, 2, engine);
  ASSERT_TRUE(c.pass);
  EXPECT_TRUE(c.unit->mono == Monomial(0, 1, -1) || c.unit->mono == Monomial(0, -1, 1));

  const RatFunc p = p_column(State(Word("10"), Word("10"), Permutation::identity(1)), engine);
  auto u = equal_up_to_monomial(p.swap_QT(), p);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->sign, 1);
  EXPECT_TRUE(u->mono == Monomial(0, 1, -1) || u->mono == Monomial(0, -1, 1));
}

TEST_F(Invariants, Invariance) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(invariance_verify(m, n, 2, engine).pass) << m << "," << n;
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize_homfly(RatFunc(1)), RatFunc(1));
  EXPECT_EQ(specialize_homfly(rf("(1 - T)/(1 - Q)")), RatFunc(-LaurentPoly::var(kVarQ, -1)));
  EXPECT_THROW(specialize_homfly(rf("1/(1 - Q*T)")), ZeroDenominator);
}

TEST(Specialize, TwistAndHalving) {
  EXPECT_EQ(twist_a(rf("1 + A + A^2*Q"), -1), rf("1 - A + A^2*Q"));
  EXPECT_EQ(twist_a(rf("A"), 1), rf("A"));
  const RatFunc h = halve_oracle_exponents(parse_rat_func("a^2*q^2 + a^2*q^-2 - a^4", kHeckeVars));
  EXPECT_EQ(h, rf("A*Q + A*Q^-1 - A^2"));
  EXPECT_EQ(halve_oracle_exponents(parse_rat_func("a^2/(1 - q^2)", kHeckeVars)), rf("A/(1 - Q)"));
  EXPECT_THROW(halve_oracle_exponents(RatFunc(LaurentPoly::var(0))), InternalContradiction);
}

TEST_F(Invariants, HomflyCalibrationAndAgreement) {
  EXPECT_EQ(calibrate_homfly_twist(engine), kHomflyTwist);
  for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}}) {
    EXPECT_TRUE(homfly_verify(m, n, engine).pass) << m << "," << n;
  }
  EXPECT_FALSE(homfly_verify(2, 3, engine, 1).pass);
}

TEST_F(Invariants, HrwRatio) {
  const UnitCheck k1 = hrw_ratio_check(1, engine);
  ASSERT_TRUE(k1.pass);
  EXPECT_EQ(k1.unit->mono, Monomial());
  const UnitCheck k2 = hrw_ratio_check(2, engine);
  ASSERT_TRUE(k2.pass);
  EXPECT_EQ(k2.unit->mono, Monomial::var(kVarQ, 1));
  for (std::size_t k = 3; k <= 5; ++k) {
    const UnitCheck c = hrw_ratio_check(k, engine);
    ASSERT_TRUE(c.pass);
    EXPECT_EQ(c.unit->mono, Monomial::var(kVarQ, static_cast<std::int32_t>(k * (k - 1) / 2)));
  }
}

TEST_F(Invariants, ReportJsonAndLatex) {
  const InvariantReport r = make_report({2, 3, 1, Theory::Column}, engine, true);
  const nlohmann::json j = to_json(r);
  for (const char* key : {"m", "n", "k", "theory", "value", "reduced", "unit_vs_mirror"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["theory"], "column");
  EXPECT_EQ(rat_func_from_json(j["value"]), r.value);
  EXPECT_EQ(rat_func_from_json(j["reduced"]), rf("(A + Q + T)/Q"));
  EXPECT_EQ(j["unit_vs_mirror"]["sign"], 1);
  const std::string tex = to_latex(r);
  EXPECT_NE(tex.find("\\frac{"), std::string::npos);
  EXPECT_NE(tex.find("T(2, 3)"), std::string::npos);

  const InvariantReport plain = make_report({1, 1, 1, Theory::Row}, engine, false, false);
  EXPECT_TRUE(to_json(plain)["reduced"].is_null());
  EXPECT_TRUE(to_json(plain)["unit_vs_mirror"].is_null());
}

}  // namespace
}  // namespace torushom
