#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "support/test_support.hpp"
#include "torushom/engine.hpp"
#include "torushom/errors.hpp"
#include "torushom/memo_cache.hpp"

namespace torushom {
namespace {

State S(const char* v, const char* w, const char* sigma, Theory t = Theory::Column) {
  return State(Word(v), Word(w), Permutation::parse(sigma), t);
}

TEST(Dispatch, Examples) {
  EXPECT_EQ(dispatch(S("1", "1", "1")), RuleId::R1);
  EXPECT_EQ(dispatch(S("11", "11", "1,2")), RuleId::R2);
  EXPECT_EQ(dispatch(S("11", "11", "2,1")), RuleId::R3);
  EXPECT_EQ(dispatch(S("10", "10", "1")), RuleId::R7);
  EXPECT_EQ(dispatch(S("10", "01", "1")), RuleId::R4);
  EXPECT_EQ(dispatch(S("01", "10", "1")), RuleId::R5);
  EXPECT_EQ(dispatch(S("00", "000", "")), RuleId::R6);
  EXPECT_EQ(dispatch(S("", "", "")), RuleId::Base);
  EXPECT_THROW(dispatch(S("0", "", "")), InvalidState);
}

TEST(Dispatch, ExactlyOneRuleOnValidStates) {
  for (const auto& s : testing::all_states(4, 3)) EXPECT_NE(dispatch(s), RuleId::Base);
}

TEST(PColumn, Examples) {
  Engine engine;
  EXPECT_EQ(p_column(S("1", "1", "1"), engine), parse_rat_func("(1 + A)/((1 - Q)*(1 - T))"));
  EXPECT_EQ(p_column(S("11", "11", "1,2"), engine), parse_rat_func("(1 + A)*(Q + A)/((1 - Q)^2*(1 - T))"));
  EXPECT_EQ(p_column(S("10", "10", "1"), engine),
            parse_rat_func("(1 + A)*(Q + A + T - Q*T)/(Q*(1 - Q)^2*(1 - T)^2)"));
  EXPECT_EQ(p_column(S("", "", ""), engine), RatFunc(1));
  EXPECT_THROW(p_column(S("1", "1", "1", Theory::Row), engine), InvalidInput);
}

TEST(PRow, Examples) {
  Engine engine;
  EXPECT_EQ(p_row(S("1", "1", "1", Theory::Row), engine), parse_rat_func("(1 + A)/((1 - Q)*(1 - T))"));
  EXPECT_EQ(p_row(S("11", "11", "1,2", Theory::Row), engine),
            parse_rat_func("(1 + A)*(T + A)/((1 - T)^2*(1 - Q))"));
}

TEST(PRow, IsSwapOfColumn) {
  Engine engine;
  for (const auto& s : testing::all_states(6, 2)) {
    RatFunc col, row;
    try {
      col = p_column(s, engine);
    } catch (const InvalidState&) {
      EXPECT_THROW(p_row(s.with_theory(Theory::Row), engine), InvalidState);
      continue;
    }
    row = p_row(s.with_theory(Theory::Row), engine);
    ASSERT_EQ(row, col.swap_QT()) << s.to_string();
  }
}

TEST(Engine, R6Coherence) {
  Engine engine;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const State zero(Word::repeat('0', m), Word::repeat('0', n), Permutation());
      const State lifted(Word("1").concat(Word::repeat('0', m - 1)), Word("1").concat(Word::repeat('0', n - 1)),
                         Permutation::identity(1));
      EXPECT_EQ(engine.evaluate(zero), engine.evaluate(lifted));
    }
  }
}

TEST(Engine, MemoMatchesNoMemo) {
  Engine memo;
  Engine plain(EngineOptions{false, std::nullopt});
  std::size_t evaluated = 0;
  for (const auto& s : testing::all_states(5, 3)) {
    bool memo_invalid = false;
    bool plain_invalid = false;
    RatFunc a, b;
    try {
      a = memo.evaluate(s);
    } catch (const InvalidState&) {
      memo_invalid = true;
    }
    try {
      b = plain.evaluate(s);
    } catch (const InvalidState&) {
      plain_invalid = true;
    }
    ASSERT_EQ(memo_invalid, plain_invalid) << s.to_string();
    if (!memo_invalid) {
      ASSERT_EQ(a, b) << s.to_string();
      ++evaluated;
    }
  }
  EXPECT_GT(evaluated, 1000u);
  EXPECT_EQ(plain.memo().size(), 0u);
}

TEST(Engine, NoCycleOnLongWords) {
  Engine engine;
  for (const auto& s : testing::all_states(8, 1)) {
    try {
      engine.evaluate(s);
    } catch (const InvalidState&) {
    }
  }
  SUCCEED();
}

TEST(Engine, DepthLimit) {
  Engine engine(EngineOptions{true, 2});
  EXPECT_THROW(engine.evaluate(S("100", "1000", "1")), DepthExceeded);
}

TEST(Engine, DeterministicAcrossThreads) {
  const State s = S("1000", "10000", "1");
  Engine reference;
  const RatFunc expected = reference.evaluate(s);
  auto shared = std::make_shared<MemoTable>();
  std::vector<RatFunc> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      Engine e(shared);
      results[t] = e.evaluate(s);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

TEST(Explain, Trees) {
  const DerivationNode one = explain(S("1", "1", "1"));
  EXPECT_EQ(one.rule, RuleId::R1);
  ASSERT_EQ(one.children.size(), 1u);
  EXPECT_EQ(one.children[0].rule, RuleId::Base);

  const DerivationNode zero = explain(S("0", "0", ""));
  EXPECT_EQ(zero.rule, RuleId::R6);
  ASSERT_EQ(zero.children.size(), 1u);
  EXPECT_EQ(zero.children[0].rule, RuleId::R1);
  EXPECT_EQ(zero.children[0].children[0].rule, RuleId::Base);

  const DerivationNode r7 = explain(S("10", "10", "1"));
  EXPECT_EQ(r7.rule, RuleId::R7);
  EXPECT_EQ(r7.children.size(), 2u);
  EXPECT_NE(render_derivation(r7).find("R7 \"10\" \"10\" [1]"), std::string::npos);
  EXPECT_THROW(explain(S("10000", "100000", "1"), 5), DepthExceeded);
}

TEST(Convention, Fingerprint) {
  EXPECT_EQ(convention_fingerprint().size(), 16u);
  EXPECT_EQ(convention_fingerprint(), convention_fingerprint());
}

class CacheFile : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("torushom_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".jsonl");
    std::filesystem::remove(path_);
  }
  void TearDown() override { std::filesystem::remove(path_); }
  std::filesystem::path path_;
};

TEST_F(CacheFile, RoundTrip) {
  Engine engine;
  engine.evaluate(S("100", "1000", "1"));
  engine.evaluate(S("100", "1000", "1", Theory::Row));
  const CacheStoreResult stored = cache_store(path_, engine.memo());
  EXPECT_EQ(stored.appended, engine.memo().size());

  MemoTable loaded;
  const CacheLoadResult r = cache_load(path_, loaded);
  EXPECT_EQ(r.loaded, engine.memo().size());
  EXPECT_EQ(r.skipped, 0u);
  const auto a = engine.memo().entries();
  const auto b = loaded.entries();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(a[i].second, b[i].second);
  }

  const CacheStoreResult again = cache_store(path_, engine.memo());
  EXPECT_EQ(again.appended, 0u);
  EXPECT_EQ(again.already_present, a.size());
}

TEST_F(CacheFile, MissingAndEmptyFilesAreEmpty) {
  MemoTable table;
  EXPECT_EQ(cache_load(path_, table).loaded, 0u);
  std::ofstream(path_).close();
  EXPECT_EQ(cache_load(path_, table).loaded, 0u);
  EXPECT_EQ(table.size(), 0u);
}

TEST_F(CacheFile, WrongFingerprintRefused) {
  std::ofstream(path_) << R"({"torushom_memo":1,"fingerprint":"0000000000000000"})" << "\n";
  MemoTable table;
  EXPECT_THROW(cache_load(path_, table), FingerprintMismatch);
}

TEST_F(CacheFile, CorruptLinesSkipped) {
  Engine engine;
  engine.evaluate(S("1", "1", "1"));
  cache_store(path_, engine.memo());
  std::ofstream(path_, std::ios::app) << "{not json\n" << R"({"theory":"column","v":"1"})" << "\n";
  MemoTable table;
  const CacheLoadResult r = cache_load(path_, table);
  EXPECT_EQ(r.loaded, engine.memo().size());
  EXPECT_EQ(r.skipped, 2u);
  EXPECT_EQ(r.warnings.size(), 2u);
}

TEST_F(CacheFile, LoadedEntriesServeEvaluation) {
  Engine first;
  const RatFunc value = first.evaluate(S("1000", "100", "1"));
  cache_store(path_, first.memo());
  auto table = std::make_shared<MemoTable>();
  cache_load(path_, *table);
  Engine second(table);
  EXPECT_EQ(second.evaluate(S("1000", "100", "1")), value);
  EXPECT_EQ(second.expansions(), 0u);
}

}  // namespace
}  // namespace torushom
