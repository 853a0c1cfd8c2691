#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torushom/rat_func.hpp"
#include "torushom/state.hpp"

namespace torushom {

enum class RuleId { R1, R2, R3, R4, R5, R6, R7, Base };

std::string_view to_string(RuleId r);

/// Selects the unique rule applicable to `state` from its last bits, its
/// ones-count and whether σ fixes its last point. Throws InvalidState when
/// exactly one word is empty.
RuleId dispatch(const State& state);

/// One outgoing edge of a rule application: value(state) += coefficient * value(next).
struct Transition {
  RatFunc coefficient;
  State next;
};

struct Expansion {
  RuleId rule;
  std::vector<Transition> children;  // empty for Base
};

/// Applies the dispatched rule once.
Expansion expand(const State& state);

/// Human-readable summary of the permutation conventions the engine uses;
/// the cache fingerprint is derived from it.
std::string_view convention_descriptor();
/// 16 hex digits (FNV-1a 64 of convention_descriptor()).
std::string convention_fingerprint();

struct MemoKey {
  Theory theory = Theory::Column;
  std::string v;
  std::string w;
  std::vector<std::uint8_t> sigma;

  static MemoKey of(const State& s);
  State to_state() const;

  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept;
};

/// Thread-safe memo of evaluated states. Entries are write-once: a second
/// insert of an existing key keeps the first value.
class MemoTable {
 public:
  std::optional<RatFunc> get(const MemoKey& key) const;
  /// Returns true if the key was new.
  bool insert(const MemoKey& key, RatFunc value);
  std::size_t size() const;
  void clear();
  /// Snapshot sorted by key.
  std::vector<std::pair<MemoKey, RatFunc>> entries() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, RatFunc, MemoKeyHash> map_;
};

struct EngineOptions {
  bool memoize = true;
  /// Recursion depth guard; defaults to (|v| + |w| + 1)^3 of the root state.
  std::optional<std::size_t> depth_limit;
};

/// Memoized evaluator of the state recursion for both theories.
///
/// Evaluation is pure apart from the memo table, so one Engine may be used
/// from several threads at once.
class Engine {
 public:
  explicit Engine(EngineOptions options = {});
  Engine(std::shared_ptr<MemoTable> memo, EngineOptions options = {});

  /// Throws InvalidState, CycleDetected or DepthExceeded.
  RatFunc evaluate(const State& state) const;

  MemoTable& memo() const { return *memo_; }
  const std::shared_ptr<MemoTable>& memo_ptr() const { return memo_; }
  const EngineOptions& options() const { return options_; }
  /// Number of rule applications performed so far (memo hits excluded).
  std::uint64_t expansions() const { return expansions_.load(std::memory_order_relaxed); }

 private:
  struct Frame;
  RatFunc eval(const State& state, Frame& frame) const;

  std::shared_ptr<MemoTable> memo_;
  EngineOptions options_;
  mutable std::atomic<std::uint64_t> expansions_{0};
};

/// Column-theory value of `state` (its theory tag must be Column).
RatFunc p_column(const State& state, const Engine& engine);
/// Row-theory value of `state` (its theory tag must be Row).
RatFunc p_row(const State& state, const Engine& engine);

struct DerivationNode {
  State state;
  RuleId rule;
  /// Coefficient on the edge from the parent (1 at the root).
  RatFunc coefficient;
  std::vector<DerivationNode> children;
};

/// Full derivation tree. Shared subtrees are expanded repeatedly, so the
/// result is exponential in the word length; throws DepthExceeded beyond
/// `max_nodes` nodes.
DerivationNode explain(const State& state, std::size_t max_nodes = 100000);

/// Indented one-node-per-line rendering of a derivation tree.
std::string render_derivation(const DerivationNode& root);

}  // namespace torushom
