#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "torushom/permutation.hpp"
#include "torushom/word.hpp"

namespace torushom {

/// Column-colored (exterior power) or row-colored (symmetric power) theory.
enum class Theory { Column, Row };

std::string_view to_string(Theory t);
/// "column" or "row"; throws InvalidInput otherwise.
Theory parse_theory(std::string_view text);

/// Argument (v, w, σ) of the recursion, with ones(v) = ones(w) = |σ|.
class State {
 public:
  /// Throws InvalidState if the ones-counts disagree with each other or with |σ|.
  State(Word v, Word w, Permutation sigma, Theory theory = Theory::Column);

  const Word& v() const { return v_; }
  const Word& w() const { return w_; }
  const Permutation& sigma() const { return sigma_; }
  Theory theory() const { return theory_; }
  /// Number of ones in each word (= |σ|).
  std::size_t ones() const { return sigma_.size(); }

  State with_theory(Theory t) const { return State(v_, w_, sigma_, t); }

  /// "(v, w, σ)" for diagnostics.
  std::string to_string() const;

  friend auto operator<=>(const State&, const State&) = default;

 private:
  Word v_;
  Word w_;
  Permutation sigma_;
  Theory theory_;
};

}  // namespace torushom
