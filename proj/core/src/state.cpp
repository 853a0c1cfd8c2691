#include "torushom/state.hpp"

#include "torushom/errors.hpp"

namespace torushom {

std::string_view to_string(Theory t) { return t == Theory::Column ? "column" : "row"; }

Theory parse_theory(std::string_view text) {
  if (text == "column") return Theory::Column;
  if (text == "row") return Theory::Row;
  throw InvalidInput("theory must be \"column\" or \"row\", got \"" + std::string(text) + "\"");
}

State::State(Word v, Word w, Permutation sigma, Theory theory)
    : v_(std::move(v)), w_(std::move(w)), sigma_(std::move(sigma)), theory_(theory) {
  if (v_.ones() != w_.ones()) {
    throw InvalidState("ones(v) = " + std::to_string(v_.ones()) + " differs from ones(w) = " +
                       std::to_string(w_.ones()));
  }
  if (sigma_.size() != v_.ones()) {
    throw InvalidState("|sigma| = " + std::to_string(sigma_.size()) + " differs from ones(v) = " +
                       std::to_string(v_.ones()));
  }
}

std::string State::to_string() const {
  return "(\"" + v_.str() + "\", \"" + w_.str() + "\", [" + sigma_.to_string() + "], " +
         std::string(torushom::to_string(theory_)) + ")";
}

}  // namespace torushom
