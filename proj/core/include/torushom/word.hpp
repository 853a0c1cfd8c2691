#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "torushom/errors.hpp"

namespace torushom {

/// Finite binary word, stored as its bit-string ("110010"). Rules of the
/// recursion act on the rightmost character.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view bits) : bits_(bits) {
    if (!std::all_of(bits_.begin(), bits_.end(), [](char c) { return c == '0' || c == '1'; })) {
      throw InvalidInput("word must consist of '0' and '1': \"" + bits_ + "\"");
    }
  }

  static Word repeat(char bit, std::size_t count) { return Word(std::string(count, bit)); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::size_t ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1')); }
  std::size_t zeros() const { return size() - ones(); }
  char back() const { return bits_.back(); }
  bool all_zero() const { return ones() == 0; }

  /// The word without its last character.
  Word drop_last() const { return Word(bits_.substr(0, bits_.size() - 1), Unchecked{}); }
  /// `bit` followed by this word.
  Word prepend(char bit) const { return Word(bit + bits_, Unchecked{}); }
  /// This word followed by `other`.
  Word concat(const Word& other) const { return Word(bits_ + other.bits_, Unchecked{}); }

  const std::string& str() const { return bits_; }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct Unchecked {};
  Word(std::string bits, Unchecked) : bits_(std::move(bits)) {}

  std::string bits_;
};

}  // namespace torushom
