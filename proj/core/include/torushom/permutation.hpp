#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torushom {

/// Bijection of {1..n} in one-line notation: images()[i-1] = σ(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  /// The l-cycle i ↦ i+1 (i < l), l ↦ 1. cyc(0) and cyc(1) are trivial.
  static Permutation cycle(std::size_t l);
  /// "2,3,1"; the empty string is the permutation of size 0.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return images_.size(); }
  /// σ(i), 1-based.
  std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  bool fixes_last() const { return images_.empty() || images_.back() == images_.size(); }

  Permutation inverse() const;

  /// Closes up the last strand: τ(i) = σ(i) if σ(i) ≠ n, else σ(n).
  /// Precondition: size() ≥ 1.
  Permutation trace_last() const;

  /// 1 ⊕ σ: a new fixed strand in position 1, the others shifted up by one.
  Permutation embed_front() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// (a∘b)(i) = a(b(i)): b is applied first. Throws SizeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Partial trace of a permutation (closure of the last strand).
inline Permutation tr_perm(const Permutation& sigma) { return sigma.trace_last(); }

/// Cyclic permutation of size l used by the strand-rotation rules.
inline Permutation cyc(std::size_t l) { return Permutation::cycle(l); }

}  // namespace torushom
