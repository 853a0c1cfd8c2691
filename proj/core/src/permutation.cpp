#include "torushom/permutation.hpp"

#include <numeric>
#include <sstream>

#include "torushom/errors.hpp"

namespace torushom {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n > 255) throw InvalidInput("permutations are limited to 255 points");
  std::vector<bool> seen(n + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> images(n);
  std::iota(images.begin(), images.end(), std::uint8_t{1});
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t l) {
  std::vector<std::uint8_t> images(l);
  for (std::size_t i = 0; i < l; ++i) images[i] = static_cast<std::uint8_t>(i + 1 < l ? i + 2 : 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::uint8_t> images;
  if (text.empty()) return Permutation();
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1 || v > 255) throw InvalidInput("");
      images.push_back(static_cast<std::uint8_t>(v));
    } catch (const std::exception&) {
      throw InvalidInput("bad permutation entry \"" + item + "\"");
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::trace_last() const {
  const std::size_t n = images_.size();
  if (n == 0) throw InvalidInput("trace of the empty permutation");
  Permutation out;
  out.images_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.images_[i] = images_[i] == n ? images_[n - 1] : images_[i];
  }
  return out;
}

Permutation Permutation::embed_front() const {
  Permutation out;
  out.images_.reserve(images_.size() + 1);
  out.images_.push_back(1);
  for (auto v : images_) out.images_.push_back(static_cast<std::uint8_t>(v + 1));
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("compose: sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  std::vector<std::uint8_t> images(b.size());
  for (std::size_t i = 1; i <= b.size(); ++i) images[i - 1] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation(std::move(images));
}

}  // namespace torushom
