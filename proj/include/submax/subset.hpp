#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

/// A subset of a dense ground set {0, ..., n-1}, stored as a bit vector.
/// Cheap to copy at desk scale and usable as a map key via operator<.
class Subset {
public:
  Subset() = default;

  explicit Subset(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset from_mask(std::size_t universe, std::uint64_t mask) {
    Subset s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t u = 0; u < universe; ++u) s.add(u);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t u) const {
    check(u);
    return (words_[u >> 6] >> (u & 63)) & 1u;
  }

  void add(std::size_t u) {
    check(u);
    words_[u >> 6] |= std::uint64_t{1} << (u & 63);
  }

  void remove(std::size_t u) {
    check(u);
    words_[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }

  Subset with(std::size_t u) const {
    Subset s = *this;
    s.add(u);
    return s;
  }

  Subset without(std::size_t u) const {
    Subset s = *this;
    s.remove(u);
    return s;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t u = 0; u < n_; ++u)
      if ((words_[u >> 6] >> (u & 63)) & 1u) out.push_back(u);
    return out;
  }

  Subset set_union(const Subset& o) const {
    Subset s = widen(o);
    for (std::size_t i = 0; i < o.words_.size(); ++i) s.words_[i] |= o.words_[i];
    return s;
  }

  Subset set_minus(const Subset& o) const {
    Subset s = *this;
    const std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i) s.words_[i] &= ~o.words_[i];
    return s;
  }

  Subset set_intersect(const Subset& o) const {
    Subset s = *this;
    for (std::size_t i = 0; i < s.words_.size(); ++i)
      s.words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return s;
  }

  /// Low 64 bits, handy for mask-indexed tables (requires universe <= 64).
  std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Lexicographic on the packed words; only used for ordered-map keys.
  friend bool operator<(const Subset& a, const Subset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.words_ < b.words_;
  }

private:
  void check(std::size_t u) const {
    if (u >= n_) throw InvalidArgumentError("element id out of range");
  }

  Subset widen(const Subset& o) const {
    Subset s = *this;
    if (o.n_ > s.n_) {
      s.n_ = o.n_;
      s.words_.resize((o.n_ + 63) / 64, 0);
    }
    return s;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace submax
