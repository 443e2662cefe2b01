#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace omlkit {

/// Dense square boolean matrix backed by 64-bit words, one bit row stride.
/// Used for order relations and adjacency at desk scale (n up to a few
/// hundred), where whole-row operations replace inner loops.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void clear(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t i) {
    return {bits_.data() + i * words_, words_};
  }

  void or_into(std::size_t dst, std::size_t src) {
    auto* d = bits_.data() + dst * words_;
    const auto* s = bits_.data() + src * words_;
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (get(i, j)) t.set(j, i);
    return t;
  }

  /// Reflexive-transitive closure in place (Warshall over bit rows).
  void close_transitively() {
    for (std::size_t i = 0; i < n_; ++i) set(i, i);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (get(i, k)) or_into(i, k);
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Small helpers on bitset word spans.
namespace bitops {

inline bool subset(std::span<const std::uint64_t> a,
                   std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

inline void and_rows(std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b,
                     std::span<std::uint64_t> out) {
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
}

inline bool test(std::span<const std::uint64_t> v, std::size_t i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}

inline void set(std::span<std::uint64_t> v, std::size_t i) {
  v[i / 64] |= std::uint64_t{1} << (i % 64);
}

}  // namespace bitops
}  // namespace omlkit
