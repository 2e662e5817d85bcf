#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace turangap {

/// Fixed-width bitset sized at runtime. Backs adjacency rows and the
/// candidate sets of the clique / homomorphism searches.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  int and_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  /// Lowest set bit, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
    return -1;
  }

  /// Lowest set bit strictly greater than `i`, or -1.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    std::size_t word = std::size_t(i) >> 6;
    std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return int(word) * 64 + std::countr_zero(cur);
      if (++word >= w_.size()) return -1;
      cur = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int v = first(); v >= 0; v = next(v)) f(v);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace turangap
