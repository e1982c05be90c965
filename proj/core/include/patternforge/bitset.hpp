#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pf {

// Dynamic bitset over 64-bit words with direct word access for the hot loops.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t num_words() const { return w_.size(); }
  const std::uint64_t* data() const { return w_.data(); }
  std::uint64_t* data() { return w_.data(); }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& x : w_) x = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t first() const { return next_from(0); }
  std::size_t next(std::size_t i) const { return next_from(i + 1); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  void flip() {
    for (auto& x : w_) x = ~x;
    trim();
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

  static std::size_t count_and(const Bitset& a, const Bitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }
  static bool intersects(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      if (a.w_[i] & b.w_[i]) return true;
    return false;
  }
  // first index in a & b, or npos
  static std::size_t first_and(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      if (auto x = a.w_[i] & b.w_[i]) return i * 64 + std::countr_zero(x);
    return npos;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      auto x = w_[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

 private:
  std::size_t next_from(std::size_t i) const {
    if (i >= n_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return wi * 64 + std::countr_zero(x);
      if (++wi >= w_.size()) return npos;
      x = w_[wi];
    }
  }
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace pf
