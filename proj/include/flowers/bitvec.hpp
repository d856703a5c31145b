#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace flowers {

// Fixed-width bit vector indexed 0..size-1. Used for vertex sets and
// adjacency rows; all set operations require equal widths.
class Bitvec {
 public:
  Bitvec() : bits_(0) {}
  explicit Bitvec(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int width() const { return bits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  void assign(int i, bool value) { value ? set(i) : reset(i); }

  void clear() {
    for (auto& x : w_) x = 0;
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (auto x : w_) if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitvec& operator&=(const Bitvec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitvec& operator|=(const Bitvec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bitvec& subtract(const Bitvec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitvec operator&(Bitvec a, const Bitvec& b) { return a &= b; }
  friend Bitvec operator|(Bitvec a, const Bitvec& b) { return a |= b; }
  friend Bitvec minus(Bitvec a, const Bitvec& b) { return a.subtract(b); }

  bool operator==(const Bitvec& o) const { return bits_ == o.bits_ && w_ == o.w_; }

  bool intersects(const Bitvec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool subset_of(const Bitvec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int count_and(const Bitvec& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // Lowest set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= bits_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t cur = w_[wi] & (~0ull << (from & 63));
    while (true) {
      if (cur) {
        int pos = static_cast<int>((wi << 6) + std::countr_zero(cur));
        return pos < bits_ ? pos : -1;
      }
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t cur = w_[wi];
      while (cur) {
        int pos = static_cast<int>((wi << 6) + std::countr_zero(cur));
        f(pos);
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int bits_;
  std::vector<std::uint64_t> w_;
};

}  // namespace flowers
