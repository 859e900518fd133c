#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace eliq::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(i * 64 + b);
        w &= w - 1;
      }
    }
  }
  bool operator==(const Bits& o) const { return w_ == o.w_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) h = (h ^ std::hash<uint64_t>{}(w)) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace eliq::detail
