#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace modrad {

// Fixed-universe bit set over element indices [0, universe).
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(int universe) : nbits_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return nbits_; }
  bool empty_universe() const { return nbits_ == 0; }

  bool test(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[size_t(i) >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[size_t(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool full() const { return count() == nbits_; }

  // other subset of this
  bool contains(const DenseSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & ~w_[i]) return false;
    return true;
  }

  DenseSet& operator|=(const DenseSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DenseSet& operator&=(const DenseSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend DenseSet operator&(DenseSet a, const DenseSet& b) { return a &= b; }
  friend DenseSet operator|(DenseSet a, const DenseSet& b) { return a |= b; }

  bool operator==(const DenseSet& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  // strict order on (popcount, words); used to keep lattices in a stable order
  bool lex_less(const DenseSet& o) const {
    int a = count(), b = o.count();
    if (a != b) return a < b;
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  int first_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  size_t hash() const {
    size_t h = std::hash<int>()(nbits_);
    for (auto w : w_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>()(w);
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct DenseSetHash {
  size_t operator()(const DenseSet& s) const { return s.hash(); }
};

}  // namespace modrad
