#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lieprobe {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

/// Dynamic set of vertex indices packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n, bool full = false) : n_(n), words_(words_for(n), full ? ~Word{0} : Word{0}) {
    if (full) trim();
  }
  VertexSet(std::size_t n, std::span<const Word> words) : n_(n), words_(words.begin(), words.end()) {}

  static VertexSet of(std::size_t n, std::initializer_list<int> members) {
    VertexSet s(n);
    for (int v : members) s.set(v);
    return s;
  }
  template <class Range>
  static VertexSet from(std::size_t n, const Range& members) {
    VertexSet s(n);
    for (int v : members) s.set(v);
    return s;
  }

  std::size_t universe() const { return n_; }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;
  bool operator<(const VertexSet& o) const { return to_vector() < o.to_vector(); }

  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (Word{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = s.universe();
    for (Word w : s.words()) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace lieprobe
