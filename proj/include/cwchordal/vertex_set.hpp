#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cwc {

using Vertex = int;

/// Dense set of vertex ids over a fixed universe {0..n-1}, one bit per id.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(int universe, const std::vector<Vertex>& members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(Vertex v) const { return (words_[word(v)] >> bit(v)) & 1u; }
  void insert(Vertex v) { words_[word(v)] |= mask(v); }
  void erase(Vertex v) { words_[word(v)] &= ~mask(v); }
  void flip(Vertex v) { words_[word(v)] ^= mask(v); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }
  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const {
    ++v;
    if (v >= n_) return -1;
    std::size_t i = word(v);
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << bit(v));
    while (true) {
      if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool operator==(const VertexSet& o) const = default;
  /// Lexicographic order on the sorted member lists.
  bool lex_less(const VertexSet& o) const {
    Vertex a = first(), b = o.first();
    while (a != -1 && b != -1) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a == -1 && b != -1;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit(Vertex v) { return static_cast<unsigned>(v) & 63u; }
  static std::uint64_t mask(Vertex v) { return std::uint64_t{1} << bit(v); }
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sorted ids joined by commas; "-" for the empty set.
inline std::string format_set(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

}  // namespace cwc
