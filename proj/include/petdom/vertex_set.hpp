#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace petdom {

/// Fixed-universe bit set over vertex ids in [0, universe).
/// Immutable-by-convention once built; all queries are const and safe to
/// share across threads.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool contains(int v) const {
    check(v);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void add(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
  }

  void remove(int v) {
    check(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Removes every member of o.
  VertexSet& subtract(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  VertexSet complement() const {
    VertexSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersection_size(const VertexSet& o) const {
    same_universe(o);
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += std::popcount(words_[i] & o.words_[i]);
    return total;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool is_full() const { return size() == universe_; }

  /// Member ids in ascending (dense encoding) order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("vertex id out of range");
  }
  void same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) throw std::logic_error("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ull << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace petdom
