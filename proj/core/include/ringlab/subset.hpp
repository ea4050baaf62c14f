#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ringlab {

/// Index of an element inside a ring or module carrier. Index 0 is always
/// the additive identity.
using Elem = std::uint32_t;

/// A subset of a carrier {0, ..., n-1}, stored as a bitmask. Used for
/// ideals, submodules, multiplicatively closed sets and plain element sets.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, std::span<const Elem> elems);
  static Subset of(std::size_t universe, std::initializer_list<Elem> elems) {
    return of(universe, std::span<const Elem>(elems.begin(), elems.size()));
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem e) const noexcept {
    return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }
  void insert(Elem e) { words_[e / 64] |= (std::uint64_t{1} << (e % 64)); }
  void erase(Elem e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_; }

  bool is_subset_of(const Subset& other) const noexcept;
  bool intersects(const Subset& other) const noexcept;

  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  /// Members in increasing index order.
  std::vector<Elem> elements() const;

  /// Smallest member, or universe() when empty.
  Elem first() const noexcept;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const Subset&, const Subset&) = default;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order on subsets: by size, then lexicographically by the
/// sorted member lists. Every enumerated lattice is reported in this order.
bool canonical_less(const Subset& a, const Subset& b);

struct CanonicalLess {
  bool operator()(const Subset& a, const Subset& b) const { return canonical_less(a, b); }
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace ringlab
