#include "ringlab/subset.hpp"

#include <algorithm>
#include <bit>

namespace ringlab {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    s.insert(static_cast<Elem>(i));
  }
  return s;
}

Subset Subset::of(std::size_t universe, std::span<const Elem> elems) {
  Subset s(universe);
  for (Elem e : elems) {
    s.insert(e);
  }
  return s;
}

std::size_t Subset::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool Subset::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) {
      return false;
    }
  }
  return true;
}

bool Subset::intersects(const Subset& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) {
      return true;
    }
  }
  return false;
}

Subset& Subset::operator&=(const Subset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    words_[i] &= ~other.words_[i];
  }
  return *this;
}

Subset Subset::complement() const {
  return full(universe_) - *this;
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

Elem Subset::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return static_cast<Elem>(universe_);
}

std::size_t Subset::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const Subset& a, const Subset& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) {
    return sa < sb;
  }
  const auto ea = a.elements();
  const auto eb = b.elements();
  return ea < eb;
}

}  // namespace ringlab
