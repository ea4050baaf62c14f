#include "ringlab/subset.hpp"

#include <algorithm>
#include <doctest.h>
#include <vector>

using ringlab::Elem;
using ringlab::Subset;

TEST_CASE("basic membership and algebra") {
  Subset a = Subset::of(10, {1, 3, 5});
  Subset b = Subset::of(10, {3, 4});
  CHECK(a.size() == 3);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(4));
  CHECK((a & b).elements() == std::vector<Elem>{3});
  CHECK((a | b).elements() == std::vector<Elem>{1, 3, 4, 5});
  CHECK((a - b).elements() == std::vector<Elem>{1, 5});
  CHECK(a.intersects(b));
  CHECK(Subset::of(10, {3}).is_subset_of(a));
  CHECK(a.complement().size() == 7);
  CHECK(Subset(10).empty());
  CHECK(Subset(10).first() == 10);
  CHECK(Subset::full(10).is_full());
}

TEST_CASE("words beyond the first 64 bits") {
  Subset s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.elements() == std::vector<Elem>{0, 64, 129});
  CHECK(s.complement().size() == 127);
  s.erase(64);
  CHECK_FALSE(s.contains(64));
}

TEST_CASE("canonical order is size first, then member lists") {
  std::vector<Subset> v{
      Subset::of(6, {0, 1, 2}), Subset::of(6, {0, 3}), Subset::of(6, {0}), Subset::of(6, {0, 2}),
  };
  std::sort(v.begin(), v.end(), ringlab::canonical_less);
  CHECK(v[0].elements() == std::vector<Elem>{0});
  CHECK(v[1].elements() == std::vector<Elem>{0, 2});
  CHECK(v[2].elements() == std::vector<Elem>{0, 3});
  CHECK(v[3].elements() == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("equal subsets hash equally") {
  Subset a = Subset::of(70, {2, 66});
  Subset b(70);
  b.insert(66);
  b.insert(2);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}
