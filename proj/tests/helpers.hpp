#pragma once

#include "ringlab/deciders.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

#include <initializer_list>
#include <vector>

namespace testing_support {

using namespace ringlab;

inline std::vector<Elem> elems(const Subset& s) { return s.elements(); }
inline std::vector<Elem> elems(const Ideal& i) { return i.members.elements(); }
inline std::vector<Elem> elems(const Submodule& n) { return n.members.elements(); }
inline std::vector<Elem> elems(const MultClosedSet& s) { return s.elements(); }

inline Submodule sub(const ModulePtr& m, std::initializer_list<Elem> gens) {
  return submodule_span(m, std::span<const Elem>(gens.begin(), gens.size()));
}

inline Ideal ideal(const RingPtr& r, std::initializer_list<Elem> gens) {
  return ideal_span(r, std::span<const Elem>(gens.begin(), gens.size()));
}

inline MultClosedSet mcs(const RingPtr& r, std::initializer_list<Elem> seed) {
  return mcs_closure(r, std::span<const Elem>(seed.begin(), seed.size()));
}

/// Ring isomorphism search by brute force over bijections fixing 0.
inline bool isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> perm(a.size());
  for (Elem i = 0; i < a.size(); ++i) perm[i] = i;
  do {
    bool ok = perm[0] == 0 && perm[a.one()] == b.one();
    for (Elem x = 0; x < a.size() && ok; ++x) {
      for (Elem y = 0; y < a.size() && ok; ++y) {
        ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

}  // namespace testing_support
