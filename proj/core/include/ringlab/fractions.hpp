#pragma once

#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

#include <utility>
#include <vector>

namespace ringlab {

/// S^-1 R built by enumerating pairs (r, s) and identifying (r, s) with
/// (r', s') when u (s' r - s r') = 0 for some u in S.
struct FractionRing {
  RingPtr base;
  MultClosedSet s;
  RingPtr ring;
  /// Least (r, s) of each class, in class order.
  std::vector<std::pair<Elem, Elem>> reps;
  /// r -> r/1.
  RingHom to_fractions;

  /// Class of r/s; s must lie in S.
  Elem class_of(Elem r, Elem s_elem) const;

  std::vector<Elem> pair_class;  // indexed by r * |S| + position of s in S
  std::vector<Elem> s_position;  // ring element -> position in S, or |R| when absent
};

struct FractionModule {
  ModulePtr base;
  FractionRing ring;
  ModulePtr module;
  std::vector<std::pair<Elem, Elem>> reps;
  /// m -> m/1.
  std::vector<Elem> to_fractions;

  Elem class_of(Elem m, Elem s_elem) const;

  std::vector<Elem> pair_class;
};

FractionRing fraction_ring(const RingPtr& ring, const MultClosedSet& s);
FractionModule fraction_module(const ModulePtr& module, const MultClosedSet& s);

/// S^-1 N = { n/s } as a submodule of S^-1 M.
Submodule localize_sub(const Submodule& n, const FractionModule& f);

/// { m : u m = 0 for some u in S }.
Subset s_torsion(const ModulePtr& module, const MultClosedSet& s);

}  // namespace ringlab
