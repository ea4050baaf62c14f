#include "ringlab/fractions.hpp"

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"

#include <string>

namespace ringlab {

namespace {

// Groups pair indices into classes. `equivalent(p, q)` decides the relation
// on pair indices; classes are numbered by their least pair.
template <class Equivalent>
std::vector<Elem> classify(std::size_t pair_count, std::vector<std::size_t>& reps, Equivalent&& equivalent) {
  std::vector<Elem> cls(pair_count, 0);
  for (std::size_t p = 0; p < pair_count; ++p) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (equivalent(reps[c], p)) {
        cls[p] = static_cast<Elem>(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      cls[p] = static_cast<Elem>(reps.size());
      reps.push_back(p);
    }
  }
  return cls;
}

}  // namespace

Elem FractionRing::class_of(Elem r, Elem s_elem) const {
  const Elem pos = s_position.at(s_elem);
  if (pos == base->size()) {
    throw Error(ErrorKind::TypeMismatch, "denominator is not in S");
  }
  return pair_class[r * s.size() + pos];
}

Elem FractionModule::class_of(Elem m, Elem s_elem) const {
  const Elem pos = ring.s_position.at(s_elem);
  if (pos == ring.base->size()) {
    throw Error(ErrorKind::TypeMismatch, "denominator is not in S");
  }
  return pair_class[m * ring.s.size() + pos];
}

FractionRing fraction_ring(const RingPtr& ring, const MultClosedSet& s) {
  if (s.ring() != ring) {
    throw Error(ErrorKind::TypeMismatch, "multiplicatively closed set is over a different ring");
  }
  const FiniteRing& r = *ring;
  const auto svals = s.elements();
  const std::size_t ns = svals.size();
  std::vector<Elem> pos(r.size(), static_cast<Elem>(r.size()));
  for (std::size_t i = 0; i < ns; ++i) {
    pos[svals[i]] = static_cast<Elem>(i);
  }

  // Pairs are ordered lexicographically: (r, s) -> r * |S| + position(s).
  auto num = [&](std::size_t p) { return static_cast<Elem>(p / ns); };
  auto den = [&](std::size_t p) { return svals[p % ns]; };
  std::vector<std::size_t> rep_pairs;
  auto cls = classify(r.size() * ns, rep_pairs, [&](std::size_t p, std::size_t q) {
    const Elem diff = r.sub(r.mul(den(q), num(p)), r.mul(den(p), num(q)));
    for (Elem u : svals) {
      if (r.mul(u, diff) == r.zero()) return true;
    }
    return false;
  });

  const std::size_t n = rep_pairs.size();
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  auto class_of = [&](Elem a, Elem d) { return cls[a * ns + pos[d]]; };
  for (std::size_t i = 0; i < n; ++i) {
    const Elem a = num(rep_pairs[i]);
    const Elem sa = den(rep_pairs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem b = num(rep_pairs[j]);
      const Elem sb = den(rep_pairs[j]);
      t.add[i * n + j] = class_of(r.add(r.mul(sb, a), r.mul(sa, b)), r.mul(sa, sb));
      t.mul[i * n + j] = class_of(r.mul(a, b), r.mul(sa, sb));
    }
    t.labels.push_back(r.label(a) + "/" + r.label(sa));
  }
  t.one = class_of(r.one(), r.one());
  RingProvenance prov;
  prov.kind = RingProvenance::Kind::Fractions;
  prov.factors = {ring};

  FractionRing out{ring, s, nullptr, {}, {}, {}, {}};
  if (t.one == 0) {
    throw Error(ErrorKind::InvalidConstruction, "ring of fractions is the zero ring");
  }
  out.ring = FiniteRing::make(std::move(t), std::move(prov));
  for (auto p : rep_pairs) {
    out.reps.emplace_back(num(p), den(p));
  }
  std::vector<Elem> canon(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    canon[x] = class_of(x, r.one());
  }
  out.to_fractions = ring_hom_make(ring, out.ring, std::move(canon));
  out.pair_class = std::move(cls);
  out.s_position = std::move(pos);
  return out;
}

FractionModule fraction_module(const ModulePtr& module, const MultClosedSet& s) {
  const FiniteModule& m = *module;
  FractionRing fr = fraction_ring(m.ring(), s);
  const FiniteRing& r = *m.ring();
  const auto svals = s.elements();
  const std::size_t ns = svals.size();
  const auto& pos = fr.s_position;

  auto num = [&](std::size_t p) { return static_cast<Elem>(p / ns); };
  auto den = [&](std::size_t p) { return svals[p % ns]; };
  std::vector<std::size_t> rep_pairs;
  auto cls = classify(m.size() * ns, rep_pairs, [&](std::size_t p, std::size_t q) {
    const Elem diff = m.sub(m.act(den(q), num(p)), m.act(den(p), num(q)));
    for (Elem u : svals) {
      if (m.act(u, diff) == 0) return true;
    }
    return false;
  });
  auto class_of = [&](Elem x, Elem d) { return cls[x * ns + pos[d]]; };

  const std::size_t n = rep_pairs.size();
  const FiniteRing& fring = *fr.ring;
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(fring.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem a = num(rep_pairs[i]);
    const Elem sa = den(rep_pairs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem b = num(rep_pairs[j]);
      const Elem sb = den(rep_pairs[j]);
      t.add[i * n + j] = class_of(m.add(m.act(sb, a), m.act(sa, b)), r.mul(sa, sb));
    }
    for (std::size_t k = 0; k < fring.size(); ++k) {
      const auto [x, sx] = fr.reps[k];
      t.act[k * n + i] = class_of(m.act(x, a), r.mul(sx, sa));
    }
    t.labels.push_back(m.label(a) + "/" + r.label(sa));
  }

  FractionModule out{module, fr, nullptr, {}, {}, {}};
  out.module = FiniteModule::make(fr.ring, std::move(t),
                                  ModuleProvenance{ModuleProvenance::Kind::Fractions, {module}});
  for (auto p : rep_pairs) {
    out.reps.emplace_back(num(p), den(p));
  }
  out.to_fractions.resize(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    out.to_fractions[x] = class_of(x, r.one());
  }
  out.pair_class = std::move(cls);
  return out;
}

Submodule localize_sub(const Submodule& n, const FractionModule& f) {
  if (n.module != f.base) {
    throw Error(ErrorKind::TypeMismatch, "submodule is not in the fraction module's base");
  }
  Subset out(f.module->size());
  const auto svals = f.ring.s.elements();
  n.members.for_each([&](Elem m) {
    for (Elem s : svals) {
      out.insert(f.class_of(m, s));
    }
  });
  // S^-1 N is closed under the fraction action; re-span to validate.
  Submodule sub = submodule_span(f.module, out);
  if (sub.members != out) {
    throw Error(ErrorKind::Internal, "localized submodule is not closed");
  }
  return sub;
}

Subset s_torsion(const ModulePtr& module, const MultClosedSet& s) {
  const FiniteModule& m = *module;
  Subset out(m.size());
  const auto svals = s.elements();
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem u : svals) {
      if (m.act(u, x) == 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

MultClosedSet mcs_saturation(const MultClosedSet& s) {
  const FractionRing fr = fraction_ring(s.ring(), s);
  const Subset unit_classes = units(fr.ring);
  Subset out(s.ring()->size());
  for (Elem x = 0; x < s.ring()->size(); ++x) {
    if (unit_classes.contains(fr.to_fractions(x))) {
      out.insert(x);
    }
  }
  return MultClosedSet::make(s.ring(), std::move(out));
}

}  // namespace ringlab
