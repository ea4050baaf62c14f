#include "ringlab/module.hpp"

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ringlab {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::AxiomViolation, what);
}

std::string strip_parens(const std::string& label) {
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')') {
    return label.substr(1, label.size() - 2);
  }
  return label;
}

Subset cyclic_span(const FiniteModule& m, Elem g) {
  Subset out(m.size());
  for (Elem r = 0; r < m.ring()->size(); ++r) {
    out.insert(m.act(r, g));
  }
  return out;
}

// Cyclic submodules closed under pairwise sums; every submodule of a finite
// module is a finite sum of cyclic ones, so the closure is the full lattice.
std::vector<Subset> enumerate_submodules(const FiniteModule& m) {
  std::set<Subset, CanonicalLess> found;
  std::vector<Subset> frontier;
  for (Elem g = 0; g < m.size(); ++g) {
    Subset c = cyclic_span(m, g);
    if (found.insert(c).second) {
      frontier.push_back(std::move(c));
    }
  }
  std::vector<Subset> all(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& a : frontier) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        Subset s = submodule_sum(m, a, all[j]);
        if (found.insert(s).second) {
          next.push_back(std::move(s));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::string_view to_string(ModuleProvenance::Kind kind) {
  switch (kind) {
    case ModuleProvenance::Kind::Regular: return "regular";
    case ModuleProvenance::Kind::Cyclic: return "cyclic";
    case ModuleProvenance::Kind::Tables: return "tables";
    case ModuleProvenance::Kind::ProductSameRing: return "product-same-ring";
    case ModuleProvenance::Kind::ProductRing: return "product-ring";
    case ModuleProvenance::Kind::Fractions: return "fractions";
  }
  return "unknown";
}

FiniteModule::FiniteModule(RingPtr ring, Tables tables, ModuleProvenance provenance)
    : ring_(std::move(ring)),
      size_(tables.size),
      add_(std::move(tables.add)),
      act_(std::move(tables.act)),
      neg_(tables.size, 0),
      labels_(std::move(tables.labels)),
      provenance_(std::move(provenance)) {
  for (Elem i = 0; i < size_; ++i) {
    lookup_.emplace(labels_[i], i);
  }
}

ModulePtr FiniteModule::make(RingPtr ring, Tables t, ModuleProvenance provenance) {
  if (!ring) {
    throw Error(ErrorKind::TypeMismatch, "module needs a ring");
  }
  const FiniteRing& r = *ring;
  const std::size_t n = t.size;
  const std::size_t nr = r.size();
  if (n == 0) {
    throw Error(ErrorKind::InvalidConstruction, "module carrier must be non-empty");
  }
  check_cap(n, "module");
  if (t.add.size() != n * n) violation("addition table is not total over the carrier");
  if (t.act.size() != nr * n) violation("action table is not total over ring x carrier");
  if (t.labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      t.labels.push_back(std::to_string(i));
    }
  }
  if (t.labels.size() != n) {
    throw Error(ErrorKind::InvalidConstruction, "label count does not match carrier size");
  }
  for (Elem v : t.add) {
    if (v >= n) violation("addition table leaves the carrier");
  }
  for (Elem v : t.act) {
    if (v >= n) violation("action table leaves the carrier");
  }
  auto add = [&](Elem a, Elem b) { return t.add[a * n + b]; };
  auto act = [&](Elem x, Elem m) { return t.act[x * n + m]; };
  auto show = [&](Elem x) { return std::to_string(x); };

  std::vector<Elem> neg(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a) violation("0 is not an additive identity at m=" + show(a));
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) violation("addition not commutative at m=" + show(a) + ", m'=" + show(b));
      if (!found && add(a, b) == 0) {
        neg[a] = b;
        found = true;
      }
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          violation("addition not associative at " + show(a) + "," + show(b) + "," + show(c));
        }
      }
    }
    if (!found) violation("no additive inverse for m=" + show(a));
    if (act(r.one(), a) != a) violation("action not unital: 1*m != m at m=" + show(a));
  }
  for (Elem x = 0; x < nr; ++x) {
    for (Elem y = 0; y < nr; ++y) {
      for (Elem m = 0; m < n; ++m) {
        if (act(r.add(x, y), m) != add(act(x, m), act(y, m))) {
          violation("(r+r')m != rm + r'm at r=" + r.label(x) + ", r'=" + r.label(y) + ", m=" + show(m));
        }
        if (act(r.mul(x, y), m) != act(x, act(y, m))) {
          violation("(rr')m != r(r'm) at r=" + r.label(x) + ", r'=" + r.label(y) + ", m=" + show(m));
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (act(x, add(a, b)) != add(act(x, a), act(x, b))) {
          violation("r(m+m') != rm + rm' at r=" + r.label(x) + ", m=" + show(a) + ", m'=" + show(b));
        }
      }
    }
  }
  std::set<std::string> distinct(t.labels.begin(), t.labels.end());
  if (distinct.size() != n) {
    throw Error(ErrorKind::InvalidConstruction, "element labels are not distinct");
  }
  auto module = std::shared_ptr<FiniteModule>(new FiniteModule(std::move(ring), std::move(t), std::move(provenance)));
  module->neg_ = std::move(neg);
  return module;
}

std::optional<Elem> FiniteModule::find(std::string_view text) const {
  auto it = lookup_.find(std::string(text));
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Elem FiniteModule::parse(std::string_view text) const {
  if (auto e = find(text)) {
    return *e;
  }
  throw Error(ErrorKind::UnknownElement, "'" + std::string(text) + "' is not an element of the module");
}

const std::vector<Subset>& FiniteModule::lattice() const {
  check_cap(size_, "module");
  std::call_once(lattice_once_, [this] { lattice_ = enumerate_submodules(*this); });
  return lattice_;
}

const std::vector<Subset>& FiniteModule::completely_irreducible() const {
  const auto& lat = lattice();
  std::call_once(ci_once_, [this, &lat] {
    for (const auto& n : lat) {
      if (n.is_full()) continue;
      Subset meet = all();
      for (const auto& k : lat) {
        if (k != n && n.is_subset_of(k)) {
          meet &= k;
        }
      }
      if (meet != n) {
        ci_.push_back(n);
      }
    }
  });
  return ci_;
}

ModulePtr module_regular(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.add[a * n + b] = r.add(a, b);
      t.act[a * n + b] = r.mul(a, b);
    }
    t.labels.push_back(r.label(a));
  }
  return FiniteModule::make(ring, std::move(t), ModuleProvenance{ModuleProvenance::Kind::Regular, {}});
}

ModulePtr module_cyclic(const RingPtr& ring, std::size_t n) {
  const auto& prov = ring->provenance();
  if (prov.kind != RingProvenance::Kind::Cyclic) {
    throw Error(ErrorKind::TypeMismatch, "cyclic(n) modules need a ring of the form Z(k)");
  }
  if (n == 0 || prov.modulus % n != 0) {
    throw Error(ErrorKind::InvalidConstruction,
                "Z(" + std::to_string(n) + ") is not a module over Z(" + std::to_string(prov.modulus) + ")");
  }
  const std::size_t k = prov.modulus;
  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(k * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
    }
    t.labels.push_back(std::to_string(a));
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t m = 0; m < n; ++m) {
      t.act[x * n + m] = static_cast<Elem>((x * m) % n);
    }
  }
  return FiniteModule::make(ring, std::move(t), ModuleProvenance{ModuleProvenance::Kind::Cyclic, {}});
}

ModulePtr module_from_tables(const RingPtr& ring, FiniteModule::Tables tables) {
  return FiniteModule::make(ring, std::move(tables), ModuleProvenance{ModuleProvenance::Kind::Tables, {}});
}

ModulePtr module_product(const ModulePtr& a, const ModulePtr& b, ProductMode mode, RingPtr product_ring) {
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  const std::size_t n = na * nb;
  check_cap(n, "product module");
  auto idx = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  const bool flatten = a->provenance().kind == ModuleProvenance::Kind::ProductSameRing ||
                       a->provenance().kind == ModuleProvenance::Kind::ProductRing;

  FiniteModule::Tables t;
  t.size = n;
  t.add.resize(n * n);
  for (Elem x1 = 0; x1 < na; ++x1) {
    for (Elem y1 = 0; y1 < nb; ++y1) {
      for (Elem x2 = 0; x2 < na; ++x2) {
        for (Elem y2 = 0; y2 < nb; ++y2) {
          t.add[idx(x1, y1) * n + idx(x2, y2)] = idx(a->add(x1, x2), b->add(y1, y2));
        }
      }
      const std::string left = flatten ? strip_parens(a->label(x1)) : a->label(x1);
      t.labels.push_back("(" + left + "," + b->label(y1) + ")");
    }
  }

  RingPtr ring;
  ModuleProvenance prov;
  prov.factors = {a, b};
  if (mode == ProductMode::SameRing) {
    if (a->ring() != b->ring()) {
      throw Error(ErrorKind::TypeMismatch, "same-ring product needs modules over one ring");
    }
    ring = a->ring();
    prov.kind = ModuleProvenance::Kind::ProductSameRing;
    const std::size_t nr = ring->size();
    t.act.resize(nr * n);
    for (Elem r = 0; r < nr; ++r) {
      for (Elem x = 0; x < na; ++x) {
        for (Elem y = 0; y < nb; ++y) {
          t.act[r * n + idx(x, y)] = idx(a->act(r, x), b->act(r, y));
        }
      }
    }
  } else {
    if (product_ring) {
      const auto& rp = product_ring->provenance();
      if (rp.kind != RingProvenance::Kind::Product || rp.factors.size() != 2 || rp.factors[0] != a->ring() ||
          rp.factors[1] != b->ring()) {
        throw Error(ErrorKind::TypeMismatch, "ring is not the product of the factor modules' rings");
      }
      ring = std::move(product_ring);
    } else {
      ring = ring_product(a->ring(), b->ring());
    }
    prov.kind = ModuleProvenance::Kind::ProductRing;
    const std::size_t nrb = b->ring()->size();
    const std::size_t nr = ring->size();
    t.act.resize(nr * n);
    for (Elem r = 0; r < nr; ++r) {
      const auto r1 = static_cast<Elem>(r / nrb);
      const auto r2 = static_cast<Elem>(r % nrb);
      for (Elem x = 0; x < na; ++x) {
        for (Elem y = 0; y < nb; ++y) {
          t.act[r * n + idx(x, y)] = idx(a->act(r1, x), b->act(r2, y));
        }
      }
    }
  }
  return FiniteModule::make(std::move(ring), std::move(t), std::move(prov));
}

Subset scale(const FiniteModule& module, Elem r, const Subset& n) {
  Subset out(module.size());
  n.for_each([&](Elem m) { out.insert(module.act(r, m)); });
  return out;
}

Subset submodule_sum(const FiniteModule& module, const Subset& a, const Subset& b) {
  Subset out(module.size());
  const auto ea = a.elements();
  b.for_each([&](Elem y) {
    for (Elem x : ea) {
      out.insert(module.add(x, y));
    }
  });
  return out;
}

Subset ideal_times(const FiniteModule& module, const Subset& ideal, const Subset& n) {
  Subset out = module.zero_set();
  ideal.for_each([&](Elem j) { out = submodule_sum(module, out, scale(module, j, n)); });
  return out;
}

Submodule submodule_span(const ModulePtr& module, const Subset& gens) {
  const FiniteModule& m = *module;
  Subset out = m.zero_set();
  gens.for_each([&](Elem g) { out = submodule_sum(m, out, cyclic_span(m, g)); });
  return Submodule{module, std::move(out)};
}

Submodule submodule_span(const ModulePtr& module, std::span<const Elem> gens) {
  return submodule_span(module, Subset::of(module->size(), gens));
}

Submodule zero_submodule(const ModulePtr& module) { return Submodule{module, module->zero_set()}; }

Submodule full_submodule(const ModulePtr& module) { return Submodule{module, module->all()}; }

std::vector<Submodule> submodules_of(const ModulePtr& module) {
  std::vector<Submodule> out;
  for (const auto& s : module->lattice()) {
    out.push_back(Submodule{module, s});
  }
  return out;
}

std::vector<Submodule> completely_irreducibles(const ModulePtr& module) {
  std::vector<Submodule> out;
  for (const auto& s : module->completely_irreducible()) {
    out.push_back(Submodule{module, s});
  }
  return out;
}

Ideal annihilator(const Submodule& n) {
  const FiniteModule& m = *n.module;
  const FiniteRing& r = *m.ring();
  Subset out(r.size());
  const auto members = n.members.elements();
  for (Elem x = 0; x < r.size(); ++x) {
    const bool kills = std::all_of(members.begin(), members.end(), [&](Elem e) { return m.act(x, e) == 0; });
    if (kills) {
      out.insert(x);
    }
  }
  return Ideal{m.ring(), std::move(out)};
}

Ideal colon_ideal(const Submodule& n) {
  const FiniteModule& m = *n.module;
  const FiniteRing& r = *m.ring();
  Subset out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool inside = true;
    for (Elem e = 0; e < m.size() && inside; ++e) {
      inside = n.members.contains(m.act(x, e));
    }
    if (inside) {
      out.insert(x);
    }
  }
  return Ideal{m.ring(), std::move(out)};
}

Submodule colon_into(const Submodule& n, const Ideal& ideal) {
  const FiniteModule& m = *n.module;
  if (ideal.ring != m.ring()) {
    throw Error(ErrorKind::TypeMismatch, "ideal is not over the module's ring");
  }
  Subset out(m.size());
  const auto gens = ideal.members.elements();
  for (Elem e = 0; e < m.size(); ++e) {
    const bool inside =
        std::all_of(gens.begin(), gens.end(), [&](Elem x) { return n.members.contains(m.act(x, e)); });
    if (inside) {
      out.insert(e);
    }
  }
  return Submodule{n.module, std::move(out)};
}

Submodule interior(const Submodule& n, const Ideal& p) {
  const FiniteModule& m = *n.module;
  if (p.ring != m.ring()) {
    throw Error(ErrorKind::TypeMismatch, "ideal is not over the module's ring");
  }
  const Subset outside = p.members.complement();
  Subset meet = m.all();
  for (const auto& l : m.completely_irreducible()) {
    bool qualifies = false;
    outside.for_each([&](Elem r) {
      if (!qualifies && scale(m, r, n.members).is_subset_of(l)) {
        qualifies = true;
      }
    });
    if (qualifies) {
      meet &= l;
    }
  }
  return Submodule{n.module, std::move(meet)};
}

ElementSet z_set(const ModulePtr& module) {
  const FiniteModule& m = *module;
  const FiniteRing& r = *m.ring();
  Subset out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem e = 1; e < m.size(); ++e) {
      if (m.act(x, e) == 0) {
        out.insert(x);
        break;
      }
    }
  }
  return ElementSet{m.ring(), std::move(out)};
}

ElementSet w_set(const ModulePtr& module) {
  const FiniteModule& m = *module;
  const FiniteRing& r = *m.ring();
  Subset out(r.size());
  const Subset all = m.all();
  for (Elem x = 0; x < r.size(); ++x) {
    if (scale(m, x, all) != all) {
      out.insert(x);
    }
  }
  return ElementSet{m.ring(), std::move(out)};
}

DecisionReport is_multiplication(const ModulePtr& module) {
  const FiniteModule& m = *module;
  DecisionReport rep;
  rep.property = "multiplication";
  const Subset all = m.all();
  for (const auto& n : m.lattice()) {
    const Ideal colon = colon_ideal(Submodule{module, n});
    if (ideal_times(m, colon.members, all) == n) {
      continue;
    }
    bool found = false;
    for (const auto& ideal : m.ring()->ideal_lattice()) {
      if (ideal_times(m, ideal, all) == n) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.refutations.push_back(Refutation{std::nullopt, {}, {SubItem{"N", Space::Module, n}}});
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

DecisionReport is_comultiplication(const ModulePtr& module) {
  DecisionReport rep;
  rep.property = "comultiplication";
  for (const auto& n : module->lattice()) {
    Submodule sub{module, n};
    if (colon_into(zero_submodule(module), annihilator(sub)).members != n) {
      rep.refutations.push_back(Refutation{std::nullopt, {}, {SubItem{"N", Space::Module, n}}});
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

ModuleHom hom_make(ModulePtr source, ModulePtr target, std::vector<Elem> graph) {
  if (source->ring() != target->ring()) {
    throw Error(ErrorKind::TypeMismatch, "homomorphism between modules over different rings");
  }
  const FiniteModule& s = *source;
  const FiniteModule& t = *target;
  if (graph.size() != s.size()) violation("homomorphism graph is not total");
  for (Elem v : graph) {
    if (v >= t.size()) violation("homomorphism leaves the target carrier");
  }
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (graph[s.add(a, b)] != t.add(graph[a], graph[b])) {
        violation("map is not additive at m=" + s.label(a) + ", m'=" + s.label(b));
      }
    }
    for (Elem r = 0; r < s.ring()->size(); ++r) {
      if (graph[s.act(r, a)] != t.act(r, graph[a])) {
        violation("map does not commute with the action at r=" + s.ring()->label(r) + ", m=" + s.label(a));
      }
    }
  }
  return ModuleHom{std::move(source), std::move(target), std::move(graph)};
}

Submodule hom_image(const ModuleHom& f, const Submodule& n) {
  if (n.module != f.source) {
    throw Error(ErrorKind::TypeMismatch, "submodule is not in the homomorphism's source");
  }
  Subset out(f.target->size());
  n.members.for_each([&](Elem m) { out.insert(f.graph[m]); });
  return Submodule{f.target, std::move(out)};
}

Submodule hom_preimage(const ModuleHom& f, const Submodule& n) {
  if (n.module != f.target) {
    throw Error(ErrorKind::TypeMismatch, "submodule is not in the homomorphism's target");
  }
  Subset out(f.source->size());
  for (Elem m = 0; m < f.source->size(); ++m) {
    if (n.members.contains(f.graph[m])) {
      out.insert(m);
    }
  }
  return Submodule{f.source, std::move(out)};
}

bool is_mono(const ModuleHom& f) {
  for (Elem m = 1; m < f.source->size(); ++m) {
    if (f.graph[m] == 0) {
      return false;
    }
  }
  return true;
}

std::vector<Elem> generators(const ModulePtr& module) {
  const FiniteModule& m = *module;
  std::vector<Elem> gens;
  Subset span = m.zero_set();
  for (Elem e = 1; e < m.size() && !span.is_full(); ++e) {
    if (!span.contains(e)) {
      gens.push_back(e);
      span = submodule_sum(m, span, cyclic_span(m, e));
    }
  }
  return gens;
}

std::vector<ModuleHom> enumerate_homs(const ModulePtr& source, const ModulePtr& target) {
  if (source->ring() != target->ring()) {
    throw Error(ErrorKind::TypeMismatch, "homomorphism between modules over different rings");
  }
  const FiniteModule& s = *source;
  const FiniteModule& t = *target;
  const FiniteRing& r = *s.ring();
  const auto gens = generators(source);
  const std::size_t k = gens.size();

  // Coefficient tuples over R^k reach every element of the source; an image
  // assignment extends to a homomorphism iff every element gets one image.
  std::vector<ModuleHom> out;
  std::vector<Elem> images(k, 0);
  while (true) {
    std::vector<Elem> graph(s.size(), static_cast<Elem>(t.size()));
    std::vector<Elem> coeffs(k, 0);
    bool consistent = true;
    while (consistent) {
      Elem m = 0;
      Elem img = 0;
      for (std::size_t i = 0; i < k; ++i) {
        m = s.add(m, s.act(coeffs[i], gens[i]));
        img = t.add(img, t.act(coeffs[i], images[i]));
      }
      if (graph[m] == t.size()) {
        graph[m] = img;
      } else if (graph[m] != img) {
        consistent = false;
      }
      std::size_t pos = 0;
      while (pos < k && ++coeffs[pos] == r.size()) {
        coeffs[pos++] = 0;
      }
      if (pos == k) break;
    }
    if (consistent) {
      out.push_back(hom_make(source, target, std::move(graph)));
    }
    std::size_t pos = 0;
    while (pos < k && ++images[pos] == t.size()) {
      images[pos++] = 0;
    }
    if (pos == k) break;
  }
  return out;
}

Ideal Idealization::embed(const Ideal& ideal) const {
  if (ideal.ring != base) {
    throw Error(ErrorKind::TypeMismatch, "ideal is not over the idealization's base ring");
  }
  Subset out(ring->size());
  ideal.members.for_each([&](Elem i) { out.insert(index(i, 0)); });
  for (Elem x = 0; x < ring->size(); ++x) {
    out.for_each([&](Elem y) {
      if (!out.contains(ring->mul(x, y))) {
        throw Error(ErrorKind::InvalidConstruction, "I(+)0 is not an ideal: I does not annihilate M");
      }
    });
  }
  return Ideal{ring, std::move(out)};
}

MultClosedSet Idealization::embed(const MultClosedSet& s, const Submodule& n) const {
  if (s.ring() != base || n.module != module) {
    throw Error(ErrorKind::TypeMismatch, "set or submodule does not match the idealization");
  }
  Subset out(ring->size());
  s.members().for_each([&](Elem x) { n.members.for_each([&](Elem m) { out.insert(index(x, m)); }); });
  return MultClosedSet::make(ring, std::move(out));
}

Idealization ring_idealization(const RingPtr& ring, const ModulePtr& module) {
  if (module->ring() != ring) {
    throw Error(ErrorKind::TypeMismatch, "module is not over the given ring");
  }
  const FiniteRing& r = *ring;
  const FiniteModule& m = *module;
  const std::size_t nm = m.size();
  const std::size_t n = r.size() * nm;
  check_cap(n, "idealization");
  auto idx = [nm](Elem a, Elem x) { return static_cast<Elem>(a * nm + x); };
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Elem a = 0; a < r.size(); ++a) {
    for (Elem x = 0; x < nm; ++x) {
      const Elem p = idx(a, x);
      for (Elem b = 0; b < r.size(); ++b) {
        for (Elem y = 0; y < nm; ++y) {
          const Elem q = idx(b, y);
          t.add[p * n + q] = idx(r.add(a, b), m.add(x, y));
          t.mul[p * n + q] = idx(r.mul(a, b), m.add(m.act(a, y), m.act(b, x)));
        }
      }
      t.labels.push_back("(" + r.label(a) + "|" + m.label(x) + ")");
    }
  }
  t.one = idx(r.one(), 0);
  RingProvenance p;
  p.kind = RingProvenance::Kind::Idealization;
  p.factors = {ring};
  return Idealization{FiniteRing::make(std::move(t), std::move(p)), ring, module};
}

std::string format_elements(const FiniteModule& module, const Subset& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Elem e) {
    if (!first) out += ",";
    out += module.label(e);
    first = false;
  });
  return out + "}";
}

}  // namespace ringlab
