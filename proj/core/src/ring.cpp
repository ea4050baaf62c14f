#include "ringlab/ring.hpp"

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

// Principal ideals closed under pairwise sums: every ideal of a finite ring
// is a finite sum of principal ones.
std::vector<Subset> enumerate_ideals(const FiniteRing& r) {
  const std::size_t n = r.size();
  std::set<Subset, CanonicalLess> found;
  std::vector<Subset> frontier;
  for (Elem a = 0; a < n; ++a) {
    Subset principal(n);
    for (Elem x = 0; x < n; ++x) {
      principal.insert(r.mul(x, a));
    }
    if (found.insert(principal).second) {
      frontier.push_back(principal);
    }
  }
  std::vector<Subset> all(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& a : frontier) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        Subset sum(n);
        const auto ea = a.elements();
        all[j].for_each([&](Elem y) {
          for (Elem x : ea) {
            sum.insert(r.add(x, y));
          }
        });
        if (found.insert(sum).second) {
          next.push_back(sum);
        }
      }
    }
    for (const auto& s : next) {
      all.push_back(s);
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::string_view to_string(RingProvenance::Kind kind) {
  switch (kind) {
    case RingProvenance::Kind::Cyclic: return "cyclic";
    case RingProvenance::Kind::Product: return "product";
    case RingProvenance::Kind::Quotient: return "quotient";
    case RingProvenance::Kind::Idealization: return "idealization";
    case RingProvenance::Kind::Fractions: return "fractions";
    case RingProvenance::Kind::Tables: return "tables";
  }
  return "unknown";
}

FiniteRing::FiniteRing(Tables tables, RingProvenance provenance)
    : size_(tables.size),
      add_(std::move(tables.add)),
      mul_(std::move(tables.mul)),
      neg_(tables.size, 0),
      one_(tables.one),
      labels_(std::move(tables.labels)),
      provenance_(std::move(provenance)) {
  for (Elem i = 0; i < size_; ++i) {
    lookup_.emplace(labels_[i], i);
  }
  for (auto& [text, e] : tables.aliases) {
    lookup_.emplace(text, e);
  }
}

RingPtr FiniteRing::make(Tables t, RingProvenance provenance) {
  const std::size_t n = t.size;
  if (n == 0) {
    throw Error(ErrorKind::InvalidConstruction, "ring carrier must be non-empty");
  }
  check_cap(n, "ring");
  if (t.add.size() != n * n || t.mul.size() != n * n) {
    violation("operation tables are not total over the carrier");
  }
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
  for (Elem v : t.mul) {
    if (v >= n) violation("multiplication table leaves the carrier");
  }
  if (t.one >= n) {
    violation("identity element outside the carrier");
  }
  if (t.one == 0) {
    violation("one equals zero");
  }
  auto add = [&](Elem a, Elem b) { return t.add[a * n + b]; };
  auto mul = [&](Elem a, Elem b) { return t.mul[a * n + b]; };
  auto pair = [](Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

  std::vector<Elem> neg(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a) violation("0 is not an additive identity at " + std::to_string(a));
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) violation("addition not commutative at " + pair(a, b));
      if (mul(a, b) != mul(b, a)) violation("multiplication not commutative at " + pair(a, b));
      if (!found && add(a, b) == 0) {
        neg[a] = b;
        found = true;
      }
    }
    if (!found) violation("no additive inverse for " + std::to_string(a));
    if (mul(t.one, a) != a) violation("one is not a multiplicative identity at " + std::to_string(a));
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          violation("addition not associative at " + pair(a, b) + "," + std::to_string(c));
        }
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          violation("multiplication not associative at " + pair(a, b) + "," + std::to_string(c));
        }
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          violation("distributivity fails at " + pair(a, b) + "," + std::to_string(c));
        }
      }
    }
  }
  std::set<std::string> distinct(t.labels.begin(), t.labels.end());
  if (distinct.size() != n) {
    throw Error(ErrorKind::InvalidConstruction, "element labels are not distinct");
  }
  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(std::move(t), std::move(provenance)));
  ring->neg_ = std::move(neg);
  return ring;
}

Elem FiniteRing::pow(Elem a, std::size_t t) const noexcept {
  Elem acc = one_;
  for (std::size_t i = 0; i < t; ++i) {
    acc = mul(acc, a);
  }
  return acc;
}

std::optional<Elem> FiniteRing::find(std::string_view text) const {
  auto it = lookup_.find(std::string(text));
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Elem FiniteRing::parse(std::string_view text) const {
  if (auto e = find(text)) {
    return *e;
  }
  throw Error(ErrorKind::UnknownElement, "'" + std::string(text) + "' is not an element of the ring");
}

const std::vector<Subset>& FiniteRing::ideal_lattice() const {
  std::call_once(ideals_once_, [this] { ideals_ = enumerate_ideals(*this); });
  return ideals_;
}

MultClosedSet MultClosedSet::make(RingPtr ring, Subset members) {
  const FiniteRing& r = *ring;
  if (members.universe() != r.size()) {
    throw Error(ErrorKind::TypeMismatch, "set is not a subset of the ring carrier");
  }
  if (!members.contains(r.one())) {
    throw Error(ErrorKind::NotMultClosed, "set does not contain 1");
  }
  if (members.contains(r.zero())) {
    throw Error(ErrorKind::NotMultClosed, "set contains 0");
  }
  const auto elems = members.elements();
  for (Elem a : elems) {
    for (Elem b : elems) {
      if (!members.contains(r.mul(a, b))) {
        throw Error(ErrorKind::NotMultClosed, "set is not closed under products: " + r.label(a) + "*" +
                                                  r.label(b) + " = " + r.label(r.mul(a, b)));
      }
    }
  }
  return MultClosedSet(std::move(ring), std::move(members));
}

RingHom ring_hom_make(RingPtr source, RingPtr target, std::vector<Elem> graph) {
  const FiniteRing& s = *source;
  const FiniteRing& t = *target;
  if (graph.size() != s.size()) {
    violation("ring homomorphism graph is not total");
  }
  for (Elem v : graph) {
    if (v >= t.size()) violation("ring homomorphism leaves the target carrier");
  }
  if (graph[s.zero()] != t.zero()) violation("ring homomorphism does not preserve 0");
  if (graph[s.one()] != t.one()) violation("ring homomorphism does not preserve 1");
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (graph[s.add(a, b)] != t.add(graph[a], graph[b])) violation("ring homomorphism is not additive");
      if (graph[s.mul(a, b)] != t.mul(graph[a], graph[b])) violation("ring homomorphism is not multiplicative");
    }
  }
  return RingHom{std::move(source), std::move(target), std::move(graph)};
}

RingPtr ring_cyclic(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidConstruction, "Z(n) requires n >= 2");
  }
  check_cap(n, "Z(" + std::to_string(n) + ")");
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
    t.labels.push_back(std::to_string(a));
  }
  t.one = 1;
  RingProvenance p;
  p.kind = RingProvenance::Kind::Cyclic;
  p.modulus = n;
  return FiniteRing::make(std::move(t), std::move(p));
}

RingPtr ring_product(const RingPtr& a, const RingPtr& b) {
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  const std::size_t n = na * nb;
  check_cap(n, "product ring");
  auto idx = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  const bool flatten = a->provenance().kind == RingProvenance::Kind::Product;
  FiniteRing::Tables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Elem x1 = 0; x1 < na; ++x1) {
    for (Elem y1 = 0; y1 < nb; ++y1) {
      const Elem p = idx(x1, y1);
      for (Elem x2 = 0; x2 < na; ++x2) {
        for (Elem y2 = 0; y2 < nb; ++y2) {
          const Elem q = idx(x2, y2);
          t.add[p * n + q] = idx(a->add(x1, x2), b->add(y1, y2));
          t.mul[p * n + q] = idx(a->mul(x1, x2), b->mul(y1, y2));
        }
      }
      const std::string left = flatten ? strip_parens(a->label(x1)) : a->label(x1);
      t.labels.push_back("(" + left + "," + b->label(y1) + ")");
    }
  }
  t.one = idx(a->one(), b->one());
  RingProvenance p;
  p.kind = RingProvenance::Kind::Product;
  p.factors = {a, b};
  return FiniteRing::make(std::move(t), std::move(p));
}

Quotient ring_quotient(const RingPtr& ring, const Ideal& ideal) {
  if (ideal.ring != ring) {
    throw Error(ErrorKind::TypeMismatch, "ideal belongs to a different ring");
  }
  if (!ideal.is_proper()) {
    throw Error(ErrorKind::InvalidConstruction, "cannot form the quotient by the whole ring");
  }
  const FiniteRing& r = *ring;
  const std::size_t n = r.size();
  std::vector<Elem> cls(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    ideal.members.for_each([&](Elem i) { cls[r.add(x, i)] = id; });
  }
  const std::size_t m = reps.size();
  FiniteRing::Tables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      t.add[i * m + j] = cls[r.add(reps[i], reps[j])];
      t.mul[i * m + j] = cls[r.mul(reps[i], reps[j])];
    }
    t.labels.push_back(r.label(reps[i]));
  }
  for (Elem x = 0; x < n; ++x) {
    t.aliases.emplace(r.label(x), cls[x]);
  }
  t.one = cls[r.one()];
  RingProvenance p;
  p.kind = RingProvenance::Kind::Quotient;
  p.factors = {ring};
  RingPtr q = FiniteRing::make(std::move(t), std::move(p));
  RingHom proj = ring_hom_make(ring, q, cls);
  return Quotient{std::move(q), std::move(proj)};
}

Ideal ideal_span(const RingPtr& ring, const Subset& gens) {
  const FiniteRing& r = *ring;
  Subset out(r.size());
  out.insert(r.zero());
  gens.for_each([&](Elem g) {
    // out + R g
    Subset principal(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
      principal.insert(r.mul(x, g));
    }
    Subset sum(r.size());
    const auto current = out.elements();
    principal.for_each([&](Elem p) {
      for (Elem c : current) {
        sum.insert(r.add(c, p));
      }
    });
    out = std::move(sum);
  });
  return Ideal{ring, std::move(out)};
}

Ideal ideal_span(const RingPtr& ring, std::span<const Elem> gens) {
  return ideal_span(ring, Subset::of(ring->size(), gens));
}

Ideal ideal_radical(const Ideal& ideal) {
  const FiniteRing& r = *ideal.ring;
  Subset out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    Elem p = x;
    for (std::size_t t = 1; t <= r.size(); ++t) {
      if (ideal.members.contains(p)) {
        out.insert(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return Ideal{ideal.ring, std::move(out)};
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  const FiniteRing& r = *a.ring;
  Subset out(r.size());
  const auto ea = a.members.elements();
  b.members.for_each([&](Elem y) {
    for (Elem x : ea) {
      out.insert(r.add(x, y));
    }
  });
  return Ideal{a.ring, std::move(out)};
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal{a.ring, a.members & b.members};
}

Ideal ideal_quotient(const Ideal& ideal, Elem x) {
  const FiniteRing& r = *ideal.ring;
  Subset out(r.size());
  for (Elem y = 0; y < r.size(); ++y) {
    if (ideal.members.contains(r.mul(y, x))) {
      out.insert(y);
    }
  }
  return Ideal{ideal.ring, std::move(out)};
}

Ideal zero_ideal(const RingPtr& ring) {
  Subset z(ring->size());
  z.insert(ring->zero());
  return Ideal{ring, std::move(z)};
}

Ideal unit_ideal(const RingPtr& ring) { return Ideal{ring, ring->all()}; }

bool is_prime(const Ideal& ideal) {
  if (!ideal.is_proper()) {
    return false;
  }
  const FiniteRing& r = *ideal.ring;
  for (Elem a = 0; a < r.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = a; b < r.size(); ++b) {
      if (!ideal.contains(b) && ideal.contains(r.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_maximal(const Ideal& ideal) {
  if (!ideal.is_proper()) {
    return false;
  }
  for (const auto& other : ideal.ring->ideal_lattice()) {
    if (other != ideal.members && ideal.members.is_subset_of(other) && !other.is_full()) {
      return false;
    }
  }
  return true;
}

Spectrum spectrum(const RingPtr& ring) {
  Spectrum out;
  Subset jac = ring->all();
  for (const auto& members : ring->ideal_lattice()) {
    Ideal ideal{ring, members};
    if (is_prime(ideal)) {
      out.primes.push_back(ideal);
    }
    if (is_maximal(ideal)) {
      out.maximals.push_back(ideal);
      jac &= members;
    }
    out.all_ideals.push_back(std::move(ideal));
  }
  out.jacobson = Ideal{ring, std::move(jac)};
  return out;
}

Subset units(const RingPtr& ring) {
  const FiniteRing& r = *ring;
  Subset out(r.size());
  for (Elem a = 0; a < r.size(); ++a) {
    for (Elem b = 0; b < r.size(); ++b) {
      if (r.mul(a, b) == r.one()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

Subset nilradical(const RingPtr& ring) { return ideal_radical(zero_ideal(ring)).members; }

bool is_field(const RingPtr& ring) { return units(ring).size() + 1 == ring->size(); }

bool is_domain(const RingPtr& ring) { return is_prime(zero_ideal(ring)); }

bool is_quasilocal(const RingPtr& ring) { return spectrum(ring).maximals.size() == 1; }

MultClosedSet mcs_closure(const RingPtr& ring, const Subset& seed) {
  const FiniteRing& r = *ring;
  Subset out(r.size());
  out.insert(r.one());
  out |= seed;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = out.elements();
    for (Elem a : current) {
      for (Elem b : current) {
        const Elem p = r.mul(a, b);
        if (!out.contains(p)) {
          out.insert(p);
          grew = true;
        }
      }
    }
  }
  if (out.contains(r.zero())) {
    throw Error(ErrorKind::NotMultClosed,
                "multiplicative closure of " + format_elements(r, seed) + " contains 0");
  }
  return MultClosedSet::make(ring, std::move(out));
}

MultClosedSet mcs_closure(const RingPtr& ring, std::span<const Elem> seed) {
  return mcs_closure(ring, Subset::of(ring->size(), seed));
}

MultClosedSet mcs_trivial(const RingPtr& ring) {
  return MultClosedSet::make(ring, Subset::of(ring->size(), {ring->one()}));
}

MultClosedSet mcs_complement(const Ideal& prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorKind::NotMultClosed, "complement of a non-prime ideal is not multiplicatively closed");
  }
  return MultClosedSet::make(prime.ring, prime.members.complement());
}

MultClosedSet mcs_product(const RingPtr& product, const MultClosedSet& a, const MultClosedSet& b) {
  const auto& prov = product->provenance();
  if (prov.kind != RingProvenance::Kind::Product || prov.factors.size() != 2 ||
      prov.factors[0] != a.ring() || prov.factors[1] != b.ring()) {
    throw Error(ErrorKind::TypeMismatch, "ring is not the product of the two sets' rings");
  }
  const std::size_t nb = b.ring()->size();
  Subset out(product->size());
  a.members().for_each([&](Elem x) {
    b.members().for_each([&](Elem y) { out.insert(static_cast<Elem>(x * nb + y)); });
  });
  return MultClosedSet::make(product, std::move(out));
}

DecisionReport is_s_prime_ideal(const Ideal& ideal, const MultClosedSet& s) {
  if (ideal.ring != s.ring()) {
    throw Error(ErrorKind::TypeMismatch, "ideal and set live in different rings");
  }
  const FiniteRing& r = *ideal.ring;
  DecisionReport rep;
  rep.property = "s_prime_ideal";
  if (!ideal.is_proper()) {
    rep.disqualified = Disqualification::Improper;
    rep.notes = "ideal is not proper";
    return rep;
  }
  if (ideal.members.intersects(s.members())) {
    rep.disqualified = Disqualification::ColonMeetsS;
    rep.notes = "I meets S";
    return rep;
  }
  for (Elem sv : s.elements()) {
    std::optional<Refutation> bad;
    for (Elem a = 0; a < r.size() && !bad; ++a) {
      for (Elem b = 0; b < r.size(); ++b) {
        if (!ideal.contains(r.mul(a, b))) continue;
        if (ideal.contains(r.mul(sv, a)) || ideal.contains(r.mul(sv, b))) continue;
        bad = Refutation{sv, {{"a", Space::Ring, a}, {"b", Space::Ring, b}}, {}};
        break;
      }
    }
    if (!bad) {
      rep.verdict = true;
      rep.witness = sv;
      rep.refutations.clear();
      return rep;
    }
    rep.refutations.push_back(std::move(*bad));
  }
  return rep;
}

std::string format_elements(const FiniteRing& ring, const Subset& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](Elem e) {
    if (!first) out += ",";
    out += ring.label(e);
    first = false;
  });
  return out + "}";
}

}  // namespace ringlab
