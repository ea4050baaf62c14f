#include "ringlab/laws.hpp"

#include "ringlab/error.hpp"
#include "ringlab/fractions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace ringlab {

namespace {

class Tally {
public:
  Tally(std::string_view law, const Universe& u) {
    rep_.law = std::string(law);
    rep_.universe = u.label;
    rep_.mode = law_mode(law);
  }

  void check(bool ok, const std::function<Counterexample()>& describe) {
    ++rep_.checked;
    if (!ok && !rep_.counterexample) rep_.counterexample = describe();
  }
  void skip(std::size_t n = 1) { rep_.inapplicable += n; }
  void observe(std::string text) { rep_.observations.push_back(std::move(text)); }

  LawReport finish() && {
    if (rep_.counterexample) {
      rep_.status = LawStatus::Fail;
    } else {
      rep_.status = rep_.checked > 0 ? LawStatus::Pass : LawStatus::Inapplicable;
    }
    return std::move(rep_);
  }

private:
  LawReport rep_;
};

const char* yn(bool b) { return b ? "true" : "false"; }

Counterexample cx(std::string description, std::vector<std::pair<std::string, std::string>> fields) {
  return Counterexample{std::move(description), std::move(fields)};
}

std::string show(const FiniteModule& m, const Subset& n) { return format_elements(m, n); }
std::string show(const FiniteRing& r, const Subset& n) { return format_elements(r, n); }

Submodule sub(const Universe& u, const Subset& n) { return Submodule{u.module, n}; }

Ideal rad_ann(const Submodule& n) { return ideal_radical(annihilator(n)); }

bool rad_meets(const Submodule& n, const MultClosedSet& s) { return rad_ann(n).members.intersects(s.members()); }

bool s_sec(const Submodule& n, const MultClosedSet& s) { return is_s_secondary(n, s).verdict; }

bool sec(const Submodule& n) { return is_secondary(n).verdict; }

// Some s in S with s N inside s' N for every s' in S.
std::optional<Elem> least_multiple_witness(const Submodule& n, const MultClosedSet& s) {
  const FiniteModule& m = *n.module;
  const auto svals = s.elements();
  for (Elem a : svals) {
    const Subset an = scale(m, a, n.members);
    if (std::all_of(svals.begin(), svals.end(), [&](Elem b) { return an.is_subset_of(scale(m, b, n.members)); })) {
      return a;
    }
  }
  return std::nullopt;
}

// L1: the four forms agree on every submodule.
LawReport law_forms(std::string_view id, const Universe& u) {
  Tally t(id, u);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    const bool a = is_s_secondary(nn, u.s, SecondaryForm::A).verdict;
    const bool b = is_s_secondary(nn, u.s, SecondaryForm::B).verdict;
    const bool c = is_s_secondary(nn, u.s, SecondaryForm::C).verdict;
    const bool d = is_s_secondary(nn, u.s, SecondaryForm::D).verdict;
    t.check(a == b && b == c && c == d, [&] {
      return cx("forms disagree", {{"N", show(*u.module, n)}, {"a", yn(a)}, {"b", yn(b)}, {"c", yn(c)}, {"d", yn(d)}});
    });
  }
  return std::move(t).finish();
}

std::vector<MultClosedSet> sub_families(const Universe& u) {
  std::vector<MultClosedSet> out;
  auto add = [&](MultClosedSet x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  };
  const auto svals = u.s.elements();
  add(mcs_trivial(u.ring));
  for (std::size_t i = 0; i < svals.size(); ++i) {
    for (std::size_t j = i; j < svals.size(); ++j) {
      const Elem seed[] = {svals[i], svals[j]};
      add(mcs_closure(u.ring, std::span<const Elem>(seed)));
    }
  }
  add(u.s);
  add(mcs_saturation(u.s));
  return out;
}

// L2: secondary implies S-secondary, unit S gives back secondary, monotone in
// S, invariant under saturation, and localizes to a secondary submodule.
LawReport law_basic(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FiniteModule& m = *u.module;
  const Subset unit_set = units(u.ring);
  const bool s_units = u.s.members().is_subset_of(unit_set);
  const MultClosedSet star = mcs_saturation(u.s);
  const FractionModule frac = fraction_module(u.module, u.s);
  const auto family = sub_families(u);

  for (const auto& n : m.lattice()) {
    const Submodule nn = sub(u, n);
    const bool ss = s_sec(nn, u.s);
    const bool classical = sec(nn);

    if (classical && !rad_meets(nn, u.s)) {
      t.check(ss, [&] { return cx("(a) secondary but not S-secondary", {{"N", show(m, n)}}); });
    } else {
      t.skip();
    }
    if (s_units && ss) {
      t.check(classical, [&] { return cx("(a) S of units, S-secondary but not secondary", {{"N", show(m, n)}}); });
    } else {
      t.skip();
    }

    for (const auto& s1 : family) {
      if (!s_sec(nn, s1)) continue;
      for (const auto& s2 : family) {
        if (!s1.members().is_subset_of(s2.members())) continue;
        if (rad_meets(nn, s2)) {
          t.skip();
          continue;
        }
        t.check(s_sec(nn, s2), [&] {
          return cx("(b) not monotone in S", {{"N", show(m, n)},
                                              {"S1", show(*u.ring, s1.members())},
                                              {"S2", show(*u.ring, s2.members())}});
        });
      }
    }

    const bool star_sec = s_sec(nn, star);
    t.check(ss == star_sec, [&] {
      return cx("(c) S and its saturation disagree",
                {{"N", show(m, n)}, {"S", yn(ss)}, {"saturation", yn(star_sec)}});
    });

    if (ss) {
      const Submodule loc = localize_sub(nn, frac);
      t.check(sec(loc), [&] {
        return cx("(d) localization not secondary", {{"N", show(m, n)}, {"S^-1 N", show(*frac.module, loc.members)}});
      });
    } else {
      t.skip();
    }
  }
  return std::move(t).finish();
}

// L3: with S = {1}, S-secondary and secondary coincide.
LawReport law_trivial_s(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const MultClosedSet one = mcs_trivial(u.ring);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    const bool a = sec(nn);
    const bool b = s_sec(nn, one);
    t.check(a == b, [&] {
      return cx("secondary and {1}-secondary disagree",
                {{"N", show(*u.module, n)}, {"secondary", yn(a)}, {"{1}-secondary", yn(b)}});
    });
  }
  return std::move(t).finish();
}

// L4: the radical of the annihilator of an S-secondary submodule is S-prime.
LawReport law_radical_prime(std::string_view id, const Universe& u) {
  Tally t(id, u);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    if (!s_sec(nn, u.s)) {
      t.skip();
      continue;
    }
    const Ideal p = rad_ann(nn);
    t.check(is_s_prime_ideal(p, u.s).verdict, [&] {
      return cx("radical not S-prime", {{"N", show(*u.module, n)}, {"radical", show(*u.ring, p.members)}});
    });
  }
  return std::move(t).finish();
}

// Leaf coordinates of a module element of a (possibly nested) product universe.
void split_coords(const Universe& u, Elem x, std::vector<Elem>& out) {
  if (!u.is_product()) {
    out.push_back(x);
    return;
  }
  const std::size_t nb = u.factors[1].module->size();
  split_coords(u.factors[0], static_cast<Elem>(x / nb), out);
  split_coords(u.factors[1], static_cast<Elem>(x % nb), out);
}

void leaves(const Universe& u, std::vector<const Universe*>& out) {
  if (!u.is_product()) {
    out.push_back(&u);
    return;
  }
  leaves(u.factors[0], out);
  leaves(u.factors[1], out);
}

struct Components {
  std::vector<Subset> parts;
  bool is_product = false;
};

Components decompose(const Universe& u, const std::vector<const Universe*>& leaf, const Subset& n,
                     bool binary) {
  Components c;
  std::vector<const Universe*> factors = binary ? std::vector<const Universe*>{&u.factors[0], &u.factors[1]} : leaf;
  for (const auto* f : factors) c.parts.emplace_back(f->module->size());
  std::vector<Elem> coords;
  n.for_each([&](Elem x) {
    coords.clear();
    if (binary) {
      const std::size_t nb = u.factors[1].module->size();
      coords = {static_cast<Elem>(x / nb), static_cast<Elem>(x % nb)};
    } else {
      split_coords(u, x, coords);
    }
    for (std::size_t i = 0; i < coords.size(); ++i) c.parts[i].insert(coords[i]);
  });
  std::size_t prod = 1;
  for (const auto& p : c.parts) prod *= p.size();
  c.is_product = prod == n.size();
  return c;
}

std::string show_parts(const std::vector<const Universe*>& f, const std::vector<Subset>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " x ";
    out += show(*f[i]->module, parts[i]);
  }
  return out;
}

// L5 (binary) and L6 (three or more factors): a product submodule is
// S-secondary exactly when one component is and every other component has
// an annihilator radical meeting its S.
LawReport law_product(std::string_view id, const Universe& u, bool binary) {
  Tally t(id, u);
  std::vector<const Universe*> leaf;
  if (u.is_product()) leaves(u, leaf);
  if (!u.is_product() || (!binary && leaf.size() < 3)) {
    return std::move(t).finish();
  }
  const std::vector<const Universe*> factors =
      binary ? std::vector<const Universe*>{&u.factors[0], &u.factors[1]} : leaf;

  for (const auto& n : u.module->lattice()) {
    const Components c = decompose(u, leaf, n, binary);
    if (!c.is_product) {
      t.check(false, [&] { return cx("submodule is not a product", {{"N", show(*u.module, n)}}); });
      continue;
    }
    const bool lhs = s_sec(sub(u, n), u.s);
    std::vector<bool> secs, meets;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Submodule ni{factors[i]->module, c.parts[i]};
      secs.push_back(s_sec(ni, factors[i]->s));
      meets.push_back(rad_meets(ni, factors[i]->s));
    }
    bool rhs = false;
    for (std::size_t i = 0; i < factors.size() && !rhs; ++i) {
      bool others = true;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j != i) others = others && meets[j];
      }
      rhs = secs[i] && others;
    }
    t.check(lhs == rhs, [&] {
      return cx("product criterion disagrees",
                {{"N", show(*u.module, n)}, {"components", show_parts(factors, c.parts)},
                 {"S-secondary", yn(lhs)}, {"componentwise", yn(rhs)}});
    });
  }
  return std::move(t).finish();
}

// L7: some form-a witness s has s N inside s' N and (rad :s') inside (rad :s)
// for every s'.
LawReport law_witness_order(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FiniteModule& m = *u.module;
  const auto svals = u.s.elements();
  for (const auto& n : m.lattice()) {
    const Submodule nn = sub(u, n);
    const Subset wit = s_secondary_witnesses(nn, u.s);
    if (wit.empty()) {
      t.skip();
      continue;
    }
    const Ideal rad = rad_ann(nn);
    bool found = false;
    wit.for_each([&](Elem s) {
      if (found) return;
      const Subset sn = scale(m, s, n);
      const Ideal cs = ideal_quotient(rad, s);
      found = std::all_of(svals.begin(), svals.end(), [&](Elem s2) {
        return sn.is_subset_of(scale(m, s2, n)) && ideal_quotient(rad, s2).members.is_subset_of(cs.members);
      });
    });
    t.check(found, [&] {
      return cx("no witness satisfies both parts", {{"N", show(m, n)}, {"witnesses", show(*u.ring, wit)}});
    });
  }
  return std::move(t).finish();
}

// L8: S-secondary iff the localization is secondary and some s has s N in s' N.
LawReport law_localization(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FractionModule frac = fraction_module(u.module, u.s);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    if (rad_meets(nn, u.s)) {
      t.skip();
      continue;
    }
    const bool lhs = s_sec(nn, u.s);
    const Submodule loc = localize_sub(nn, frac);
    const bool loc_sec = sec(loc);
    const bool order = least_multiple_witness(nn, u.s).has_value();
    t.check(lhs == (loc_sec && order), [&] {
      return cx("localization criterion disagrees", {{"N", show(*u.module, n)},
                                                     {"S-secondary", yn(lhs)},
                                                     {"S^-1 N secondary", yn(loc_sec)},
                                                     {"multiple witness", yn(order)}});
    });
  }
  return std::move(t).finish();
}

// L9: S-secondary iff s N is secondary for some s.
LawReport law_witness_product(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FiniteModule& m = *u.module;
  const auto svals = u.s.elements();
  for (const auto& n : m.lattice()) {
    const Submodule nn = sub(u, n);
    if (rad_meets(nn, u.s)) {
      t.skip();
      continue;
    }
    const bool lhs = s_sec(nn, u.s);
    const bool rhs = std::any_of(svals.begin(), svals.end(),
                                 [&](Elem s) { return sec(Submodule{u.module, scale(m, s, n)}); });
    t.check(lhs == rhs, [&] {
      return cx("s N criterion disagrees", {{"N", show(m, n)}, {"S-secondary", yn(lhs)}, {"some sN secondary", yn(rhs)}});
    });
  }
  return std::move(t).finish();
}

bool local_criterion(const Submodule& n, const std::vector<Ideal>& maximals) {
  const Ideal rad = rad_ann(n);
  if (!is_prime(rad)) return false;
  return std::all_of(maximals.begin(), maximals.end(),
                     [&](const Ideal& mx) { return s_sec(n, mcs_complement(mx)); });
}

// L10: under rad(Ann N) inside Jac(R), secondary iff the radical is prime and
// N is (R \ m)-secondary for every maximal m.
LawReport law_jacobson(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const Spectrum spec = spectrum(u.ring);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    if (!rad_ann(nn).members.is_subset_of(spec.jacobson.members)) {
      t.skip();
      continue;
    }
    const bool lhs = sec(nn);
    const bool rhs = local_criterion(nn, spec.maximals);
    t.check(lhs == rhs, [&] {
      return cx("maximal-ideal criterion disagrees",
                {{"N", show(*u.module, n)}, {"secondary", yn(lhs)}, {"criterion", yn(rhs)}});
    });
  }
  return std::move(t).finish();
}

// L11: the quasilocal case, with no radical hypothesis.
LawReport law_quasilocal(std::string_view id, const Universe& u) {
  Tally t(id, u);
  if (!is_quasilocal(u.ring)) return std::move(t).finish();
  const Spectrum spec = spectrum(u.ring);
  for (const auto& n : u.module->lattice()) {
    const Submodule nn = sub(u, n);
    const bool lhs = sec(nn);
    const bool rhs = local_criterion(nn, spec.maximals);
    t.check(lhs == rhs, [&] {
      return cx("quasilocal criterion disagrees",
                {{"N", show(*u.module, n)}, {"secondary", yn(lhs)}, {"criterion", yn(rhs)}});
    });
  }
  return std::move(t).finish();
}

constexpr std::size_t kHomCap = 16;

std::string show_graph(const ModuleHom& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.graph.size(); ++i) {
    if (i) out += ",";
    out += f.target->label(f.graph[i]);
  }
  return out + "]";
}

// L12: images and preimages of S-secondary submodules under monomorphisms.
LawReport law_mono(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const ModulePtr& m = u.module;
  if (m->size() > kHomCap) return std::move(t).finish();

  std::vector<ModulePtr> targets{m};
  if (m->size() * m->size() <= kHomCap) targets.push_back(module_product(m, m, ProductMode::SameRing));
  for (const auto& h : u.hom_targets) {
    if (h->ring() == m->ring() && h->size() <= kHomCap) targets.push_back(h);
  }

  for (const auto& target : targets) {
    for (const auto& f : enumerate_homs(m, target)) {
      if (!is_mono(f)) continue;
      const Submodule image_m = hom_image(f, full_submodule(m));
      for (const auto& n : m->lattice()) {
        const Submodule nn{m, n};
        if (!s_sec(nn, u.s)) {
          t.skip();
          continue;
        }
        const Submodule fn = hom_image(f, nn);
        t.check(s_sec(fn, u.s), [&] {
          return cx("(a) image not S-secondary", {{"f", show_graph(f)}, {"N", show(*m, n)}});
        });
      }
      for (const auto& n2 : target->lattice()) {
        const Submodule nn2{target, n2};
        if (!n2.is_subset_of(image_m.members) || !s_sec(nn2, u.s)) {
          t.skip();
          continue;
        }
        const Submodule pre = hom_preimage(f, nn2);
        t.check(s_sec(pre, u.s), [&] {
          return cx("(b) preimage not S-secondary", {{"f", show_graph(f)}, {"N'", show(*target, n2)}});
        });
      }
    }
  }
  return std::move(t).finish();
}

// L13: comultiplication modules; N inside K + H forces s (0 :_M rad) inside
// K or H for some s.
LawReport law_comultiplication(std::string_view id, const Universe& u) {
  Tally t(id, u);
  if (!is_comultiplication(u.module).verdict) return std::move(t).finish();
  const FiniteModule& m = *u.module;
  const auto& lat = m.lattice();
  const auto svals = u.s.elements();
  for (const auto& n : lat) {
    const Submodule nn = sub(u, n);
    if (!s_sec(nn, u.s)) {
      t.skip();
      continue;
    }
    const Subset c = colon_into(zero_submodule(u.module), rad_ann(nn)).members;
    for (const auto& k : lat) {
      for (const auto& h : lat) {
        if (!n.is_subset_of(submodule_sum(m, k, h))) continue;
        const bool ok = std::any_of(svals.begin(), svals.end(), [&](Elem s) {
          const Subset sc = scale(m, s, c);
          return sc.is_subset_of(k) || sc.is_subset_of(h);
        });
        t.check(ok, [&] {
          return cx("no s pushes (0 :_M rad) into K or H", {{"N", show(m, n)}, {"K", show(m, k)}, {"H", show(m, h)}});
        });
      }
    }
  }
  return std::move(t).finish();
}

// L14: for I inside Ann(M), I and I(+)0 agree on being secondary, and with
// I missing S, on being S-, S(+)0- and S(+)M-secondary.
LawReport law_idealization(std::string_view id, const Universe& u) {
  Tally t(id, u);
  if (!u.idealization) return std::move(t).finish();
  const Idealization& idz = u.idealization->idealization;
  const MultClosedSet& s = u.idealization->base_s;
  const ModulePtr base_reg = module_regular(idz.base);
  const ModulePtr big_reg = u.module;
  const Ideal ann_m = annihilator(full_submodule(idz.module));
  const MultClosedSet s_zero = idz.embed(s, zero_submodule(idz.module));
  const MultClosedSet s_full = idz.embed(s, full_submodule(idz.module));

  for (const auto& i : idz.base->ideal_lattice()) {
    if (!i.is_subset_of(ann_m.members)) {
      t.skip();
      continue;
    }
    const Ideal ideal{idz.base, i};
    const Submodule small{base_reg, i};
    const Submodule big{big_reg, idz.embed(ideal).members};
    const bool a = sec(small);
    const bool b = sec(big);
    t.check(a == b, [&] {
      return cx("I and I(+)0 disagree on secondary",
                {{"I", show(*idz.base, i)}, {"I secondary", yn(a)}, {"I(+)0 secondary", yn(b)}});
    });
    if (i.intersects(s.members())) {
      t.skip();
      continue;
    }
    const bool sa = s_sec(small, s);
    const bool sb = s_sec(big, s_zero);
    const bool sc = s_sec(big, s_full);
    t.check(sa == sb && sb == sc, [&] {
      return cx("S-secondary status differs across idealization",
                {{"I", show(*idz.base, i)}, {"S", yn(sa)}, {"S(+)0", yn(sb)}, {"S(+)M", yn(sc)}});
    });
  }
  return std::move(t).finish();
}

// M over R/P for P = Ann(M), with the image of S; nullopt when the image
// meets zero.
std::optional<bool> literal_quotient_quasi(const Universe& u, const Ideal& p) {
  const Quotient q = ring_quotient(u.ring, p);
  const std::size_t nq = q.ring->size();
  const std::size_t nm = u.module->size();
  std::vector<Elem> rep(nq, 0);
  std::vector<bool> seen(nq, false);
  for (Elem r = 0; r < u.ring->size(); ++r) {
    const Elem c = q.projection(r);
    if (!seen[c]) {
      seen[c] = true;
      rep[c] = r;
    }
  }
  FiniteModule::Tables tab;
  tab.size = nm;
  tab.add.resize(nm * nm);
  tab.act.resize(nq * nm);
  for (Elem a = 0; a < nm; ++a) {
    tab.labels.push_back(u.module->label(a));
    for (Elem b = 0; b < nm; ++b) tab.add[a * nm + b] = u.module->add(a, b);
  }
  for (Elem c = 0; c < nq; ++c) {
    for (Elem x = 0; x < nm; ++x) tab.act[c * nm + x] = u.module->act(rep[c], x);
  }
  const ModulePtr mq = module_from_tables(q.ring, std::move(tab));
  Subset image(nq);
  u.s.members().for_each([&](Elem x) { image.insert(q.projection(x)); });
  if (image.contains(q.ring->zero())) return std::nullopt;
  return is_quasi_s_cotorsion_free(mq, MultClosedSet::make(q.ring, image)).verdict;
}

// L15: M is S-secondary iff P = rad(Ann M) is S-prime and M is quasi
// S-cotorsion-free over R/P; over a field, cotorsion-free iff quasi
// (R \ P)-cotorsion-free for all primes P, iff for all maximal P.
LawReport law_quasi(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const Submodule whole = full_submodule(u.module);
  const Ideal p = rad_ann(whole);
  const bool lhs = s_sec(whole, u.s);
  const bool prime = is_s_prime_ideal(p, u.s).verdict;
  const bool quasi = is_quasi_s_cotorsion_free(u.module, u.s, p).verdict;
  t.check(lhs == (prime && quasi), [&] {
    return cx("quasi-cotorsion criterion disagrees",
              {{"S-secondary", yn(lhs)}, {"radical S-prime", yn(prime)}, {"quasi over R/P", yn(quasi)}});
  });

  const Ideal ann = annihilator(whole);
  if (ann == p && p.is_proper()) {
    if (const auto literal = literal_quotient_quasi(u, p)) {
      t.check(*literal == quasi, [&] {
        return cx("literal R/P module disagrees", {{"relative", yn(quasi)}, {"literal", yn(*literal)}});
      });
    } else {
      t.skip();
    }
  } else {
    t.skip();
  }

  if (is_field(u.ring)) {
    if (u.module->size() == 1) {
      t.skip();
    } else {
      const Spectrum spec = spectrum(u.ring);
      const bool a = is_cotorsion_free(u.module).verdict;
      auto all_quasi = [&](const std::vector<Ideal>& ideals) {
        return std::all_of(ideals.begin(), ideals.end(), [&](const Ideal& q) {
          return is_quasi_s_cotorsion_free(u.module, mcs_complement(q)).verdict;
        });
      };
      const bool b = all_quasi(spec.primes);
      const bool c = all_quasi(spec.maximals);
      t.check(a == b && b == c, [&] {
        return cx("field criterion disagrees", {{"cotorsion-free", yn(a)}, {"primes", yn(b)}, {"maximals", yn(c)}});
      });
    }
  } else {
    t.skip();
  }
  return std::move(t).finish();
}

struct WholeModuleFacts {
  bool radical_misses_s;
  bool all_nonzero_s_secondary;
  bool all_proper_s_primary;
  std::optional<Subset> bad_secondary;
  std::optional<Subset> bad_primary;
};

WholeModuleFacts whole_module_facts(const ModulePtr& m, const MultClosedSet& s) {
  WholeModuleFacts f{};
  f.radical_misses_s = !rad_meets(full_submodule(m), s);
  f.all_nonzero_s_secondary = true;
  f.all_proper_s_primary = true;
  for (const auto& n : m->lattice()) {
    const Submodule nn{m, n};
    if (!nn.is_zero() && f.all_nonzero_s_secondary && !s_sec(nn, s)) {
      f.all_nonzero_s_secondary = false;
      f.bad_secondary = n;
    }
    if (nn.is_proper() && f.all_proper_s_primary && !is_s_primary(nn, s).verdict) {
      f.all_proper_s_primary = false;
      f.bad_primary = n;
    }
  }
  return f;
}

// L16: comultiplication, every non-zero submodule S-secondary => W = rad.
LawReport law_w_set(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const auto f = whole_module_facts(u.module, u.s);
  if (!is_comultiplication(u.module).verdict || !f.radical_misses_s || !f.all_nonzero_s_secondary) {
    t.skip();
    return std::move(t).finish();
  }
  const Subset w = w_set(u.module).members;
  const Subset rad = rad_ann(full_submodule(u.module)).members;
  t.check(w == rad, [&] { return cx("W differs from rad Ann", {{"W", show(*u.ring, w)}, {"rad", show(*u.ring, rad)}}); });
  return std::move(t).finish();
}

// L17: multiplication, every proper submodule S-primary => Z = rad.
LawReport law_z_set(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const auto f = whole_module_facts(u.module, u.s);
  if (!is_multiplication(u.module).verdict || !f.radical_misses_s || !f.all_proper_s_primary) {
    t.skip();
    return std::move(t).finish();
  }
  const Subset z = z_set(u.module).members;
  const Subset rad = rad_ann(full_submodule(u.module)).members;
  t.check(z == rad, [&] { return cx("Z differs from rad Ann", {{"Z", show(*u.ring, z)}, {"rad", show(*u.ring, rad)}}); });
  return std::move(t).finish();
}

// L18: truth table of the three conditions on multiplication and
// comultiplication modules. Recorded, never asserted.
LawReport law_truth_table(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const auto f = whole_module_facts(u.module, u.s);
  if (!is_multiplication(u.module).verdict || !is_comultiplication(u.module).verdict || !f.radical_misses_s) {
    t.skip();
    return std::move(t).finish();
  }
  const Subset z = z_set(u.module).members;
  const Subset w = w_set(u.module).members;
  const Subset rad = rad_ann(full_submodule(u.module)).members;
  const bool b = z == w && w == rad;
  t.observe(std::string("(a) all non-zero S-secondary: ") + yn(f.all_nonzero_s_secondary));
  t.observe(std::string("(b) Z = W = rad Ann: ") + yn(b));
  t.observe(std::string("(c) all proper S-primary: ") + yn(f.all_proper_s_primary));
  const bool agree = f.all_nonzero_s_secondary == b && b == f.all_proper_s_primary;
  t.observe(agree ? "conditions agree" : "conditions differ");
  t.check(true, [] { return Counterexample{}; });
  return std::move(t).finish();
}

// L19: S^-1 N inside S^-1 K forces s N inside K for some s.
LawReport law_fractions_inclusion(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FractionModule frac = fraction_module(u.module, u.s);
  const FiniteModule& m = *u.module;
  const auto& lat = m.lattice();
  std::vector<Subset> loc;
  loc.reserve(lat.size());
  for (const auto& n : lat) loc.push_back(localize_sub(Submodule{u.module, n}, frac).members);
  const auto svals = u.s.elements();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (!loc[i].is_subset_of(loc[j])) {
        t.skip();
        continue;
      }
      const bool ok = std::any_of(svals.begin(), svals.end(),
                                  [&](Elem s) { return scale(m, s, lat[i]).is_subset_of(lat[j]); });
      t.check(ok, [&] {
        return cx("no s carries N into K", {{"N", show(m, lat[i])}, {"K", show(m, lat[j])}});
      });
    }
  }
  return std::move(t).finish();
}

// L20: every submodule is the meet of the completely irreducible submodules
// above it, and inclusion can be tested against them.
LawReport law_ci_meet(std::string_view id, const Universe& u) {
  Tally t(id, u);
  const FiniteModule& m = *u.module;
  const auto& lat = m.lattice();
  const auto& ci = m.completely_irreducible();
  for (const auto& n : lat) {
    Subset meet = m.all();
    for (const auto& l : ci) {
      if (n.is_subset_of(l)) meet &= l;
    }
    t.check(meet == n, [&] { return cx("not a meet of completely irreducibles", {{"N", show(m, n)}, {"meet", show(m, meet)}}); });
  }
  for (const auto& n : lat) {
    for (const auto& k : lat) {
      const bool direct = n.is_subset_of(k);
      const bool via = std::all_of(ci.begin(), ci.end(), [&](const Subset& l) { return !k.is_subset_of(l) || n.is_subset_of(l); });
      t.check(direct == via, [&] {
        return cx("inclusion test disagrees", {{"N", show(m, n)}, {"K", show(m, k)}, {"direct", yn(direct)}});
      });
    }
  }
  return std::move(t).finish();
}

using LawFn = LawReport (*)(std::string_view, const Universe&);

LawReport law_product_binary(std::string_view id, const Universe& u) { return law_product(id, u, true); }
LawReport law_product_nary(std::string_view id, const Universe& u) { return law_product(id, u, false); }

const std::map<std::string, LawFn, std::less<>>& law_table() {
  static const std::map<std::string, LawFn, std::less<>> table{
      {"L1", law_forms},           {"L2", law_basic},
      {"L3", law_trivial_s},       {"L4", law_radical_prime},
      {"L5", law_product_binary},  {"L6", law_product_nary},
      {"L7", law_witness_order},   {"L8", law_localization},
      {"L9", law_witness_product}, {"L10", law_jacobson},
      {"L11", law_quasilocal},     {"L12", law_mono},
      {"L13", law_comultiplication}, {"L14", law_idealization},
      {"L15", law_quasi},          {"L16", law_w_set},
      {"L17", law_z_set},          {"L18", law_truth_table},
      {"L19", law_fractions_inclusion}, {"L20", law_ci_meet},
  };
  return table;
}

int law_number(std::string_view id) {
  int n = 0;
  std::from_chars(id.data() + 1, id.data() + id.size(), n);
  return n;
}

}  // namespace

std::string_view to_string(LawStatus status) {
  switch (status) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view to_string(LawMode mode) { return mode == LawMode::Proved ? "proved" : "exploratory"; }

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (int i = 1; i <= 20; ++i) out.push_back("L" + std::to_string(i));
    return out;
  }();
  return ids;
}

LawMode law_mode(std::string_view law) { return law == "L18" ? LawMode::Exploratory : LawMode::Proved; }

LawReport law_check(std::string_view law, const Universe& u) {
  const auto& table = law_table();
  const auto it = table.find(law);
  if (it == table.end()) {
    throw Error(ErrorKind::UnknownLaw, "unknown law '" + std::string(law) + "'");
  }
  return it->second(law, u);
}

std::vector<LawReport> law_suite(const Universe& u) {
  std::vector<LawReport> out;
  for (const auto& id : law_ids()) out.push_back(law_check(id, u));
  return out;
}

bool law_report_less(const LawReport& a, const LawReport& b) {
  const int na = law_number(a.law);
  const int nb = law_number(b.law);
  if (na != nb) return na < nb;
  return a.universe < b.universe;
}

}  // namespace ringlab
