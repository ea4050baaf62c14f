#include "ringlab/deciders.hpp"

#include "ringlab/error.hpp"

#include <string>

namespace ringlab {

namespace {

// Shared data for the S-secondary family of decisions on one submodule.
struct SecondaryContext {
  const FiniteModule& m;
  const FiniteRing& r;
  const Subset& n;
  Subset rad;            // sqrt(Ann N)
  std::vector<Subset> rn;  // r N for every r

  SecondaryContext(const Submodule& sub)
      : m(*sub.module), r(*sub.module->ring()), n(sub.members),
        rad(ideal_radical(annihilator(sub)).members) {
    rn.reserve(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
      rn.push_back(scale(m, x, n));
    }
  }
};

std::optional<Refutation> check_form_a(const SecondaryContext& c, Elem s) {
  const Subset& sn = c.rn[s];
  for (Elem x = 0; x < c.r.size(); ++x) {
    const Elem sx = c.r.mul(s, x);
    if (c.rn[sx] == sn || c.rad.contains(sx)) continue;
    return Refutation{s, {{"r", Space::Ring, x}}, {}};
  }
  return std::nullopt;
}

std::optional<Refutation> check_form_bc(const SecondaryContext& c, Elem s, const std::vector<Subset>& family,
                                        const char* role) {
  const Subset& sn = c.rn[s];
  for (Elem x = 0; x < c.r.size(); ++x) {
    if (c.rad.contains(c.r.mul(x, s))) continue;
    for (const auto& k : family) {
      if (c.rn[x].is_subset_of(k) && !sn.is_subset_of(k)) {
        return Refutation{s, {{"r", Space::Ring, x}}, {SubItem{role, Space::Module, k}}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Refutation> check_form_d(const SecondaryContext& c, Elem s) {
  const Subset& sn = c.rn[s];
  for (const auto& j : c.r.ideal_lattice()) {
    bool sj_in_rad = true;
    j.for_each([&](Elem x) { sj_in_rad = sj_in_rad && c.rad.contains(c.r.mul(s, x)); });
    if (sj_in_rad) continue;
    const Subset jn = ideal_times(c.m, j, c.n);
    for (const auto& k : c.m.lattice()) {
      if (jn.is_subset_of(k) && !sn.is_subset_of(k)) {
        return Refutation{s, {}, {SubItem{"J", Space::Ring, j}, SubItem{"K", Space::Module, k}}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Refutation> check_form(const SecondaryContext& c, Elem s, SecondaryForm form) {
  switch (form) {
    case SecondaryForm::A: return check_form_a(c, s);
    case SecondaryForm::B: return check_form_bc(c, s, c.m.lattice(), "K");
    case SecondaryForm::C: return check_form_bc(c, s, c.m.completely_irreducible(), "L");
    case SecondaryForm::D: return check_form_d(c, s);
  }
  return std::nullopt;
}

// Certificates for a form a witness: per r, either s r N = s N or the least
// t with (s r)^t N = 0.
std::vector<Certificate> form_a_certificates(const SecondaryContext& c, Elem s) {
  std::vector<Certificate> out;
  for (Elem x = 0; x < c.r.size(); ++x) {
    const Elem sx = c.r.mul(s, x);
    if (c.rn[sx] == c.rn[s]) {
      out.push_back({x, CertKind::Surjective, 0});
    } else if (auto t = nilpotency_index(c.m, sx, c.n)) {
      out.push_back({x, CertKind::Nilpotent, *t});
    }
  }
  return out;
}

void require_same_ring(const Submodule& n, const MultClosedSet& s) {
  if (n.module->ring() != s.ring()) {
    throw Error(ErrorKind::TypeMismatch, "submodule and multiplicatively closed set live over different rings");
  }
}

// Fixed-witness search shared by the S-prime family: the least s in S whose
// check passes, or one refutation per s.
template <class Check>
void search_witness(DecisionReport& rep, const MultClosedSet& s, Check&& check) {
  for (Elem sv : s.elements()) {
    if (auto bad = check(sv)) {
      rep.refutations.push_back(std::move(*bad));
    } else {
      rep.verdict = true;
      rep.witness = sv;
      rep.refutations.clear();
      return;
    }
  }
}

}  // namespace

std::string_view to_string(SecondaryForm form) {
  switch (form) {
    case SecondaryForm::A: return "a";
    case SecondaryForm::B: return "b";
    case SecondaryForm::C: return "c";
    case SecondaryForm::D: return "d";
  }
  return "?";
}

std::optional<SecondaryForm> parse_form(std::string_view text) {
  if (text == "a") return SecondaryForm::A;
  if (text == "b") return SecondaryForm::B;
  if (text == "c") return SecondaryForm::C;
  if (text == "d") return SecondaryForm::D;
  return std::nullopt;
}

std::string_view to_string(CertKind kind) {
  switch (kind) {
    case CertKind::Surjective: return "surjective";
    case CertKind::Nilpotent: return "nilpotent";
    case CertKind::Annihilates: return "annihilates";
    case CertKind::Contained: return "contained";
  }
  return "?";
}

std::string_view to_string(Disqualification d) {
  switch (d) {
    case Disqualification::ZeroSubmodule: return "zero_submodule";
    case Disqualification::Improper: return "improper";
    case Disqualification::AnnihilatorMeetsS: return "annihilator_meets_s";
    case Disqualification::RadicalMeetsS: return "radical_meets_s";
    case Disqualification::ColonMeetsS: return "colon_meets_s";
    case Disqualification::RadicalColonMeetsS: return "radical_colon_meets_s";
  }
  return "?";
}

std::optional<std::size_t> nilpotency_index(const FiniteModule& module, Elem x, const Subset& n) {
  Subset cur = n;
  for (std::size_t t = 1; t <= module.size() + 1; ++t) {
    cur = scale(module, x, cur);
    if (cur.size() == 1) {
      return t;
    }
  }
  return std::nullopt;
}

DecisionReport is_secondary(const Submodule& n) {
  DecisionReport rep;
  rep.property = "secondary";
  if (n.is_zero()) {
    rep.disqualified = Disqualification::ZeroSubmodule;
    rep.notes = "N = 0";
    return rep;
  }
  const FiniteModule& m = *n.module;
  for (Elem x = 0; x < m.ring()->size(); ++x) {
    if (scale(m, x, n.members) == n.members) {
      rep.certificates.push_back({x, CertKind::Surjective, 0});
    } else if (auto t = nilpotency_index(m, x, n.members)) {
      rep.certificates.push_back({x, CertKind::Nilpotent, *t});
    } else {
      rep.certificates.clear();
      rep.refutations.push_back(Refutation{std::nullopt, {{"r", Space::Ring, x}}, {}});
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

DecisionReport is_second(const Submodule& n) {
  DecisionReport rep;
  rep.property = "second";
  if (n.is_zero()) {
    rep.disqualified = Disqualification::ZeroSubmodule;
    rep.notes = "N = 0";
    return rep;
  }
  const FiniteModule& m = *n.module;
  for (Elem x = 0; x < m.ring()->size(); ++x) {
    const Subset xn = scale(m, x, n.members);
    if (xn == n.members) {
      rep.certificates.push_back({x, CertKind::Surjective, 0});
    } else if (xn.size() == 1) {
      rep.certificates.push_back({x, CertKind::Annihilates, 0});
    } else {
      rep.certificates.clear();
      rep.refutations.push_back(Refutation{std::nullopt, {{"r", Space::Ring, x}}, {}});
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

DecisionReport is_s_second(const Submodule& n, const MultClosedSet& s) {
  require_same_ring(n, s);
  DecisionReport rep;
  rep.property = "s_second";
  if (annihilator(n).members.intersects(s.members())) {
    rep.disqualified = Disqualification::AnnihilatorMeetsS;
    rep.notes = "Ann(N) meets S";
    return rep;
  }
  const FiniteModule& m = *n.module;
  const FiniteRing& r = *m.ring();
  std::vector<Subset> rn;
  for (Elem x = 0; x < r.size(); ++x) {
    rn.push_back(scale(m, x, n.members));
  }
  auto check = [&](Elem sv, const std::vector<Subset>& family, const char* role) -> std::optional<Refutation> {
    for (Elem x = 0; x < r.size(); ++x) {
      if (rn[r.mul(x, sv)].size() == 1) continue;
      for (const auto& k : family) {
        if (rn[x].is_subset_of(k) && !rn[sv].is_subset_of(k)) {
          return Refutation{sv, {{"r", Space::Ring, x}}, {SubItem{role, Space::Module, k}}};
        }
      }
    }
    return std::nullopt;
  };
  search_witness(rep, s, [&](Elem sv) {
    auto via_ci = check(sv, m.completely_irreducible(), "L");
    const bool via_lattice = !check(sv, m.lattice(), "K").has_value();
    if (via_lattice != !via_ci.has_value()) {
      throw Error(ErrorKind::Internal, "S-second check disagrees between completely irreducible and full lattice");
    }
    return via_ci;
  });
  if (rep.verdict) {
    const Elem sv = *rep.witness;
    for (Elem x = 0; x < r.size(); ++x) {
      if (rn[r.mul(x, sv)].size() == 1) {
        rep.certificates.push_back({x, CertKind::Annihilates, 0});
      } else {
        rep.certificates.push_back({x, CertKind::Contained, 0});
      }
    }
  }
  return rep;
}

DecisionReport is_s_secondary(const Submodule& n, const MultClosedSet& s, SecondaryForm form) {
  require_same_ring(n, s);
  DecisionReport rep;
  rep.property = "s_secondary";
  rep.form = std::string(to_string(form));
  const SecondaryContext ctx(n);
  if (ctx.rad.intersects(s.members())) {
    rep.disqualified = Disqualification::RadicalMeetsS;
    rep.notes = "sqrt(Ann(N)) meets S";
    return rep;
  }
  search_witness(rep, s, [&](Elem sv) { return check_form(ctx, sv, form); });
  if (rep.verdict && !check_form_a(ctx, *rep.witness)) {
    rep.certificates = form_a_certificates(ctx, *rep.witness);
  }
  return rep;
}

Subset s_secondary_witnesses(const Submodule& n, const MultClosedSet& s) {
  require_same_ring(n, s);
  Subset out(s.ring()->size());
  const SecondaryContext ctx(n);
  if (ctx.rad.intersects(s.members())) {
    return out;
  }
  s.members().for_each([&](Elem sv) {
    if (!check_form_a(ctx, sv)) {
      out.insert(sv);
    }
  });
  return out;
}

namespace {

DecisionReport prime_like(const Submodule& p, const MultClosedSet& s, bool primary) {
  require_same_ring(p, s);
  DecisionReport rep;
  rep.property = primary ? "s_primary" : "s_prime";
  if (!p.is_proper()) {
    rep.disqualified = Disqualification::Improper;
    rep.notes = "P = M";
    return rep;
  }
  Ideal colon = colon_ideal(p);
  if (primary) {
    colon = ideal_radical(colon);
  }
  if (colon.members.intersects(s.members())) {
    rep.disqualified = primary ? Disqualification::RadicalColonMeetsS : Disqualification::ColonMeetsS;
    rep.notes = primary ? "sqrt((P :_R M)) meets S" : "(P :_R M) meets S";
    return rep;
  }
  const FiniteModule& m = *p.module;
  const FiniteRing& r = *m.ring();
  search_witness(rep, s, [&](Elem sv) -> std::optional<Refutation> {
    for (Elem a = 0; a < r.size(); ++a) {
      if (colon.contains(r.mul(sv, a))) continue;
      for (Elem x = 0; x < m.size(); ++x) {
        if (p.members.contains(m.act(a, x)) && !p.members.contains(m.act(sv, x))) {
          return Refutation{sv, {{"a", Space::Ring, a}, {"m", Space::Module, x}}, {}};
        }
      }
    }
    return std::nullopt;
  });
  return rep;
}

}  // namespace

DecisionReport is_s_prime_submodule(const Submodule& p, const MultClosedSet& s) { return prime_like(p, s, false); }

DecisionReport is_s_primary(const Submodule& p, const MultClosedSet& s) { return prime_like(p, s, true); }

DecisionReport is_quasi_s_cotorsion_free(const ModulePtr& module, const MultClosedSet& s,
                                         const std::optional<Ideal>& modulo) {
  const Submodule whole = full_submodule(module);
  require_same_ring(whole, s);
  DecisionReport rep;
  rep.property = "quasi_cotorsion_free";
  if (ideal_radical(annihilator(whole)).members.intersects(s.members())) {
    rep.disqualified = Disqualification::RadicalMeetsS;
    rep.notes = "sqrt(Ann(M)) meets S";
    return rep;
  }
  const FiniteModule& m = *module;
  const FiniteRing& r = *m.ring();
  if (modulo && modulo->ring != m.ring()) {
    throw Error(ErrorKind::TypeMismatch, "ideal is not over the module's ring");
  }
  const Subset nil = ideal_radical(modulo ? *modulo : zero_ideal(m.ring())).members;
  std::vector<Subset> rm;
  for (Elem x = 0; x < r.size(); ++x) {
    rm.push_back(scale(m, x, whole.members));
  }
  search_witness(rep, s, [&](Elem sv) -> std::optional<Refutation> {
    for (Elem x = 0; x < r.size(); ++x) {
      if (nil.contains(r.mul(x, sv))) continue;
      for (const auto& l : m.completely_irreducible()) {
        if (rm[x].is_subset_of(l) && !rm[sv].is_subset_of(l)) {
          return Refutation{sv, {{"r", Space::Ring, x}}, {SubItem{"L", Space::Module, l}}};
        }
      }
    }
    return std::nullopt;
  });
  return rep;
}

namespace {

Submodule zero_interior(const ModulePtr& module) {
  const RingPtr& ring = module->ring();
  if (!is_domain(ring)) {
    throw Error(ErrorKind::NotADomain, "cotorsion notions need an integral domain; 0 is not prime here");
  }
  return interior(full_submodule(module), zero_ideal(ring));
}

}  // namespace

DecisionReport is_cotorsion_free(const ModulePtr& module) {
  const Submodule inner = zero_interior(module);
  DecisionReport rep;
  rep.property = "cotorsion_free";
  rep.verdict = inner.members.is_full();
  if (!rep.verdict) {
    rep.refutations.push_back(Refutation{std::nullopt, {}, {SubItem{"interior", Space::Module, inner.members}}});
  }
  return rep;
}

DecisionReport is_cotorsion(const ModulePtr& module) {
  const Submodule inner = zero_interior(module);
  DecisionReport rep;
  rep.property = "cotorsion";
  rep.verdict = inner.is_zero();
  if (!rep.verdict) {
    rep.refutations.push_back(Refutation{std::nullopt, {}, {SubItem{"interior", Space::Module, inner.members}}});
  }
  return rep;
}

}  // namespace ringlab
