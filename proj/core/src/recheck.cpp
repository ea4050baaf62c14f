// Certificate re-validation. Everything here re-derives nilpotency by explicit
// powers instead of radical membership, so it does not share the decision
// path it is checking.

#include "ringlab/deciders.hpp"
#include "ringlab/error.hpp"

#include <algorithm>

namespace ringlab {

namespace {

bool nilpotent_on(const FiniteModule& m, Elem x, const Subset& n) {
  return nilpotency_index(m, x, n).has_value();
}

Subset power_scale(const FiniteModule& m, Elem x, const Subset& n, std::size_t t) {
  Subset cur = n;
  for (std::size_t i = 0; i < t; ++i) {
    cur = scale(m, x, cur);
  }
  return cur;
}

bool ring_nilpotent(const FiniteRing& r, Elem x) {
  Elem p = x;
  for (std::size_t t = 1; t <= r.size(); ++t) {
    if (p == r.zero()) return true;
    p = r.mul(p, x);
  }
  return false;
}

bool in_lattice(const FiniteModule& m, const Subset& k) {
  const auto& lat = m.lattice();
  return std::find(lat.begin(), lat.end(), k) != lat.end();
}

const Item* find_item(const Refutation& ref, std::string_view role) {
  for (const auto& it : ref.items) {
    if (it.role == role) return &it;
  }
  return nullptr;
}

const SubItem* find_sub(const Refutation& ref, std::string_view role) {
  for (const auto& it : ref.subsets) {
    if (it.role == role) return &it;
  }
  return nullptr;
}

// Every s in S has a refutation that `valid` accepts.
template <class Valid>
bool refutes_every_s(const DecisionReport& rep, const MultClosedSet& s, Valid&& valid) {
  for (Elem sv : s.elements()) {
    const bool covered = std::any_of(rep.refutations.begin(), rep.refutations.end(),
                                     [&](const Refutation& ref) { return ref.s == sv && valid(ref); });
    if (!covered) return false;
  }
  return true;
}

bool radical_meets(const FiniteModule& m, const Subset& n, const MultClosedSet& s) {
  const auto svals = s.elements();
  return std::any_of(svals.begin(), svals.end(), [&](Elem x) { return nilpotent_on(m, x, n); });
}

// The S-secondary condition for one s and form, evaluated directly.
bool secondary_form_holds(const FiniteModule& m, const Subset& n, Elem s, SecondaryForm form) {
  const FiniteRing& r = *m.ring();
  const Subset sn = scale(m, s, n);
  switch (form) {
    case SecondaryForm::A:
      for (Elem x = 0; x < r.size(); ++x) {
        const Elem sx = r.mul(s, x);
        if (scale(m, sx, n) != sn && !nilpotent_on(m, sx, n)) return false;
      }
      return true;
    case SecondaryForm::B:
    case SecondaryForm::C: {
      const auto& family = form == SecondaryForm::B ? m.lattice() : m.completely_irreducible();
      for (Elem x = 0; x < r.size(); ++x) {
        const Subset xn = scale(m, x, n);
        for (const auto& k : family) {
          if (xn.is_subset_of(k) && !sn.is_subset_of(k) && !nilpotent_on(m, r.mul(x, s), n)) return false;
        }
      }
      return true;
    }
    case SecondaryForm::D:
      for (const auto& j : r.ideal_lattice()) {
        bool sj_nil = true;
        j.for_each([&](Elem x) { sj_nil = sj_nil && nilpotent_on(m, r.mul(s, x), n); });
        const Subset jn = ideal_times(m, j, n);
        for (const auto& k : m.lattice()) {
          if (jn.is_subset_of(k) && !sn.is_subset_of(k) && !sj_nil) return false;
        }
      }
      return true;
  }
  return false;
}

bool secondary_refutation_valid(const FiniteModule& m, const Subset& n, const Refutation& ref, SecondaryForm form) {
  const FiniteRing& r = *m.ring();
  const Elem s = *ref.s;
  const Subset sn = scale(m, s, n);
  switch (form) {
    case SecondaryForm::A: {
      const Item* x = find_item(ref, "r");
      if (!x) return false;
      const Elem sx = r.mul(s, x->value);
      return scale(m, sx, n) != sn && !nilpotent_on(m, sx, n);
    }
    case SecondaryForm::B:
    case SecondaryForm::C: {
      const Item* x = find_item(ref, "r");
      const SubItem* k = find_sub(ref, form == SecondaryForm::B ? "K" : "L");
      if (!x || !k || !in_lattice(m, k->members)) return false;
      if (form == SecondaryForm::C) {
        const auto& ci = m.completely_irreducible();
        if (std::find(ci.begin(), ci.end(), k->members) == ci.end()) return false;
      }
      return scale(m, x->value, n).is_subset_of(k->members) && !sn.is_subset_of(k->members) &&
             !nilpotent_on(m, r.mul(x->value, s), n);
    }
    case SecondaryForm::D: {
      const SubItem* j = find_sub(ref, "J");
      const SubItem* k = find_sub(ref, "K");
      if (!j || !k || !in_lattice(m, k->members)) return false;
      const auto& ideals = r.ideal_lattice();
      if (std::find(ideals.begin(), ideals.end(), j->members) == ideals.end()) return false;
      bool sj_nil = true;
      j->members.for_each([&](Elem x) { sj_nil = sj_nil && nilpotent_on(m, r.mul(s, x), n); });
      return ideal_times(m, j->members, n).is_subset_of(k->members) && !sn.is_subset_of(k->members) && !sj_nil;
    }
  }
  return false;
}

bool recheck_secondary(const DecisionReport& rep, const Submodule& target) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset& n = target.members;
  if (rep.disqualified) {
    return !rep.verdict && *rep.disqualified == Disqualification::ZeroSubmodule && target.is_zero();
  }
  if (target.is_zero()) return false;
  if (rep.verdict) {
    if (rep.certificates.size() != r.size()) return false;
    for (Elem x = 0; x < r.size(); ++x) {
      const Certificate& c = rep.certificates[x];
      if (c.r != x) return false;
      if (c.kind == CertKind::Surjective && scale(m, x, n) != n) return false;
      if (c.kind == CertKind::Nilpotent && power_scale(m, x, n, c.t).size() != 1) return false;
      if (c.kind != CertKind::Surjective && c.kind != CertKind::Nilpotent) return false;
    }
    return true;
  }
  if (rep.refutations.size() != 1) return false;
  const Item* x = find_item(rep.refutations.front(), "r");
  return x && scale(m, x->value, n) != n && !nilpotent_on(m, x->value, n);
}

bool recheck_second(const DecisionReport& rep, const Submodule& target) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset& n = target.members;
  if (rep.disqualified) {
    return !rep.verdict && *rep.disqualified == Disqualification::ZeroSubmodule && target.is_zero();
  }
  if (target.is_zero()) return false;
  if (rep.verdict) {
    if (rep.certificates.size() != r.size()) return false;
    for (Elem x = 0; x < r.size(); ++x) {
      const Certificate& c = rep.certificates[x];
      const Subset xn = scale(m, x, n);
      if (c.r != x) return false;
      if (c.kind == CertKind::Surjective && xn != n) return false;
      if (c.kind == CertKind::Annihilates && xn.size() != 1) return false;
      if (c.kind != CertKind::Surjective && c.kind != CertKind::Annihilates) return false;
    }
    return true;
  }
  if (rep.refutations.size() != 1) return false;
  const Item* x = find_item(rep.refutations.front(), "r");
  if (!x) return false;
  const Subset xn = scale(m, x->value, n);
  return xn != n && xn.size() != 1;
}

bool recheck_s_second(const DecisionReport& rep, const Submodule& target, const MultClosedSet& s) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset& n = target.members;
  const auto svals = s.elements();
  const bool ann_meets =
      std::any_of(svals.begin(), svals.end(), [&](Elem x) { return scale(m, x, n).size() == 1; });
  if (rep.disqualified) {
    return !rep.verdict && *rep.disqualified == Disqualification::AnnihilatorMeetsS && ann_meets;
  }
  if (ann_meets) return false;
  if (rep.verdict) {
    if (!rep.witness || !s.contains(*rep.witness) || rep.certificates.size() != r.size()) return false;
    const Elem sv = *rep.witness;
    const Subset sn = scale(m, sv, n);
    for (Elem x = 0; x < r.size(); ++x) {
      const Certificate& c = rep.certificates[x];
      if (c.r != x) return false;
      if (c.kind == CertKind::Annihilates && scale(m, r.mul(x, sv), n).size() != 1) return false;
      if (c.kind == CertKind::Contained && !sn.is_subset_of(scale(m, x, n))) return false;
      if (c.kind != CertKind::Annihilates && c.kind != CertKind::Contained) return false;
    }
    return true;
  }
  return refutes_every_s(rep, s, [&](const Refutation& ref) {
    const Item* x = find_item(ref, "r");
    const SubItem* l = find_sub(ref, "L");
    if (!x || !l || !in_lattice(m, l->members)) return false;
    return scale(m, x->value, n).is_subset_of(l->members) && scale(m, r.mul(x->value, *ref.s), n).size() != 1 &&
           !scale(m, *ref.s, n).is_subset_of(l->members);
  });
}

bool recheck_s_secondary(const DecisionReport& rep, const Submodule& target, const MultClosedSet& s) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset& n = target.members;
  const auto form = parse_form(rep.form.empty() ? "a" : rep.form);
  if (!form) return false;
  const bool meets = radical_meets(m, n, s);
  if (rep.disqualified) {
    return !rep.verdict && *rep.disqualified == Disqualification::RadicalMeetsS && meets;
  }
  if (meets) return false;
  if (rep.verdict) {
    if (!rep.witness || !s.contains(*rep.witness)) return false;
    const Elem sv = *rep.witness;
    if (!rep.certificates.empty()) {
      if (rep.certificates.size() != r.size()) return false;
      const Subset sn = scale(m, sv, n);
      for (Elem x = 0; x < r.size(); ++x) {
        const Certificate& c = rep.certificates[x];
        const Elem sx = r.mul(sv, x);
        if (c.r != x) return false;
        if (c.kind == CertKind::Surjective && scale(m, sx, n) != sn) return false;
        if (c.kind == CertKind::Nilpotent && power_scale(m, sx, n, c.t).size() != 1) return false;
        if (c.kind != CertKind::Surjective && c.kind != CertKind::Nilpotent) return false;
      }
    }
    return secondary_form_holds(m, n, sv, *form);
  }
  return refutes_every_s(rep, s, [&](const Refutation& ref) { return secondary_refutation_valid(m, n, ref, *form); });
}

bool recheck_prime_like(const DecisionReport& rep, const Submodule& target, const MultClosedSet& s, bool primary) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset& p = target.members;
  if (!target.is_proper()) {
    return !rep.verdict && rep.disqualified == Disqualification::Improper;
  }
  // (P :_R M), or its radical, by direct scan.
  Subset colon(r.size());
  for (Elem a = 0; a < r.size(); ++a) {
    bool inside = true;
    if (primary) {
      Elem pw = a;
      inside = false;
      for (std::size_t t = 1; t <= r.size() && !inside; ++t) {
        inside = scale(m, pw, m.all()).is_subset_of(p);
        pw = r.mul(pw, a);
      }
    } else {
      inside = scale(m, a, m.all()).is_subset_of(p);
    }
    if (inside) colon.insert(a);
  }
  const bool meets = colon.intersects(s.members());
  if (rep.disqualified) {
    const auto expected = primary ? Disqualification::RadicalColonMeetsS : Disqualification::ColonMeetsS;
    return !rep.verdict && *rep.disqualified == expected && meets;
  }
  if (meets) return false;
  auto violation = [&](Elem sv, Elem a, Elem x) {
    return p.contains(m.act(a, x)) && !colon.contains(r.mul(sv, a)) && !p.contains(m.act(sv, x));
  };
  if (rep.verdict) {
    if (!rep.witness || !s.contains(*rep.witness)) return false;
    for (Elem a = 0; a < r.size(); ++a) {
      for (Elem x = 0; x < m.size(); ++x) {
        if (violation(*rep.witness, a, x)) return false;
      }
    }
    return true;
  }
  return refutes_every_s(rep, s, [&](const Refutation& ref) {
    const Item* a = find_item(ref, "a");
    const Item* x = find_item(ref, "m");
    return a && x && violation(*ref.s, a->value, x->value);
  });
}

bool recheck_quasi(const DecisionReport& rep, const Submodule& target, const MultClosedSet& s) {
  const FiniteModule& m = *target.module;
  const FiniteRing& r = *m.ring();
  const Subset all = m.all();
  const bool meets = radical_meets(m, all, s);
  if (rep.disqualified) {
    return !rep.verdict && *rep.disqualified == Disqualification::RadicalMeetsS && meets;
  }
  if (meets) return false;
  auto violation = [&](Elem sv, Elem x, const Subset& l) {
    return scale(m, x, all).is_subset_of(l) && !scale(m, sv, all).is_subset_of(l) && !ring_nilpotent(r, r.mul(x, sv));
  };
  const auto& ci = m.completely_irreducible();
  if (rep.verdict) {
    if (!rep.witness || !s.contains(*rep.witness)) return false;
    for (Elem x = 0; x < r.size(); ++x) {
      for (const auto& l : ci) {
        if (violation(*rep.witness, x, l)) return false;
      }
    }
    return true;
  }
  return refutes_every_s(rep, s, [&](const Refutation& ref) {
    const Item* x = find_item(ref, "r");
    const SubItem* l = find_sub(ref, "L");
    return x && l && std::find(ci.begin(), ci.end(), l->members) != ci.end() && violation(*ref.s, x->value, l->members);
  });
}

bool recheck_multiplication(const DecisionReport& rep, const Submodule& target, bool comult) {
  const ModulePtr& module = target.module;
  const FiniteModule& m = *module;
  auto fails = [&](const Subset& n) {
    if (comult) {
      return colon_into(zero_submodule(module), annihilator(Submodule{module, n})).members != n;
    }
    for (const auto& ideal : m.ring()->ideal_lattice()) {
      if (ideal_times(m, ideal, m.all()) == n) return false;
    }
    return true;
  };
  if (rep.verdict) {
    const auto& lat = m.lattice();
    return std::none_of(lat.begin(), lat.end(), fails);
  }
  if (rep.refutations.size() != 1) return false;
  const SubItem* n = find_sub(rep.refutations.front(), "N");
  return n && in_lattice(m, n->members) && fails(n->members);
}

bool recheck_cotorsion(const DecisionReport& rep, const Submodule& target, bool free) {
  const ModulePtr& module = target.module;
  if (!is_domain(module->ring())) return false;
  const Submodule inner = interior(full_submodule(module), zero_ideal(module->ring()));
  const bool truth = free ? inner.members.is_full() : inner.is_zero();
  return rep.verdict == truth;
}

const MultClosedSet& need(const std::optional<MultClosedSet>& s) {
  if (!s) {
    throw Error(ErrorKind::TypeMismatch, "recheck of an S-parametrised property needs the set S");
  }
  return *s;
}

}  // namespace

bool recheck(const DecisionReport& report, const Submodule& target, const std::optional<MultClosedSet>& s) {
  const std::string& p = report.property;
  if (p == "secondary") return recheck_secondary(report, target);
  if (p == "second") return recheck_second(report, target);
  if (p == "s_second") return recheck_s_second(report, target, need(s));
  if (p == "s_secondary") return recheck_s_secondary(report, target, need(s));
  if (p == "s_prime") return recheck_prime_like(report, target, need(s), false);
  if (p == "s_primary") return recheck_prime_like(report, target, need(s), true);
  if (p == "quasi_cotorsion_free") return recheck_quasi(report, target, need(s));
  if (p == "multiplication") return recheck_multiplication(report, target, false);
  if (p == "comultiplication") return recheck_multiplication(report, target, true);
  if (p == "cotorsion_free") return recheck_cotorsion(report, target, true);
  if (p == "cotorsion") return recheck_cotorsion(report, target, false);
  throw Error(ErrorKind::Internal, "no recheck available for property '" + p + "'");
}

}  // namespace ringlab
