#include "ringlab/error.hpp"
#include "ringlab/laws.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ringlab {

namespace {

MultClosedSet closure(const RingPtr& ring, std::initializer_list<Elem> seed) {
  return mcs_closure(ring, std::span<const Elem>(seed.begin(), seed.size()));
}

Universe regular(std::size_t n, std::initializer_list<Elem> seed, std::string label) {
  RingPtr r = ring_cyclic(n);
  return Universe{std::move(label), r, closure(r, seed), module_regular(r), {}, {}, std::nullopt};
}

}  // namespace

Universe universe_product(const Universe& a, const Universe& b) {
  RingPtr ring = ring_product(a.ring, b.ring);
  ModulePtr module = module_product(a.module, b.module, ProductMode::ProductRing, ring);
  MultClosedSet s = mcs_product(ring, a.s, b.s);
  std::string label = "(" + a.label + ") x (" + b.label + ")";
  return Universe{std::move(label), ring, std::move(s), std::move(module), {}, {a, b}, std::nullopt};
}

Universe universe_idealization(const RingPtr& ring, const MultClosedSet& s, const ModulePtr& module,
                               IdealizationData::Variant variant, std::string label) {
  Idealization idz = ring_idealization(ring, module);
  const Submodule n = variant == IdealizationData::Variant::Zero ? zero_submodule(module) : full_submodule(module);
  MultClosedSet big_s = idz.embed(s, n);
  ModulePtr reg = module_regular(idz.ring);
  RingPtr big = idz.ring;
  IdealizationData data{std::move(idz), s, variant};
  return Universe{std::move(label), std::move(big), std::move(big_s), std::move(reg), {}, {}, std::move(data)};
}

std::vector<Universe> universe_battery() {
  std::vector<Universe> out;
  out.push_back(regular(4, {1}, "Z4, S={1}"));
  out.push_back(regular(4, {3}, "Z4, S={1,3}"));
  out.push_back(regular(6, {1}, "Z6, S={1}"));
  out.push_back(regular(6, {3}, "Z6, S={1,3}"));
  out.push_back(regular(6, {2}, "Z6, S={1,2,4}"));
  out.push_back(regular(6, {5}, "Z6, S={1,5}"));
  out.push_back(regular(8, {1}, "Z8, S={1}"));
  out.push_back(regular(8, {3}, "Z8, S={1,3}"));
  out.push_back(regular(12, {5}, "Z12, S={1,5}"));
  out.push_back(regular(3, {2}, "Z3, S={1,2}"));

  {
    Universe a = regular(2, {1}, "Z2, S={1}");
    Universe b = regular(4, {3}, "Z4, S={1,3}");
    Universe p = universe_product(a, b);
    p.label = "Z2 x Z4, S={1}x{1,3}";
    out.push_back(std::move(p));
  }
  {
    Universe a = regular(2, {1}, "Z2, S={1}");
    Universe b = regular(2, {1}, "Z2, S={1}");
    Universe c = regular(3, {2}, "Z3, S={1,2}");
    Universe ab = universe_product(a, b);
    Universe p = universe_product(ab, c);
    p.label = "Z2 x Z2 x Z3, S={1}x{1}x{1,2}";
    out.push_back(std::move(p));
  }
  {
    RingPtr z2 = ring_cyclic(2);
    ModulePtr m = module_product(module_regular(z2), module_regular(z2), ProductMode::SameRing);
    out.push_back(Universe{"Z2 + Z2 over Z2, S={1}", z2, mcs_trivial(z2), m, {}, {}, std::nullopt});
  }
  {
    RingPtr z4 = ring_cyclic(4);
    MultClosedSet s = closure(z4, {3});
    ModulePtr z2 = module_cyclic(z4, 2);
    out.push_back(universe_idealization(z4, s, z2, IdealizationData::Variant::Zero, "Z4(+)Z2, S(+)0, S={1,3}"));
    out.push_back(universe_idealization(z4, s, z2, IdealizationData::Variant::Full, "Z4(+)Z2, S(+)M, S={1,3}"));
    out.push_back(Universe{"Z2 over Z4, S={1,3}", z4, s, z2, {module_regular(z4)}, {}, std::nullopt});
  }
  {
    RingPtr z6 = ring_cyclic(6);
    ModulePtr m = module_product(module_cyclic(z6, 2), module_cyclic(z6, 3), ProductMode::SameRing);
    out.push_back(Universe{"Z2 + Z3 over Z6, S={1,3}", z6, closure(z6, {3}), m, {module_regular(z6)}, {}, std::nullopt});
  }
  {
    RingPtr z3 = ring_cyclic(3);
    out.push_back(Universe{"0 over Z3, S={1}", z3, mcs_trivial(z3), module_cyclic(z3, 1), {}, {}, std::nullopt});
  }
  return out;
}

std::size_t BatteryResult::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const LawReport& r) {
    return r.status == LawStatus::Fail;
  }));
}

BatteryResult run_battery(const std::vector<Universe>& battery, unsigned threads) {
  const auto& ids = law_ids();
  const std::size_t jobs = ids.size() * battery.size();
  std::vector<LawReport> slots(jobs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) {
      const std::string& law = ids[i % ids.size()];
      const Universe& u = battery[i / ids.size()];
      try {
        slots[i] = law_check(law, u);
      } catch (const Error& e) {
        LawReport r;
        r.law = law;
        r.universe = u.label;
        r.mode = law_mode(law);
        r.status = LawStatus::Fail;
        r.counterexample = Counterexample{std::string("error: ") + e.what(), {}};
        slots[i] = std::move(r);
      }
    }
  };

  const unsigned n = std::max(1u, threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }

  std::sort(slots.begin(), slots.end(), law_report_less);
  return BatteryResult{std::move(slots), battery.size()};
}

std::string_view to_string(Separation::Kind kind) {
  return kind == Separation::Kind::SecondaryNotSecond ? "s_secondary_not_s_second" : "s_secondary_not_secondary";
}

std::vector<Separation> find_separations(const std::vector<Universe>& battery) {
  std::vector<Separation> out;
  for (const auto& u : battery) {
    for (const auto& n : u.module->lattice()) {
      const Submodule nn{u.module, n};
      const DecisionReport ss = is_s_secondary(nn, u.s);
      if (!ss.verdict) continue;
      if (!is_s_second(nn, u.s).verdict) {
        out.push_back({Separation::Kind::SecondaryNotSecond, u.label, format_elements(*u.module, n), u.ring->label(*ss.witness)});
      }
      if (n.is_full() && !is_secondary(nn).verdict) {
        out.push_back({Separation::Kind::SecondaryNotClassical, u.label, format_elements(*u.module, n), u.ring->label(*ss.witness)});
      }
    }
  }
  return out;
}

MultClosedSet mcs_prime_complement_image(const RingPtr& ring, std::size_t p) {
  const auto& prov = ring->provenance();
  if (prov.kind != RingProvenance::Kind::Cyclic) {
    throw Error(ErrorKind::TypeMismatch, "the image of Z \\ pZ needs a ring of the form Z(n)");
  }
  if (p < 2 || prov.modulus % p != 0) {
    throw Error(ErrorKind::NotMultClosed,
                "the image of Z \\ " + std::to_string(p) + "Z in Z(" + std::to_string(prov.modulus) + ") contains 0");
  }
  Subset members(ring->size());
  for (Elem x = 0; x < ring->size(); ++x) {
    if (x % p != 0) members.insert(x);
  }
  return MultClosedSet::make(ring, std::move(members));
}

WZAudit wz_audit(const ModulePtr& module, const MultClosedSet& s, std::string label) {
  WZAudit a;
  a.universe = std::move(label);
  a.multiplication = is_multiplication(module).verdict;
  a.comultiplication = is_comultiplication(module).verdict;
  const Submodule whole = full_submodule(module);
  const Ideal rad = ideal_radical(annihilator(whole));
  a.radical_misses_s = !rad.members.intersects(s.members());

  a.all_nonzero_s_secondary = true;
  a.all_proper_s_primary = true;
  for (const auto& n : module->lattice()) {
    const Submodule nn{module, n};
    if (!nn.is_zero() && !a.non_s_secondary && !is_s_secondary(nn, s).verdict) {
      a.all_nonzero_s_secondary = false;
      a.non_s_secondary = format_elements(*module, n);
    }
    if (nn.is_proper() && !a.non_s_primary && !is_s_primary(nn, s).verdict) {
      a.all_proper_s_primary = false;
      a.non_s_primary = format_elements(*module, n);
    }
  }

  const FiniteRing& r = *module->ring();
  const Subset z = z_set(module).members;
  const Subset w = w_set(module).members;
  a.z = format_elements(r, z);
  a.w = format_elements(r, w);
  a.radical = format_elements(r, rad.members);
  a.sets_equal = z == w && w == rad.members;

  a.paths_agree = a.all_nonzero_s_secondary == a.sets_equal && a.all_proper_s_primary == a.sets_equal;
  a.claim_holds = !a.all_nonzero_s_secondary && !a.all_proper_s_primary;
  return a;
}

WZAudit wz_audit(std::size_t p, std::size_t n) {
  std::size_t q = 1;
  for (std::size_t i = 0; i < n; ++i) q *= p;
  RingPtr ring = ring_cyclic(q);
  return wz_audit(module_regular(ring), mcs_prime_complement_image(ring, p),
                  "Z" + std::to_string(q) + ", S=image of Z \\ " + std::to_string(p) + "Z");
}

}  // namespace ringlab
