#include "helpers.hpp"

#include "ringlab/error.hpp"
#include "ringlab/laws.hpp"

#include <algorithm>
#include <doctest.h>
#include <random>

using namespace ringlab;
using testing_support::mcs;

namespace {

Universe cyclic_universe(std::size_t n, std::initializer_list<Elem> seed) {
  auto r = ring_cyclic(n);
  return Universe{"Z" + std::to_string(n), r, mcs(r, seed), module_regular(r), {}, {}, std::nullopt};
}

const Universe& find_universe(const std::vector<Universe>& battery, const std::string& label) {
  auto it = std::find_if(battery.begin(), battery.end(), [&](const Universe& u) { return u.label == label; });
  REQUIRE(it != battery.end());
  return *it;
}

const LawReport& find_report(const BatteryResult& b, const std::string& law, const std::string& universe) {
  auto it = std::find_if(b.reports.begin(), b.reports.end(),
                         [&](const LawReport& r) { return r.law == law && r.universe == universe; });
  REQUIRE(it != b.reports.end());
  return *it;
}

std::string describe(const LawReport& r) {
  std::string out = r.law + " on " + r.universe + ": " + std::string(to_string(r.status));
  if (r.counterexample) out += " (" + r.counterexample->description + ")";
  return out;
}

}  // namespace

TEST_CASE("law ids and modes") {
  const auto& ids = law_ids();
  REQUIRE(ids.size() == 20);
  CHECK(ids.front() == "L1");
  CHECK(ids.back() == "L20");
  CHECK(law_mode("L18") == LawMode::Exploratory);
  for (const auto& id : ids) {
    if (id != "L18") CHECK(law_mode(id) == LawMode::Proved);
  }
  try {
    law_check("L21", cyclic_universe(4, {1}));
    FAIL("expected UnknownLaw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownLaw);
  }
}

TEST_CASE("four-form agreement on Z12") {
  auto rep = law_check("L1", cyclic_universe(12, {1}));
  CHECK(rep.status == LawStatus::Pass);
  CHECK(rep.checked == 6);
}

TEST_CASE("radical of the annihilator is S-prime on Z4") {
  auto rep = law_check("L4", cyclic_universe(4, {3}));
  CHECK(rep.status == LawStatus::Pass);
  CHECK(rep.checked == 2);
}

TEST_CASE("product criterion") {
  const auto battery = universe_battery();
  const Universe& p = find_universe(battery, "Z2 x Z4, S={1}x{1,3}");
  auto rep = law_check("L5", p);
  CHECK(rep.status == LawStatus::Pass);
  CHECK(rep.checked == 6);

  // 0 x Z4: the first factor's radical meets S1 and Z4 is S2-secondary.
  const auto& m = p.module;
  Subset n(m->size());
  for (const char* e : {"(0,0)", "(0,1)", "(0,2)", "(0,3)"}) n.insert(m->parse(e));
  CHECK(is_s_secondary(Submodule{m, n}, p.s).verdict);

  CHECK(law_check("L5", cyclic_universe(6, {1})).status == LawStatus::Inapplicable);
  CHECK(law_check("L6", p).status == LawStatus::Inapplicable);
  CHECK(law_check("L6", find_universe(battery, "Z2 x Z2 x Z3, S={1}x{1}x{1,2}")).status == LawStatus::Pass);
}

TEST_CASE("idealization laws") {
  const auto battery = universe_battery();
  for (const char* label : {"Z4(+)Z2, S(+)0, S={1,3}", "Z4(+)Z2, S(+)M, S={1,3}"}) {
    auto rep = law_check("L14", find_universe(battery, label));
    CHECK_MESSAGE(rep.status == LawStatus::Pass, describe(rep));
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("Jacobson radical laws on quasilocal rings") {
  for (std::size_t n : {4, 8}) {
    for (const char* law : {"L10", "L11"}) {
      auto rep = law_check(law, cyclic_universe(n, {1}));
      CHECK_MESSAGE(rep.status == LawStatus::Pass, describe(rep));
      CHECK(rep.checked > 0);
    }
  }
  CHECK(law_check("L11", cyclic_universe(6, {1})).status == LawStatus::Inapplicable);
}

TEST_CASE("battery shape") {
  const auto battery = universe_battery();
  CHECK(battery.size() >= 14);
  for (const auto& u : battery) {
    CHECK(u.s.ring() == u.ring);
    CHECK(u.module->ring() == u.ring);
    for (const auto& t : u.hom_targets) CHECK(t->ring() == u.ring);
  }
}

TEST_CASE("battery: proved laws never fail, merge is schedule independent") {
  const auto battery = universe_battery();
  const BatteryResult one = run_battery(battery, 1);
  const BatteryResult four = run_battery(battery, 4);
  REQUIRE(one.reports.size() == battery.size() * law_ids().size());
  CHECK(one.failures() == 0);
  for (const auto& r : one.reports) {
    CHECK_MESSAGE(r.status != LawStatus::Fail, describe(r));
  }
  REQUIRE(four.reports.size() == one.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    CHECK(one.reports[i].law == four.reports[i].law);
    CHECK(one.reports[i].universe == four.reports[i].universe);
    CHECK(one.reports[i].status == four.reports[i].status);
    CHECK(one.reports[i].checked == four.reports[i].checked);
    CHECK(one.reports[i].observations == four.reports[i].observations);
  }
  CHECK(std::is_sorted(one.reports.begin(), one.reports.end(), law_report_less));

  CHECK(find_report(one, "L13", "Z4, S={1,3}").status == LawStatus::Pass);
  CHECK(find_report(one, "L18", "Z4, S={1,3}").mode == LawMode::Exploratory);
  CHECK_FALSE(find_report(one, "L18", "Z4, S={1,3}").observations.empty());
  CHECK(find_report(one, "L19", "Z2 + Z3 over Z6, S={1,3}").status == LawStatus::Pass);
  CHECK(find_report(one, "L12", "Z2 over Z4, S={1,3}").status == LawStatus::Pass);
}

TEST_CASE("law suite on random cyclic universes") {
  std::mt19937 gen(7);
  for (int round = 0; round < 12; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 16)(gen);
    auto r = ring_cyclic(n);
    Subset seed(n);
    for (Elem x = 1; x < n; ++x) {
      if (std::bernoulli_distribution(0.2)(gen)) seed.insert(x);
    }
    std::optional<MultClosedSet> s;
    try {
      s = mcs_closure(r, seed);
    } catch (const Error&) {
      s = mcs_trivial(r);
    }
    Universe u{"Z" + std::to_string(n) + " " + format_elements(*r, s->members()), r, *s, module_regular(r), {}, {},
               std::nullopt};
    for (const auto& rep : law_suite(u)) CHECK_MESSAGE(rep.status != LawStatus::Fail, describe(rep));
  }
}

TEST_CASE("separations") {
  const auto seps = find_separations(universe_battery());
  auto has = [&](Separation::Kind k, const std::string& universe, const std::string& sub) {
    return std::any_of(seps.begin(), seps.end(), [&](const Separation& s) {
      return s.kind == k && s.universe == universe && s.submodule == sub;
    });
  };
  CHECK(has(Separation::Kind::SecondaryNotSecond, "Z4, S={1,3}", "{0,1,2,3}"));
  CHECK(has(Separation::Kind::SecondaryNotClassical, "Z6, S={1,3}", "{0,1,2,3,4,5}"));
}

TEST_CASE("W/Z audit on Z4 with S the image of Z outside 2Z") {
  const WZAudit a = wz_audit(2, 2);
  CHECK(a.multiplication);
  CHECK(a.comultiplication);
  CHECK(a.radical_misses_s);
  CHECK(a.all_nonzero_s_secondary);
  CHECK(a.all_proper_s_primary);
  CHECK(a.z == "{0,2}");
  CHECK(a.w == "{0,2}");
  CHECK(a.radical == "{0,2}");
  CHECK(a.sets_equal);
  CHECK(a.paths_agree);
  CHECK_FALSE(a.claim_holds);

  CHECK(wz_audit(3, 2).paths_agree);
  CHECK(wz_audit(2, 3).paths_agree);
  CHECK_THROWS_AS(mcs_prime_complement_image(ring_cyclic(9), 2), Error);
}
