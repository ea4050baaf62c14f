// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "ringlab/deciders.hpp"
#include "ringlab/fractions.hpp"
#include "ringlab/laws.hpp"
#include "ringlab/script.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const char* path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const LawReport* find_report(const BatteryResult& b, const std::string& law, const std::string& universe) {
  for (const auto& r : b.reports) {
    if (r.law == law && r.universe == universe) return &r;
  }
  return nullptr;
}

bool passed(const BatteryResult& b, const std::string& law, const std::string& universe) {
  const LawReport* r = find_report(b, law, universe);
  return r != nullptr && r->status == LawStatus::Pass;
}

struct Gate {
  int failures = 0;

  void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << " " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
  }

  void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report(id, name, ok, detail);
  }
};

bool z4_verdicts(std::string& detail) {
  const auto t0 = Clock::now();
  auto z4 = ring_cyclic(4);
  auto m = module_regular(z4);
  auto s = MultClosedSet::make(z4, Subset::of(4, {1, 3}));
  const Submodule whole = full_submodule(m);
  const DecisionReport second = is_s_second(whole, s);
  const DecisionReport secondary = is_s_secondary(whole, s);
  const Subset witnesses = s_secondary_witnesses(whole, s);
  const bool rechecked = recheck(second, whole, s) && recheck(secondary, whole, s);

  script::Options o;
  o.format = script::Format::Structured;
  o.recheck = true;
  const auto run = script::run_script(
      "ring R = Z(4)\nset S in R = {1,3}\nmodule M over R = regular\ndecide s_second M S\ndecide s_secondary M S\n", o);
  const bool script_ok = run.exit_status == 0 && run.output.find("\"failed\"") == std::string::npos;
  const double secs = seconds_since(t0);

  std::ostringstream d;
  d << "s_second=" << (second.verdict ? "true" : "false") << ", s_secondary=" << (secondary.verdict ? "true" : "false")
    << " witness=" << (secondary.witness ? std::to_string(*secondary.witness) : "-")
    << " witnesses=" << format_elements(*z4, witnesses) << ", recheck=" << (rechecked ? "ok" : "failed")
    << ", " << secs << " s";
  detail = d.str();
  return !second.verdict && secondary.verdict && secondary.witness == Elem{1} &&
         witnesses == Subset::of(4, {1, 3}) && rechecked && script_ok && secs < 1.0;
}

bool four_forms(const std::vector<Universe>& battery, std::string& detail) {
  const auto t0 = Clock::now();
  std::size_t checked = 0, disagreements = 0;
  for (const auto& u : battery) {
    for (const auto& n : u.module->lattice()) {
      const Submodule nn{u.module, n};
      const bool a = is_s_secondary(nn, u.s, SecondaryForm::A).verdict;
      for (SecondaryForm f : {SecondaryForm::B, SecondaryForm::C, SecondaryForm::D}) {
        if (is_s_secondary(nn, u.s, f).verdict != a) ++disagreements;
      }
      ++checked;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << battery.size() << " universes, " << checked << " submodules, " << disagreements << " disagreements, " << secs
    << " s";
  detail = d.str();
  return battery.size() >= 14 && disagreements == 0 && secs < 60.0;
}

bool proved_laws(const BatteryResult& b, std::string& detail) {
  std::size_t pass = 0, fail = 0, inapplicable = 0;
  std::string first_failure;
  for (const auto& r : b.reports) {
    if (r.mode != LawMode::Proved) continue;
    if (r.status == LawStatus::Pass) ++pass;
    if (r.status == LawStatus::Inapplicable) ++inapplicable;
    if (r.status == LawStatus::Fail) {
      if (fail++ == 0) first_failure = r.law + " on " + r.universe;
    }
  }
  const bool products = passed(b, "L5", "Z2 x Z4, S={1}x{1,3}") && passed(b, "L5", "Z2 x Z2 x Z3, S={1}x{1}x{1,2}") &&
                        passed(b, "L6", "Z2 x Z2 x Z3, S={1}x{1}x{1,2}");
  const bool idealization =
      passed(b, "L14", "Z4(+)Z2, S(+)0, S={1,3}") && passed(b, "L14", "Z4(+)Z2, S(+)M, S={1,3}");
  const bool jacobson = passed(b, "L10", "Z4, S={1}") && passed(b, "L10", "Z4, S={1,3}") &&
                        passed(b, "L10", "Z8, S={1}") && passed(b, "L10", "Z8, S={1,3}");
  std::size_t comult = 0;
  for (const auto& r : b.reports) {
    if (r.law == "L13" && r.status == LawStatus::Pass) ++comult;
  }
  std::ostringstream d;
  d << pass << " pass, " << fail << " fail, " << inapplicable << " inapplicable"
    << "; products " << (products ? "ok" : "missing") << ", idealization " << (idealization ? "ok" : "missing")
    << ", Jacobson " << (jacobson ? "ok" : "missing") << ", L13 passes on " << comult << " universes";
  if (fail > 0) d << "; first failure " << first_failure;
  detail = d.str();
  return fail == 0 && products && idealization && jacobson && comult > 0;
}

bool separations(const std::vector<Universe>& battery, std::string& detail) {
  const auto seps = find_separations(battery);
  bool not_second = false, not_secondary = false;
  std::string d1, d2;
  for (const auto& s : seps) {
    if (s.kind == Separation::Kind::SecondaryNotSecond && s.universe == "Z4, S={1,3}" && s.submodule == "{0,1,2,3}") {
      not_second = true;
      d1 = "Z4 S={1,3} N=Z4 s=" + s.witness;
    }
    if (s.kind == Separation::Kind::SecondaryNotClassical && s.universe == "Z6, S={1,3}") {
      not_secondary = true;
      d2 = "Z6 S={1,3} s=" + s.witness;
    }
  }
  detail = std::to_string(seps.size()) + " separations; " + (not_second ? d1 : "no S-secondary/not S-second in Z4") +
           "; " + (not_secondary ? d2 : "no S-secondary/not secondary in Z6");
  return not_second && not_secondary;
}

bool fractions(const BatteryResult& b, const std::vector<Universe>& battery, std::string& detail) {
  auto z6 = ring_cyclic(6);
  auto s = MultClosedSet::make(z6, Subset::of(6, {1, 3}));
  const std::size_t size = fraction_ring(z6, s).ring->size();
  const Subset sat = mcs_saturation(s).members();
  std::size_t l19_pass = 0, l19_other = 0, pairs = 0;
  for (const auto& u : battery) {
    const LawReport* r = find_report(b, "L19", u.label);
    if (r != nullptr && r->status == LawStatus::Pass) {
      ++l19_pass;
      pairs += r->checked;
    } else {
      ++l19_other;
    }
  }
  std::ostringstream d;
  d << "|S^-1 Z6| = " << size << ", saturation = " << format_elements(*z6, sat) << ", L19 passes on " << l19_pass
    << "/" << battery.size() << " universes (" << pairs << " pairs)";
  detail = d.str();
  return size == 2 && sat == Subset::of(6, {1, 3, 5}) && l19_other == 0;
}

bool audit(std::string& detail) {
  const WZAudit a = wz_audit(2, 2);
  std::ostringstream d;
  d << a.universe << ": direct path says every non-zero submodule S-secondary="
    << (a.all_nonzero_s_secondary ? "yes" : "no") << ", every proper submodule S-primary="
    << (a.all_proper_s_primary ? "yes" : "no") << "; Z=" << a.z << " W=" << a.w << " rad=" << a.radical
    << "; paths " << (a.paths_agree ? "agree" : "disagree") << "; stated claim "
    << (a.claim_holds ? "confirmed" : "not confirmed by computation");
  detail = d.str();
  return a.paths_agree;
}

bool determinism(std::string& detail) {
  const std::string text = read_file(RINGLAB_DEMO_SCRIPT);
  const std::string golden = read_file(RINGLAB_DEMO_GOLDEN);
  script::Options o;
  o.format = script::Format::Structured;
  o.recheck = true;
  o.threads = 1;
  const std::string a = script::run_script(text, o).output;
  const std::string b = script::run_script(text, o).output;
  o.threads = 4;
  const std::string c = script::run_script(text, o).output;
  const bool same = a == b && b == c;
  const bool matches = !golden.empty() && a == golden;
  detail = std::string("two runs ") + (a == b ? "identical" : "differ") + ", threads 1 vs 4 " +
           (b == c ? "identical" : "differ") + ", golden " + (matches ? "matches" : "differs") + " (" +
           std::to_string(a.size()) + " bytes)";
  return same && matches;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "Z4 S-second vs S-secondary", z4_verdicts);

  const auto battery = universe_battery();
  gate.run(2, "four-form agreement", [&](std::string& d) { return four_forms(battery, d); });

  const auto t0 = Clock::now();
  const BatteryResult result = run_battery(battery, 4);
  const double battery_secs = seconds_since(t0);
  gate.run(3, "proved-law suite", [&](std::string& d) {
    const bool ok = proved_laws(result, d);
    d += ", " + std::to_string(battery_secs) + " s";
    return ok;
  });
  gate.run(4, "separation witnesses", [&](std::string& d) { return separations(battery, d); });
  gate.run(5, "fractions", [&](std::string& d) { return fractions(result, battery, d); });
  gate.run(6, "exploratory audit", audit);
  gate.run(7, "CLI determinism", determinism);

  std::cout << (gate.failures == 0 ? "all criteria pass" : std::to_string(gate.failures) + " criteria fail")
            << std::endl;
  return gate.failures == 0 ? 0 : 1;
}
