#pragma once

#include "ringlab/deciders.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringlab {

/// Idealization inputs for the I(+)0 laws: the universe ring is base(+)module
/// and its module is that ring acting on itself.
struct IdealizationData {
  enum class Variant { Zero, Full };  // S(+)0 or S(+)M

  Idealization idealization;
  MultClosedSet base_s;
  Variant variant = Variant::Zero;
};

struct Universe {
  std::string label;
  RingPtr ring;
  MultClosedSet s;
  ModulePtr module;

  /// Extra targets for the monomorphism law, besides M and M (+) M.
  std::vector<ModulePtr> hom_targets;
  /// Set when the ring and module are binary products in product-ring mode
  /// and S is the product of the factor sets. Factors may themselves split.
  std::vector<Universe> factors;
  std::optional<IdealizationData> idealization;

  bool is_product() const noexcept { return factors.size() == 2; }
};

/// Product-ring universe built from two factor universes.
Universe universe_product(const Universe& a, const Universe& b);
/// Idealization universe over (ring, s) and the module to idealize.
Universe universe_idealization(const RingPtr& ring, const MultClosedSet& s, const ModulePtr& module,
                               IdealizationData::Variant variant, std::string label = {});

enum class LawStatus { Pass, Fail, Inapplicable };
enum class LawMode { Proved, Exploratory };

std::string_view to_string(LawStatus status);
std::string_view to_string(LawMode mode);

struct Counterexample {
  std::string description;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct LawReport {
  std::string law;
  std::string universe;
  LawStatus status = LawStatus::Inapplicable;
  LawMode mode = LawMode::Proved;
  std::size_t checked = 0;
  std::size_t inapplicable = 0;
  std::optional<Counterexample> counterexample;
  /// Exploratory laws record what they observed here.
  std::vector<std::string> observations;
};

/// "L1" .. "L20".
const std::vector<std::string>& law_ids();
LawMode law_mode(std::string_view law);

/// Throws UnknownLaw for ids outside law_ids().
LawReport law_check(std::string_view law, const Universe& u);
std::vector<LawReport> law_suite(const Universe& u);

std::vector<Universe> universe_battery();

struct BatteryResult {
  std::vector<LawReport> reports;  // sorted by (law, universe)
  std::size_t universes = 0;

  std::size_t failures() const;
};

/// Every law over every universe. Work is spread over `threads` workers;
/// the merged result does not depend on the schedule.
BatteryResult run_battery(const std::vector<Universe>& battery, unsigned threads = 1);

/// Ordering used when merging reports: law number, then universe label.
bool law_report_less(const LawReport& a, const LawReport& b);

struct Separation {
  enum class Kind { SecondaryNotSecond, SecondaryNotClassical };

  Kind kind;
  std::string universe;
  std::string submodule;
  std::string witness;
};

std::string_view to_string(Separation::Kind kind);

/// Pairs (N, S) that are S-secondary but not S-second, and modules that are
/// S-secondary but not secondary, in battery order.
std::vector<Separation> find_separations(const std::vector<Universe>& battery);

/// Ground truth for the claim that Z_{p^n} with S the complement of (p) has a
/// non-zero non-S-secondary submodule and a proper non-S-primary one.
struct WZAudit {
  std::string universe;
  bool multiplication = false;
  bool comultiplication = false;
  bool radical_misses_s = false;
  // Direct path.
  bool all_nonzero_s_secondary = false;
  bool all_proper_s_primary = false;
  std::optional<std::string> non_s_secondary;
  std::optional<std::string> non_s_primary;
  // Set path.
  std::string z;
  std::string w;
  std::string radical;
  bool sets_equal = false;

  bool paths_agree = false;
  bool claim_holds = false;
};

/// Audits Z(p^n) (as the image ring) with S the image of the integers prime to p.
WZAudit wz_audit(std::size_t p, std::size_t n);
WZAudit wz_audit(const ModulePtr& module, const MultClosedSet& s, std::string label);

/// Image of the integers outside p Z in Z(n). Throws NotMultClosed if the
/// image contains 0.
MultClosedSet mcs_prime_complement_image(const RingPtr& ring, std::size_t p);

}  // namespace ringlab
