#pragma once

#include "ringlab/subset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

/// Which carrier an element index or subset refers to.
enum class Space { Ring, Module };

/// A named element inside a certificate or refutation ("r", "a", "m", ...).
struct Item {
  std::string role;
  Space space = Space::Ring;
  Elem value = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// A named subset inside a refutation ("K", "L", "J", "N", ...).
struct SubItem {
  std::string role;
  Space space = Space::Module;
  Subset members;

  friend bool operator==(const SubItem&, const SubItem&) = default;
};

/// Evidence that one candidate witness fails. For properties quantified by
/// a fixed s, a negative verdict carries one refutation per s in S.
struct Refutation {
  std::optional<Elem> s;
  std::vector<Item> items;
  std::vector<SubItem> subsets;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

enum class CertKind {
  Surjective,   // x N = N  (or s r N = s N)
  Nilpotent,    // x^t N = 0
  Annihilates,  // r s N = 0
  Contained,    // s N contained in r N
};

std::string_view to_string(CertKind kind);

/// Per ring element evidence for a positive verdict.
struct Certificate {
  Elem r = 0;
  CertKind kind = CertKind::Surjective;
  std::size_t t = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Reasons why a definition does not apply. Reported as verdict false but
/// kept apart from refutations so laws can filter on applicability.
enum class Disqualification {
  ZeroSubmodule,
  Improper,
  AnnihilatorMeetsS,
  RadicalMeetsS,
  ColonMeetsS,
  RadicalColonMeetsS,
};

std::string_view to_string(Disqualification d);

struct DecisionReport {
  std::string property;
  std::string form;  // "a".."d" for S-secondary decisions, empty otherwise
  bool verdict = false;
  std::optional<Disqualification> disqualified;
  std::string notes;
  std::optional<Elem> witness;
  std::vector<Certificate> certificates;
  std::vector<Refutation> refutations;

  bool applicable() const noexcept { return !disqualified.has_value(); }
};

}  // namespace ringlab
