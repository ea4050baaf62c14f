#pragma once

#include "ringlab/report.hpp"
#include "ringlab/subset.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ringlab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingProvenance {
  enum class Kind { Cyclic, Product, Quotient, Idealization, Fractions, Tables };

  Kind kind = Kind::Tables;
  std::size_t modulus = 0;        // Cyclic
  std::vector<RingPtr> factors;   // Product: both factors; otherwise the base ring
};

std::string_view to_string(RingProvenance::Kind kind);

/// A finite commutative ring with identity, given by explicit operation
/// tables. Instances are immutable and only reachable through RingPtr.
class FiniteRing {
public:
  struct Tables {
    std::size_t size = 0;
    std::vector<Elem> add;  // size * size, row-major
    std::vector<Elem> mul;  // size * size, row-major
    Elem one = 1;
    std::vector<std::string> labels;
    // Extra spellings accepted by find(), e.g. base labels of a quotient.
    std::unordered_map<std::string, Elem> aliases;
  };

  /// Validates every ring axiom and throws AxiomViolation naming the first
  /// failure. Element 0 must be the additive identity.
  static RingPtr make(Tables tables, RingProvenance provenance);

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t t) const noexcept;

  const std::string& label(Elem e) const { return labels_.at(e); }
  std::optional<Elem> find(std::string_view text) const;
  /// find() or throw UnknownElement.
  Elem parse(std::string_view text) const;

  const RingProvenance& provenance() const noexcept { return provenance_; }

  Subset none() const { return Subset(size_); }
  Subset all() const { return Subset::full(size_); }

  /// All ideals in canonical order, computed once.
  const std::vector<Subset>& ideal_lattice() const;

private:
  explicit FiniteRing(Tables tables, RingProvenance provenance);

  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem one_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> lookup_;
  RingProvenance provenance_;

  mutable std::once_flag ideals_once_;
  mutable std::vector<Subset> ideals_;
};

struct Ideal {
  RingPtr ring;
  Subset members;

  bool contains(Elem e) const { return members.contains(e); }
  bool is_proper() const { return !members.contains(ring->one()); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

/// 1 in S, 0 not in S, closed under products. Only built through make().
class MultClosedSet {
public:
  /// Throws NotMultClosed naming the failing axiom.
  static MultClosedSet make(RingPtr ring, Subset members);

  const RingPtr& ring() const noexcept { return ring_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }
  std::vector<Elem> elements() const { return members_.elements(); }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const MultClosedSet& a, const MultClosedSet& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

private:
  MultClosedSet(RingPtr ring, Subset members) : ring_(std::move(ring)), members_(std::move(members)) {}

  RingPtr ring_;
  Subset members_;
};

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> graph;

  Elem operator()(Elem e) const { return graph.at(e); }
};

/// Throws AxiomViolation if the graph does not preserve 0, 1, + and *.
RingHom ring_hom_make(RingPtr source, RingPtr target, std::vector<Elem> graph);

struct Spectrum {
  std::vector<Ideal> all_ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
  Ideal jacobson;
};

struct Quotient {
  RingPtr ring;
  RingHom projection;
};

RingPtr ring_cyclic(std::size_t n);
RingPtr ring_product(const RingPtr& a, const RingPtr& b);
Quotient ring_quotient(const RingPtr& ring, const Ideal& ideal);

/// Smallest ideal containing `gens`.
Ideal ideal_span(const RingPtr& ring, const Subset& gens);
Ideal ideal_span(const RingPtr& ring, std::span<const Elem> gens);
Ideal ideal_radical(const Ideal& ideal);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I :_R x) = { r : r x in I }.
Ideal ideal_quotient(const Ideal& ideal, Elem x);
Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

bool is_prime(const Ideal& ideal);
bool is_maximal(const Ideal& ideal);

Spectrum spectrum(const RingPtr& ring);
bool is_field(const RingPtr& ring);
bool is_domain(const RingPtr& ring);
bool is_quasilocal(const RingPtr& ring);
Subset units(const RingPtr& ring);
Subset nilradical(const RingPtr& ring);

/// Multiplicative closure of seed together with 1. Throws NotMultClosed
/// when the closure reaches 0.
MultClosedSet mcs_closure(const RingPtr& ring, const Subset& seed);
MultClosedSet mcs_closure(const RingPtr& ring, std::span<const Elem> seed);
MultClosedSet mcs_trivial(const RingPtr& ring);
/// R \ P for a prime ideal P.
MultClosedSet mcs_complement(const Ideal& prime);
/// S1 x S2 inside ring_product(R1, R2) (or an isomorphic ring given as `product`).
MultClosedSet mcs_product(const RingPtr& product, const MultClosedSet& a, const MultClosedSet& b);
/// Elements x with x/1 a unit of the ring of fractions. Defined in fractions.cpp.
MultClosedSet mcs_saturation(const MultClosedSet& s);

/// I is S-prime when I and S are disjoint and a fixed s in S satisfies:
/// ab in I implies sa in I or sb in I. Reports the least such s.
DecisionReport is_s_prime_ideal(const Ideal& ideal, const MultClosedSet& s);

/// Formats an element set as "{a,b,...}" using ring labels.
std::string format_elements(const FiniteRing& ring, const Subset& set);

}  // namespace ringlab
