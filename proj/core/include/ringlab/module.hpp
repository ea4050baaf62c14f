#pragma once

#include "ringlab/report.hpp"
#include "ringlab/ring.hpp"
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

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

struct ModuleProvenance {
  enum class Kind { Regular, Cyclic, Tables, ProductSameRing, ProductRing, Fractions };

  Kind kind = Kind::Tables;
  std::vector<ModulePtr> factors;  // products: both factors; fractions: the base module
};

std::string_view to_string(ModuleProvenance::Kind kind);

/// A finite module over a finite commutative ring, given by its addition
/// table and the table of the scalar action.
class FiniteModule {
public:
  struct Tables {
    std::size_t size = 0;
    std::vector<Elem> add;  // size * size
    std::vector<Elem> act;  // ring.size() * size: act[r * size + m] = r m
    std::vector<std::string> labels;
  };

  /// Validates the abelian group and module axioms; throws AxiomViolation
  /// naming the failed axiom and its witnesses.
  static ModulePtr make(RingPtr ring, Tables tables, ModuleProvenance provenance);

  FiniteModule(const FiniteModule&) = delete;
  FiniteModule& operator=(const FiniteModule&) = delete;

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return size_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  Elem act(Elem r, Elem m) const noexcept { return act_[r * size_ + m]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  const std::string& label(Elem e) const { return labels_.at(e); }
  std::optional<Elem> find(std::string_view text) const;
  Elem parse(std::string_view text) const;

  const ModuleProvenance& provenance() const noexcept { return provenance_; }

  Subset zero_set() const { return Subset::of(size_, {Elem{0}}); }
  Subset all() const { return Subset::full(size_); }

  /// Every submodule in canonical order (size, then members). Computed once;
  /// throws CapExceeded when the module is above the carrier cap.
  const std::vector<Subset>& lattice() const;
  /// Completely irreducible submodules, canonical order.
  const std::vector<Subset>& completely_irreducible() const;

private:
  FiniteModule(RingPtr ring, Tables tables, ModuleProvenance provenance);

  RingPtr ring_;
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> act_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> lookup_;
  ModuleProvenance provenance_;

  mutable std::once_flag lattice_once_;
  mutable std::vector<Subset> lattice_;
  mutable std::once_flag ci_once_;
  mutable std::vector<Subset> ci_;
};

struct Submodule {
  ModulePtr module;
  Subset members;

  bool is_zero() const { return members.size() == 1; }
  bool is_proper() const { return !members.is_full(); }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module == b.module && a.members == b.members;
  }
};

/// W(M), Z(M) and similar sets of ring elements.
struct ElementSet {
  RingPtr ring;
  Subset members;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> graph;

  Elem operator()(Elem m) const { return graph.at(m); }
};

enum class ProductMode { SameRing, ProductRing };

ModulePtr module_regular(const RingPtr& ring);
/// Z_n as a module over Z_k by reduction; requires ring = Z(k) with n | k.
ModulePtr module_cyclic(const RingPtr& ring, std::size_t n);
ModulePtr module_from_tables(const RingPtr& ring, FiniteModule::Tables tables);
/// In ProductRing mode the scalar ring is `product_ring` when given (it must be
/// the product of the two factor rings), otherwise a fresh ring_product.
ModulePtr module_product(const ModulePtr& a, const ModulePtr& b, ProductMode mode,
                         RingPtr product_ring = nullptr);

Submodule submodule_span(const ModulePtr& module, const Subset& gens);
Submodule submodule_span(const ModulePtr& module, std::span<const Elem> gens);
Submodule zero_submodule(const ModulePtr& module);
Submodule full_submodule(const ModulePtr& module);
std::vector<Submodule> submodules_of(const ModulePtr& module);
std::vector<Submodule> completely_irreducibles(const ModulePtr& module);

/// r N as a subset of the module carrier (always a submodule).
Subset scale(const FiniteModule& module, Elem r, const Subset& n);
/// J N: submodule generated by products j n.
Subset ideal_times(const FiniteModule& module, const Subset& ideal, const Subset& n);
/// Sum of two submodules.
Subset submodule_sum(const FiniteModule& module, const Subset& a, const Subset& b);

Ideal annihilator(const Submodule& n);
/// (N :_R M).
Ideal colon_ideal(const Submodule& n);
/// (N :_M I).
Submodule colon_into(const Submodule& n, const Ideal& ideal);

/// P-interior of N: meet of the completely irreducible L with r N inside L
/// for some r outside P (the whole module when no such L exists).
Submodule interior(const Submodule& n, const Ideal& p);

ElementSet z_set(const ModulePtr& module);
ElementSet w_set(const ModulePtr& module);

DecisionReport is_multiplication(const ModulePtr& module);
DecisionReport is_comultiplication(const ModulePtr& module);

ModuleHom hom_make(ModulePtr source, ModulePtr target, std::vector<Elem> graph);
Submodule hom_image(const ModuleHom& f, const Submodule& n);
Submodule hom_preimage(const ModuleHom& f, const Submodule& n);
bool is_mono(const ModuleHom& f);
/// Every module homomorphism source -> target, found by assigning images to
/// a generating set and keeping the assignments that extend consistently.
std::vector<ModuleHom> enumerate_homs(const ModulePtr& source, const ModulePtr& target);

/// Least generating set found greedily in carrier order.
std::vector<Elem> generators(const ModulePtr& module);

/// The idealization R(+)M with (a,m)(b,n) = (ab, an + bm).
struct Idealization {
  RingPtr ring;
  RingPtr base;
  ModulePtr module;

  Elem index(Elem r, Elem m) const { return static_cast<Elem>(r * module->size() + m); }
  Elem base_part(Elem e) const { return static_cast<Elem>(e / module->size()); }
  Elem module_part(Elem e) const { return static_cast<Elem>(e % module->size()); }
  /// I(+)0.
  Ideal embed(const Ideal& ideal) const;
  /// S(+)N.
  MultClosedSet embed(const MultClosedSet& s, const Submodule& n) const;
};

Idealization ring_idealization(const RingPtr& ring, const ModulePtr& module);

std::string format_elements(const FiniteModule& module, const Subset& set);

}  // namespace ringlab
