#pragma once

#include "ringlab/module.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring.hpp"

#include <optional>
#include <string_view>

namespace ringlab {

/// The four equivalent formulations of the S-secondary condition, each with
/// the same fixed s in S:
///   a: for every r, s r N = s N or s r is nilpotent on N;
///   b: for every r and submodule K with r N in K, r s is nilpotent on N or s N in K;
///   c: as b, with K ranging over the completely irreducible submodules only;
///   d: for every ideal J and submodule K with J N in K, s J lies in sqrt(Ann N) or s N in K.
enum class SecondaryForm { A, B, C, D };

std::string_view to_string(SecondaryForm form);
std::optional<SecondaryForm> parse_form(std::string_view text);

/// N is non-zero and every r acts on N surjectively or nilpotently.
DecisionReport is_secondary(const Submodule& n);

/// N is non-zero and every r acts on N surjectively or as zero.
DecisionReport is_second(const Submodule& n);

/// Ann(N) misses S, and a fixed s in S has, for every r and submodule K with
/// r N in K, r s N = 0 or s N in K. Evaluated over completely irreducible K
/// and cross-checked against the full lattice.
DecisionReport is_s_second(const Submodule& n, const MultClosedSet& s);

/// sqrt(Ann N) misses S and one of the equivalent forms holds. Reports the
/// least witness s; for form a every r also gets a certificate.
DecisionReport is_s_secondary(const Submodule& n, const MultClosedSet& s,
                              SecondaryForm form = SecondaryForm::A);

/// Every s in S that serves as the fixed witness in form a; empty when N is
/// not S-secondary.
Subset s_secondary_witnesses(const Submodule& n, const MultClosedSet& s);

/// P proper, (P :_R M) misses S, and a fixed s has: a m in P implies
/// s a in (P :_R M) or s m in P.
DecisionReport is_s_prime_submodule(const Submodule& p, const MultClosedSet& s);

/// As is_s_prime_submodule with sqrt((P :_R M)) in place of (P :_R M).
DecisionReport is_s_primary(const Submodule& p, const MultClosedSet& s);

/// sqrt(Ann M) misses S and a fixed s has, for every r and completely
/// irreducible L with r M in L, s M in L or r s in sqrt(modulo). The default
/// `modulo` is the zero ideal, i.e. r s nilpotent in R; passing P reads the
/// condition in R/P.
DecisionReport is_quasi_s_cotorsion_free(const ModulePtr& module, const MultClosedSet& s,
                                         const std::optional<Ideal>& modulo = std::nullopt);

/// Interior at the zero ideal equals M (cotorsion-free) or 0 (cotorsion).
/// Throws NotADomain unless the zero ideal is prime.
DecisionReport is_cotorsion_free(const ModulePtr& module);
DecisionReport is_cotorsion(const ModulePtr& module);

/// Smallest t >= 1 with x^t N = 0, if any (bounded by |M|).
std::optional<std::size_t> nilpotency_index(const FiniteModule& module, Elem x, const Subset& n);

/// Re-validates a report against its inputs using direct evaluation of the
/// defining condition for the reported witness, the certificates, and every
/// refutation. `s` is required for the S-parametrised properties.
bool recheck(const DecisionReport& report, const Submodule& target,
             const std::optional<MultClosedSet>& s = std::nullopt);

}  // namespace ringlab
