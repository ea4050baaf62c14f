#pragma once

#include "ringlab/error.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ringlab::script {

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Syntax and name errors carry the offending position and, for syntax
/// errors, the tokens that would have been accepted there.
class ScriptError : public Error {
public:
  ScriptError(ErrorKind kind, Location loc, const std::string& message, std::vector<std::string> expected = {});

  const Location& location() const noexcept { return loc_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  Location loc_;
  std::vector<std::string> expected_;
  std::string detail_;
};

/// Element spellings are kept as normalized text ("3", "(1,0)", "(2|1)") and
/// resolved against a carrier at execution time.
using ElemList = std::vector<std::string>;

struct IdealExpr;
using IdealPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
  enum class Kind { List, Ann, Radical, Jacobson };

  Kind kind = Kind::List;
  ElemList elems;      // List
  std::string name;    // Ann: module or submodule
  IdealPtr inner;      // Radical

  friend bool operator==(const IdealExpr& a, const IdealExpr& b);
};

namespace expr {

struct Cyclic { std::size_t n = 0; friend bool operator==(const Cyclic&, const Cyclic&) = default; };
struct Product { std::string left, right; friend bool operator==(const Product&, const Product&) = default; };
struct QuotientBy {
  std::string ring;
  IdealExpr ideal;
  friend bool operator==(const QuotientBy&, const QuotientBy&) = default;
};
struct IdealizationOf {
  std::string ring, module;
  friend bool operator==(const IdealizationOf&, const IdealizationOf&) = default;
};

struct Listed { ElemList elems; friend bool operator==(const Listed&, const Listed&) = default; };
struct Closure { ElemList elems; friend bool operator==(const Closure&, const Closure&) = default; };
struct PrimeComplement { IdealExpr prime; friend bool operator==(const PrimeComplement&, const PrimeComplement&) = default; };
struct Saturation { std::string set; friend bool operator==(const Saturation&, const Saturation&) = default; };
/// S(+)N over an idealization ring; `part` is "zero", "full" or a submodule name.
struct Idealized {
  std::string set, part;
  friend bool operator==(const Idealized&, const Idealized&) = default;
};
/// Image of the integers outside p Z in Z(n).
struct PrimeImage { std::size_t p = 0; friend bool operator==(const PrimeImage&, const PrimeImage&) = default; };

struct Regular { friend bool operator==(const Regular&, const Regular&) = default; };
struct Tables {
  std::vector<std::vector<std::size_t>> add, act;
  friend bool operator==(const Tables&, const Tables&) = default;
};

struct Span { ElemList elems; friend bool operator==(const Span&, const Span&) = default; };
struct Zero { friend bool operator==(const Zero&, const Zero&) = default; };
struct Full { friend bool operator==(const Full&, const Full&) = default; };

}  // namespace expr

using RingExpr = std::variant<expr::Cyclic, expr::Product, expr::QuotientBy, expr::IdealizationOf>;
using SetExpr = std::variant<expr::Listed, expr::Closure, expr::PrimeComplement, expr::Saturation, expr::Product,
                             expr::Idealized, expr::PrimeImage>;
using ModuleExpr = std::variant<expr::Regular, expr::Product, expr::Cyclic, expr::Tables>;
using SubmoduleExpr = std::variant<expr::Span, expr::Zero, expr::Full>;

struct RingDecl {
  std::string name;
  RingExpr value;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};
struct SetDecl {
  std::string name, ring;
  SetExpr value;
  friend bool operator==(const SetDecl&, const SetDecl&) = default;
};
struct ModuleDecl {
  std::string name, ring;
  ModuleExpr value;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};
struct SubmoduleDecl {
  std::string name, module;
  SubmoduleExpr value;
  friend bool operator==(const SubmoduleDecl&, const SubmoduleDecl&) = default;
};
struct Decide {
  std::string property;
  std::string form;  // "", or a..d for s_secondary
  std::string target;
  std::string set;   // empty when the property takes no S
  friend bool operator==(const Decide&, const Decide&) = default;
};
struct Enumerate {
  std::string what;  // submodules | ideals | ci
  std::string target;
  friend bool operator==(const Enumerate&, const Enumerate&) = default;
};
struct Verify {
  std::string law;  // "all" or L1..L20
  std::string ring, module, set;
  friend bool operator==(const Verify&, const Verify&) = default;
};

using StatementBody = std::variant<RingDecl, SetDecl, ModuleDecl, SubmoduleDecl, Decide, Enumerate, Verify>;

struct Statement {
  Location loc;
  StatementBody body;

  /// Locations are ignored.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Script {
  std::vector<Statement> statements;

  friend bool operator==(const Script&, const Script&) = default;
};

/// Properties accepted by `decide`, and whether each needs a set.
bool property_known(std::string_view prop);
bool property_takes_set(std::string_view prop);
/// Properties decided on a whole module rather than a submodule.
bool property_on_module(std::string_view prop);

/// Parses and resolves names; throws ScriptError.
Script parse_script(std::string_view text);
std::string pretty_print(const Script& script);
std::string pretty_print(const Statement& statement);

enum class Format { Text, Structured };

struct Options {
  Format format = Format::Text;
  bool recheck = false;
  unsigned threads = 1;
};

struct RunResult {
  int exit_status = 0;  // 0 ok, 1 verification counterexample, 2 input error
  std::string output;
  std::string diagnostics;  // meant for stderr
};

/// Parses and runs a script. Input errors are reported in the output and
/// through exit status 2 rather than thrown.
RunResult run_script(std::string_view text, const Options& options);
RunResult run_battery_report(const Options& options);

inline constexpr int kSchemaVersion = 1;

}  // namespace ringlab::script
