#include "ringlab/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace ringlab::script {

namespace {

std::string located(Location loc, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ScriptError::ScriptError(ErrorKind kind, Location loc, const std::string& message, std::vector<std::string> expected)
    : Error(kind, located(loc, message, expected)), loc_(loc), expected_(std::move(expected)), detail_(message) {}

bool operator==(const IdealExpr& a, const IdealExpr& b) {
  if (a.kind != b.kind || a.elems != b.elems || a.name != b.name) return false;
  if (!a.inner || !b.inner) return !a.inner && !b.inner;
  return *a.inner == *b.inner;
}

namespace {

struct PropertyInfo {
  bool takes_set;
  bool on_module;
};

const std::map<std::string, PropertyInfo, std::less<>>& properties() {
  static const std::map<std::string, PropertyInfo, std::less<>> table{
      {"secondary", {false, false}},
      {"second", {false, false}},
      {"s_second", {true, false}},
      {"s_secondary", {true, false}},
      {"s_prime", {true, false}},
      {"s_primary", {true, false}},
      {"quasi_cotorsion_free", {true, true}},
      {"multiplication", {false, true}},
      {"comultiplication", {false, true}},
      {"cotorsion_free", {false, true}},
      {"cotorsion", {false, true}},
  };
  return table;
}

}  // namespace

bool property_known(std::string_view prop) { return properties().contains(prop); }

bool property_takes_set(std::string_view prop) {
  const auto it = properties().find(prop);
  return it != properties().end() && it->second.takes_set;
}

bool property_on_module(std::string_view prop) {
  const auto it = properties().find(prop);
  return it != properties().end() && it->second.on_module;
}

namespace {

enum class Tok { Ident, Number, Punct, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  Location loc;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Number: return "number " + t.text;
    case Tok::Punct: return "'" + t.text + "'";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    const Location loc{line, col};
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", loc});
      ++i;
      ++line;
      col = 1;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
    } else if (std::string_view("(){}[],=;|:").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), loc});
      advance(1);
    } else {
      throw ScriptError(ErrorKind::SyntaxError, loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", Location{line, col}});
  return out;
}

enum class Kind { Ring, Set, Module, Submodule };

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Ring: return "ring";
    case Kind::Set: return "set";
    case Kind::Module: return "module";
    case Kind::Submodule: return "submodule";
  }
  return "?";
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script run() {
    Script script;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      script.statements.push_back(statement());
      if (peek().kind != Tok::End) expect_newline();
    }
    return script;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ScriptError(ErrorKind::SyntaxError, peek().loc, "unexpected " + describe(peek()), std::move(expected));
  }

  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  void punct(char c) {
    if (!at_punct(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }
  void word(std::string_view w) {
    if (!at_word(w)) fail({"'" + std::string(w) + "'"});
    ++pos_;
  }
  void expect_newline() {
    if (peek().kind != Tok::Newline) fail({"end of line"});
    ++pos_;
  }

  std::string ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail({std::string(what)});
    return next().text;
  }

  std::size_t number(std::string_view what) {
    if (peek().kind != Tok::Number) fail({std::string(what)});
    const Token& t = next();
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) throw ScriptError(ErrorKind::SyntaxError, t.loc, "number out of range");
    return v;
  }

  // Names: declared before use, bound once, of the right kind.
  void bind(const Token& at, const std::string& name, Kind k) {
    if (names_.contains(name)) {
      throw ScriptError(ErrorKind::NameError, at.loc, "'" + name + "' is already declared");
    }
    names_.emplace(name, k);
  }

  std::string ref(std::initializer_list<Kind> kinds) {
    const Token& t = peek();
    std::vector<std::string> expected;
    for (Kind k : kinds) expected.push_back(std::string(kind_name(k)) + " name");
    if (t.kind != Tok::Ident) fail(expected);
    ++pos_;
    const auto it = names_.find(t.text);
    if (it == names_.end()) {
      throw ScriptError(ErrorKind::NameError, t.loc, "'" + t.text + "' is not declared");
    }
    if (std::find(kinds.begin(), kinds.end(), it->second) == kinds.end()) {
      throw ScriptError(ErrorKind::NameError, t.loc,
                        "'" + t.text + "' is a " + std::string(kind_name(it->second)) + ", not a " +
                            std::string(kind_name(*kinds.begin())));
    }
    return t.text;
  }

  std::string element() {
    if (peek().kind == Tok::Number) return next().text;
    if (!at_punct('(')) fail({"element"});
    ++pos_;
    std::vector<std::string> parts{element()};
    char sep = ',';
    if (at_punct('|')) {
      sep = '|';
      ++pos_;
      parts.push_back(element());
    } else {
      while (at_punct(',')) {
        ++pos_;
        parts.push_back(element());
      }
      if (parts.size() < 2) fail({"','", "'|'"});
    }
    punct(')');
    if (sep == ',' && parts[0].front() == '(' && parts[0].find('|') == std::string::npos) {
      parts[0] = parts[0].substr(1, parts[0].size() - 2);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += sep;
      out += parts[i];
    }
    return out + ")";
  }

  ElemList braced_elements() {
    punct('{');
    ElemList out;
    if (!at_punct('}')) {
      out.push_back(element());
      while (at_punct(',')) {
        ++pos_;
        out.push_back(element());
      }
    }
    punct('}');
    return out;
  }

  IdealExpr ideal_expr() {
    IdealExpr e;
    if (at_punct('{')) {
      e.kind = IdealExpr::Kind::List;
      e.elems = braced_elements();
    } else if (at_word("ann")) {
      ++pos_;
      punct('(');
      e.kind = IdealExpr::Kind::Ann;
      e.name = ref({Kind::Module, Kind::Submodule});
      punct(')');
    } else if (at_word("radical")) {
      ++pos_;
      punct('(');
      e.kind = IdealExpr::Kind::Radical;
      e.inner = std::make_shared<IdealExpr>(ideal_expr());
      punct(')');
    } else if (at_word("jac")) {
      ++pos_;
      e.kind = IdealExpr::Kind::Jacobson;
    } else {
      fail({"'{'", "'ann'", "'radical'", "'jac'"});
    }
    return e;
  }

  std::pair<std::string, std::string> pair_of(std::initializer_list<Kind> a, std::initializer_list<Kind> b) {
    punct('(');
    std::string x = ref(a);
    punct(',');
    std::string y = ref(b);
    punct(')');
    return {x, y};
  }

  Statement statement() {
    const Token head = peek();
    if (head.kind != Tok::Ident) fail({"'ring'", "'set'", "'module'", "'submodule'", "'decide'", "'enumerate'", "'verify'"});
    const std::string& w = head.text;
    if (w == "ring") return {head.loc, ring_decl()};
    if (w == "set") return {head.loc, set_decl()};
    if (w == "module") return {head.loc, module_decl()};
    if (w == "submodule") return {head.loc, submodule_decl()};
    if (w == "decide") return {head.loc, decide()};
    if (w == "enumerate") return {head.loc, enumerate()};
    if (w == "verify") return {head.loc, verify()};
    fail({"'ring'", "'set'", "'module'", "'submodule'", "'decide'", "'enumerate'", "'verify'"});
  }

  RingDecl ring_decl() {
    word("ring");
    const Token at = peek();
    RingDecl d;
    d.name = ident("ring name");
    punct('=');
    if (at_word("Z")) {
      ++pos_;
      punct('(');
      d.value = expr::Cyclic{number("modulus")};
      punct(')');
    } else if (at_word("product")) {
      ++pos_;
      auto [a, b] = pair_of({Kind::Ring}, {Kind::Ring});
      d.value = expr::Product{a, b};
    } else if (at_word("quotient")) {
      ++pos_;
      punct('(');
      expr::QuotientBy q;
      q.ring = ref({Kind::Ring});
      punct(',');
      q.ideal = ideal_expr();
      punct(')');
      d.value = std::move(q);
    } else if (at_word("idealization")) {
      ++pos_;
      auto [a, b] = pair_of({Kind::Ring}, {Kind::Module});
      d.value = expr::IdealizationOf{a, b};
    } else {
      fail({"'Z'", "'product'", "'quotient'", "'idealization'"});
    }
    bind(at, d.name, Kind::Ring);
    return d;
  }

  SetDecl set_decl() {
    word("set");
    const Token at = peek();
    SetDecl d;
    d.name = ident("set name");
    word("in");
    d.ring = ref({Kind::Ring});
    punct('=');
    if (at_punct('{')) {
      d.value = expr::Listed{braced_elements()};
    } else if (at_word("closure")) {
      ++pos_;
      d.value = expr::Closure{braced_elements()};
    } else if (at_word("complement_of_prime")) {
      ++pos_;
      punct('(');
      d.value = expr::PrimeComplement{ideal_expr()};
      punct(')');
    } else if (at_word("saturation")) {
      ++pos_;
      punct('(');
      d.value = expr::Saturation{ref({Kind::Set})};
      punct(')');
    } else if (at_word("product")) {
      ++pos_;
      auto [a, b] = pair_of({Kind::Set}, {Kind::Set});
      d.value = expr::Product{a, b};
    } else if (at_word("idealized")) {
      ++pos_;
      punct('(');
      expr::Idealized e;
      e.set = ref({Kind::Set});
      punct(',');
      if (at_word("zero") || at_word("full")) {
        e.part = next().text;
      } else {
        e.part = ref({Kind::Submodule});
      }
      punct(')');
      d.value = std::move(e);
    } else if (at_word("prime_image")) {
      ++pos_;
      punct('(');
      d.value = expr::PrimeImage{number("prime")};
      punct(')');
    } else {
      fail({"'{'", "'closure'", "'complement_of_prime'", "'saturation'", "'product'", "'idealized'", "'prime_image'"});
    }
    bind(at, d.name, Kind::Set);
    return d;
  }

  std::vector<std::vector<std::size_t>> rows() {
    punct('[');
    std::vector<std::vector<std::size_t>> out(1);
    out.back().push_back(number("table entry"));
    while (at_punct(',') || at_punct(';')) {
      if (next().text == ";") out.emplace_back();
      out.back().push_back(number("table entry"));
    }
    punct(']');
    return out;
  }

  ModuleDecl module_decl() {
    word("module");
    const Token at = peek();
    ModuleDecl d;
    d.name = ident("module name");
    word("over");
    d.ring = ref({Kind::Ring});
    punct('=');
    if (at_word("regular")) {
      ++pos_;
      d.value = expr::Regular{};
    } else if (at_word("product")) {
      ++pos_;
      auto [a, b] = pair_of({Kind::Module}, {Kind::Module});
      d.value = expr::Product{a, b};
    } else if (at_word("cyclic")) {
      ++pos_;
      punct('(');
      d.value = expr::Cyclic{number("order")};
      punct(')');
    } else if (at_word("tables")) {
      ++pos_;
      punct('(');
      expr::Tables t;
      word("add");
      punct('=');
      t.add = rows();
      punct(',');
      word("act");
      punct('=');
      t.act = rows();
      punct(')');
      d.value = std::move(t);
    } else {
      fail({"'regular'", "'product'", "'cyclic'", "'tables'"});
    }
    bind(at, d.name, Kind::Module);
    return d;
  }

  SubmoduleDecl submodule_decl() {
    word("submodule");
    const Token at = peek();
    SubmoduleDecl d;
    d.name = ident("submodule name");
    word("of");
    d.module = ref({Kind::Module});
    punct('=');
    if (at_word("span")) {
      ++pos_;
      d.value = expr::Span{braced_elements()};
    } else if (at_word("zero")) {
      ++pos_;
      d.value = expr::Zero{};
    } else if (at_word("full")) {
      ++pos_;
      d.value = expr::Full{};
    } else {
      fail({"'span'", "'zero'", "'full'"});
    }
    bind(at, d.name, Kind::Submodule);
    return d;
  }

  Decide decide() {
    word("decide");
    Decide d;
    const Token at = peek();
    d.property = ident("property");
    if (!property_known(d.property)) {
      std::vector<std::string> expected;
      for (const auto& [k, v] : properties()) expected.push_back(k);
      throw ScriptError(ErrorKind::SyntaxError, at.loc, "unknown property '" + d.property + "'", expected);
    }
    if (at_punct(':')) {
      if (d.property != "s_secondary") fail({"target name"});
      ++pos_;
      const Token f = peek();
      d.form = ident("form");
      if (d.form.size() != 1 || d.form[0] < 'a' || d.form[0] > 'd') {
        throw ScriptError(ErrorKind::SyntaxError, f.loc, "unknown form '" + d.form + "'", {"a", "b", "c", "d"});
      }
    }
    if (property_on_module(d.property)) {
      d.target = ref({Kind::Module});
    } else {
      d.target = ref({Kind::Submodule, Kind::Module});
    }
    if (property_takes_set(d.property)) d.set = ref({Kind::Set});
    return d;
  }

  Enumerate enumerate() {
    word("enumerate");
    Enumerate e;
    if (at_word("submodules") || at_word("ci")) {
      e.what = next().text;
      e.target = ref({Kind::Module});
    } else if (at_word("ideals")) {
      e.what = next().text;
      e.target = ref({Kind::Ring});
    } else {
      fail({"'submodules'", "'ideals'", "'ci'"});
    }
    return e;
  }

  Verify verify() {
    word("verify");
    Verify v;
    const Token at = peek();
    v.law = ident("'all' or law id");
    if (v.law != "all") {
      int n = 0;
      const bool ok = v.law.size() >= 2 && v.law[0] == 'L' &&
                      std::from_chars(v.law.data() + 1, v.law.data() + v.law.size(), n).ptr == v.law.data() + v.law.size() &&
                      n >= 1 && n <= 20 && v.law == "L" + std::to_string(n);
      if (!ok) throw ScriptError(ErrorKind::UnknownLaw, at.loc, "unknown law '" + v.law + "'", {"'all'", "L1..L20"});
    }
    v.ring = ref({Kind::Ring});
    v.module = ref({Kind::Module});
    v.set = ref({Kind::Set});
    return v;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Kind> names_;
};

std::string join(const ElemList& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += elems[i];
  }
  return out;
}

std::string print_ideal(const IdealExpr& e) {
  switch (e.kind) {
    case IdealExpr::Kind::List: return "{" + join(e.elems) + "}";
    case IdealExpr::Kind::Ann: return "ann(" + e.name + ")";
    case IdealExpr::Kind::Radical: return "radical(" + print_ideal(*e.inner) + ")";
    case IdealExpr::Kind::Jacobson: return "jac";
  }
  return "";
}

std::string print_rows(const std::vector<std::vector<std::size_t>>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rows[i][j]);
    }
  }
  return out + "]";
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

Script parse_script(std::string_view text) { return Parser(lex(text)).run(); }

std::string pretty_print(const Statement& st) {
  return std::visit(
      overloaded{
          [](const RingDecl& d) {
            const std::string rhs = std::visit(
                overloaded{
                    [](const expr::Cyclic& c) { return "Z(" + std::to_string(c.n) + ")"; },
                    [](const expr::Product& p) { return "product(" + p.left + ", " + p.right + ")"; },
                    [](const expr::QuotientBy& q) { return "quotient(" + q.ring + ", " + print_ideal(q.ideal) + ")"; },
                    [](const expr::IdealizationOf& i) { return "idealization(" + i.ring + ", " + i.module + ")"; },
                },
                d.value);
            return "ring " + d.name + " = " + rhs;
          },
          [](const SetDecl& d) {
            const std::string rhs = std::visit(
                overloaded{
                    [](const expr::Listed& l) { return "{" + join(l.elems) + "}"; },
                    [](const expr::Closure& c) { return "closure{" + join(c.elems) + "}"; },
                    [](const expr::PrimeComplement& p) { return "complement_of_prime(" + print_ideal(p.prime) + ")"; },
                    [](const expr::Saturation& s) { return "saturation(" + s.set + ")"; },
                    [](const expr::Product& p) { return "product(" + p.left + ", " + p.right + ")"; },
                    [](const expr::Idealized& i) { return "idealized(" + i.set + ", " + i.part + ")"; },
                    [](const expr::PrimeImage& p) { return "prime_image(" + std::to_string(p.p) + ")"; },
                },
                d.value);
            return "set " + d.name + " in " + d.ring + " = " + rhs;
          },
          [](const ModuleDecl& d) {
            const std::string rhs = std::visit(
                overloaded{
                    [](const expr::Regular&) { return std::string("regular"); },
                    [](const expr::Product& p) { return "product(" + p.left + ", " + p.right + ")"; },
                    [](const expr::Cyclic& c) { return "cyclic(" + std::to_string(c.n) + ")"; },
                    [](const expr::Tables& t) {
                      return "tables(add=" + print_rows(t.add) + ", act=" + print_rows(t.act) + ")";
                    },
                },
                d.value);
            return "module " + d.name + " over " + d.ring + " = " + rhs;
          },
          [](const SubmoduleDecl& d) {
            const std::string rhs = std::visit(
                overloaded{
                    [](const expr::Span& s) { return "span{" + join(s.elems) + "}"; },
                    [](const expr::Zero&) { return std::string("zero"); },
                    [](const expr::Full&) { return std::string("full"); },
                },
                d.value);
            return "submodule " + d.name + " of " + d.module + " = " + rhs;
          },
          [](const Decide& d) {
            std::string out = "decide " + d.property;
            if (!d.form.empty()) out += ":" + d.form;
            out += " " + d.target;
            if (!d.set.empty()) out += " " + d.set;
            return out;
          },
          [](const Enumerate& e) { return "enumerate " + e.what + " " + e.target; },
          [](const Verify& v) { return "verify " + v.law + " " + v.ring + " " + v.module + " " + v.set; },
      },
      st.body);
}

std::string pretty_print(const Script& script) {
  std::string out;
  for (const auto& st : script.statements) out += pretty_print(st) + "\n";
  return out;
}

}  // namespace ringlab::script
