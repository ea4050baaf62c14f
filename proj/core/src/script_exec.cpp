#include "ringlab/config.hpp"
#include "ringlab/deciders.hpp"
#include "ringlab/fractions.hpp"
#include "ringlab/laws.hpp"
#include "ringlab/script.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

namespace ringlab::script {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kVersion = "0.1.0";

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

struct RingEntry {
  RingPtr ring;
  std::optional<std::pair<std::string, std::string>> product;
  std::optional<std::pair<std::string, std::string>> idealization;  // base ring, module
  std::optional<Idealization> idz;
};

struct SetEntry {
  std::string ring;
  MultClosedSet s;
  std::optional<std::pair<std::string, std::string>> product;
  std::optional<std::pair<std::string, IdealizationData::Variant>> idealized;
};

struct ModuleEntry {
  std::string ring;
  ModulePtr module;
  std::optional<std::pair<std::string, std::string>> product_ring;
  bool regular = false;
};

struct SubEntry {
  std::string module;
  Submodule sub;
};

[[noreturn]] void mismatch(const std::string& message) { throw Error(ErrorKind::TypeMismatch, message); }

class Interpreter {
public:
  explicit Interpreter(const Options& options) : options_(options) {}

  /// Returns a record for commands, nothing for declarations.
  std::optional<Json> exec(const Statement& st) {
    return std::visit(
        overloaded{
            [&](const RingDecl& d) -> std::optional<Json> { ring_decl(d); return std::nullopt; },
            [&](const SetDecl& d) -> std::optional<Json> { set_decl(d); return std::nullopt; },
            [&](const ModuleDecl& d) -> std::optional<Json> { module_decl(d); return std::nullopt; },
            [&](const SubmoduleDecl& d) -> std::optional<Json> { submodule_decl(d); return std::nullopt; },
            [&](const Decide& d) -> std::optional<Json> { return decide(d); },
            [&](const Enumerate& e) -> std::optional<Json> { return enumerate(e); },
            [&](const Verify& v) -> std::optional<Json> { return verify(v); },
        },
        st.body);
  }

  bool verification_failed() const { return verification_failed_; }

private:
  const RingEntry& ring(const std::string& n) const { return rings_.at(n); }
  const SetEntry& set(const std::string& n) const { return sets_.at(n); }
  const ModuleEntry& module(const std::string& n) const { return modules_.at(n); }

  Subset ring_elems(const RingPtr& r, const ElemList& elems) const {
    Subset out(r->size());
    for (const auto& e : elems) out.insert(r->parse(e));
    return out;
  }

  Ideal ideal(const RingPtr& r, const IdealExpr& e) const {
    switch (e.kind) {
      case IdealExpr::Kind::List: return ideal_span(r, ring_elems(r, e.elems));
      case IdealExpr::Kind::Ann: {
        const Submodule n = submodule_or_full(e.name);
        if (n.module->ring() != r) mismatch("'" + e.name + "' is not a module over this ring");
        return annihilator(n);
      }
      case IdealExpr::Kind::Radical: return ideal_radical(ideal(r, *e.inner));
      case IdealExpr::Kind::Jacobson: return spectrum(r).jacobson;
    }
    throw Error(ErrorKind::Internal, "bad ideal expression");
  }

  Submodule submodule_or_full(const std::string& name) const {
    if (const auto it = subs_.find(name); it != subs_.end()) return it->second.sub;
    return full_submodule(module(name).module);
  }

  void ring_decl(const RingDecl& d) {
    RingEntry e;
    std::visit(overloaded{
                   [&](const expr::Cyclic& c) {
                     if (c.n < 2) throw Error(ErrorKind::InvalidConstruction, "Z(n) needs n >= 2");
                     check_cap(c.n, "Z(" + std::to_string(c.n) + ")");
                     e.ring = ring_cyclic(c.n);
                   },
                   [&](const expr::Product& p) {
                     e.ring = ring_product(ring(p.left).ring, ring(p.right).ring);
                     e.product = {p.left, p.right};
                   },
                   [&](const expr::QuotientBy& q) {
                     const RingPtr& base = ring(q.ring).ring;
                     e.ring = ring_quotient(base, ideal(base, q.ideal)).ring;
                   },
                   [&](const expr::IdealizationOf& i) {
                     const RingPtr& base = ring(i.ring).ring;
                     const ModulePtr& m = module(i.module).module;
                     if (m->ring() != base) mismatch("'" + i.module + "' is not a module over '" + i.ring + "'");
                     Idealization idz = ring_idealization(base, m);
                     e.ring = idz.ring;
                     e.idealization = {i.ring, i.module};
                     e.idz = std::move(idz);
                   },
               },
               d.value);
    rings_.emplace(d.name, std::move(e));
  }

  void set_decl(const SetDecl& d) {
    const RingEntry& re = ring(d.ring);
    const RingPtr& r = re.ring;
    std::optional<std::pair<std::string, std::string>> product;
    std::optional<std::pair<std::string, IdealizationData::Variant>> idealized;
    auto same_ring = [&](const std::string& name) -> const SetEntry& {
      const SetEntry& s = set(name);
      if (s.s.ring() != r) mismatch("'" + name + "' is not a set in '" + d.ring + "'");
      return s;
    };
    MultClosedSet value = std::visit(
        overloaded{
            [&](const expr::Listed& l) { return MultClosedSet::make(r, ring_elems(r, l.elems)); },
            [&](const expr::Closure& c) { return mcs_closure(r, ring_elems(r, c.elems)); },
            [&](const expr::PrimeComplement& p) { return mcs_complement(ideal(r, p.prime)); },
            [&](const expr::Saturation& s) { return mcs_saturation(same_ring(s.set).s); },
            [&](const expr::Product& p) {
              product = {p.left, p.right};
              return mcs_product(r, set(p.left).s, set(p.right).s);
            },
            [&](const expr::Idealized& i) {
              if (!re.idz) mismatch("'" + d.ring + "' is not an idealization");
              const SetEntry& base = set(i.set);
              if (base.s.ring() != re.idz->base) mismatch("'" + i.set + "' is not a set in the base ring");
              Submodule part = i.part == "zero"   ? zero_submodule(re.idz->module)
                               : i.part == "full" ? full_submodule(re.idz->module)
                                                  : subs_.at(i.part).sub;
              if (part.module != re.idz->module) mismatch("'" + i.part + "' is not a submodule of the idealized module");
              if (i.part == "zero") idealized = {i.set, IdealizationData::Variant::Zero};
              if (i.part == "full") idealized = {i.set, IdealizationData::Variant::Full};
              return re.idz->embed(base.s, part);
            },
            [&](const expr::PrimeImage& p) { return mcs_prime_complement_image(r, p.p); },
        },
        d.value);
    sets_.emplace(d.name, SetEntry{d.ring, std::move(value), product, idealized});
  }

  void module_decl(const ModuleDecl& d) {
    const RingEntry& re = ring(d.ring);
    const RingPtr& r = re.ring;
    ModuleEntry e{d.ring, nullptr, std::nullopt, false};
    std::visit(overloaded{
                   [&](const expr::Regular&) {
                     e.module = module_regular(r);
                     e.regular = true;
                   },
                   [&](const expr::Product& p) {
                     const ModuleEntry& a = module(p.left);
                     const ModuleEntry& b = module(p.right);
                     if (a.module->ring() == r && b.module->ring() == r) {
                       e.module = module_product(a.module, b.module, ProductMode::SameRing);
                     } else if (re.product && a.ring == re.product->first && b.ring == re.product->second) {
                       e.module = module_product(a.module, b.module, ProductMode::ProductRing, r);
                       e.product_ring = {p.left, p.right};
                     } else {
                       mismatch("'" + p.left + "' and '" + p.right + "' do not combine into a module over '" + d.ring + "'");
                     }
                   },
                   [&](const expr::Cyclic& c) { e.module = module_cyclic(r, c.n); },
                   [&](const expr::Tables& t) {
                     const std::size_t n = t.add.size();
                     check_cap(n, "module");
                     FiniteModule::Tables tab;
                     tab.size = n;
                     for (const auto& row : t.add) {
                       if (row.size() != n) throw Error(ErrorKind::InvalidConstruction, "add table must be square");
                       for (auto v : row) tab.add.push_back(static_cast<Elem>(v));
                     }
                     if (t.act.size() != r->size()) {
                       throw Error(ErrorKind::InvalidConstruction, "act table needs one row per ring element");
                     }
                     for (const auto& row : t.act) {
                       if (row.size() != n) throw Error(ErrorKind::InvalidConstruction, "act rows need one entry per module element");
                       for (auto v : row) tab.act.push_back(static_cast<Elem>(v));
                     }
                     for (std::size_t i = 0; i < n; ++i) tab.labels.push_back(std::to_string(i));
                     for (auto v : tab.add) {
                       if (v >= n) throw Error(ErrorKind::InvalidConstruction, "table entry outside the carrier");
                     }
                     for (auto v : tab.act) {
                       if (v >= n) throw Error(ErrorKind::InvalidConstruction, "table entry outside the carrier");
                     }
                     e.module = module_from_tables(r, std::move(tab));
                   },
               },
               d.value);
    modules_.emplace(d.name, std::move(e));
    module_order_.push_back(d.name);
  }

  void submodule_decl(const SubmoduleDecl& d) {
    const ModulePtr& m = module(d.module).module;
    Submodule n = std::visit(overloaded{
                                 [&](const expr::Span& s) {
                                   Subset gens(m->size());
                                   for (const auto& e : s.elems) gens.insert(m->parse(e));
                                   return submodule_span(m, gens);
                                 },
                                 [&](const expr::Zero&) { return zero_submodule(m); },
                                 [&](const expr::Full&) { return full_submodule(m); },
                             },
                             d.value);
    subs_.emplace(d.name, SubEntry{d.module, std::move(n)});
  }

  static Json report_json(const DecisionReport& rep, const FiniteRing& r, const FiniteModule& m) {
    Json j;
    j["verdict"] = rep.verdict;
    j["disqualified"] = rep.disqualified ? Json(std::string(to_string(*rep.disqualified))) : Json(nullptr);
    j["witness"] = rep.witness ? Json(r.label(*rep.witness)) : Json(nullptr);
    Json certs = Json::array();
    for (const auto& c : rep.certificates) {
      Json cj;
      cj["r"] = r.label(c.r);
      cj["kind"] = std::string(to_string(c.kind));
      if (c.kind == CertKind::Nilpotent) cj["t"] = c.t;
      certs.push_back(std::move(cj));
    }
    j["certificates"] = std::move(certs);
    Json refs = Json::array();
    for (const auto& ref : rep.refutations) {
      Json rj;
      rj["s"] = ref.s ? Json(r.label(*ref.s)) : Json(nullptr);
      Json items = Json::object();
      for (const auto& it : ref.items) {
        items[it.role] = it.space == Space::Ring ? r.label(it.value) : m.label(it.value);
      }
      for (const auto& it : ref.subsets) {
        items[it.role] = it.space == Space::Ring ? format_elements(r, it.members) : format_elements(m, it.members);
      }
      rj["evidence"] = std::move(items);
      refs.push_back(std::move(rj));
    }
    j["refutations"] = std::move(refs);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
  }

  Json decide(const Decide& d) {
    const Submodule target = submodule_or_full(d.target);
    const ModulePtr& m = target.module;
    const FiniteRing& r = *m->ring();
    std::optional<MultClosedSet> s;
    if (!d.set.empty()) {
      s = set(d.set).s;
      if (s->ring() != m->ring()) mismatch("'" + d.set + "' is not a set in the ring of '" + d.target + "'");
    }
    const auto form = parse_form(d.form.empty() ? "a" : d.form).value_or(SecondaryForm::A);

    DecisionReport rep;
    const std::string& p = d.property;
    if (p == "secondary") rep = is_secondary(target);
    else if (p == "second") rep = is_second(target);
    else if (p == "s_second") rep = is_s_second(target, *s);
    else if (p == "s_secondary") rep = is_s_secondary(target, *s, form);
    else if (p == "s_prime") rep = is_s_prime_submodule(target, *s);
    else if (p == "s_primary") rep = is_s_primary(target, *s);
    else if (p == "quasi_cotorsion_free") rep = is_quasi_s_cotorsion_free(m, *s);
    else if (p == "multiplication") rep = is_multiplication(m);
    else if (p == "comultiplication") rep = is_comultiplication(m);
    else if (p == "cotorsion_free") rep = is_cotorsion_free(m);
    else if (p == "cotorsion") rep = is_cotorsion(m);
    else throw Error(ErrorKind::Internal, "unhandled property " + p);

    Json j;
    j["command"] = "decide";
    j["property"] = p;
    if (p == "s_secondary") j["form"] = std::string(to_string(form));
    j["target"] = d.target;
    j["members"] = format_elements(*m, target.members);
    j["set"] = d.set.empty() ? Json(nullptr) : Json(d.set);
    Json body = report_json(rep, r, *m);
    for (auto& [k, v] : body.items()) j[k] = v;
    if (p == "s_secondary") j["witnesses"] = format_elements(r, s_secondary_witnesses(target, *s));
    if (options_.recheck) {
      const bool ok = recheck(rep, target, s);
      j["recheck"] = ok ? "passed" : "failed";
      if (!ok) verification_failed_ = true;
    } else {
      j["recheck"] = "not_run";
    }
    return j;
  }

  Json enumerate(const Enumerate& e) {
    Json j;
    j["command"] = "enumerate";
    j["what"] = e.what;
    j["target"] = e.target;
    Json entries = Json::array();
    if (e.what == "ideals") {
      const RingPtr& r = ring(e.target).ring;
      for (const auto& members : r->ideal_lattice()) {
        const Ideal i{r, members};
        Json ej;
        ej["members"] = format_elements(*r, members);
        ej["prime"] = is_prime(i);
        ej["maximal"] = is_maximal(i);
        entries.push_back(std::move(ej));
      }
    } else {
      const ModulePtr& m = module(e.target).module;
      const auto& list = e.what == "ci" ? m->completely_irreducible() : m->lattice();
      for (const auto& members : list) {
        Json ej;
        ej["members"] = format_elements(*m, members);
        ej["size"] = members.size();
        entries.push_back(std::move(ej));
      }
    }
    j["count"] = entries.size();
    j["entries"] = std::move(entries);
    return j;
  }

  Universe universe(const std::string& rn, const std::string& mn, const std::string& sn) const {
    const RingEntry& re = ring(rn);
    const ModuleEntry& me = module(mn);
    const SetEntry& se = set(sn);
    if (me.module->ring() != re.ring) mismatch("'" + mn + "' is not a module over '" + rn + "'");
    if (se.s.ring() != re.ring) mismatch("'" + sn + "' is not a set in '" + rn + "'");
    Universe u{mn + " over " + rn + ", " + sn, re.ring, se.s, me.module, {}, {}, std::nullopt};
    for (const auto& other : module_order_) {
      const ModulePtr& om = modules_.at(other).module;
      if (other != mn && om->ring() == re.ring) u.hom_targets.push_back(om);
    }
    if (me.product_ring && re.product && se.product) {
      const SetEntry& s1 = set(se.product->first);
      const SetEntry& s2 = set(se.product->second);
      if (s1.ring == re.product->first && s2.ring == re.product->second) {
        u.factors.push_back(universe(re.product->first, me.product_ring->first, se.product->first));
        u.factors.push_back(universe(re.product->second, me.product_ring->second, se.product->second));
      }
    }
    if (re.idz && me.regular && se.idealized) {
      u.idealization = IdealizationData{*re.idz, set(se.idealized->first).s, se.idealized->second};
    }
    return u;
  }

  Json verify(const Verify& v) {
    const Universe u = universe(v.ring, v.module, v.set);
    std::vector<LawReport> reports;
    if (v.law == "all") {
      reports = run_battery({u}, options_.threads).reports;
    } else {
      reports.push_back(law_check(v.law, u));
    }
    Json j;
    j["command"] = "verify";
    j["law"] = v.law;
    j["universe"] = u.label;
    Json results = Json::array();
    std::size_t pass = 0, fail = 0, inapplicable = 0;
    for (const auto& r : reports) {
      results.push_back(law_json(r));
      if (r.status == LawStatus::Pass) ++pass;
      if (r.status == LawStatus::Fail) ++fail;
      if (r.status == LawStatus::Inapplicable) ++inapplicable;
    }
    if (fail > 0) verification_failed_ = true;
    j["results"] = std::move(results);
    j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"inapplicable", inapplicable}};
    return j;
  }

public:
  static Json law_json(const LawReport& r) {
    Json j;
    j["law"] = r.law;
    j["universe"] = r.universe;
    j["mode"] = std::string(to_string(r.mode));
    j["status"] = std::string(to_string(r.status));
    j["checked"] = r.checked;
    j["inapplicable"] = r.inapplicable;
    if (r.counterexample) {
      Json fields = Json::object();
      for (const auto& [k, v] : r.counterexample->fields) fields[k] = v;
      j["counterexample"] = Json{{"description", r.counterexample->description}, {"fields", std::move(fields)}};
    } else {
      j["counterexample"] = nullptr;
    }
    if (!r.observations.empty()) j["observations"] = r.observations;
    return j;
  }

private:
  const Options& options_;
  std::map<std::string, RingEntry> rings_;
  std::map<std::string, SetEntry> sets_;
  std::map<std::string, ModuleEntry> modules_;
  std::vector<std::string> module_order_;
  std::map<std::string, SubEntry> subs_;
  bool verification_failed_ = false;
};

// Text rendering of the structured records.

void text_report(std::ostringstream& out, const Json& j) {
  out << "  verdict: " << (j["verdict"].get<bool>() ? "true" : "false");
  if (!j["disqualified"].is_null()) out << " (disqualified: " << j["disqualified"].get<std::string>() << ")";
  out << "\n";
  if (!j["witness"].is_null()) out << "  witness: s = " << j["witness"].get<std::string>() << "\n";
  if (j.contains("witnesses")) out << "  witnesses: " << j["witnesses"].get<std::string>() << "\n";
  for (const auto& c : j["certificates"]) {
    out << "  r = " << c["r"].get<std::string>() << ": " << c["kind"].get<std::string>();
    if (c.contains("t")) out << " (t = " << c["t"].get<std::size_t>() << ")";
    out << "\n";
  }
  for (const auto& ref : j["refutations"]) {
    out << "  refuted";
    if (!ref["s"].is_null()) out << " for s = " << ref["s"].get<std::string>();
    out << ":";
    for (const auto& [k, v] : ref["evidence"].items()) out << " " << k << " = " << v.get<std::string>();
    out << "\n";
  }
  if (j.contains("notes")) out << "  notes: " << j["notes"].get<std::string>() << "\n";
  if (j["recheck"] != "not_run") out << "  recheck: " << j["recheck"].get<std::string>() << "\n";
}

void text_law(std::ostringstream& out, const Json& r) {
  out << "  " << r["law"].get<std::string>() << " [" << r["mode"].get<std::string>() << "] "
      << r["status"].get<std::string>() << " (checked " << r["checked"].get<std::size_t>() << ", inapplicable "
      << r["inapplicable"].get<std::size_t>() << ")\n";
  if (!r["counterexample"].is_null()) {
    out << "    counterexample: " << r["counterexample"]["description"].get<std::string>() << "\n";
    for (const auto& [k, v] : r["counterexample"]["fields"].items()) {
      out << "      " << k << " = " << v.get<std::string>() << "\n";
    }
  }
  if (r.contains("observations")) {
    for (const auto& o : r["observations"]) out << "    " << o.get<std::string>() << "\n";
  }
}

void text_command(std::ostringstream& out, const Json& j) {
  out << j["line"].get<std::size_t>() << ": " << j["statement"].get<std::string>() << "\n";
  const std::string cmd = j["command"].get<std::string>();
  if (cmd == "decide") {
    text_report(out, j);
  } else if (cmd == "enumerate") {
    out << "  " << j["count"].get<std::size_t>() << " entries\n";
    for (const auto& e : j["entries"]) {
      out << "  " << e["members"].get<std::string>();
      if (e.contains("prime")) {
        if (e["maximal"].get<bool>()) out << " maximal";
        else if (e["prime"].get<bool>()) out << " prime";
      }
      out << "\n";
    }
  } else if (cmd == "verify") {
    for (const auto& r : j["results"]) text_law(out, r);
    const auto& s = j["summary"];
    out << "  summary: " << s["pass"].get<std::size_t>() << " pass, " << s["fail"].get<std::size_t>() << " fail, "
        << s["inapplicable"].get<std::size_t>() << " inapplicable\n";
  }
}

Json header(const Options& options) {
  Json doc;
  doc["schema"] = "ringlab.report";
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = Json{{"name", "ringlab"}, {"version", std::string(kVersion)}};
  doc["options"] = Json{{"recheck", options.recheck}, {"cap", carrier_cap()}};
  return doc;
}

Json error_json(const Error& e, std::optional<Location> loc) {
  Json j;
  j["kind"] = std::string(to_string(e.kind()));
  if (const auto* se = dynamic_cast<const ScriptError*>(&e)) {
    j["line"] = se->location().line;
    j["column"] = se->location().column;
    j["message"] = se->detail();
    if (!se->expected().empty()) j["expected"] = se->expected();
  } else {
    j["line"] = loc ? Json(loc->line) : Json(nullptr);
    j["column"] = loc ? Json(loc->column) : Json(nullptr);
    j["message"] = e.what();
  }
  return j;
}

std::string error_line(const Json& err) {
  std::string out = "error: ";
  if (!err["line"].is_null()) {
    out += std::to_string(err["line"].get<std::size_t>()) + ":" + std::to_string(err["column"].get<std::size_t>()) + ": ";
  }
  out += err["kind"].get<std::string>() + ": " + err["message"].get<std::string>();
  if (err.contains("expected")) {
    out += " (expected one of:";
    for (const auto& x : err["expected"]) out += " " + x.get<std::string>();
    out += ")";
  }
  return out + "\n";
}

std::string status_name(int code) {
  switch (code) {
    case 0: return "ok";
    case 1: return "counterexample";
    default: return "input_error";
  }
}

}  // namespace

RunResult run_script(std::string_view text, const Options& options) {
  Json doc = header(options);
  Json commands = Json::array();
  std::optional<Json> error;
  int status = 0;
  std::string digest_source;
  Interpreter interp(options);

  try {
    const Script script = parse_script(text);
    for (const auto& st : script.statements) {
      if (std::holds_alternative<RingDecl>(st.body) || std::holds_alternative<SetDecl>(st.body) ||
          std::holds_alternative<ModuleDecl>(st.body) || std::holds_alternative<SubmoduleDecl>(st.body)) {
        digest_source += pretty_print(st) + "\n";
      }
    }
    doc["declarations_digest"] = fnv1a(digest_source);
    for (const auto& st : script.statements) {
      try {
        if (auto rec = interp.exec(st)) {
          Json full;
          full["line"] = st.loc.line;
          full["statement"] = pretty_print(st);
          for (auto& [k, v] : rec->items()) full[k] = v;
          commands.push_back(std::move(full));
        }
      } catch (const ScriptError&) {
        throw;
      } catch (const Error& e) {
        error = error_json(e, st.loc);
        break;
      }
    }
  } catch (const ScriptError& e) {
    error = error_json(e, std::nullopt);
    doc["declarations_digest"] = nullptr;
  }

  if (error) {
    status = 2;
  } else if (interp.verification_failed()) {
    status = 1;
  }

  RunResult result;
  result.exit_status = status;
  if (options.format == Format::Structured) {
    doc["commands"] = commands;
    if (error) doc["error"] = *error;
    doc["status"] = status_name(status);
    doc["exit_status"] = status;
    result.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& c : commands) text_command(out, c);
    result.output = out.str();
  }
  if (error) result.diagnostics = error_line(*error);
  return result;
}

RunResult run_battery_report(const Options& options) {
  const auto battery = universe_battery();
  const BatteryResult res = run_battery(battery, options.threads);
  const auto seps = find_separations(battery);
  const WZAudit audit = wz_audit(2, 2);

  Json doc = header(options);
  Json universes = Json::array();
  for (const auto& u : battery) universes.push_back(u.label);
  Json results = Json::array();
  std::size_t pass = 0, fail = 0, inapplicable = 0;
  for (const auto& r : res.reports) {
    results.push_back(Interpreter::law_json(r));
    if (r.status == LawStatus::Pass) ++pass;
    if (r.status == LawStatus::Fail) ++fail;
    if (r.status == LawStatus::Inapplicable) ++inapplicable;
  }
  Json sep = Json::array();
  for (const auto& s : seps) {
    sep.push_back(Json{{"kind", std::string(to_string(s.kind))},
                       {"universe", s.universe},
                       {"submodule", s.submodule},
                       {"witness", s.witness}});
  }
  Json aj;
  aj["universe"] = audit.universe;
  aj["multiplication"] = audit.multiplication;
  aj["comultiplication"] = audit.comultiplication;
  aj["radical_misses_s"] = audit.radical_misses_s;
  aj["all_nonzero_s_secondary"] = audit.all_nonzero_s_secondary;
  aj["all_proper_s_primary"] = audit.all_proper_s_primary;
  aj["non_s_secondary"] = audit.non_s_secondary ? Json(*audit.non_s_secondary) : Json(nullptr);
  aj["non_s_primary"] = audit.non_s_primary ? Json(*audit.non_s_primary) : Json(nullptr);
  aj["z"] = audit.z;
  aj["w"] = audit.w;
  aj["radical"] = audit.radical;
  aj["sets_equal"] = audit.sets_equal;
  aj["paths_agree"] = audit.paths_agree;
  aj["claim_holds"] = audit.claim_holds;

  const int status = fail > 0 ? 1 : 0;
  RunResult result;
  result.exit_status = status;
  if (options.format == Format::Structured) {
    doc["battery"] = Json{{"universes", std::move(universes)},
                          {"results", std::move(results)},
                          {"summary", Json{{"pass", pass}, {"fail", fail}, {"inapplicable", inapplicable}}}};
    doc["separations"] = std::move(sep);
    doc["audit"] = std::move(aj);
    doc["status"] = status_name(status);
    doc["exit_status"] = status;
    result.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "battery: " << battery.size() << " universes, " << res.reports.size() << " law checks\n";
    for (const auto& r : results) {
      if (r["status"] == "fail" || r["mode"] == "exploratory") {
        out << r["universe"].get<std::string>() << "\n";
        text_law(out, r);
      }
    }
    out << "summary: " << pass << " pass, " << fail << " fail, " << inapplicable << " inapplicable\n";
    out << "separations:\n";
    for (const auto& s : seps) {
      out << "  " << to_string(s.kind) << ": " << s.universe << ", N = " << s.submodule << ", s = " << s.witness << "\n";
    }
    out << "audit of " << audit.universe << ":\n";
    out << "  every non-zero submodule S-secondary: " << (audit.all_nonzero_s_secondary ? "yes" : "no") << "\n";
    out << "  every proper submodule S-primary: " << (audit.all_proper_s_primary ? "yes" : "no") << "\n";
    out << "  Z = " << audit.z << ", W = " << audit.w << ", rad Ann = " << audit.radical << "\n";
    out << "  direct and set criteria agree: " << (audit.paths_agree ? "yes" : "no") << "\n";
    out << "  claimed non-S-secondary and non-S-primary submodules exist: " << (audit.claim_holds ? "yes" : "no") << "\n";
    result.output = out.str();
  }
  return result;
}

}  // namespace ringlab::script
