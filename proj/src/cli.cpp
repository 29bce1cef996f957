/*
   Copyright 2026 The gwalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gwalg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "gwalg/errors.hpp"
#include "gwalg/fixed.hpp"
#include "gwalg/grammar.hpp"
#include "gwalg/homdim.hpp"
#include "gwalg/skew.hpp"

namespace gwalg {

using nlohmann::json;

namespace {

struct Flags {
  std::string a;
  std::vector<std::string> g;
  std::string lhs, rhs, elem;
  std::optional<long> order;
  std::optional<long> prime;
  std::string verify;
  bool json = false;
  bool two_term = false;
};

/// A grammar error tagged with the flag whose text it came from.
struct FlagError {
  std::string flag, text;
  ParseError error;
};

template <class T>
T parse_flag(const std::string& flag, const std::string& text, const std::function<T(std::string_view)>& f) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    throw FlagError{flag, text, e};
  }
}

[[noreturn]] void missing(const std::string& flag) { throw FlagError{flag, "", ParseError(flag + " is required", 0, 0)}; }

struct Context {
  const Flags& flags;
  json inputs = json::object();
  std::vector<std::string> text;  // custom text rendering, if any

  Presentation presentation() {
    if (flags.a.empty()) missing("--a");
    ZPoly a = parse_flag<ZPoly>("--a", flags.a, [](std::string_view s) { return parse_poly(s); });
    inputs["a"] = a.str();
    return make_presentation(a);
  }
  std::vector<Automorphism> maps(const Presentation& p, std::size_t at_least = 1) {
    if (flags.g.size() < at_least) missing("--g");
    std::vector<Automorphism> out;
    json echo = json::array();
    for (const auto& s : flags.g) {
      out.push_back(parse_flag<Automorphism>("--g", s, [&](std::string_view t) { return parse_automorphism(p, t); }));
      echo.push_back(out.back().str());
    }
    inputs["g"] = echo;
    return out;
  }
  Automorphism map(const Presentation& p) {
    if (flags.g.size() != 1) missing("--g (exactly once)");
    Automorphism g = maps(p).front();
    inputs["g"] = g.str();
    return g;
  }
  GwaElement element(const Presentation& p, const char* flag, const std::string& text) {
    if (text.empty()) missing(flag);
    GwaElement e = parse_flag<GwaElement>(flag, text, [&](std::string_view s) { return parse_element(p, s); });
    inputs[std::string(flag).substr(2)] = e.str();
    return e;
  }
  long order_flag() {
    if (!flags.order) missing("--order");
    inputs["order"] = *flags.order;
    return *flags.order;
  }
};

json images(const Automorphism& g) {
  return {{"x", g.image_x().str()}, {"y", g.image_y().str()}, {"z", g.image_z().str()}};
}

json verdict_json(const GldimVerdict& v) {
  json j;
  if (v.value == GldimVerdict::Value::Infinite)
    j["value"] = "inf";
  else
    j["value"] = v.value == GldimVerdict::Value::One ? 1 : 2;
  switch (v.evidence) {
    case GldimVerdict::Evidence::MultipleRoot: j["evidence"] = {{"multiple_root", v.witness_gcd.str()}}; break;
    case GldimVerdict::Evidence::CongruentPair: j["evidence"] = {{"congruent_pair", v.witness_shift}}; break;
    case GldimVerdict::Evidence::NoObstruction: j["evidence"] = {{"no_obstruction", true}}; break;
  }
  return j;
}

json fixed_ring_json(const FixedRing& fr, std::vector<std::string>& text) {
  json j;
  j["group_order"] = fr.group_order;
  if (fr.kind == FixedRing::Kind::ClassicalGwa) {
    std::string l = std::to_string(fr.group_order);
    j["kind"] = "classical GWA";
    j["defining"] = fr.defining.str();
    j["defining_degree"] = fr.defining.degree();
    j["classical"] = fr.classical.str();
    if (fr.gen_x) j["generators"] = {{"X^l", fr.gen_x->str()}, {"Y^l", fr.gen_y->str()}, {"Z", fr.gen_z->str()}};
    text.push_back("h_" + l + "(z) = " + fr.defining.str());
    text.push_back("monic form in Z/" + l + ": " + fr.classical.str());
    if (fr.gen_x) {
      text.push_back("X^" + l + " = " + fr.gen_x->str());
      text.push_back("Y^" + l + " = " + fr.gen_y->str());
      text.push_back("Z = " + fr.gen_z->str());
    }
    return j;
  }
  const OmegaInvariants& o = *fr.omega;
  j["kind"] = "generators and relations";
  j["generators"] = {{"A", o.A.str()}, {"B", o.B.str()}, {"C", o.C.str()}};
  j["rho"] = o.rho.str();
  j["f_C"] = o.f_C.str("C");
  j["g_C"] = o.g_C.str("C");
  j["deg_f_C"] = o.f_C.degree();
  j["deg_g_C"] = o.g_C.degree();
  json rel = json::array();
  for (const auto& r : o.relations) rel.push_back({{"name", r.name}, {"relation", r.text}, {"holds", r.holds}});
  j["relations"] = rel;
  text.push_back("A = " + o.A.str());
  text.push_back("B = " + o.B.str());
  text.push_back("C = " + o.C.str());
  text.push_back("f(C) = " + o.f_C.str("C"));
  text.push_back("g(C) = " + o.g_C.str("C"));
  for (const auto& r : o.relations) text.push_back(r.text + (r.holds ? "  [holds]" : "  [FAILS]"));
  return j;
}

json certificate_object(const Certificate& c) { return json::parse(certificate_json(c)); }

using Handler = std::function<json(Context&)>;

const std::vector<std::pair<std::string, std::string>>& command_table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"normalize", "shift and scale a to a monic polynomial with a(0) = 0"},
      {"mul", "product of --lhs and --rhs"},
      {"apply", "image of --elem under --g"},
      {"compose", "composite of the --g maps, first after second"},
      {"order", "order of --g"},
      {"canonical", "canonical form of a filtered --g"},
      {"is-filtered", "whether --g preserves the standard filtration"},
      {"reflective", "whether a(rho - z) = (-1)^n a(z) for some rho"},
      {"hdet", "determinant of the leading linear action of --g"},
      {"check-relations", "replay the generator relations on sample parameters"},
      {"classify-group", "isomorphism type of the group generated by the --g maps"},
      {"diagonalize", "eigenbasis for a finite-order map when deg a <= 2"},
      {"fixed-ring", "fixed ring of --g, or of the diagonal cyclic group of --order"},
      {"gldim", "global dimension"},
      {"gldim-fixed", "global dimension of the fixed ring under a cyclic group of --order"},
      {"calabi-yau", "Calabi-Yau property, of the fixed ring when --order is given"},
      {"auslander-witness", "pertinency certificate for --g, or check one with --verify"},
      {"charp-check", "centrality of x^p, y^p modulo --prime"},
  };
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json dispatch(const std::string& cmd, Context& c) {
  const Flags& f = c.flags;
  if (cmd == "normalize") {
    if (f.a.empty()) missing("--a");
    ZPoly a = parse_flag<ZPoly>("--a", f.a, [](std::string_view s) { return parse_poly(s); });
    c.inputs["a"] = a.str();
    Normalization nm = normalize_presentation(a);
    c.text = {"normalized a(z) = " + nm.presentation->a().str(), "shift = " + nm.shift.str(), "scale = " + nm.scale.str()};
    return {{"a", nm.presentation->a().str()}, {"shift", nm.shift.str()}, {"scale", nm.scale.str()}};
  }
  if (cmd == "mul") {
    Presentation p = c.presentation();
    GwaElement u = c.element(p, "--lhs", f.lhs), v = c.element(p, "--rhs", f.rhs);
    return {{"product", multiply(u, v).str()}};
  }
  if (cmd == "apply") {
    Presentation p = c.presentation();
    Automorphism g = c.map(p);
    GwaElement e = c.element(p, "--elem", f.elem);
    return {{"image", apply(g, e).str()}};
  }
  if (cmd == "compose") {
    Presentation p = c.presentation();
    auto gs = c.maps(p);
    Automorphism acc = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) acc = compose(acc, gs[i]);
    return {{"word", acc.str()}, {"images", images(acc)}};
  }
  if (cmd == "order") {
    Presentation p = c.presentation();
    MultOrder o = order(c.map(p));
    json j{{"finite", o.finite}};
    j["order"] = o.finite ? json(o.order) : json(nullptr);
    return j;
  }
  if (cmd == "canonical") {
    Presentation p = c.presentation();
    Automorphism g = c.map(p);
    json j{{"form", canonical_form(g).str()}};
    if (p->n() == 2) {
      json all = json::array();
      for (const auto& cf : canonical_forms(g)) all.push_back(cf.str());
      j["forms"] = all;
    }
    return j;
  }
  if (cmd == "is-filtered") {
    Presentation p = c.presentation();
    return {{"filtered", is_filtered(c.map(p))}};
  }
  if (cmd == "reflective") {
    Presentation p = c.presentation();
    auto r = reflective(p->a());
    json j{{"reflective", r.has_value()}};
    j["rho"] = r ? json(r->rho.str()) : json(nullptr);
    return j;
  }
  if (cmd == "hdet") {
    Presentation p = c.presentation();
    Automorphism g = c.map(p);
    Scalar h = hdet_linear(g);
    json j{{"hdet", h.str()}};
    if (p->n() >= 3 && p->n() % 2 == 1 && canonical_form(g).kind == CanonicalForm::Kind::ThetaOmega)
      j["finding"] = "theta-omega map with n odd: the leading linear action has determinant " + h.str();
    return j;
  }
  if (cmd == "check-relations") {
    Presentation p = c.presentation();
    RelationReport rep = verify_relations(p, default_relation_samples());
    json checks = json::array();
    for (const auto& r : rep.checks)
      checks.push_back({{"relation", r.relation}, {"m", r.m}, {"params", r.params}, {"status", status_name(r.status)}, {"reason", r.reason}});
    using S = RelationCheck::Status;
    c.text = {"pass: " + std::to_string(rep.count(S::Pass)), "fail: " + std::to_string(rep.count(S::Fail)),
              "skipped: " + std::to_string(rep.count(S::Skipped))};
    for (const auto& r : rep.checks)
      if (r.status != S::Pass)
        c.text.push_back(std::string(status_name(r.status)) + " " + r.relation + " m=" + std::to_string(r.m) + " " + r.params +
                         (r.reason.empty() ? "" : ": " + r.reason));
    return {{"pass", rep.count(S::Pass)}, {"fail", rep.count(S::Fail)}, {"skipped", rep.count(S::Skipped)}, {"checks", checks}};
  }
  if (cmd == "classify-group") {
    Presentation p = c.presentation();
    GroupClass gc = classify_finite_subgroup(c.maps(p));
    return {{"class", gc.str()}, {"order", gc.kind == GroupClass::Kind::Infinite ? json(nullptr) : json(gc.order)}};
  }
  if (cmd == "diagonalize") {
    Presentation p = c.presentation();
    Automorphism g = c.map(p);
    Diagonalization d = p->n() == 1 ? diagonalize_weyl(g) : diagonalize_deg2(g);
    json j{{"X", d.X.str()}, {"Y", d.Y.str()}, {"Z", d.Z.str()}, {"new_a", d.new_a.str("Z")},
           {"gamma", d.gamma.str()}, {"k_plus", d.k_plus.str()}, {"k_minus", d.k_minus.str()}, {"branch", d.branch}};
    j["reference_gamma"] = d.reference_gamma ? json(d.reference_gamma->str()) : json(nullptr);
    j["failed_identities"] = check_diagonalization(g, d);
    return j;
  }
  if (cmd == "fixed-ring") {
    Presentation p = c.presentation();
    if (!f.g.empty()) return fixed_ring_json(fixed_ring_cyclic(c.map(p)), c.text);
    return fixed_ring_json(fixed_ring_diagonal(p, c.order_flag()), c.text);
  }
  if (cmd == "gldim") {
    GldimVerdict v = gldim(c.presentation());
    c.text = {"gldim = " + v.value_str(), "evidence: " + v.evidence_str()};
    return verdict_json(v);
  }
  if (cmd == "gldim-fixed") {
    Presentation p = c.presentation();
    long ell = c.order_flag();
    GldimVerdict v = gldim_fixed(p, ell), d = gldim_fixed_direct(p, ell);
    json j = verdict_json(v);
    j["direct"] = verdict_json(d);
    j["routes_agree"] = v == d;
    c.text = {"gldim = " + v.value_str(), "evidence: " + v.evidence_str(),
              "direct from the product polynomial: " + d.value_str() + " (" + d.evidence_str() + ")"};
    return j;
  }
  if (cmd == "calabi-yau") {
    Presentation p = c.presentation();
    if (f.order) return {{"calabi_yau", is_calabi_yau_fixed(p, c.order_flag())}};
    return {{"calabi_yau", is_calabi_yau(p)}};
  }
  if (cmd == "auslander-witness") {
    if (!f.verify.empty()) {
      c.inputs["verify"] = f.verify;
      std::string body = read_file(f.verify);
      json doc;
      try {
        doc = json::parse(body);
      } catch (const json::parse_error& e) {
        throw FlagError{"--verify", "", ParseError(std::string("not JSON: ") + e.what(), e.byte, e.byte)};
      }
      if (doc.contains("result") && doc["result"].contains("certificate")) doc = doc["result"]["certificate"];
      Certificate cert = parse_flag<Certificate>("--verify", "", [&](std::string_view) { return parse_certificate(doc.dump()); });
      ReplayResult r = replay(cert);
      c.text = {r.ok ? "certificate replays: valid" : "certificate rejected: " + r.reason};
      json j{{"valid", r.ok}, {"reason", r.reason}, {"finite", cert.finite}};
      if (!r.ok) throw json(j);
      return j;
    }
    Presentation p = c.presentation();
    Automorphism g = c.map(p);
    WitnessOptions opt;
    opt.two_term_element = f.two_term;
    Certificate cert = auslander_witness(g, opt);
    ReplayResult r = replay(cert);
    return {{"certificate", certificate_object(cert)}, {"replays", r.ok}};
  }
  if (cmd == "charp-check") {
    Presentation p = c.presentation();
    if (!f.prime) missing("--prime");
    c.inputs["prime"] = *f.prime;
    CharpReport rep = charp_report(p->a(), *f.prime);
    json comm = json::object(), ind = json::array();
    for (const auto& [name, ok] : rep.commutators) comm[name] = ok;
    for (const auto& [k, ok] : rep.induction) ind.push_back({{"k", k}, {"holds", ok}});
    return {{"central", rep.central}, {"commutators", comm}, {"induction", ind}};
  }
  throw Error(ErrorKind::UnknownCommand, "unknown command " + cmd);
}

void render_text(const json& j, const std::string& indent, std::ostream& out) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, indent + "  ", out);
    } else if (v.is_array() && v.empty()) {
      out << indent << k << ": none\n";
    } else if (v.is_array()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          render_text(e, indent + "    ", out);
        } else {
          out << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, d] : command_table()) v.push_back(n);
    return v;
  }();
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in classical generalized Weyl algebras", "gwa"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file; inline flags win");
  Flags f;
  app.add_option("--a", f.a, "defining polynomial in z");
  app.add_option("--g", f.g, "automorphism word; repeat for several maps");
  app.add_option("--lhs", f.lhs, "left element");
  app.add_option("--rhs", f.rhs, "right element");
  app.add_option("--elem", f.elem, "element");
  app.add_option("--order", f.order, "cyclic group order");
  app.add_option("--prime", f.prime, "prime for charp-check");
  app.add_option("--verify", f.verify, "certificate file to replay");
  app.add_flag("--json", f.json, "JSON output");
  app.add_flag("--two-term", f.two_term, "use 1 # e + 1 # g for odd theta-omega certificates");
  for (const auto& [name, desc] : command_table()) app.add_subcommand(name, desc);

  std::vector<const char*> argv{"gwa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  Context ctx{f, json::object(), {}};
  json doc{{"command", cmd}};
  int code = 0;
  json result;
  try {
    result = dispatch(cmd, ctx);
  } catch (const FlagError& fe) {
    json e{{"kind", error_kind_name(fe.error.kind())}, {"message", fe.error.what()}, {"flag", fe.flag}};
    e["span"] = {fe.error.begin(), fe.error.end()};
    doc["error"] = e;
    code = 2;
    if (!f.json) {
      err << "error: " << fe.flag << ": " << fe.error.what() << "\n";
      if (!fe.text.empty()) {
        err << "  " << fe.text << "\n  " << std::string(fe.error.begin(), ' ')
            << std::string(std::max<std::size_t>(1, fe.error.end() - fe.error.begin()), '^') << "\n";
      }
    }
  } catch (const Error& e) {
    doc["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    code = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownCommand ? 2 : 1;
    if (!f.json) err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
  } catch (const json& rejected) {
    result = rejected;  // verification failed: report and exit 1
    code = 1;
  }
  doc["inputs"] = ctx.inputs;
  if (!result.is_null()) doc["result"] = result;
  if (f.json) {
    out << doc.dump(2) << "\n";
  } else if (!result.is_null()) {
    if (!ctx.text.empty())
      for (const auto& line : ctx.text) out << line << "\n";
    else
      render_text(result, "", out);
  }
  return code;
}

}  // namespace gwalg
