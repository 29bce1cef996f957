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

#include <json.hpp>

#include "gwalg/errors.hpp"
#include "gwalg/grammar.hpp"
#include "gwalg/skew.hpp"

namespace gwalg {

using nlohmann::json;

namespace {

json skew_json(const GrSkew& u) {
  json out = json::array();
  for (const auto& [g, c] : u.comps) out.push_back({{"g", g}, {"coeff", c.str()}});
  return out;
}

json monomial_json(const GrRing& r, const GrMonomial& m) { return GrElement::monomial(r, m).str(); }

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate: " + what, 0, 0); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

GrSkew skew_from(const GrRing& r, const json& j) {
  if (!j.is_array()) bad("skew element must be an array");
  GrSkew u;
  for (const auto& t : j) {
    const json& g = field(t, "g");
    if (!g.is_number_integer()) bad("group index must be an integer");
    u = u + skew_term(parse_gr_element(r, text(t, "coeff")), g.get<int>());
  }
  return u;
}

GrMonomial monomial_from(const GrRing& r, const json& j) {
  if (!j.is_string()) bad("monomial must be a string");
  auto m = parse_gr_element(r, j.get<std::string>()).as_monomial();
  if (!m) bad("'" + j.get<std::string>() + "' is not a monomial");
  return *m;
}

}  // namespace

std::string certificate_json(const Certificate& c) {
  json j;
  j["kind"] = c.kind;
  j["ring"] = {{"n", c.ring.n}, {"lead", c.ring.lead.str()}};
  json group = json::array();
  for (const auto& g : c.group.elements)
    group.push_back({{"x", g.images[0].str()}, {"y", g.images[1].str()}, {"z", g.images[2].str()}});
  j["group"] = group;
  j["f"] = skew_json(c.f);
  j["f_is_group_sum"] = c.f_is_group_sum;
  json steps = json::array();
  for (const auto& s : c.steps) {
    json terms = json::array();
    for (const auto& t : s.derivation)
      terms.push_back({{"coeff", t.coeff.str()}, {"left", skew_json(t.left)}, {"source", t.source}, {"right", skew_json(t.right)}});
    steps.push_back({{"element", skew_json(s.element)}, {"derivation", terms}, {"note", s.note}});
  }
  j["steps"] = steps;
  json concl = json::array(), basis = json::array();
  for (const auto& m : c.conclusion) concl.push_back(monomial_json(c.ring, m));
  for (const auto& m : c.findim_basis) basis.push_back(monomial_json(c.ring, m));
  j["conclusion"] = concl;
  j["findim_basis"] = basis;
  j["finite"] = c.finite;
  j["notes"] = c.notes;
  return j.dump(2);
}

Certificate parse_certificate(const std::string& input) {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate is not JSON: ") + e.what(), e.byte, e.byte);
  }
  Certificate c;
  c.kind = text(j, "kind");
  const json& ring = field(j, "ring");
  const json& n = field(ring, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) bad("ring degree must be a positive integer");
  c.ring = {n.get<int>(), parse_scalar(text(ring, "lead"))};
  const json& group = field(j, "group");
  if (!group.is_array() || group.empty()) bad("group must be a nonempty array");
  for (const auto& g : group)
    c.group.elements.push_back({{parse_gr_element(c.ring, text(g, "x")), parse_gr_element(c.ring, text(g, "y")),
                                 parse_gr_element(c.ring, text(g, "z"))}});
  c.f = skew_from(c.ring, field(j, "f"));
  const json& fs = field(j, "f_is_group_sum");
  if (!fs.is_boolean()) bad("f_is_group_sum must be a boolean");
  c.f_is_group_sum = fs.get<bool>();
  const json& steps = field(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  for (const auto& s : steps) {
    CertificateStep st;
    st.element = skew_from(c.ring, field(s, "element"));
    st.note = text(s, "note");
    const json& terms = field(s, "derivation");
    if (!terms.is_array()) bad("derivation must be an array");
    for (const auto& t : terms) {
      const json& src = field(t, "source");
      if (!src.is_number_integer()) bad("source must be an integer");
      st.derivation.push_back({parse_scalar(text(t, "coeff")), skew_from(c.ring, field(t, "left")), src.get<int>(),
                               skew_from(c.ring, field(t, "right"))});
    }
    c.steps.push_back(std::move(st));
  }
  for (const auto& m : field(j, "conclusion")) c.conclusion.push_back(monomial_from(c.ring, m));
  for (const auto& m : field(j, "findim_basis")) c.findim_basis.push_back(monomial_from(c.ring, m));
  const json& fin = field(j, "finite");
  if (!fin.is_boolean()) bad("finite must be a boolean");
  c.finite = fin.get<bool>();
  for (const auto& s : field(j, "notes")) {
    if (!s.is_string()) bad("notes must be strings");
    c.notes.push_back(s.get<std::string>());
  }
  return c;
}

}  // namespace gwalg
