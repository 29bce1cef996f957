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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gwalg/autos.hpp"
#include "gwalg/cli.hpp"
#include "gwalg/errors.hpp"
#include "gwalg/fixed.hpp"
#include "gwalg/grammar.hpp"
#include "gwalg/homdim.hpp"
#include "gwalg/skew.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

using namespace gwalg;
using testing::Z;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> findings;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Presentation deg2(const Scalar& t) { return make_presentation(Z() * (Z() - ZPoly(t))); }

Outcome relations() {
  Outcome o;
  long pass = 0, skipped = 0, fail = 0;
  auto samples = default_relation_samples();
  if (samples.size() < 5) o.fail("fewer than five parameter samples");
  for (const char* a : {"z", "z*(z-3)", "z*(z-1)*(z+1)", "z*(z-1)*(z-2)*(z-3)"}) {
    RelationReport rep = verify_relations(testing::pres(a), samples, {1, 2});
    pass += rep.count(RelationCheck::Status::Pass);
    skipped += rep.count(RelationCheck::Status::Skipped);
    fail += rep.count(RelationCheck::Status::Fail);
    for (const auto& c : rep.checks)
      if (c.status == RelationCheck::Status::Fail) o.fail(std::string(a) + ": " + c.relation + " m=" + std::to_string(c.m) + " " + c.params);
  }
  if (o.pass) o.detail = std::to_string(pass) + " exact equalities, 0 failures, " + std::to_string(skipped) + " not applicable";
  (void)fail;
  return o;
}

Outcome confluence() {
  Outcome o;
  long triples = 0;
  for (const char* a : {"z", "z*(z-3)", "z^3 - 2*z + 1"}) {
    Presentation p = testing::pres(a);
    std::mt19937 rng(2026);
    for (int k = 0; k < 200; ++k, ++triples) {
      GwaElement u = testing::random_element(p, rng), v = testing::random_element(p, rng), w = testing::random_element(p, rng);
      if (multiply(multiply(u, v), w) != multiply(u, multiply(v, w))) o.fail(std::string("associativity fails for a = ") + a);
    }
  }
  Presentation p = testing::pres("z*(z-3)");
  auto words = testing::all_words(6);
  for (const auto& w : words) {
    GwaElement prod = GwaElement::scalar(p, 1);
    for (char c : w) prod = multiply(prod, testing::letter(p, c));
    if (prod != testing::rewrite_normal_form(p, w)) o.fail("rewriting oracle disagrees on " + w);
  }
  if (o.pass) o.detail = std::to_string(triples) + " associative triples, " + std::to_string(words.size()) + " words match the rewriting oracle";
  return o;
}

Outcome diagonalization() {
  Outcome o;
  std::vector<std::array<Scalar, 3>> params{{Scalar(1), Scalar(2), zeta(3)},   {Scalar(2), Scalar::frac(1, 2), Scalar(5)},
                                            {Scalar(-1), Scalar(3), Scalar(2)}, {Scalar::frac(1, 3), Scalar(0), Scalar(-1)},
                                            {Scalar(0), Scalar(2), Scalar(-2)}, {Scalar(2), Scalar(-1), zeta(4)},
                                            {Scalar(1), Scalar(1), Scalar(3)}};
  int sampled = 0;
  for (const Scalar& t : {Scalar(3), sqrt(Scalar(2)), Scalar::frac(1, 2)}) {
    Presentation p = deg2(t);
    for (const auto& pr : params)
      for (auto kind : {CanonicalForm::Kind::Tau, CanonicalForm::Kind::TauOmega}) {
        CanonicalForm c;
        c.kind = kind;
        c.n = 2;
        c.lambda = pr[0];
        c.mu = pr[1];
        c.beta = pr[2];
        try {
          Automorphism g = reconstruct(p, c);
          Diagonalization d = diagonalize_deg2(g);
          auto failed = check_diagonalization(g, d);
          if (!failed.empty()) o.fail(c.str() + " at t = " + t.str() + ": " + failed.front());
          ++sampled;
        } catch (const Error& e) {
          o.fail(c.str() + " at t = " + t.str() + ": " + e.what());
        }
      }
  }
  if (sampled < 20) o.fail("only " + std::to_string(sampled) + " samples");
  Presentation p3 = deg2(Scalar(3));
  Diagonalization om = diagonalize_deg2(make_generator(p3, Generator::omega()));
  if (om.k_plus != Scalar(1) || om.k_minus != Scalar(-2)) o.fail("omega at t = 3 gives K+ = " + om.k_plus.str() + ", K- = " + om.k_minus.str());
  Scalar alpha(2), beta = zeta(3);
  Diagonalization pi = diagonalize_deg2(make_word(p3, {Generator::phi(1, alpha), Generator::theta(beta)}));
  if (pi.Z != GwaElement::z(p3) + GwaElement::y(p3).scaled(alpha * beta / (beta - Scalar(1)))) o.fail("Z for phi(1, 2) * theta(zeta(3)) is " + pi.Z.str());
  if (o.pass)
    o.detail = std::to_string(sampled) + " maps satisfy all seven identities; omega at t = 3: K+ = 1, K- = -2; Z = " + pi.Z.str();
  return o;
}

Outcome fixed_rings() {
  Outcome o;
  Presentation p2 = deg2(Scalar(3)), p3 = testing::pres("z*(z-1)*(z+1)");
  std::vector<std::pair<std::string, Automorphism>> maps{
      {"n=2 theta(-1)", make_generator(p2, Generator::theta(Scalar(-1)))},
      {"n=2 omega", make_generator(p2, Generator::omega())},
      {"n=2 phi(1, 2) * theta(zeta(3))", make_word(p2, {Generator::phi(1, Scalar(2)), Generator::theta(zeta(3))})},
      {"n=3 theta(-1)", make_generator(p3, Generator::theta(Scalar(-1)))}};
  std::vector<std::string> degs;
  for (const auto& [name, g] : maps) {
    try {
      FixedRing fr = fixed_ring_cyclic(g);
      if (fr.kind != FixedRing::Kind::ClassicalGwa) {
        o.fail(name + ": not a classical GWA");
        continue;
      }
      long ell = fr.group_order;
      int n = g.presentation()->n();
      if (fr.defining.degree() != n * ell) o.fail(name + ": degree " + std::to_string(fr.defining.degree()));
      for (const auto& e : {*fr.gen_x, *fr.gen_y, *fr.gen_z})
        if (apply(g, e) != e) o.fail(name + ": " + e.str() + " is not fixed");
      if (*fr.gen_y * *fr.gen_x != eval_at(fr.defining, *fr.gen_z)) o.fail(name + ": YX differs from h(Z)");
      degs.push_back(name + " deg " + std::to_string(fr.defining.degree()));
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
    }
  }
  for (const char* a : {"z*(z-3)", "z*(z-1)*(z+1)"}) {
    Presentation p = testing::pres(a);
    for (long ell : {2, 3, 4}) {
      ZPoly h(1);
      for (long i = 0; i < ell; ++i) h *= p->a().compose(Z() + ZPoly(Scalar(i)));
      GwaElement yx = GwaElement::y(p).pow(static_cast<int>(ell)) * GwaElement::x(p).pow(static_cast<int>(ell));
      if (yx != GwaElement::poly(p, h) || fixed_ring_diagonal(p, ell).defining != h)
        o.fail(std::string("y^l x^l != h_l for a = ") + a + ", l = " + std::to_string(ell));
    }
  }
  if (o.pass) {
    std::ostringstream s;
    for (std::size_t i = 0; i < degs.size(); ++i) s << (i ? "; " : "") << degs[i];
    o.detail = s.str() + "; y^l x^l = h_l for l = 2, 3, 4";
  }
  return o;
}

Outcome omega_relations() {
  Outcome o;
  struct Instance {
    std::string label;
    Presentation p;
    int claimed_f, claimed_g;
  };
  Presentation odd = normalize_presentation(parse_poly("z*(z-1)*(z+1)")).presentation;
  Presentation even = testing::pres("z*(z-1)*(z-3)*(z-2)");
  std::vector<Instance> cases{{"n=3", odd, 6, 7}, {"n=4", even, 4, 3}};
  std::vector<std::string> recorded;
  for (const auto& c : cases) {
    try {
      FixedRing fr = fixed_ring_cyclic(make_word(c.p, {Generator::theta(Scalar(2)), Generator::omega()}));
      const OmegaInvariants& inv = *fr.omega;
      if (inv.relations.size() != 4) o.fail(c.label + ": expected four relations");
      for (const auto& r : inv.relations)
        if (!r.holds) o.fail(c.label + ": " + r.text + " fails");
      int df = inv.f_C.degree(), dg = inv.g_C.degree();
      recorded.push_back(c.label + " f(C) = " + inv.f_C.str("C") + ", g(C) = " + inv.g_C.str("C"));
      if (df != c.claimed_f || dg != c.claimed_g)
        o.findings.push_back(c.label + ": computed deg_C(f) = " + std::to_string(df) + ", deg_C(g) = " + std::to_string(dg) +
                             "; tabulated " + std::to_string(c.claimed_f) + ", " + std::to_string(c.claimed_g) +
                             " (open question on the degree table)");
    } catch (const Error& e) {
      o.fail(c.label + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "all four relations hold for n = 3 and n = 4; " + recorded[0] + "; " + recorded[1];
  return o;
}

Outcome gldim_verdicts() {
  Outcome o;
  std::vector<std::pair<const char*, const char*>> expect{
      {"z", "1"}, {"z^2", "inf"}, {"z*(z-3)", "2"}, {"z*(z-sqrt(2))", "1"}, {"z*(z-1/2)", "1"}};
  for (const auto& [a, v] : expect) {
    std::string got = gldim(testing::pres(a)).value_str();
    if (got != v) o.fail(std::string("gldim(") + a + ") = " + got);
  }
  int pairs = 0;
  for (const Scalar& t : {Scalar(1), Scalar(2), Scalar(3), Scalar(4), sqrt(Scalar(2))}) {
    Presentation p = deg2(t);
    for (long ell : {3, 4}) {
      try {
        GldimVerdict rule = gldim_fixed(p, ell);
        GldimVerdict direct = gldim_fixed_direct(p, ell);
        if (!(rule == direct)) o.fail("t = " + t.str() + ", l = " + std::to_string(ell) + ": " + rule.value_str() + " vs " + direct.value_str());
        ++pairs;
      } catch (const Error& e) {
        o.fail("t = " + t.str() + ", l = " + std::to_string(ell) + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = "verdicts {1, inf, 2, 1, 1}; both fixed-ring routes agree on " + std::to_string(pairs) + " pairs";
  return o;
}

Outcome hdet() {
  Outcome o;
  int checked = 0;
  std::mt19937 rng(7);
  for (const char* a : {"z", "z*(z-3)", "z*(z-sqrt(2))"}) {
    Presentation p = testing::pres(a);
    for (int k = 0; k < 25; ++k) {
      std::vector<Generator> word;
      for (int j = 0; j < 3; ++j) {
        switch (rng() % 4) {
          case 0: word.push_back(Generator::theta(zeta(3))); break;
          case 1: word.push_back(Generator::psi(1, testing::random_scalar(rng))); break;
          case 2: word.push_back(Generator::phi(1, testing::random_scalar(rng))); break;
          default: word.push_back(Generator::omega());
        }
      }
      Automorphism g = make_word(p, word);
      if (!is_filtered(g)) continue;
      ++checked;
      if (hdet_linear(g) != Scalar(1)) o.fail(std::string(a) + ": " + g.str() + " has hdet " + hdet_linear(g).str());
    }
  }
  for (const char* a : {"z^3 - z", "z*(z-1)*(z-2)*(z-3)", "z^5 - z"}) {
    Presentation p = testing::pres(a);
    for (const Scalar& b : {Scalar(2), zeta(3), sqrt(Scalar(2))}) {
      ++checked;
      if (hdet_linear(make_generator(p, Generator::theta(b))) != Scalar(1)) o.fail(std::string(a) + ": theta has hdet != 1");
      Automorphism g = make_word(p, {Generator::theta(b), Generator::omega()});
      Scalar h = hdet_linear(g);
      if (p->n() % 2 == 0) {
        ++checked;
        if (h != Scalar(1)) o.fail(std::string(a) + ": theta * omega has hdet " + h.str());
      } else if (h != Scalar(1)) {
        o.findings.push_back("n = " + std::to_string(p->n()) + ", " + g.str() + ": leading linear determinant " + h.str() +
                             " (open question on odd n theta-omega maps)");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " maps with hdet = 1";
  return o;
}

Outcome certificates() {
  Outcome o;
  struct Case {
    std::string label, a, g;
  };
  std::vector<Case> cases{{"(2,2)", "z*(z-3)", "theta(-1)"},
                          {"(2,3)", "z*(z-3)", "theta(zeta(3))"},
                          {"n=3 theta-omega", "z*(z-1)*(z-2)", "theta(2) * omega"},
                          {"n=4 theta-omega", "z*(z-1)*(z-2)*(z-3)", "theta(3) * omega"}};
  std::vector<std::string> sizes;
  for (const auto& c : cases) {
    try {
      Presentation p = testing::pres(c.a);
      Certificate cert = auslander_witness(parse_automorphism(p, c.g));
      // Replay from the serialized form so nothing is shared with the builder.
      Certificate back = parse_certificate(certificate_json(cert));
      ReplayResult r = replay(back);
      if (!r.ok) o.fail(c.label + ": " + r.reason);
      if (!back.finite) o.fail(c.label + ": quotient is not finite");
      sizes.push_back(c.label + " basis " + std::to_string(back.findim_basis.size()));
      if (c.label == "(2,2)") {
        std::vector<std::string> basis;
        for (const auto& m : back.findim_basis) basis.push_back(GrElement::monomial(back.ring, m).str());
        std::sort(basis.begin(), basis.end());
        if (basis != std::vector<std::string>{"1", "z"}) o.fail("(2,2) basis is not {1, z}");
      }
    } catch (const Error& e) {
      o.fail(c.label + ": " + e.what());
    }
  }
  if (o.pass) {
    std::ostringstream s;
    for (std::size_t i = 0; i < sizes.size(); ++i) s << (i ? "; " : "") << sizes[i];
    o.detail = "all replay; " + s.str() + "; (2,2) basis {1, z}";
  }
  return o;
}

Outcome charp() {
  Outcome o;
  for (auto [a, p] : {std::pair{"z^2", 3L}, std::pair{"z*(z-1)", 2L}, std::pair{"z^3", 5L}}) {
    try {
      CharpReport rep = charp_report(parse_poly(a), p);
      if (!rep.central || !charp_center_check(parse_poly(a), p)) o.fail(std::string(a) + " mod " + std::to_string(p) + " not central");
      if (rep.induction.size() != static_cast<std::size_t>(p - 1)) o.fail("wrong number of induction steps");
      for (const auto& [k, ok] : rep.induction)
        if (!ok) o.fail(std::string(a) + " mod " + std::to_string(p) + ": induction fails at k = " + std::to_string(k));
    } catch (const Error& e) {
      o.fail(std::string(a) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "x^p, y^p central and induction identity holds for k < p";
  return o;
}

std::string run_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

Outcome cli_determinism() {
  Outcome o;
  std::vector<std::vector<std::string>> corpus{
      {"normalize", "--a", "2*z^2 + 4*z + 2"},
      {"mul", "--a", "z*(z-3)", "--lhs", "x^2 + z", "--rhs", "y*z"},
      {"apply", "--a", "z*(z-3)", "--g", "omega", "--elem", "x + z*y"},
      {"compose", "--a", "z*(z-3)", "--g", "omega", "--g", "theta(zeta(3))"},
      {"order", "--a", "z*(z-3)", "--g", "phi(1, 2) * theta(zeta(3))"},
      {"canonical", "--a", "z*(z-3)", "--g", "psi(1, 1) * theta(2) * omega"},
      {"is-filtered", "--a", "z^3", "--g", "psi(2, 1)"},
      {"reflective", "--a", "z*(z-1)*(z-2)"},
      {"hdet", "--a", "z*(z-1)*(z-2)", "--g", "theta(2) * omega"},
      {"check-relations", "--a", "z*(z-3)"},
      {"classify-group", "--a", "z*(z-1)*(z-2)*(z-3)", "--g", "omega", "--g", "theta(zeta(3))"},
      {"diagonalize", "--a", "z*(z-3)", "--g", "omega"},
      {"fixed-ring", "--a", "z*(z-1)*(z-2)", "--g", "theta(2) * omega"},
      {"gldim", "--a", "z*(z-3)"},
      {"gldim-fixed", "--a", "z*(z-2)", "--order", "3"},
      {"calabi-yau", "--a", "z^2"},
      {"auslander-witness", "--a", "z*(z-3)", "--g", "theta(zeta(3))"},
      {"charp-check", "--a", "z^3", "--prime", "5"},
  };
  std::vector<std::string> seen;
  for (auto args : corpus) {
    args.push_back("--json");
    int c1 = 0, c2 = 0;
    std::string first = run_json(args, c1), second = run_json(args, c2);
    if (c1 != 0) o.fail(args[0] + " exited with " + std::to_string(c1));
    if (first != second || c1 != c2) o.fail(args[0] + " output differs between runs");
    seen.push_back(args[0]);
  }
  for (const auto& name : cli_commands())
    if (std::find(seen.begin(), seen.end(), name) == seen.end()) o.fail("corpus misses " + name);
  int code = 0;
  std::string cert = run_json({"auslander-witness", "--a", "z*(z-1)*(z-2)*(z-3)", "--g", "theta(3) * omega", "--json"}, code);
  std::string path = (std::filesystem::temp_directory_path() / "gwalg_acceptance_cert.json").string();
  {
    std::ofstream f(path);
    f << cert;
  }
  std::string verdict = run_json({"auslander-witness", "--verify", path, "--json"}, code);
  std::remove(path.c_str());
  if (code != 0 || !nlohmann::json::parse(verdict)["result"]["valid"].get<bool>()) o.fail("--verify rejects its own certificate");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " subcommands byte-identical across two runs; --verify accepts its own output";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation suite", relations},
      {"arithmetic confluence", confluence},
      {"diagonalization", diagonalization},
      {"fixed rings", fixed_rings},
      {"omega-invariant relations", omega_relations},
      {"global dimension", gldim_verdicts},
      {"homological determinant", hdet},
      {"pertinency certificates", certificates},
      {"characteristic p", charp},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << o.detail << "\n";
    for (const auto& f : o.findings) std::cout << "    finding: " << f << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
