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

#include <doctest.h>

#include "gwalg/errors.hpp"
#include "gwalg/gr.hpp"
#include "gwalg/grammar.hpp"
#include "gwalg/skew.hpp"
#include "support.hpp"

using namespace gwalg;

namespace {

GrElement random_gr(const GrRing& r, std::mt19937& rng) {
  GrElement e(r);
  int terms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < terms; ++t) {
    GrMonomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    e = e + GrElement::monomial(r, m, testing::random_scalar(rng));
  }
  return e;
}

GrSkew random_gr_skew(const GrRing& r, const GradedGroup& G, std::mt19937& rng) {
  GrSkew s;
  for (int t = 0; t < 2; ++t) s = s + skew_term(random_gr(r, rng), static_cast<int>(rng() % G.size()));
  return s;
}

RSkew random_r_skew(const Presentation& p, const AutGroup& G, std::mt19937& rng) {
  RSkew s;
  for (int t = 0; t < 2; ++t) s = s + skew_term(testing::random_element(p, rng, 1, 1, false), static_cast<int>(rng() % G.size()));
  return s;
}

Certificate witness(const char* a, const char* g, WitnessOptions opt = {}) {
  Presentation p = testing::pres(a);
  return auslander_witness(parse_automorphism(p, g), opt);
}

}  // namespace

TEST_SUITE("gr") {
  TEST_CASE("the hypersurface relation") {
    GrRing r{3, Scalar(2)};
    CHECK(GrElement::x(r) * GrElement::y(r) == GrElement::z(r).pow(3).scaled(Scalar(2)));
    CHECK(GrElement::monomial(r, {2, 1, 0}).str() == "2*z^3*x");
    CHECK(GrElement::z(r).degree() == 2);
    CHECK(GrElement::x(r).degree() == 3);
  }

  TEST_CASE("commutative ring axioms on random elements") {
    GrRing r{2, Scalar(1)};
    std::mt19937 rng(41);
    for (int k = 0; k < 100; ++k) {
      GrElement u = random_gr(r, rng), v = random_gr(r, rng), w = random_gr(r, rng);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * v == v * u);
      CHECK(u * (v + w) == u * v + u * w);
    }
  }

  TEST_CASE("graded actions are ring maps") {
    Presentation p = testing::pres("z*(z-3)");
    GrRing r = gr_ring(p);
    std::mt19937 rng(43);
    for (const char* w : {"theta(zeta(3))", "omega", "phi(1, 2) * theta(-1)", "psi(1, 1) * omega"}) {
      GradedAction g = graded_action(parse_automorphism(p, w));
      CHECK_NOTHROW(check_graded_action(g));
      for (int k = 0; k < 20; ++k) {
        GrElement u = random_gr(r, rng), v = random_gr(r, rng);
        CHECK(apply_graded(g, u * v) == apply_graded(g, u) * apply_graded(g, v));
      }
    }
  }

  TEST_CASE("graded action of a composite is the composite of graded actions") {
    Presentation p = testing::pres("z*(z-1)*(z+1)");
    Automorphism g = parse_automorphism(p, "theta(2) * omega"), h = parse_automorphism(p, "theta(zeta(3))");
    CHECK(graded_action(compose(g, h)) == compose_graded(graded_action(g), graded_action(h)));
  }

  TEST_CASE("normal monomials of a degree") {
    GrRing r{2, Scalar(1)};
    // degree 4: x^2, y^2, z^2, z*x, z*y
    CHECK(monomials_of_degree(r, 4).size() == 5);
    for (const auto& m : monomials_of_degree(r, 6)) CHECK(monomial_degree(r, m) == 6);
  }
}

TEST_SUITE("skew") {
  TEST_CASE("skew product against the defining formula") {
    Presentation p = testing::pres("z*(z-3)");
    GrRing r = gr_ring(p);
    GradedGroup G = graded_group({graded_action(parse_automorphism(p, "theta(zeta(3))"))});
    REQUIRE(G.size() == 3);
    std::mt19937 rng(5);
    for (int k = 0; k < 30; ++k) {
      GrElement a = random_gr(r, rng), b = random_gr(r, rng);
      int g = static_cast<int>(rng() % 3), h = static_cast<int>(rng() % 3);
      GrSkew lhs = skew_multiply(skew_term(a, g), skew_term(b, h), G);
      CHECK(lhs == skew_term(a * apply_graded(G.elements[g], b), G.table[g][h]));
    }
  }

  TEST_CASE("skew multiplication is associative over gr R and over R") {
    Presentation p = testing::pres("z*(z-3)");
    GrRing r = gr_ring(p);
    GradedGroup G = graded_group({graded_action(parse_automorphism(p, "omega"))});
    std::mt19937 rng(7);
    for (int k = 0; k < 40; ++k) {
      GrSkew u = random_gr_skew(r, G, rng), v = random_gr_skew(r, G, rng), w = random_gr_skew(r, G, rng);
      CHECK(skew_multiply(skew_multiply(u, v, G), w, G) == skew_multiply(u, skew_multiply(v, w, G), G));
    }
    AutGroup H = aut_group({parse_automorphism(p, "omega"), parse_automorphism(p, "theta(-1)")});
    CHECK(H.size() == 4);
    for (int k = 0; k < 20; ++k) {
      RSkew u = random_r_skew(p, H, rng), v = random_r_skew(p, H, rng), w = random_r_skew(p, H, rng);
      CHECK(skew_multiply(skew_multiply(u, v, H), w, H) == skew_multiply(u, skew_multiply(v, w, H), H));
    }
  }

  TEST_CASE("the group sum absorbs group elements") {
    Presentation p = testing::pres("z*(z-3)");
    GrRing r = gr_ring(p);
    GradedGroup G = graded_group({graded_action(parse_automorphism(p, "theta(zeta(3))"))});
    GrSkew f = group_sum(r, G);
    for (int g = 0; g < 3; ++g) CHECK(skew_multiply(skew_term(GrElement::scalar(r, 1), g), f, G) == f);
  }

  TEST_CASE("quotient bases") {
    GrRing r{2, Scalar(1)};
    auto b = quotient_basis(r, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    REQUIRE(b);
    CHECK(b->size() == 2);
    CHECK_FALSE(quotient_basis(r, {{1, 0, 0}, {0, 0, 2}}));
  }

  TEST_CASE("order-two theta certificate has basis 1, z") {
    Certificate c = witness("z*(z-3)", "theta(-1)");
    CHECK(replay(c).ok);
    CHECK(c.finite);
    GrRing r = c.ring;
    std::vector<std::string> basis;
    for (const auto& m : c.findim_basis) basis.push_back(GrElement::monomial(r, m).str());
    std::sort(basis.begin(), basis.end());
    CHECK(basis == std::vector<std::string>{"1", "z"});
  }

  TEST_CASE("theta certificates stay inside the coarse basis bound") {
    struct Case {
      const char* a;
      const char* g;
      long n, ell;
    };
    for (const auto& c : {Case{"z*(z-3)", "theta(-1)", 2, 2}, Case{"z*(z-3)", "theta(zeta(3))", 2, 3},
                          Case{"z*(z-1)*(z-2)", "theta(i)", 3, 4}, Case{"z", "theta(-1)", 1, 2}}) {
      Certificate cert = witness(c.a, c.g);
      CHECK(replay(cert).ok);
      REQUIRE(cert.finite);
      CHECK(static_cast<long>(cert.findim_basis.size()) <= c.n * (c.ell - 1) * (2 * c.ell - 3));
      CHECK(static_cast<long>(cert.group.size()) == c.ell);
    }
  }

  TEST_CASE("theta-omega certificates for n even and n odd") {
    Certificate even = witness("z*(z-1)*(z-2)*(z-3)", "theta(3) * omega");
    CHECK(replay(even).ok);
    CHECK(even.finite);
    CHECK(even.findim_basis.size() == 3);
    Certificate odd = witness("z*(z-1)*(z-2)", "theta(2) * omega");
    CHECK(replay(odd).ok);
    CHECK(odd.finite);
    CHECK(odd.f_is_group_sum);
    WitnessOptions two;
    two.two_term_element = true;
    Certificate alt = witness("z*(z-1)*(z-2)", "theta(2) * omega", two);
    CHECK(replay(alt).ok);
    CHECK(alt.finite);
    CHECK_FALSE(alt.f_is_group_sum);
  }

  TEST_CASE("non-diagonal maps for n <= 2 are certified in an eigenbasis") {
    for (auto [a, g] : {std::pair{"z*(z-3)", "omega"}, std::pair{"z*(z-3)", "phi(1, 2) * theta(zeta(3))"}, std::pair{"z", "omega"}}) {
      Certificate c = witness(a, g);
      CHECK_MESSAGE(replay(c).ok, a, " ", g);
      CHECK(c.finite);
    }
  }

  TEST_CASE("tampering is detected") {
    Certificate c = witness("z*(z-3)", "theta(zeta(3))");
    REQUIRE_FALSE(c.steps.empty());
    Certificate bad = c;
    bad.steps[0].element = scaled(bad.steps[0].element, Scalar(2));
    CHECK_FALSE(replay(bad).ok);
    Certificate lying = c;
    lying.findim_basis.pop_back();
    CHECK_FALSE(replay(lying).ok);
  }

  TEST_CASE("certificate JSON round-trips byte for byte") {
    for (auto [a, g] : {std::pair{"z*(z-3)", "theta(zeta(3))"}, std::pair{"z*(z-1)*(z-2)*(z-3)", "theta(3) * omega"}}) {
      Certificate c = witness(a, g);
      std::string text = certificate_json(c);
      Certificate back = parse_certificate(text);
      CHECK(certificate_json(back) == text);
      CHECK(replay(back).ok);
    }
    CHECK_THROWS_AS(parse_certificate("{\"kind\": 3}"), ParseError);
  }

  TEST_CASE("ineligible maps") {
    CHECK_THROWS_AS(witness("z*(z-3)", "id"), Error);
    CHECK_THROWS_AS(witness("z*(z-3)", "theta(2)"), Error);
  }
}
