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

#include <map>
#include <string>

#include "gwalg/errors.hpp"
#include "gwalg/gwa.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

using namespace gwalg;
using testing::Z;


TEST_SUITE("gwa") {
  TEST_CASE("defining relations") {
    Presentation p = testing::pres("z*(z-3)");
    GwaElement x = GwaElement::x(p), y = GwaElement::y(p), z = GwaElement::z(p);
    CHECK(y * x == GwaElement::poly(p, p->a()));
    CHECK(x * y == GwaElement::poly(p, sigma_power(p->a(), 1)));
    CHECK(x * z == GwaElement::term(p, 1, Z() - ZPoly(1)));
    CHECK(y * z == GwaElement::term(p, -1, Z() + ZPoly(1)));
    CHECK(x.pow(3) * y.pow(3) == GwaElement::poly(p, p->down_product(3)));
    CHECK(y.pow(3) * x.pow(3) == GwaElement::poly(p, p->up_product(3)));
  }

  TEST_CASE("multiply agrees with single-step rewriting on all words up to length 6") {
    Presentation p = testing::pres("z*(z-3)");
    auto words = testing::all_words(6);
    CHECK(words.size() == 1092);
    for (const auto& w : words) {
      GwaElement prod = GwaElement::scalar(p, 1);
      for (char c : w) prod = multiply(prod, testing::letter(p, c));
      CHECK_MESSAGE(prod == testing::rewrite_normal_form(p, w), w);
    }
  }

  TEST_CASE("associativity on random triples") {
    for (const char* a : {"z", "z*(z-3)", "z^3 - 2*z + 1"}) {
      Presentation p = testing::pres(a);
      std::mt19937 rng(17);
      for (int k = 0; k < 200; ++k) {
        GwaElement u = testing::random_element(p, rng), v = testing::random_element(p, rng), w = testing::random_element(p, rng);
        CHECK((u * v) * w == u * (v * w));
      }
    }
  }

  TEST_CASE("distributivity and unit") {
    Presentation p = testing::pres("z^2 - sqrt(2)*z");
    std::mt19937 rng(23);
    for (int k = 0; k < 60; ++k) {
      GwaElement u = testing::random_element(p, rng), v = testing::random_element(p, rng), w = testing::random_element(p, rng);
      CHECK(u * (v + w) == u * v + u * w);
      CHECK(GwaElement::scalar(p, 1) * u == u);
    }
  }

  TEST_CASE("normalization") {
    Normalization nm = normalize_presentation(parse_poly("2*z^2 + 4*z + 2"));
    CHECK(nm.presentation->a() == Z() * Z());
    CHECK(nm.presentation->normalized());
    CHECK(affine_substitute(parse_poly("2*z^2 + 4*z + 2"), Scalar(1), nm.shift).scaled(nm.scale) == nm.presentation->a());
  }

  TEST_CASE("filtration degree") {
    Presentation p = testing::pres("z^3");
    CHECK(filtration_degree(GwaElement::x(p)) == 3);
    CHECK(filtration_degree(GwaElement::z(p)) == 2);
    CHECK(filtration_degree(GwaElement::term(p, -2, Z() * Z())) == 10);
  }

  TEST_CASE("mixing presentations is an error") {
    Presentation p = testing::pres("z"), q = testing::pres("z^2");
    CHECK_THROWS_AS(GwaElement::x(p) * GwaElement::x(q), Error);
  }
}
