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
#include "gwalg/poly.hpp"
#include "support.hpp"

using namespace gwalg;
using testing::Z;

TEST_SUITE("poly") {
  TEST_CASE("basic arithmetic and evaluation") {
    ZPoly a = Z() * (Z() - ZPoly(3));
    CHECK(a.str() == "z^2 - 3*z");
    CHECK(a.eval(Scalar(3)).is_zero());
    CHECK(a.compose(Z() + ZPoly(1)) == (Z() + ZPoly(1)) * (Z() - ZPoly(2)));
    CHECK(a.derivative() == ZPoly(2) * Z() - ZPoly(3));
    CHECK(sigma_power(a, 1) == a.compose(Z() - ZPoly(1)));
  }

  TEST_CASE("division identity on random pairs") {
    std::mt19937 rng(3);
    for (int k = 0; k < 150; ++k) {
      ZPoly a = testing::random_poly(rng, 5), b = testing::random_poly(rng, 3);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }

  TEST_CASE("gcd divides both and the Bezout identity holds") {
    std::mt19937 rng(4);
    for (int k = 0; k < 80; ++k) {
      ZPoly common = testing::random_poly(rng, 2);
      if (common.is_zero()) continue;
      ZPoly a = common * testing::random_poly(rng, 2), b = common * testing::random_poly(rng, 2);
      if (a.is_zero() || b.is_zero()) continue;
      Xgcd x = xgcd(a, b);
      CHECK(divmod(a, x.g).second.is_zero());
      CHECK(divmod(b, x.g).second.is_zero());
      CHECK(x.s * a + x.t * b == x.g);
      CHECK(divmod(x.g, common.monic()).second.is_zero());
    }
  }

  TEST_CASE("multiple roots") {
    CHECK(has_multiple_root(Z() * Z()));
    CHECK_FALSE(has_multiple_root(Z() * (Z() - ZPoly(1))));
    CHECK(has_multiple_root((Z() - sqrt(Scalar(2))).pow(2) * Z()));
  }

  TEST_CASE("congruent roots against a root-list oracle") {
    // For split polynomials the answer is the least positive difference of two integer-spaced roots.
    struct Case {
      std::vector<Scalar> roots;
      std::optional<long> expect;
    };
    std::vector<Case> cases = {
        {{0, 3}, 3},
        {{0, 1}, 1},
        {{0, sqrt(Scalar(2))}, std::nullopt},
        {{0, Scalar::frac(1, 2)}, std::nullopt},
        {{Scalar::frac(1, 3), Scalar::frac(-5, 3)}, 2},
        {{0, 7, 2}, 2},
        {{sqrt(Scalar(2)), sqrt(Scalar(2)) + Scalar(4)}, 4},
    };
    for (const auto& c : cases) {
      auto got = congruent_roots(ZPoly::from_roots(c.roots));
      REQUIRE(got.has_value() == c.expect.has_value());
      if (got) CHECK(std::labs(*got) == *c.expect);
    }
    CHECK(congruent_roots(ZPoly::from_roots({0, 3}), 3).has_value());
    CHECK_FALSE(congruent_roots(ZPoly::from_roots({0, 2}), 3).has_value());
    CHECK_THROWS_AS(congruent_roots(Z(), 0), Error);
  }
}
