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
#include "gwalg/grammar.hpp"
#include "gwalg/scalars.hpp"
#include "support.hpp"

using namespace gwalg;

TEST_SUITE("scalars") {
  TEST_CASE("rational arithmetic stays canonical") {
    Scalar h = Scalar::frac(2, 4);
    CHECK(h == Scalar::frac(1, 2));
    CHECK(h.str() == "1/2");
    CHECK((h + h).is_one());
    CHECK_THROWS_AS(Scalar(0).inv(), Error);
  }

  TEST_CASE("square roots and roots of unity satisfy their minimal polynomials") {
    Scalar r2 = sqrt(Scalar(2));
    CHECK(r2 * r2 == Scalar(2));
    CHECK_FALSE(r2.is_rational());
    Scalar w = zeta(3);
    CHECK(w.pow(3).is_one());
    CHECK(Scalar(1) + w + w * w == Scalar(0));
    Scalar i = zeta(4);
    CHECK(i * i == Scalar(-1));
    CHECK(sqrt(Scalar(-1)) * sqrt(Scalar(-1)) == Scalar(-1));
    CHECK(zeta(8).pow(2) == zeta(4));
  }

  TEST_CASE("perfect squares stay rational and radicands are reduced") {
    CHECK(sqrt(Scalar(9)) == Scalar(3));
    CHECK(sqrt(Scalar::frac(4, 9)) == Scalar::frac(2, 3));
    CHECK(sqrt(Scalar(8)) == Scalar(2) * sqrt(Scalar(2)));
    CHECK(sqrt(Scalar::frac(73, 49)) == Scalar::frac(1, 7) * sqrt(Scalar(73)));
  }

  TEST_CASE("mixed towers compare and combine") {
    Scalar a = sqrt(Scalar(2)) + zeta(3);
    Scalar b = a - zeta(3);
    CHECK(b == sqrt(Scalar(2)));
    CHECK((a * a.inv()).is_one());
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
      Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("multiplicative order") {
    CHECK(mult_order(zeta(3)) == MultOrder{true, 3});
    CHECK(mult_order(Scalar(-1)) == MultOrder{true, 2});
    CHECK(mult_order(-zeta(3)) == MultOrder{true, 6});
    CHECK(mult_order(zeta(4)) == MultOrder{true, 4});
    CHECK_FALSE(mult_order(Scalar(2)).finite);
    CHECK_FALSE(mult_order(sqrt(Scalar(2))).finite);
    // |(3 + 4i)/5| = 1 but it is not a root of unity.
    CHECK_FALSE(mult_order((Scalar(3) + Scalar(4) * zeta(4)) / Scalar(5)).finite);
  }

  TEST_CASE("numeric embedding encloses the exact value") {
    ComplexBall b = embed_numeric(sqrt(Scalar(2)));
    CHECK(b.re_d() == doctest::Approx(1.41421356237));
    CHECK(b.radius_d() < 1e-20);
    ComplexBall w = embed_numeric(zeta(3));
    CHECK(w.re_d() == doctest::Approx(-0.5));
    CHECK(w.im_d() == doctest::Approx(0.86602540378));
  }

  TEST_CASE("text round-trips through the scalar grammar") {
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
      Scalar a = testing::random_scalar(rng) * testing::random_scalar(rng) + testing::random_scalar(rng);
      CHECK(parse_scalar(a.str()) == a);
    }
  }
}
