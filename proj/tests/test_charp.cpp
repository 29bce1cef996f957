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
#include "gwalg/skew.hpp"
#include "support.hpp"

using namespace gwalg;
using testing::Z;

namespace {

// Computes over the rationals and reduces: every coefficient must be an integer divisible by p.
bool vanishes_mod(const GwaElement& e, long p) {
  for (const auto& [k, q] : e.terms())
    for (const auto& c : q.coeffs()) {
      const mpq_class& r = c.rational();
      if (r.get_den() != 1 || r.get_num() % p != 0) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("charp") {
  TEST_CASE("x^p and y^p are central for the listed pairs") {
    for (auto [a, p] : {std::pair{"z^2", 3L}, std::pair{"z*(z-1)", 2L}, std::pair{"z^3", 5L}, std::pair{"z^2 + 1", 7L}}) {
      CharpReport rep = charp_report(parse_poly(a), p);
      CHECK_MESSAGE(rep.central, a, " p=", p);
      CHECK(charp_center_check(parse_poly(a), p));
      CHECK(rep.commutators.size() == 4);
      REQUIRE(rep.induction.size() == static_cast<std::size_t>(p - 1));
      for (const auto& [k, ok] : rep.induction) CHECK(ok);
    }
  }

  TEST_CASE("agrees with rational arithmetic reduced mod p") {
    for (auto [a, p] : {std::pair{"z^2", 3L}, std::pair{"z*(z-1)", 2L}, std::pair{"z^3", 5L}, std::pair{"z^2 + 1", 7L}}) {
      Presentation pr = testing::pres(a);
      GwaElement x = GwaElement::x(pr), y = GwaElement::y(pr), z = GwaElement::z(pr);
      GwaElement xp = x.pow(static_cast<int>(p)), yp = y.pow(static_cast<int>(p));
      CHECK(vanishes_mod(xp * y - y * xp, p));
      CHECK(vanishes_mod(x * yp - yp * x, p));
      CHECK(vanishes_mod(xp * z - z * xp, p));
    }
  }

  TEST_CASE("the induction identity holds over the rationals") {
    for (const char* a : {"z^2", "z*(z-1)", "z^3 - 2*z + 5"}) {
      Presentation pr = testing::pres(a);
      ZPoly b = sigma_power(pr->a(), 1);
      GwaElement x = GwaElement::x(pr), y = GwaElement::y(pr);
      for (int k = 1; k <= 6; ++k) {
        ZPoly coeff = b.compose(Z() - ZPoly(k - 1)) - b.compose(Z() + ZPoly(1));
        CHECK(x.pow(k) * y - y * x.pow(k) == GwaElement::term(pr, k - 1, coeff));
      }
    }
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(charp_report(parse_poly("z"), 4), Error);
    CHECK_THROWS_AS(charp_report(parse_poly("z - 1/3"), 3), Error);
    CHECK_THROWS_AS(charp_report(parse_poly("z - sqrt(2)"), 3), Error);
  }
}
