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
#include "gwalg/homdim.hpp"
#include "support.hpp"

using namespace gwalg;
using testing::Z;

namespace {

bool is_multiple_of(const Scalar& d, long step) {
  if (!d.is_rational() || d.is_zero()) return false;
  const mpq_class& q = d.rational();
  if (q.get_den() != 1) return false;
  mpz_class r = q.get_num() % step;
  return r == 0;
}

// Root-list rule: a repeated root gives inf, two roots a nonzero multiple of step apart give 2, else 1.
std::string oracle(const std::vector<Scalar>& roots, long step) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return "inf";
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (is_multiple_of(roots[i] - roots[j], step)) return "2";
  return "1";
}

}  // namespace

TEST_SUITE("homdim") {
  TEST_CASE("the standard five polynomials") {
    std::vector<std::pair<const char*, const char*>> cases = {
        {"z", "1"}, {"z^2", "inf"}, {"z*(z-3)", "2"}, {"z*(z-sqrt(2))", "1"}, {"z*(z-1/2)", "1"}};
    for (const auto& [a, v] : cases) CHECK_MESSAGE(gldim(testing::pres(a)).value_str() == v, a);
  }

  TEST_CASE("evidence is attached") {
    GldimVerdict two = gldim(testing::pres("z*(z-3)"));
    CHECK(two.evidence == GldimVerdict::Evidence::CongruentPair);
    CHECK(std::labs(two.witness_shift) == 3);
    GldimVerdict inf = gldim(testing::pres("z^2*(z-1)"));
    CHECK(inf.evidence == GldimVerdict::Evidence::MultipleRoot);
    CHECK(inf.witness_gcd.monic() == Z());
  }

  TEST_CASE("split polynomials agree with the root-list oracle") {
    std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(-2), Scalar::frac(1, 2), Scalar::frac(5, 2), sqrt(Scalar(2)),
                             sqrt(Scalar(2)) + Scalar(3), zeta(3), Scalar(4)};
    std::mt19937 rng(99);
    for (int k = 0; k < 120; ++k) {
      std::vector<Scalar> roots;
      int n = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int i = 0; i < n; ++i) roots.push_back(pool[rng() % pool.size()]);
      long step = k % 3 == 0 ? 2 : 1;
      CHECK(gldim_of(ZPoly::from_roots(roots), step).value_str() == oracle(roots, step));
    }
  }

  TEST_CASE("fixed-ring rule and the product polynomial agree") {
    for (const Scalar& t : {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), sqrt(Scalar(2)), Scalar(-3), Scalar(0)}) {
      Presentation p = make_presentation(Z() * (Z() - ZPoly(t)));
      for (long ell : {3, 4}) {
        GldimVerdict rule = gldim_fixed(p, ell), direct = gldim_fixed_direct(p, ell);
        CHECK_MESSAGE(rule == direct, t.str(), " l=", ell);
        std::vector<Scalar> roots;
        for (long i = 0; i < ell; ++i) {
          roots.push_back(Scalar(-i));
          roots.push_back(t - Scalar(i));
        }
        CHECK(rule.value_str() == oracle(roots, ell));
      }
    }
  }

  TEST_CASE("fixed-ring hypotheses") {
    CHECK_THROWS_AS(gldim_fixed(testing::pres("z*(z-3)"), 2), Error);
    CHECK_THROWS_AS(gldim_fixed(testing::pres("z^3"), 3), Error);
  }

  TEST_CASE("Calabi-Yau exactly when the global dimension is finite") {
    CHECK(is_calabi_yau(testing::pres("z*(z-3)")));
    CHECK_FALSE(is_calabi_yau(testing::pres("z^2")));
    CHECK(is_calabi_yau_fixed(testing::pres("z*(z-3)"), 3));
    CHECK_FALSE(is_calabi_yau_fixed(testing::pres("z*(z-1)"), 3));
  }
}
