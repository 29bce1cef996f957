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

#ifndef GWALG_TESTS_SUPPORT_HPP
#define GWALG_TESTS_SUPPORT_HPP

#include <random>

#include "gwalg/autos.hpp"
#include "gwalg/grammar.hpp"
#include "gwalg/gwa.hpp"

namespace gwalg::testing {

inline ZPoly Z() { return ZPoly::var(); }

inline Presentation pres(const std::string& a) { return make_presentation(parse_poly(a)); }

/// Small random scalar from a fixed menu that touches rationals and two towers.
inline Scalar random_scalar(std::mt19937& rng, bool irrational = true) {
  std::uniform_int_distribution<int> pick(0, irrational ? 7 : 4);
  switch (pick(rng)) {
    case 0: return Scalar(0);
    case 1: return Scalar(std::uniform_int_distribution<int>(-3, 3)(rng));
    case 2: return Scalar::frac(std::uniform_int_distribution<int>(-5, 5)(rng), 2);
    case 3: return Scalar(1);
    case 4: return Scalar::frac(1, 3);
    case 5: return sqrt(Scalar(2));
    case 6: return Scalar(1) - sqrt(Scalar(2));
    default: return zeta(3);
  }
}

inline ZPoly random_poly(std::mt19937& rng, int max_deg, bool irrational = true) {
  int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
  std::vector<Scalar> c;
  for (int i = 0; i <= d; ++i) c.push_back(random_scalar(rng, irrational));
  return ZPoly(c);
}

/// Random element with x-degrees in [-max_k, max_k].
inline GwaElement random_element(const Presentation& p, std::mt19937& rng, int max_k = 2, int max_deg = 2, bool irrational = true) {
  GwaElement e(p);
  int terms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < terms; ++t) {
    int k = std::uniform_int_distribution<int>(-max_k, max_k)(rng);
    e += GwaElement::term(p, k, random_poly(rng, max_deg, irrational));
  }
  return e;
}

}  // namespace gwalg::testing

#endif
