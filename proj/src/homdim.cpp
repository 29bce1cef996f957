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

#include "gwalg/homdim.hpp"

#include "gwalg/errors.hpp"
#include "gwalg/fixed.hpp"

namespace gwalg {

std::string GldimVerdict::value_str() const {
  switch (value) {
    case Value::One: return "1";
    case Value::Two: return "2";
    case Value::Infinite: return "inf";
  }
  return "?";
}

std::string GldimVerdict::evidence_str() const {
  switch (evidence) {
    case Evidence::MultipleRoot: return "multiple root, gcd " + witness_gcd.str();
    case Evidence::CongruentPair: return "congruent roots at shift " + std::to_string(witness_shift);
    case Evidence::NoObstruction: return "no multiple or congruent roots";
  }
  return "?";
}

bool operator==(const GldimVerdict& a, const GldimVerdict& b) {
  return a.value == b.value && a.evidence == b.evidence && a.witness_gcd == b.witness_gcd &&
         a.witness_shift == b.witness_shift;
}

GldimVerdict gldim_of(const ZPoly& a, long step) {
  GldimVerdict v;
  if (a.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "defining polynomial must have degree >= 1");
  ZPoly g = gcd(a, a.derivative());
  if (g.degree() >= 1) {
    v.value = GldimVerdict::Value::Infinite;
    v.evidence = GldimVerdict::Evidence::MultipleRoot;
    v.witness_gcd = g;
    return v;
  }
  if (auto i = congruent_roots(a, step)) {
    v.value = GldimVerdict::Value::Two;
    v.evidence = GldimVerdict::Evidence::CongruentPair;
    v.witness_shift = *i;
  }
  return v;
}

GldimVerdict gldim(const Presentation& p) { return gldim_of(p->a()); }

namespace {

// t with a = z(z - t); throws HypothesisViolation otherwise.
Scalar quadratic_gap(const Presentation& p, long ell) {
  if (ell <= 2) throw Error(ErrorKind::HypothesisViolation, "the group order must exceed 2");
  const ZPoly& a = p->a();
  if (a.degree() != 2 || !a.leading().is_one() || !a.coeff(0).is_zero())
    throw Error(ErrorKind::HypothesisViolation, "needs a = z(z - t)");
  return -a.coeff(1);
}

}  // namespace

GldimVerdict gldim_fixed(const Presentation& p, long ell) {
  Scalar t = quadratic_gap(p, ell);
  GldimVerdict base = gldim(p);
  GldimVerdict v;
  if (base.value == GldimVerdict::Value::One) return v;
  if (base.value == GldimVerdict::Value::Infinite) {
    // t = 0: every root of the product is doubled
    v.value = GldimVerdict::Value::Infinite;
    v.evidence = GldimVerdict::Evidence::MultipleRoot;
    v.witness_gcd = jordan_wells_product(ZPoly::var(), ell);
    return v;
  }
  // t is a nonzero integer; the product has roots -i and t - i for 0 <= i < l
  long tv = t.rational().get_num().get_si();
  long at = tv < 0 ? -tv : tv;
  if (at >= ell) {
    v.value = GldimVerdict::Value::Two;
    v.evidence = GldimVerdict::Evidence::CongruentPair;
    v.witness_shift = ell * ((at - ell + 1 + ell - 1) / ell);
    return v;
  }
  v.value = GldimVerdict::Value::Infinite;
  v.evidence = GldimVerdict::Evidence::MultipleRoot;
  ZPoly g(1);
  for (long i = 0; i < ell; ++i) {
    long r = -i, j = tv - r;  // r = t - j
    if (j >= 0 && j < ell) g *= ZPoly::var() - ZPoly(r);
  }
  v.witness_gcd = g;
  return v;
}

GldimVerdict gldim_fixed_direct(const Presentation& p, long ell) {
  quadratic_gap(p, ell);
  return gldim_of(jordan_wells_product(p->a(), ell), ell);
}

bool is_calabi_yau(const Presentation& p) { return gldim(p).value != GldimVerdict::Value::Infinite; }

bool is_calabi_yau_fixed(const Presentation& p, long ell) {
  return gldim_fixed(p, ell).value != GldimVerdict::Value::Infinite;
}

}  // namespace gwalg
