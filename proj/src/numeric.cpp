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

#include "gwalg/numeric.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

#include "gwalg/errors.hpp"

namespace gwalg {

Real::Real(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_q(const mpq_class& q, long prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from_d(double d, long prec) {
  Real r(prec);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

ComplexBall::ComplexBall(long prec) : re(prec), im(prec), rad(prec) {}

ComplexBall ComplexBall::exact(const mpq_class& q, long prec) {
  ComplexBall b(prec);
  mpfr_set_q(b.re.get(), q.get_mpq_t(), MPFR_RNDN);
  // one ulp of slack for the rounding of q
  mpfr_abs(b.rad.get(), b.re.get(), MPFR_RNDU);
  mpfr_mul_2si(b.rad.get(), b.rad.get(), -prec + 1, MPFR_RNDU);
  return b;
}

namespace {

// |re| + |im| rounded up: a cheap modulus bound.
Real l1_upper(const ComplexBall& a) {
  Real s(a.prec()), t(a.prec());
  mpfr_abs(s.get(), a.re.get(), MPFR_RNDU);
  mpfr_abs(t.get(), a.im.get(), MPFR_RNDU);
  mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDU);
  return s;
}

// Adds |mid| * 2^(shift - prec) to the radius to cover rounding of the midpoint.
void add_rounding(ComplexBall& out, const Real& magnitude, int shift) {
  Real e(out.prec());
  mpfr_mul_2si(e.get(), magnitude.get(), shift - out.prec(), MPFR_RNDU);
  mpfr_add(out.rad.get(), out.rad.get(), e.get(), MPFR_RNDU);
}

}  // namespace

Real ComplexBall::abs_upper() const {
  Real h(prec());
  mpfr_hypot(h.get(), re.get(), im.get(), MPFR_RNDU);
  mpfr_add(h.get(), h.get(), rad.get(), MPFR_RNDU);
  return h;
}

Real ComplexBall::abs_lower() const {
  Real h(prec());
  mpfr_hypot(h.get(), re.get(), im.get(), MPFR_RNDD);
  mpfr_sub(h.get(), h.get(), rad.get(), MPFR_RNDD);
  if (mpfr_sgn(h.get()) < 0) mpfr_set_zero(h.get(), 1);
  return h;
}

bool ComplexBall::contains_zero() const {
  Real h(prec());
  mpfr_hypot(h.get(), re.get(), im.get(), MPFR_RNDD);
  return mpfr_cmp(h.get(), rad.get()) <= 0;
}

std::string ComplexBall::str(int digits) const {
  return "(" + re.str(digits) + " + " + im.str(digits) + "i) +/- " + rad.str(4);
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  long p = std::max(a.prec(), b.prec());
  ComplexBall r(p);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(r.rad.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  add_rounding(r, l1_upper(r), 1);
  return r;
}

ComplexBall ball_neg(const ComplexBall& a) {
  ComplexBall r = a;
  mpfr_neg(r.re.get(), r.re.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return a + ball_neg(b);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  long p = std::max(a.prec(), b.prec());
  ComplexBall r(p);
  Real t1(p), t2(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  Real ma = l1_upper(a), mb = l1_upper(b);
  // |a|rb + |b|ra + ra rb
  Real u(p);
  mpfr_mul(u.get(), ma.get(), b.rad.get(), MPFR_RNDU);
  mpfr_add(r.rad.get(), r.rad.get(), u.get(), MPFR_RNDU);
  mpfr_mul(u.get(), mb.get(), a.rad.get(), MPFR_RNDU);
  mpfr_add(r.rad.get(), r.rad.get(), u.get(), MPFR_RNDU);
  mpfr_mul(u.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  mpfr_add(r.rad.get(), r.rad.get(), u.get(), MPFR_RNDU);
  Real prod(p);
  mpfr_mul(prod.get(), ma.get(), mb.get(), MPFR_RNDU);
  add_rounding(r, prod, 3);
  return r;
}

ComplexBall ball_inv(const ComplexBall& a) {
  long p = a.prec();
  Real m = a.abs_lower();  // lower bound on |a'| for every a' in the disc
  if (mpfr_sgn(m.get()) <= 0) throw Error(ErrorKind::DivisionByZero, "numeric inverse of a disc containing zero");
  Real n2(p);
  mpfr_sqr(n2.get(), a.re.get(), MPFR_RNDN);
  Real t(p);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(n2.get(), n2.get(), t.get(), MPFR_RNDN);
  ComplexBall r(p);
  mpfr_div(r.re.get(), a.re.get(), n2.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), a.im.get(), n2.get(), MPFR_RNDN);
  mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  // |1/a' - 1/a| <= ra / (|a| |a'|) <= ra / m^2
  Real m2(p);
  mpfr_sqr(m2.get(), m.get(), MPFR_RNDD);
  mpfr_div(r.rad.get(), a.rad.get(), m2.get(), MPFR_RNDU);
  add_rounding(r, l1_upper(r), 4);
  return r;
}

ComplexBall ball_div(const ComplexBall& a, const ComplexBall& b) { return a * ball_inv(b); }

void ball_widen(ComplexBall& a, const Real& r) { mpfr_add(a.rad.get(), a.rad.get(), r.get(), MPFR_RNDU); }

long default_precision_bits() {
  const char* env = std::getenv("GWA_PRECISION_BITS");
  if (env != nullptr) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 32 && v <= 1 << 20) return v;
  }
  return 128;
}

}  // namespace gwalg
