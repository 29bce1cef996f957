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

#ifndef GWALG_NUMERIC_HPP
#define GWALG_NUMERIC_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace gwalg {

/// Owning wrapper around an mpfr_t.
class Real {
 public:
  explicit Real(long prec = 128);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_q(const mpq_class& q, long prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_d(double d, long prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

/// Complex disc: midpoint plus an upper bound on the radius.
struct ComplexBall {
  Real re, im, rad;

  explicit ComplexBall(long prec = 128);
  static ComplexBall exact(const mpq_class& q, long prec);

  long prec() const { return re.prec(); }
  /// Upper bound on the modulus of every point in the disc.
  Real abs_upper() const;
  /// Lower bound on the modulus (may be zero).
  Real abs_lower() const;
  bool contains_zero() const;
  double radius_d() const { return rad.to_double(); }
  double re_d() const { return re.to_double(); }
  double im_d() const { return im.to_double(); }
  std::string str(int digits = 20) const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_neg(const ComplexBall& a);
/// Throws when the disc contains zero.
ComplexBall ball_inv(const ComplexBall& a);
ComplexBall ball_div(const ComplexBall& a, const ComplexBall& b);
/// Widens the radius by r (rounded up).
void ball_widen(ComplexBall& a, const Real& r);

/// Working precision for numeric embeddings: GWA_PRECISION_BITS or 128.
long default_precision_bits();

}  // namespace gwalg

#endif
