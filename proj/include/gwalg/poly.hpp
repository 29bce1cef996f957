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

#ifndef GWALG_POLY_HPP
#define GWALG_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwalg/scalars.hpp"

namespace gwalg {

/// Dense univariate polynomial over a tower, low degree first.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Scalar> coeffs);
  ZPoly(const Scalar& c);  // NOLINT constant polynomial
  ZPoly(long c) : ZPoly(Scalar(c)) {}  // NOLINT

  static ZPoly var();
  static ZPoly monomial(const Scalar& c, int degree);
  /// Product of (z - r) over the given roots.
  static ZPoly from_roots(const std::vector<Scalar>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int i) const;
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  TowerPtr tower() const { return tower_; }

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b);
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
  ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
  ZPoly& operator-=(const ZPoly& b) { return *this = *this - b; }
  ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }
  ZPoly scaled(const Scalar& s) const;
  ZPoly pow(int e) const;

  ZPoly derivative() const;
  Scalar eval(const Scalar& at) const;
  /// p(q(z)).
  ZPoly compose(const ZPoly& q) const;
  ZPoly monic() const;

  /// Descending-degree text such as "z^2 - 3*z".
  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Scalar> c_;
  TowerPtr tower_ = nullptr;
};

/// "c*mono" with the sign and parentheses the grammar expects.
std::string coefficient_term(const Scalar& c, const std::string& mono);
/// Joins signed terms as "a + b - c".
std::string join_terms(const std::vector<std::string>& terms);

/// p(u z + v).
ZPoly affine_substitute(const ZPoly& p, const Scalar& u, const Scalar& v);
/// p(z - i), the i-th power of the shift z -> z - 1.
ZPoly sigma_power(const ZPoly& p, long i);
/// (sigma^m - 1)^i applied to a.
ZPoly delta_power(const ZPoly& a, long m, long i);

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b);
/// Monic gcd; throws BothZero.
ZPoly gcd(const ZPoly& p, const ZPoly& q);

struct Xgcd {
  ZPoly g, s, t;  // s p + t q = g, g monic
};
Xgcd xgcd(const ZPoly& p, const ZPoly& q);

bool has_multiple_root(const ZPoly& a);
/// Search bound for integer root gaps: ceil(2 * Cauchy bound).
long root_gap_bound(const ZPoly& a);
/// Smallest positive multiple i of step with gcd(a(z), a(z+i)) nonconstant, if any.
std::optional<long> congruent_roots(const ZPoly& a, long step = 1);

}  // namespace gwalg

#endif
