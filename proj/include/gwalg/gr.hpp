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

#ifndef GWALG_GR_HPP
#define GWALG_GR_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwalg/autos.hpp"

namespace gwalg {

/// gr R = k[x, y, z]/(xy - c z^n) with deg x = deg y = n, deg z = 2.
struct GrRing {
  int n = 1;
  Scalar lead = Scalar(1);  // c, the leading coefficient of a
};
bool operator==(const GrRing& a, const GrRing& b);

/// Exponents (i, j, k) of x^i y^j z^k with i j = 0.
using GrMonomial = std::array<int, 3>;

class GrElement {
 public:
  explicit GrElement(GrRing ring) : ring_(std::move(ring)) {}
  GrElement(GrRing ring, const std::map<GrMonomial, Scalar>& terms);

  static GrElement x(const GrRing& r) { return monomial(r, {1, 0, 0}); }
  static GrElement y(const GrRing& r) { return monomial(r, {0, 1, 0}); }
  static GrElement z(const GrRing& r) { return monomial(r, {0, 0, 1}); }
  static GrElement scalar(const GrRing& r, const Scalar& s);
  /// Reduces x^i y^j to c^m z^{nm} x^{i-m} y^{j-m}.
  static GrElement monomial(const GrRing& r, GrMonomial m, const Scalar& c = Scalar(1));

  const GrRing& ring() const { return ring_; }
  const std::map<GrMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// nullopt unless this is a single monomial with coefficient 1.
  std::optional<GrMonomial> as_monomial() const;
  bool is_homogeneous() const;
  /// Weighted degree n(i + j) + 2k of the top monomial; -1 for zero.
  int degree() const;

  GrElement operator-() const;
  friend GrElement operator+(const GrElement& a, const GrElement& b);
  friend GrElement operator-(const GrElement& a, const GrElement& b);
  friend GrElement operator*(const GrElement& a, const GrElement& b);
  friend bool operator==(const GrElement& a, const GrElement& b);
  friend bool operator!=(const GrElement& a, const GrElement& b) { return !(a == b); }
  GrElement scaled(const Scalar& s) const;
  GrElement pow(int e) const;

  /// Text such as "2*z^2*x - y", re-parseable by parse_gr_element.
  std::string str() const;

 private:
  GrRing ring_;
  std::map<GrMonomial, Scalar> terms_;
};

GrElement gr_multiply(const GrElement& u, const GrElement& v);
int monomial_degree(const GrRing& r, const GrMonomial& m);
/// Normal monomials of weighted degree d.
std::vector<GrMonomial> monomials_of_degree(const GrRing& r, int d);

/// A graded automorphism of gr R given by the images of x, y, z.
struct GradedAction {
  std::array<GrElement, 3> images;
};
bool operator==(const GradedAction& a, const GradedAction& b);

GrRing gr_ring(const Presentation& p);
/// The induced action of a filtered map on gr R (its leading linear part).
GradedAction graded_action(const Automorphism& g);
GradedAction graded_identity(const GrRing& r);
GrElement apply_graded(const GradedAction& g, const GrElement& e);
/// g after h.
GradedAction compose_graded(const GradedAction& g, const GradedAction& h);
/// Throws InvalidArgument when the images do not preserve xy = c z^n.
void check_graded_action(const GradedAction& g);

}  // namespace gwalg

#endif
