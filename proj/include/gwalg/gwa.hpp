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

#ifndef GWALG_GWA_HPP
#define GWALG_GWA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwalg/poly.hpp"

namespace gwalg {

/// k[z][x, y; sigma, a] with sigma(z) = z - 1, yx = a, xy = a(z - 1).
class GwaPresentation {
 public:
  explicit GwaPresentation(ZPoly a);

  const ZPoly& a() const { return a_; }
  int n() const { return a_.degree(); }
  bool normalized() const { return normalized_; }
  TowerPtr tower() const { return a_.tower(); }

  /// prod_{i=1..k} a(z - i), so that x^k y^k = this.
  const ZPoly& down_product(int k) const;
  /// prod_{i=0..k-1} a(z + i), so that y^k x^k = this.
  const ZPoly& up_product(int k) const;

 private:
  ZPoly a_;
  bool normalized_;
  mutable std::mutex mu_;
  mutable std::vector<ZPoly> down_, up_;
};

using Presentation = std::shared_ptr<const GwaPresentation>;

/// Throws DegreeTooSmall for constant a.
Presentation make_presentation(const ZPoly& a);

struct Normalization {
  Presentation presentation;
  Scalar shift;  // normalized a(z) = scale * a(z + shift)
  Scalar scale;
};
Normalization normalize_presentation(const ZPoly& a);

/// Normal form sum_d p_d(z) x^d, with x^{-k} read as y^k.
class GwaElement {
 public:
  explicit GwaElement(Presentation p) : p_(std::move(p)) {}
  GwaElement(Presentation p, std::map<int, ZPoly> terms);

  static GwaElement x(const Presentation& p) { return term(p, 1, ZPoly(1)); }
  static GwaElement y(const Presentation& p) { return term(p, -1, ZPoly(1)); }
  static GwaElement z(const Presentation& p) { return term(p, 0, ZPoly::var()); }
  static GwaElement scalar(const Presentation& p, const Scalar& s) { return term(p, 0, ZPoly(s)); }
  static GwaElement poly(const Presentation& p, const ZPoly& q) { return term(p, 0, q); }
  static GwaElement term(const Presentation& p, int degree, const ZPoly& coeff);

  const Presentation& presentation() const { return p_; }
  const std::map<int, ZPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ZPoly coeff(int degree) const;

  GwaElement operator-() const;
  friend GwaElement operator+(const GwaElement& a, const GwaElement& b);
  friend GwaElement operator-(const GwaElement& a, const GwaElement& b);
  friend GwaElement operator*(const GwaElement& a, const GwaElement& b);
  friend bool operator==(const GwaElement& a, const GwaElement& b);
  friend bool operator!=(const GwaElement& a, const GwaElement& b) { return !(a == b); }
  GwaElement& operator+=(const GwaElement& b) { return *this = *this + b; }
  GwaElement& operator-=(const GwaElement& b) { return *this = *this - b; }
  GwaElement scaled(const Scalar& s) const;
  GwaElement pow(int e) const;

  /// Text such as "(z - 1)*x^2 + z + 3*y".
  std::string str() const;

 private:
  Presentation p_;
  std::map<int, ZPoly> terms_;
};

GwaElement multiply(const GwaElement& a, const GwaElement& b);
bool equals(const GwaElement& a, const GwaElement& b);
/// nullopt for the zero element.
std::optional<long> filtration_degree(const GwaElement& e);
std::vector<std::pair<int, ZPoly>> graded_components(const GwaElement& e);
/// Evaluates q at an element: sum c_i e^i.
GwaElement eval_at(const ZPoly& q, const GwaElement& e);
/// Throws PresentationMismatch unless a and b share a defining polynomial.
void check_same(const Presentation& a, const Presentation& b);

}  // namespace gwalg

#endif
