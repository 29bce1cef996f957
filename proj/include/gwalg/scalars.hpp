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

#ifndef GWALG_SCALARS_HPP
#define GWALG_SCALARS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gwalg/numeric.hpp"

namespace gwalg {

class Tower;
/// Towers are interned and never freed; nullptr is the rationals.
using TowerPtr = const Tower*;

/// Exact element of a number-field tower.
///
/// Values are kept in the smallest tower of their chain that contains them,
/// so structurally equal scalars in one chain are equal values.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long v) : q_(v) {}  // NOLINT implicit on purpose
  Scalar(int v) : q_(v) {}   // NOLINT
  Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }  // NOLINT
  static Scalar frac(long num, long den);

  TowerPtr tower() const { return tower_; }
  bool is_zero() const { return tower_ == nullptr && q_ == 0; }
  bool is_one() const { return tower_ == nullptr && q_ == 1; }
  bool is_rational() const { return tower_ == nullptr; }
  /// Throws InvalidArgument when the value is irrational.
  const mpq_class& rational() const;
  /// Coordinates over the parent tower (empty for rationals).
  const std::vector<Scalar>& coords() const { return c_; }

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Canonical re-parseable text, e.g. "-1/2 + 3*sqrt(5)".
  std::string str() const;
  /// True when str() needs parentheses as a factor.
  bool is_compound() const;

  /// Builds sum c_i g^i in tower t from coordinates over t's parent.
  static Scalar from_coords(TowerPtr t, std::vector<Scalar> coords);

 private:
  TowerPtr tower_ = nullptr;
  mpq_class q_;
  std::vector<Scalar> c_;
};

/// One step of a tower: a square root or a root of unity over the parent.
class Tower {
 public:
  enum class Kind { Sqrt, Cyclotomic };

  TowerPtr parent() const { return parent_; }
  Kind kind() const { return kind_; }
  int step_degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  long degree() const { return degree_; }
  int depth() const { return depth_; }
  /// For Sqrt steps: the generator squares to this.
  const Scalar& radicand() const { return radicand_; }
  /// For Cyclotomic steps: the generator is exp(2 pi i / m) in the embedding.
  int cyclotomic_order() const { return order_; }
  /// Monic minimal polynomial over the parent, low degree first.
  const std::vector<Scalar>& minpoly() const { return minpoly_; }
  Scalar generator() const;
  const std::string& key() const { return key_; }
  std::string generator_str() const;

  /// Creates or returns the interned step.
  static TowerPtr make_sqrt(TowerPtr parent, const Scalar& radicand);
  static TowerPtr make_cyclotomic(int m);

 private:
  friend struct TowerRegistry;
  Tower() = default;
  TowerPtr parent_ = nullptr;
  Kind kind_ = Kind::Sqrt;
  Scalar radicand_;
  int order_ = 0;
  std::vector<Scalar> minpoly_;
  long degree_ = 1;
  int depth_ = 0;
  std::string key_;
};

long tower_degree(TowerPtr t);
std::string tower_key(TowerPtr t);
/// True when a is b or an ancestor of b.
bool is_ancestor(TowerPtr a, TowerPtr b);
/// Smallest registered tower containing both (unifying if needed).
TowerPtr common_tower(TowerPtr a, TowerPtr b);
TowerPtr common_tower(const std::vector<Scalar>& xs);
/// Image of s in t; throws TowerMismatch if t does not contain it.
Scalar map_into(const Scalar& s, TowerPtr t);

struct Extension {
  TowerPtr tower;
  Scalar value;
};

/// A square root of s already in s's tower chain, the principal one
/// (largest real part, then largest imaginary part in the embedding).
std::optional<Scalar> exact_sqrt(const Scalar& s);
/// Tower containing a square root of s, and that principal root.
Extension adjoin_sqrt(TowerPtr t, const Scalar& s);
/// Convenience: principal square root, adjoining when needed.
Scalar sqrt(const Scalar& s);

/// Tower containing exp(2 pi i / m) and that root.
Extension adjoin_root_of_unity(TowerPtr t, int m);
Scalar zeta(int m);

struct MultOrder {
  bool finite = false;
  long order = 0;
  bool operator==(const MultOrder& o) const { return finite == o.finite && order == o.order; }
};
MultOrder mult_order(const Scalar& s);

/// Certified disc containing the image of s under the fixed embedding.
ComplexBall embed_numeric(const Scalar& s, long prec_bits);
ComplexBall embed_numeric(const Scalar& s);

long euler_phi(long m);

}  // namespace gwalg

#endif
