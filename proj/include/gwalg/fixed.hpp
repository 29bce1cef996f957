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

#ifndef GWALG_FIXED_HPP
#define GWALG_FIXED_HPP

#include <optional>
#include <string>
#include <vector>

#include "gwalg/autos.hpp"

namespace gwalg {

/// a(rho - z) = (-1)^n a(z).
struct Reflectivity {
  Scalar rho;
  bool n_even = true;
};

std::optional<Reflectivity> reflective(const ZPoly& a);

/// A basis X, Y, Z of R on which g acts diagonally.
struct Diagonalization {
  GwaElement X, Y, Z;
  ZPoly new_a;  // YX = new_a(Z)
  Scalar gamma;  // g(X) = gamma X
  Scalar k_plus, k_minus;  // roots of new_a
  /// The closed-form eigenvalue from the literature formula, when it applies.
  std::optional<Scalar> reference_gamma;
  std::string branch;
};

/// Names of the identities among the seven that fail (empty when all hold).
std::vector<std::string> check_diagonalization(const Automorphism& g, const Diagonalization& d);

/// Throws NotWeyl, NotFiltered, InfiniteOrder.
Diagonalization diagonalize_weyl(const Automorphism& g);
/// "tau", "tau-omega" or "tau-omega special" (lambda mu = 1).
std::string reference_branch(const CanonicalForm& c);
/// Closed-form eigenvalue of a tau or tau-omega form; nullopt when w^2 = 4 beta.
std::optional<Scalar> reference_eigenvalue(const CanonicalForm& c);
/// Throws WrongDegree, NotFiltered, DegenerateSplit.
Diagonalization diagonalize_deg2(const Automorphism& g);

struct NamedIdentity {
  std::string name;
  std::string text;
  bool holds = false;
};

struct OmegaInvariants {
  GwaElement A, B, C;
  Scalar rho, beta;
  bool n_even = true;
  ZPoly f_C, g_C;  // polynomials in C
  std::vector<NamedIdentity> relations;
};

struct FixedRing {
  enum class Kind { ClassicalGwa, GeneratorsRelations };
  Kind kind = Kind::ClassicalGwa;
  long group_order = 0;
  // ClassicalGwa: generators X^l, Y^l, Z of R and YX-polynomial h in Z.
  std::optional<GwaElement> gen_x, gen_y, gen_z;
  ZPoly defining;
  /// Monic renormalization in Z/l.
  ZPoly classical;
  // GeneratorsRelations.
  std::optional<OmegaInvariants> omega;
};

/// prod_{i=0}^{l-1} a(z + i).
ZPoly jordan_wells_product(const ZPoly& a, long ell);
/// Throws BadOrder for l < 2.
FixedRing fixed_ring_diagonal(const Presentation& p, long ell);
/// Fixed ring of <g>; throws NotCyclicCase for non-filtered or infinite-order g.
FixedRing fixed_ring_cyclic(const Automorphism& g);
/// Generators and relations of the fixed ring of the map fixing x + beta y (n even)
/// or x^2 + beta^2 y^2 (n odd); throws NotReflective, DegreeTooSmall.
OmegaInvariants omega_invariants(const Presentation& p, const Scalar& beta);
/// q with q(z(1 + rho - z)) = p; throws NotSymmetric.
ZPoly express_in_C(const ZPoly& p, const Scalar& rho);

}  // namespace gwalg

#endif
