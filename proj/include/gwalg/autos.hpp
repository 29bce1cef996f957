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

#ifndef GWALG_AUTOS_HPP
#define GWALG_AUTOS_HPP

#include <array>
#include <string>
#include <vector>

#include "gwalg/gwa.hpp"

namespace gwalg {

struct Generator {
  enum class Kind { Theta, Psi, Phi, Omega };
  Kind kind = Kind::Theta;
  long m = 0;
  Scalar param;  // beta for Theta, lambda for Psi/Phi

  static Generator theta(const Scalar& beta) { return {Kind::Theta, 0, beta}; }
  static Generator psi(long m, const Scalar& lambda) { return {Kind::Psi, m, lambda}; }
  static Generator phi(long m, const Scalar& lambda) { return {Kind::Phi, m, lambda}; }
  static Generator omega() { return {Kind::Omega, 0, Scalar(0)}; }

  /// Grammar text: theta(b), psi(m, l), phi(m, l), omega.
  std::string str() const;
};

/// An endomorphism given by the images of x, y, z, with the word it came from.
class Automorphism {
 public:
  Automorphism(Presentation p, std::vector<Generator> word, GwaElement x, GwaElement y, GwaElement z);

  const Presentation& presentation() const { return p_; }
  const std::vector<Generator>& word() const { return word_; }
  const GwaElement& image_x() const { return x_; }
  const GwaElement& image_y() const { return y_; }
  const GwaElement& image_z() const { return z_; }
  /// Word text joined by " * ", "id" for the empty word.
  std::string str() const;

 private:
  Presentation p_;
  std::vector<Generator> word_;
  GwaElement x_, y_, z_;
};

Automorphism identity(const Presentation& p);
/// Throws ZeroBeta, NotReflective or InvalidArgument (m < 0).
Automorphism make_generator(const Presentation& p, const Generator& g);
Automorphism make_word(const Presentation& p, const std::vector<Generator>& word);
/// Checks yx = a(z), xy = a(z - 1), xz = (z - 1)x, yz = (z + 1)y on the images.
Automorphism from_images(const Presentation& p, const GwaElement& x, const GwaElement& y, const GwaElement& z);
bool preserves_relations(const GwaElement& x, const GwaElement& y, const GwaElement& z);

GwaElement apply(const Automorphism& g, const GwaElement& e);
/// g after h.
Automorphism compose(const Automorphism& g, const Automorphism& h);
/// Inverse built from the word; throws InvalidArgument for image-only maps.
Automorphism invert(const Automorphism& g);
Automorphism power(const Automorphism& g, long k);
bool same_map(const Automorphism& g, const Automorphism& h);
bool is_identity(const Automorphism& g);

bool is_filtered(const Automorphism& g);

/// Leading linear action on (x, y, z): column j is the image of the j-th generator.
std::array<std::array<Scalar, 3>, 3> linear_part(const Automorphism& g);

struct CanonicalForm {
  enum class Kind { Tau, TauOmega, Theta, ThetaOmega, Weyl };
  Kind kind = Kind::Theta;
  int n = 0;
  Scalar lambda, mu, beta;
  /// Weyl data a1, a2, a3, b1, b2, b3 with g(x) = a1 x + a2 y + a3, g(y) = b1 x + b2 y + b3.
  std::array<Scalar, 6> weyl;

  std::string str() const;
};

/// Throws NotFiltered, NonCanonical.
CanonicalForm canonical_form(const Automorphism& g);
/// For n = 2 every valid tau and tau-omega decomposition, tau first; the two families overlap.
std::vector<CanonicalForm> canonical_forms(const Automorphism& g);
/// The map a canonical form describes.
Automorphism reconstruct(const Presentation& p, const CanonicalForm& c);

/// Throws NotFiltered.
MultOrder order(const Automorphism& g);
/// Determinant of the leading linear action; for n = 1 the 2x2 block on (x, y).
Scalar hdet_linear(const Automorphism& g);

struct RelationSample {
  Scalar lambda, mu, beta, gamma;
};
std::vector<RelationSample> default_relation_samples();

struct RelationCheck {
  enum class Status { Pass, Fail, Skipped };
  std::string relation;
  long m = 0;
  std::string params;
  Status status = Status::Pass;
  std::string reason;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  long count(RelationCheck::Status s) const;
};

RelationReport verify_relations(const Presentation& p, const std::vector<RelationSample>& samples,
                                const std::vector<long>& ms = {1, 2});
const char* status_name(RelationCheck::Status s);

struct GroupClass {
  enum class Kind { Cyclic, Dihedral, BinaryDihedral, C2, C4, Infinite };
  Kind kind = Kind::Infinite;
  long order = 0;
  std::string str() const;
};

/// Closure of gens under composition; throws GroupNotClosed past limit elements.
std::vector<Automorphism> group_closure(const std::vector<Automorphism>& gens, std::size_t limit = 4096);
/// Throws DegreeTooSmall (n <= 2), NotFiltered.
GroupClass classify_finite_subgroup(const std::vector<Automorphism>& gens);

}  // namespace gwalg

#endif
