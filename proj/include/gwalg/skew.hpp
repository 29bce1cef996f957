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

#ifndef GWALG_SKEW_HPP
#define GWALG_SKEW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwalg/gr.hpp"

namespace gwalg {

/// A finite group listed by its elements, element 0 the identity.
/// table[i][j] is the index of elements[i] after elements[j].
template <class Action>
struct FiniteGroup {
  std::vector<Action> elements;
  std::vector<std::vector<int>> table;
  std::size_t size() const { return elements.size(); }
};

using GradedGroup = FiniteGroup<GradedAction>;
using AutGroup = FiniteGroup<Automorphism>;

/// Closure of the generators; cyclic groups list g^0, g^1, ... in order.
/// Throws GroupNotClosed past limit elements.
GradedGroup graded_group(const std::vector<GradedAction>& gens, std::size_t limit = 4096);
AutGroup aut_group(const std::vector<Automorphism>& gens, std::size_t limit = 4096);
/// Rebuilds the table of a listed group; throws GroupNotClosed if a product is missing.
void fill_table(GradedGroup& g);

/// sum_g c_g # g with coefficients in gr R or in R.
template <class C>
struct SkewElement {
  std::map<int, C> comps;
};
using GrSkew = SkewElement<GrElement>;
using RSkew = SkewElement<GwaElement>;

GrSkew skew_term(const GrElement& c, int g);
RSkew skew_term(const GwaElement& c, int g);
GrSkew operator+(const GrSkew& a, const GrSkew& b);
GrSkew scaled(const GrSkew& a, const Scalar& s);
bool operator==(const GrSkew& a, const GrSkew& b);
RSkew operator+(const RSkew& a, const RSkew& b);
bool operator==(const RSkew& a, const RSkew& b);

/// (a # g)(b # h) = a g(b) # gh, extended bilinearly.
GrSkew skew_multiply(const GrSkew& u, const GrSkew& v, const GradedGroup& G);
RSkew skew_multiply(const RSkew& u, const RSkew& v, const AutGroup& G);
/// sum_g 1 # g.
GrSkew group_sum(const GrRing& r, const GradedGroup& G);
/// Text "c0 # g0 + c1 # g1", g0 the identity.
std::string skew_str(const GrSkew& u);

/// One summand coeff * left * source * right; source -1 is f, otherwise an earlier step.
struct DerivationTerm {
  Scalar coeff;
  GrSkew left;
  int source = -1;
  GrSkew right;
};

struct CertificateStep {
  GrSkew element;
  std::vector<DerivationTerm> derivation;
  std::string note;
};

/// Membership proofs in the two-sided ideal (f) of gr R # G.
struct Certificate {
  std::string kind;
  GrRing ring;
  GradedGroup group;
  GrSkew f;
  bool f_is_group_sum = true;
  std::vector<CertificateStep> steps;
  /// Monomials m with m # e among the steps.
  std::vector<GrMonomial> conclusion;
  /// Monomial basis of gr R modulo the conclusion ideal, when finite.
  std::vector<GrMonomial> findim_basis;
  bool finite = false;
  std::vector<std::string> notes;
};

struct ReplayResult {
  bool ok = false;
  std::string reason;
};

/// Re-evaluates every step with skew_multiply and recomputes the basis.
ReplayResult replay(const Certificate& c);

/// Basis of gr R / (monomials); nullopt when infinite-dimensional.
std::optional<std::vector<GrMonomial>> quotient_basis(const GrRing& r, const std::vector<GrMonomial>& gens);

struct WitnessOptions {
  /// For n odd theta-omega maps, use 1 # e + 1 # g instead of the group sum.
  bool two_term_element = false;
  /// Degree limit of the linear-algebra search.
  int max_degree = 40;
};

/// Throws NotEligible (identity, infinite order), NotFiltered.
Certificate auslander_witness(const Automorphism& g, const WitnessOptions& opt = {});

/// Sorted-key JSON text and its inverse; parsing throws ParseError.
std::string certificate_json(const Certificate& c);
Certificate parse_certificate(const std::string& text);

struct CharpReport {
  long p = 0;
  /// [x^p, z], [y^p, z], [x^p, y], [x, y^p] in that order.
  std::vector<std::pair<std::string, bool>> commutators;
  /// x^k y - y x^k = (b(z - k + 1) - b(z + 1)) x^{k-1} with b = a(z - 1), k = 1..p-1.
  std::vector<std::pair<long, bool>> induction;
  bool central = false;
};

/// Throws NotPrime, InvalidArgument (coefficients not reducible mod p).
CharpReport charp_report(const ZPoly& a, long p);
bool charp_center_check(const ZPoly& a, long p);

}  // namespace gwalg

#endif
