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

#ifndef GWALG_HOMDIM_HPP
#define GWALG_HOMDIM_HPP

#include <string>

#include "gwalg/gwa.hpp"

namespace gwalg {

struct GldimVerdict {
  enum class Value { One, Two, Infinite };
  enum class Evidence { MultipleRoot, CongruentPair, NoObstruction };
  Value value = Value::One;
  Evidence evidence = Evidence::NoObstruction;
  ZPoly witness_gcd;  // MultipleRoot: a nonconstant common factor
  long witness_shift = 0;  // CongruentPair: gcd(a(z), a(z + shift)) is nonconstant

  /// "1", "2" or "inf".
  std::string value_str() const;
  std::string evidence_str() const;
};

bool operator==(const GldimVerdict& a, const GldimVerdict& b);

/// Global dimension of k[z][x, y; sigma^step, a] from the roots of a.
GldimVerdict gldim_of(const ZPoly& a, long step = 1);
GldimVerdict gldim(const Presentation& p);

/// Global dimension of the fixed ring of a = z(z - t) under a cyclic group of
/// order l > 2, by the root-overlap rule; throws HypothesisViolation.
GldimVerdict gldim_fixed(const Presentation& p, long ell);
/// The same number read off prod_{i<l} a(Z + i) with shift step l.
GldimVerdict gldim_fixed_direct(const Presentation& p, long ell);

bool is_calabi_yau(const Presentation& p);
bool is_calabi_yau_fixed(const Presentation& p, long ell);

}  // namespace gwalg

#endif
