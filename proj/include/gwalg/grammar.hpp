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

#ifndef GWALG_GRAMMAR_HPP
#define GWALG_GRAMMAR_HPP

#include <string_view>
#include <vector>

#include "gwalg/autos.hpp"
#include "gwalg/gr.hpp"

namespace gwalg {

// Literal grammar shared by the library and the command line. Expressions use
// + - * / ^ and parentheses; / only divides by scalars and ^ takes an integer.
// All functions throw ParseError with the offending character span.

/// Integers, p/q, sqrt(s), zeta(m), i.
Scalar parse_scalar(std::string_view text);
/// Expressions in one of z, Z or C over the scalar grammar.
ZPoly parse_poly(std::string_view text);
/// Expressions in x, y, z, normalized through multiply.
GwaElement parse_element(const Presentation& p, std::string_view text);
/// Expressions in x, y, z read in gr R.
GrElement parse_gr_element(const GrRing& r, std::string_view text);
/// theta(b), psi(m, l), phi(m, l), omega and id joined by *; g^k repeats a factor.
std::vector<Generator> parse_word(std::string_view text);
Automorphism parse_automorphism(const Presentation& p, std::string_view text);

}  // namespace gwalg

#endif
