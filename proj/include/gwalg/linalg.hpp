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

#ifndef GWALG_LINALG_HPP
#define GWALG_LINALG_HPP

#include <optional>
#include <vector>

#include "gwalg/scalars.hpp"

namespace gwalg {

using Vector = std::vector<Scalar>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

/// Basis of {v : m v = 0}; cols is needed when m has no rows.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);
/// Some v with m v = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols);

}  // namespace gwalg

#endif
