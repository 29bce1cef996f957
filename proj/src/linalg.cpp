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

#include "gwalg/linalg.hpp"

namespace gwalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][c].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    Scalar inv = m[row][c].inv();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols) {
  Matrix a = m;
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector v(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a[r][cols];
  return v;
}

}  // namespace gwalg
