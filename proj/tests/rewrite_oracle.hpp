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

#ifndef GWALG_TESTS_REWRITE_ORACLE_HPP
#define GWALG_TESTS_REWRITE_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "gwalg/gwa.hpp"

namespace gwalg::testing {

// Words over {x, y, z} with integer coefficients, reduced one rule at a time.
// Rules for a = z(z - 3): xz -> zx - x, yz -> zy + y, yx -> zz - 3z, xy -> zz - 5z + 4.
using Combo = std::map<std::string, long long>;

inline bool rewrite_once(Combo& c) {
  for (auto it = c.begin(); it != c.end(); ++it) {
    const std::string& w = it->first;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::string pair = w.substr(i, 2);
      std::vector<std::pair<std::string, long long>> rhs;
      if (pair == "xz") rhs = {{"zx", 1}, {"x", -1}};
      else if (pair == "yz") rhs = {{"zy", 1}, {"y", 1}};
      else if (pair == "yx") rhs = {{"zz", 1}, {"z", -3}};
      else if (pair == "xy") rhs = {{"zz", 1}, {"z", -5}, {"", 4}};
      else continue;
      std::string pre = w.substr(0, i), post = w.substr(i + 2);
      long long coef = it->second;
      c.erase(it);
      for (const auto& [mid, k] : rhs) {
        long long& slot = c[pre + mid + post];
        slot += coef * k;
        if (slot == 0) c.erase(pre + mid + post);
      }
      return true;
    }
  }
  return false;
}

inline GwaElement rewrite_normal_form(const Presentation& p, const std::string& word) {
  Combo c{{word, 1}};
  while (rewrite_once(c)) {
  }
  GwaElement out(p);
  for (const auto& [w, k] : c) {
    std::size_t zs = w.find_first_not_of('z');
    if (zs == std::string::npos) zs = w.size();
    int deg = static_cast<int>(w.size() - zs);
    if (deg > 0 && w[zs] == 'y') deg = -deg;
    out += GwaElement::term(p, deg, ZPoly::monomial(Scalar(static_cast<long>(k)), static_cast<int>(zs)));
  }
  return out;
}

inline GwaElement letter(const Presentation& p, char c) {
  if (c == 'x') return GwaElement::x(p);
  if (c == 'y') return GwaElement::y(p);
  return GwaElement::z(p);
}


/// All words over x, y, z of length 1..max_len.
inline std::vector<std::string> all_words(int max_len) {
  std::vector<std::string> out, layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : std::string("xyz")) next.push_back(w + c);
    layer = next;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gwalg::testing

#endif
