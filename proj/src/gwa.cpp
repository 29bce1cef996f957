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

#include "gwalg/gwa.hpp"

#include <algorithm>
#include <cstdlib>

#include "gwalg/errors.hpp"

namespace gwalg {

GwaPresentation::GwaPresentation(ZPoly a) : a_(std::move(a)) {
  if (a_.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "defining polynomial must have degree >= 1");
  normalized_ = a_.leading().is_one() && a_.coeff(0).is_zero();
  down_.push_back(ZPoly(1));
  up_.push_back(ZPoly(1));
}

const ZPoly& GwaPresentation::down_product(int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(down_.size()) <= k) {
    int i = static_cast<int>(down_.size());
    down_.push_back(down_.back() * sigma_power(a_, i));
  }
  return down_[static_cast<std::size_t>(k)];
}

const ZPoly& GwaPresentation::up_product(int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(up_.size()) <= k) {
    int i = static_cast<int>(up_.size()) - 1;
    up_.push_back(up_.back() * sigma_power(a_, -i));
  }
  return up_[static_cast<std::size_t>(k)];
}

Presentation make_presentation(const ZPoly& a) { return std::make_shared<const GwaPresentation>(a); }

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  if (v == 0) return {};
  if (v > mpz_class("1000000000000"))
    throw Error(ErrorKind::RootNotComputable, "constant term too large for rational root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Scalar> smallest_rational_root(const ZPoly& a) {
  for (const auto& c : a.coeffs())
    if (!c.is_rational()) return std::nullopt;
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : a.coeffs()) {
    mpq_class v = c.rational() * den;
    ints.push_back(v.get_num());
  }
  std::optional<mpq_class> best;
  for (const auto& p : divisors(ints.front())) {
    for (const auto& q : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        mpq_class r(sign * p, q);
        r.canonicalize();
        if (best && r >= *best) continue;
        if (a.eval(Scalar(r)).is_zero()) best = r;
      }
    }
  }
  if (!best) return std::nullopt;
  return Scalar(*best);
}

Scalar find_root(const ZPoly& a) {
  if (a.coeff(0).is_zero()) return Scalar(0);
  if (a.degree() == 1) return -a.coeff(0) / a.coeff(1);
  if (auto r = smallest_rational_root(a)) return *r;
  if (a.degree() == 2) {
    Scalar A = a.coeff(2), B = a.coeff(1), C = a.coeff(0);
    Scalar s = sqrt(B * B - Scalar(4) * A * C);
    return (-B - s) / (Scalar(2) * A);
  }
  throw Error(ErrorKind::RootNotComputable, "no root of " + a.str() + " is computable in the supported towers");
}

}  // namespace

Normalization normalize_presentation(const ZPoly& a) {
  if (a.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "defining polynomial must have degree >= 1");
  Scalar shift = find_root(a);
  Scalar scale = a.leading().inv();
  ZPoly b = affine_substitute(a, Scalar(1), shift).scaled(scale);
  return {make_presentation(b), shift, scale};
}

void check_same(const Presentation& a, const Presentation& b) {
  if (a == b) return;
  if (!a || !b || a->a() != b->a()) throw Error(ErrorKind::PresentationMismatch, "elements belong to different presentations");
}

GwaElement::GwaElement(Presentation p, std::map<int, ZPoly> terms) : p_(std::move(p)) {
  for (auto& [d, q] : terms)
    if (!q.is_zero()) terms_.emplace(d, std::move(q));
}

GwaElement GwaElement::term(const Presentation& p, int degree, const ZPoly& coeff) {
  GwaElement e(p);
  if (!coeff.is_zero()) e.terms_.emplace(degree, coeff);
  return e;
}

ZPoly GwaElement::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? ZPoly() : it->second;
}

GwaElement GwaElement::operator-() const {
  GwaElement r(p_);
  for (const auto& [d, q] : terms_) r.terms_.emplace(d, -q);
  return r;
}

GwaElement operator+(const GwaElement& a, const GwaElement& b) {
  check_same(a.p_, b.p_);
  GwaElement r = a;
  for (const auto& [d, q] : b.terms_) {
    auto it = r.terms_.find(d);
    if (it == r.terms_.end()) {
      r.terms_.emplace(d, q);
    } else {
      it->second += q;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

GwaElement operator-(const GwaElement& a, const GwaElement& b) { return a + (-b); }

GwaElement operator*(const GwaElement& a, const GwaElement& b) { return multiply(a, b); }

bool operator==(const GwaElement& a, const GwaElement& b) { return equals(a, b); }

GwaElement GwaElement::scaled(const Scalar& s) const {
  GwaElement r(p_);
  if (s.is_zero()) return r;
  for (const auto& [d, q] : terms_) r.terms_.emplace(d, q.scaled(s));
  return r;
}

GwaElement GwaElement::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative element power");
  GwaElement r = scalar(p_, Scalar(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

namespace {

std::string monomial_text(int d) {
  if (d == 0) return "";
  std::string v = d > 0 ? "x" : "y";
  int k = std::abs(d);
  return k == 1 ? v : v + "^" + std::to_string(k);
}

std::string term_text(int d, const ZPoly& q) {
  std::string m = monomial_text(d);
  if (m.empty()) return q.str();
  if (q.is_constant()) return coefficient_term(q.coeff(0), m);
  int nonzero = 0;
  for (const auto& c : q.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  if (nonzero == 1) return q.str() + "*" + m;
  return "(" + q.str() + ")*" + m;
}

}  // namespace

std::string GwaElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->first >= 0; ++it) parts.push_back(term_text(it->first, it->second));
  std::vector<std::string> ys;
  for (const auto& [d, q] : terms_)
    if (d < 0) ys.push_back(term_text(d, q));
  std::reverse(ys.begin(), ys.end());  // y, y^2, ...
  parts.insert(parts.end(), ys.begin(), ys.end());
  return join_terms(parts);
}

namespace {

// x^{d1} x^{d2} = P(z) x^{d} with negative powers read as y.
std::pair<ZPoly, int> monomial_product(const GwaPresentation& p, int d1, int d2) {
  if ((d1 >= 0 && d2 >= 0) || (d1 <= 0 && d2 <= 0)) return {ZPoly(1), d1 + d2};
  if (d1 > 0) {
    int j = d1, k = -d2;
    if (j >= k) return {sigma_power(p.down_product(k), j - k), j - k};
    return {p.down_product(j), j - k};
  }
  int k = -d1, j = d2;
  if (k >= j) return {sigma_power(p.up_product(j), -(k - j)), j - k};
  return {p.up_product(k), j - k};
}

}  // namespace

GwaElement multiply(const GwaElement& a, const GwaElement& b) {
  check_same(a.presentation(), b.presentation());
  const GwaPresentation& p = *a.presentation();
  std::map<int, ZPoly> out;
  for (const auto& [d1, p1] : a.terms()) {
    for (const auto& [d2, p2] : b.terms()) {
      auto [mono, d] = monomial_product(p, d1, d2);
      out[d] += p1 * sigma_power(p2, d1) * mono;
    }
  }
  return GwaElement(a.presentation(), std::move(out));
}

bool equals(const GwaElement& a, const GwaElement& b) {
  check_same(a.presentation(), b.presentation());
  if (a.terms().size() != b.terms().size()) return false;
  auto it = b.terms().begin();
  for (const auto& [d, q] : a.terms()) {
    if (it->first != d || it->second != q) return false;
    ++it;
  }
  return true;
}

std::optional<long> filtration_degree(const GwaElement& e) {
  if (e.is_zero()) return std::nullopt;
  long n = e.presentation()->n();
  long best = 0;
  for (const auto& [d, q] : e.terms()) best = std::max(best, n * std::abs(d) + 2L * q.degree());
  return best;
}

std::vector<std::pair<int, ZPoly>> graded_components(const GwaElement& e) {
  return {e.terms().begin(), e.terms().end()};
}

GwaElement eval_at(const ZPoly& q, const GwaElement& e) {
  GwaElement acc(e.presentation());
  const auto& c = q.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * e + GwaElement::scalar(e.presentation(), c[i]);
  return acc;
}

}  // namespace gwalg
