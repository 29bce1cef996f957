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

#include "gwalg/poly.hpp"

#include <algorithm>

#include "gwalg/errors.hpp"

namespace gwalg {

ZPoly::ZPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  tower_ = common_tower(c_);
  for (auto& c : c_) c = map_into(c, tower_);
}

ZPoly::ZPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
  tower_ = c.tower();
}

ZPoly ZPoly::var() { return ZPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

ZPoly ZPoly::monomial(const Scalar& c, int degree) {
  if (c.is_zero()) return ZPoly();
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::from_roots(const std::vector<Scalar>& roots) {
  ZPoly p(1);
  for (const auto& r : roots) p *= ZPoly(std::vector<Scalar>{-r, Scalar(1)});
  return p;
}

Scalar ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[static_cast<std::size_t>(i)];
}

ZPoly ZPoly::operator-() const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] = a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(v));
}

bool operator==(const ZPoly& a, const ZPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

ZPoly ZPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * s);
  return ZPoly(std::move(v));
}

ZPoly ZPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
  ZPoly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

ZPoly ZPoly::derivative() const {
  std::vector<Scalar> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return ZPoly(std::move(v));
}

Scalar ZPoly::eval(const Scalar& at) const {
  Scalar acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

ZPoly ZPoly::compose(const ZPoly& q) const {
  ZPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + ZPoly(c_[i]);
  return acc;
}

ZPoly ZPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inv());
}

std::string ZPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::vector<std::string> terms;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    if (k == 0) {
      terms.push_back(c.str());
      continue;
    }
    terms.push_back(coefficient_term(c, var + (k > 1 ? "^" + std::to_string(k) : "")));
  }
  return join_terms(terms);
}

std::string coefficient_term(const Scalar& c, const std::string& mono) {
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  int nonzero = 0;
  for (const auto& x : c.coords())
    if (!x.is_zero()) ++nonzero;
  if (nonzero > 1) return "(" + c.str() + ")*" + mono;
  return c.str() + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out = terms[i];
    else if (terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out.empty() ? "0" : out;
}

ZPoly affine_substitute(const ZPoly& p, const Scalar& u, const Scalar& v) {
  return p.compose(ZPoly(std::vector<Scalar>{v, u}));
}

ZPoly sigma_power(const ZPoly& p, long i) { return affine_substitute(p, Scalar(1), Scalar(-i)); }

ZPoly delta_power(const ZPoly& a, long m, long i) {
  ZPoly r = a;
  for (long k = 0; k < i; ++k) r = sigma_power(r, m) - r;
  return r;
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const std::vector<Scalar>& d = b.coeffs();
  if (r.size() < d.size()) return {ZPoly(), a};
  Scalar lead_inv = d.back().inv();
  std::vector<Scalar> q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar c = r[k + d.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  r.resize(d.size() - 1);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

Xgcd xgcd(const ZPoly& p, const ZPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  ZPoly r0 = p, r1 = q, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    ZPoly s2 = s0 - quo * s1, t2 = t0 - quo * t1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Scalar li = r0.leading().inv();
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

ZPoly gcd(const ZPoly& p, const ZPoly& q) { return xgcd(p, q).g; }

bool has_multiple_root(const ZPoly& a) {
  if (a.degree() < 1) return false;
  return gcd(a, a.derivative()).degree() >= 1;
}

long root_gap_bound(const ZPoly& a) {
  if (a.degree() < 1) return 0;
  // 1 + max |c_i / c_n| bounds every root modulus
  long prec = default_precision_bits();
  Real lead_low = embed_numeric(a.leading(), prec).abs_lower();
  if (mpfr_sgn(lead_low.get()) <= 0) throw Error(ErrorKind::Internal, "leading coefficient not certified nonzero");
  Real best(lead_low.prec());
  for (int i = 0; i < a.degree(); ++i) {
    Real up = embed_numeric(a.coeff(i), prec).abs_upper();
    Real q(up.prec());
    mpfr_div(q.get(), up.get(), lead_low.get(), MPFR_RNDU);
    if (mpfr_cmp(q.get(), best.get()) > 0) best = q;
  }
  mpfr_add_ui(best.get(), best.get(), 1, MPFR_RNDU);
  mpfr_mul_2ui(best.get(), best.get(), 1, MPFR_RNDU);
  mpfr_ceil(best.get(), best.get());
  return mpfr_get_si(best.get(), MPFR_RNDU);
}

std::optional<long> congruent_roots(const ZPoly& a, long step) {
  if (step < 1) throw Error(ErrorKind::InvalidArgument, "shift step must be positive");
  if (a.degree() < 1) return std::nullopt;
  long bound = root_gap_bound(a);
  for (long i = step; i <= bound; i += step) {
    if (gcd(a, sigma_power(a, -i)).degree() >= 1) return i;
  }
  return std::nullopt;
}

}  // namespace gwalg
