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

#include "gwalg/gr.hpp"

#include <algorithm>
#include <cstdlib>

#include "gwalg/errors.hpp"

namespace gwalg {

bool operator==(const GrRing& a, const GrRing& b) { return a.n == b.n && a.lead == b.lead; }

namespace {

void check_ring(const GrRing& a, const GrRing& b) {
  if (!(a == b)) throw Error(ErrorKind::PresentationMismatch, "graded elements belong to different rings");
}

void add_term(std::map<GrMonomial, Scalar>& t, const GrMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

}  // namespace

GrElement::GrElement(GrRing ring, const std::map<GrMonomial, Scalar>& terms) : ring_(std::move(ring)) {
  for (const auto& [m, c] : terms) {
    GrElement t = monomial(ring_, m, c);
    for (const auto& [m2, c2] : t.terms_) add_term(terms_, m2, c2);
  }
}

GrElement GrElement::scalar(const GrRing& r, const Scalar& s) { return monomial(r, {0, 0, 0}, s); }

GrElement GrElement::monomial(const GrRing& r, GrMonomial m, const Scalar& c) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  GrElement e(r);
  if (c.is_zero()) return e;
  int common = std::min(m[0], m[1]);
  Scalar coeff = c * r.lead.pow(common);
  e.terms_.emplace(GrMonomial{m[0] - common, m[1] - common, m[2] + r.n * common}, coeff);
  return e;
}

std::optional<GrMonomial> GrElement::as_monomial() const {
  if (terms_.size() != 1 || !terms_.begin()->second.is_one()) return std::nullopt;
  return terms_.begin()->first;
}

int monomial_degree(const GrRing& r, const GrMonomial& m) { return r.n * (m[0] + m[1]) + 2 * m[2]; }

int GrElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(ring_, m));
  return d;
}

bool GrElement::is_homogeneous() const {
  for (const auto& [m, c] : terms_)
    if (monomial_degree(ring_, m) != degree()) return false;
  return true;
}

GrElement GrElement::operator-() const { return scaled(Scalar(-1)); }

GrElement operator+(const GrElement& a, const GrElement& b) {
  check_ring(a.ring_, b.ring_);
  GrElement r = a;
  for (const auto& [m, c] : b.terms_) add_term(r.terms_, m, c);
  return r;
}

GrElement operator-(const GrElement& a, const GrElement& b) { return a + (-b); }

GrElement operator*(const GrElement& a, const GrElement& b) { return gr_multiply(a, b); }

bool operator==(const GrElement& a, const GrElement& b) {
  check_ring(a.ring_, b.ring_);
  return a.terms_ == b.terms_;
}

GrElement GrElement::scaled(const Scalar& s) const {
  GrElement r(ring_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

GrElement GrElement::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  GrElement r = scalar(ring_, Scalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

GrElement gr_multiply(const GrElement& u, const GrElement& v) {
  check_ring(u.ring(), v.ring());
  std::map<GrMonomial, Scalar> out;
  for (const auto& [m1, c1] : u.terms()) {
    for (const auto& [m2, c2] : v.terms()) {
      GrElement t = GrElement::monomial(u.ring(), {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
      for (const auto& [m, c] : t.terms()) add_term(out, m, c);
    }
  }
  return GrElement(u.ring(), out);
}

namespace {

std::string power_text(const char* v, int e) {
  if (e == 0) return "";
  return e == 1 ? v : std::string(v) + "^" + std::to_string(e);
}

std::string monomial_text(const GrMonomial& m) {
  std::vector<std::string> parts;
  for (auto [v, e] : {std::pair{"z", m[2]}, std::pair{"x", m[0]}, std::pair{"y", m[1]}})
    if (e > 0) parts.push_back(power_text(v, e));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

}  // namespace

std::string GrElement::str() const {
  // higher degree first, then x powers before y powers
  std::vector<std::pair<GrMonomial, Scalar>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    int da = monomial_degree(ring_, a.first), db = monomial_degree(ring_, b.first);
    if (da != db) return da > db;
    return a.first[0] - a.first[1] > b.first[0] - b.first[1];
  });
  std::vector<std::string> parts;
  for (const auto& [m, c] : ts) {
    std::string mono = monomial_text(m);
    parts.push_back(mono.empty() ? c.str() : coefficient_term(c, mono));
  }
  return join_terms(parts);
}

std::vector<GrMonomial> monomials_of_degree(const GrRing& r, int d) {
  std::vector<GrMonomial> out;
  if (d < 0) return out;
  for (int i = 0; r.n * i <= d; ++i) {
    int rest = d - r.n * i;
    if (rest % 2 != 0) continue;
    out.push_back({i, 0, rest / 2});
    if (i > 0) out.push_back({0, i, rest / 2});
  }
  return out;
}

bool operator==(const GradedAction& a, const GradedAction& b) { return a.images == b.images; }

GrRing gr_ring(const Presentation& p) { return {p->n(), p->a().leading()}; }

namespace {

// Weighted-degree-d part of a GWA element read in gr R.
GrElement leading_form(const GrRing& r, const GwaElement& e, int d) {
  std::map<GrMonomial, Scalar> t;
  for (const auto& [deg, q] : e.terms()) {
    const auto& cs = q.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].is_zero()) continue;
      GrMonomial m{deg > 0 ? deg : 0, deg < 0 ? -deg : 0, static_cast<int>(k)};
      int md = monomial_degree(r, m);
      if (md > d) throw Error(ErrorKind::NotFiltered, "image exceeds the filtration degree");
      if (md == d) t[m] += cs[k];
    }
  }
  return GrElement(r, t);
}

}  // namespace

GradedAction graded_action(const Automorphism& g) {
  GrRing r = gr_ring(g.presentation());
  GradedAction act{{leading_form(r, g.image_x(), r.n), leading_form(r, g.image_y(), r.n), leading_form(r, g.image_z(), 2)}};
  check_graded_action(act);
  return act;
}

GradedAction graded_identity(const GrRing& r) { return {{GrElement::x(r), GrElement::y(r), GrElement::z(r)}}; }

GrElement apply_graded(const GradedAction& g, const GrElement& e) {
  GrElement out(e.ring());
  for (const auto& [m, c] : e.terms())
    out = out + (g.images[0].pow(m[0]) * g.images[1].pow(m[1]) * g.images[2].pow(m[2])).scaled(c);
  return out;
}

GradedAction compose_graded(const GradedAction& g, const GradedAction& h) {
  return {{apply_graded(g, h.images[0]), apply_graded(g, h.images[1]), apply_graded(g, h.images[2])}};
}

void check_graded_action(const GradedAction& g) {
  const GrRing& r = g.images[0].ring();
  GrElement lhs = g.images[0] * g.images[1];
  GrElement rhs = g.images[2].pow(r.n).scaled(r.lead);
  if (lhs != rhs) throw Error(ErrorKind::InvalidArgument, "images do not preserve xy = c z^n");
  for (int i = 0; i < 3; ++i)
    if (g.images[static_cast<std::size_t>(i)].is_zero())
      throw Error(ErrorKind::InvalidArgument, "graded action is not injective");
}

}  // namespace gwalg
