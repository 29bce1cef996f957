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

#include "gwalg/scalars.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "gwalg/errors.hpp"

namespace gwalg {

namespace {

using Vec = std::vector<Scalar>;

// Global lock for every interned or cached tower datum. Recursive because
// unification re-enters adjunction.
std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex m;
  return m;
}

void trim(Vec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = a[i] + b[i];
    else if (i < a.size())
      r[i] = a[i];
    else
      r[i] = b[i];
  }
  trim(r);
  return r;
}

Vec vneg(const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

Vec vmul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Vec vscale(const Vec& a, const Scalar& s) {
  Vec r;
  if (s.is_zero()) return r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * s);
  trim(r);
  return r;
}

// Division with remainder; b must be nonzero.
std::pair<Vec, Vec> vdivmod(Vec a, const Vec& b) {
  trim(a);
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Scalar lead_inv = b.back().inv();
  if (a.size() < b.size()) return {Vec{}, a};
  Vec q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Scalar c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Returns (g, s) with s*a = g modulo b, g the last nonzero remainder.
std::pair<Vec, Vec> vxgcd(const Vec& a, const Vec& b) {
  Vec r0 = a, r1 = b, s0{Scalar(1)}, s1{};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = vdivmod(r0, r1);
    Vec s2 = vadd(s0, vneg(vmul(q, s1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {r0, s0};
}

// Coordinates of s as an element of t (s must lie in t's chain).
Vec coords_in(const Scalar& s, TowerPtr t) {
  if (s.tower() == t) return s.coords();
  if (s.is_zero()) return {};
  return Vec{s};
}

long lcml(long a, long b) { return a / std::gcd(a, b) * b; }

// Integer cyclotomic polynomial, low degree first.
std::vector<mpz_class> cyclotomic_poly(long m) {
  // u^m - 1 divided by all Phi_d for proper divisors d
  std::vector<mpz_class> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    std::vector<mpz_class> den = cyclotomic_poly(d);
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    std::vector<mpz_class> r = num;
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
      mpz_class c = r[static_cast<std::size_t>(i) + den.size() - 1];
      q[static_cast<std::size_t>(i)] = c;
      for (std::size_t j = 0; j < den.size(); ++j) r[static_cast<std::size_t>(i) + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

struct UnifyKey {
  TowerPtr a, b;
  bool operator<(const UnifyKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

std::map<UnifyKey, TowerPtr>& unify_cache() {
  static std::map<UnifyKey, TowerPtr> c;
  return c;
}

std::map<UnifyKey, Scalar>& gen_image_cache() {
  static std::map<UnifyKey, Scalar> c;
  return c;
}

std::map<std::pair<TowerPtr, long>, ComplexBall>& ball_cache() {
  static std::map<std::pair<TowerPtr, long>, ComplexBall> c;
  return c;
}

std::vector<TowerPtr> chain_of(TowerPtr t) {
  std::vector<TowerPtr> out;
  for (TowerPtr u = t; u != nullptr; u = u->parent()) out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Scalar> sqrt_in(TowerPtr t, const Scalar& s);
std::optional<Scalar> find_root_of_unity(TowerPtr t, int m);
TowerPtr unify(TowerPtr a, TowerPtr b);

}  // namespace

// ---------------------------------------------------------------------------
// Registry

struct TowerRegistry {
  std::map<std::string, std::unique_ptr<Tower>> towers;

  static TowerRegistry& get() {
    static TowerRegistry r;
    return r;
  }

  TowerPtr intern(TowerPtr parent, Tower::Kind kind, const Scalar& radicand, int order, Vec minpoly) {
    std::string step = kind == Tower::Kind::Sqrt ? "sqrt(" + radicand.str() + ")" : "zeta(" + std::to_string(order) + ")";
    std::string key = tower_key(parent) + "/" + step;
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto it = towers.find(key);
    if (it != towers.end()) return it->second.get();
    std::unique_ptr<Tower> t(new Tower());
    t->parent_ = parent;
    t->kind_ = kind;
    t->radicand_ = radicand;
    t->order_ = order;
    t->minpoly_ = std::move(minpoly);
    t->degree_ = tower_degree(parent) * t->step_degree();
    t->depth_ = parent == nullptr ? 1 : parent->depth() + 1;
    t->key_ = key;
    TowerPtr p = t.get();
    towers.emplace(key, std::move(t));
    return p;
  }
};

TowerPtr Tower::make_sqrt(TowerPtr parent, const Scalar& radicand) {
  Scalar d = map_into(radicand, parent);
  return TowerRegistry::get().intern(parent, Kind::Sqrt, d, 0, Vec{-d, Scalar(0), Scalar(1)});
}

TowerPtr Tower::make_cyclotomic(int m) {
  std::vector<mpz_class> phi = cyclotomic_poly(m);
  Vec mp;
  for (const auto& c : phi) mp.push_back(Scalar(mpq_class(c)));
  return TowerRegistry::get().intern(nullptr, Kind::Cyclotomic, Scalar(0), m, mp);
}

Scalar Tower::generator() const { return Scalar::from_coords(this, Vec{Scalar(0), Scalar(1)}); }

std::string Tower::generator_str() const {
  if (kind_ == Kind::Sqrt) return "sqrt(" + radicand_.str() + ")";
  return "zeta(" + std::to_string(order_) + ")";
}

long tower_degree(TowerPtr t) { return t == nullptr ? 1 : t->degree(); }
std::string tower_key(TowerPtr t) { return t == nullptr ? "Q" : t->key(); }

bool is_ancestor(TowerPtr a, TowerPtr b) {
  if (a == nullptr) return true;
  for (TowerPtr u = b; u != nullptr; u = u->parent())
    if (u == a) return true;
  return false;
}

TowerPtr common_tower(TowerPtr a, TowerPtr b) {
  if (is_ancestor(a, b)) return b;
  if (is_ancestor(b, a)) return a;
  return unify(a, b);
}

TowerPtr common_tower(const std::vector<Scalar>& xs) {
  TowerPtr t = nullptr;
  for (const auto& x : xs) t = common_tower(t, x.tower());
  return t;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Scalar(mpq_class(num, den));
}

const mpq_class& Scalar::rational() const {
  if (tower_ != nullptr) throw Error(ErrorKind::InvalidArgument, "scalar " + str() + " is not rational");
  return q_;
}

Scalar Scalar::from_coords(TowerPtr t, Vec coords) {
  trim(coords);
  if (t == nullptr) {
    if (coords.empty()) return Scalar(0);
    return coords[0];
  }
  if (coords.size() <= 1) return coords.empty() ? Scalar(0) : coords[0];
  if (static_cast<int>(coords.size()) > t->step_degree()) {
    coords = vdivmod(coords, t->minpoly()).second;
    if (coords.size() <= 1) return coords.empty() ? Scalar(0) : coords[0];
  }
  Scalar s;
  s.tower_ = t;
  s.q_ = 0;
  s.c_ = std::move(coords);
  return s;
}

Scalar Scalar::operator-() const {
  if (tower_ == nullptr) return Scalar(mpq_class(-q_));
  return from_coords(tower_, vneg(c_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.tower_ == nullptr && b.tower_ == nullptr) return Scalar(mpq_class(a.q_ + b.q_));
  TowerPtr t = common_tower(a.tower_, b.tower_);
  Scalar ma = map_into(a, t), mb = map_into(b, t);
  return Scalar::from_coords(t, vadd(coords_in(ma, t), coords_in(mb, t)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.tower_ == nullptr && b.tower_ == nullptr) return Scalar(mpq_class(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  TowerPtr t = common_tower(a.tower_, b.tower_);
  Scalar ma = map_into(a, t), mb = map_into(b, t);
  if (ma.tower_ != t) return Scalar::from_coords(t, vscale(coords_in(mb, t), ma));
  if (mb.tower_ != t) return Scalar::from_coords(t, vscale(coords_in(ma, t), mb));
  Vec prod = vmul(ma.c_, mb.c_);
  return Scalar::from_coords(t, vdivmod(prod, t->minpoly()).second);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (tower_ == nullptr) return Scalar(mpq_class(1 / q_));
  auto [g, s] = vxgcd(c_, tower_->minpoly());
  if (g.size() != 1) throw Error(ErrorKind::Internal, "minimal polynomial is not irreducible");
  return from_coords(tower_, vscale(s, g[0].inv()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.tower_ == b.tower_) {
    if (a.tower_ == nullptr) return a.q_ == b.q_;
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  // values are stored in their minimal tower, so distinct towers of one chain differ
  if (is_ancestor(a.tower_, b.tower_) || is_ancestor(b.tower_, a.tower_)) return false;
  return (a - b).is_zero();
}

bool Scalar::is_compound() const {
  if (tower_ == nullptr) return q_ < 0;
  int nz = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++nz;
  if (nz > 1) return true;
  return str().rfind('-', 0) == 0;
}

std::string Scalar::str() const {
  if (tower_ == nullptr) return q_.get_str();
  std::vector<std::string> terms;
  std::string g = tower_->generator_str();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    if (i == 0) {
      terms.push_back(c.str());
      continue;
    }
    std::string mono = g + (i > 1 ? "^" + std::to_string(i) : "");
    if (c.is_one())
      terms.push_back(mono);
    else if (c == Scalar(-1))
      terms.push_back("-" + mono);
    else if (c.tower_ != nullptr && c.is_compound())
      terms.push_back("(" + c.str() + ")*" + mono);
    else
      terms.push_back(c.str() + "*" + mono);
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out = terms[i];
    else if (terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mapping between towers

namespace {

Scalar generator_image(TowerPtr src, TowerPtr dst) {
  {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto it = gen_image_cache().find({src, dst});
    if (it != gen_image_cache().end()) return it->second;
  }
  std::optional<Scalar> img;
  if (src->kind() == Tower::Kind::Sqrt) {
    Scalar d = map_into(src->radicand(), dst);
    img = sqrt_in(dst, d);
  } else {
    img = find_root_of_unity(dst, src->cyclotomic_order());
  }
  if (!img) throw Error(ErrorKind::TowerMismatch, "tower " + tower_key(dst) + " does not contain " + src->generator_str());
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  gen_image_cache().emplace(UnifyKey{src, dst}, *img);
  return *img;
}

}  // namespace

Scalar map_into(const Scalar& s, TowerPtr t) {
  if (is_ancestor(s.tower(), t)) return s;
  TowerPtr src = s.tower();
  Scalar g = generator_image(src, t);
  Scalar acc(0);
  const Vec& c = s.coords();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + map_into(c[i], t);
  return acc;
}

// ---------------------------------------------------------------------------
// Numeric embedding

namespace {

long working_prec(long prec, TowerPtr t) { return prec + 64 + 16 * (t == nullptr ? 0 : t->depth()); }

ComplexBall eval_poly_ball(const std::vector<ComplexBall>& coeffs, const ComplexBall& z) {
  ComplexBall acc(z.prec());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// Replaces the radius of z by a certified root-inclusion radius for the
// polynomial whose coefficient discs are given.
void certify_root(ComplexBall& z, const std::vector<ComplexBall>& coeffs) {
  long p = z.prec();
  ComplexBall mid = z;
  mpfr_set_zero(mid.rad.get(), 1);
  ComplexBall fz = eval_poly_ball(coeffs, mid);
  std::vector<ComplexBall> deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    ComplexBall c = coeffs[i];
    ComplexBall k = ComplexBall::exact(mpq_class(static_cast<long>(i)), p);
    deriv.push_back(c * k);
  }
  ComplexBall dfz = eval_poly_ball(deriv, mid);
  Real up = fz.abs_upper();
  Real low = dfz.abs_lower();
  if (mpfr_sgn(low.get()) <= 0) throw Error(ErrorKind::Internal, "root certification failed (multiple root?)");
  Real r(p);
  mpfr_div(r.get(), up.get(), low.get(), MPFR_RNDU);
  mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(coeffs.size() - 1), MPFR_RNDU);
  z.rad = r;
}

ComplexBall generator_ball(TowerPtr t, long prec);

ComplexBall embed_at(const Scalar& s, long wp) {
  if (s.tower() == nullptr) return ComplexBall::exact(s.rational(), wp);
  ComplexBall g = generator_ball(s.tower(), wp);
  ComplexBall acc(wp);
  const Vec& c = s.coords();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + embed_at(c[i], wp);
  return acc;
}

// Principal complex square root of the midpoint.
ComplexBall principal_sqrt_mid(const ComplexBall& d) {
  long p = d.prec();
  ComplexBall r(p);
  Real mod(p), t(p);
  mpfr_hypot(mod.get(), d.re.get(), d.im.get(), MPFR_RNDN);
  // re = sqrt((|d| + Re d)/2), im = sign(Im d) sqrt((|d| - Re d)/2)
  mpfr_add(t.get(), mod.get(), d.re.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  if (mpfr_sgn(t.get()) < 0) mpfr_set_zero(t.get(), 1);
  mpfr_sqrt(r.re.get(), t.get(), MPFR_RNDN);
  mpfr_sub(t.get(), mod.get(), d.re.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  if (mpfr_sgn(t.get()) < 0) mpfr_set_zero(t.get(), 1);
  mpfr_sqrt(r.im.get(), t.get(), MPFR_RNDN);
  if (mpfr_sgn(d.im.get()) < 0) mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  return r;
}

ComplexBall generator_ball(TowerPtr t, long prec) {
  {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto it = ball_cache().find({t, prec});
    if (it != ball_cache().end()) return it->second;
  }
  long wp = prec + 32;
  std::vector<ComplexBall> coeffs;
  for (const auto& c : t->minpoly()) coeffs.push_back(embed_at(c, wp));
  ComplexBall z(wp);
  if (t->kind() == Tower::Kind::Sqrt) {
    z = principal_sqrt_mid(ball_neg(coeffs[0]));
  } else {
    Real pi(wp), ang(wp);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_mul_2ui(ang.get(), pi.get(), 1, MPFR_RNDN);
    mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(t->cyclotomic_order()), MPFR_RNDN);
    mpfr_sin_cos(z.im.get(), z.re.get(), ang.get(), MPFR_RNDN);
  }
  certify_root(z, coeffs);
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  ball_cache().emplace(std::make_pair(t, prec), z);
  return z;
}

// +1 when a is the principal member of {a, -a}, -1 otherwise.
int principal_sign(const Scalar& a) {
  for (long prec = 64; prec <= 8192; prec *= 2) {
    ComplexBall b = embed_at(a, working_prec(prec, a.tower()));
    Real lo(b.prec()), hi(b.prec());
    mpfr_sub(lo.get(), b.re.get(), b.rad.get(), MPFR_RNDD);
    mpfr_add(hi.get(), b.re.get(), b.rad.get(), MPFR_RNDU);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
  // real part indistinguishable from zero: decide on the imaginary part
  ComplexBall b = embed_at(a, working_prec(8192, a.tower()));
  return mpfr_sgn(b.im.get()) >= 0 ? 1 : -1;
}

Scalar principal(const Scalar& r) { return principal_sign(r) > 0 ? r : -r; }

// ---------------------------------------------------------------------------
// Finite-field homomorphisms, used to certify non-squares in steps that are
// not quadratic.

long powmod(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % p);
    b = static_cast<long>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

bool eval_mod(const Scalar& s, const std::vector<long>& gens, long p, long& out) {
  if (s.tower() == nullptr) {
    mpz_class num = s.rational().get_num(), den = s.rational().get_den();
    mpz_class pm(p);
    mpz_class dm = den % pm;
    if (dm == 0) return false;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pm.get_mpz_t());
    mpz_class v = (num % pm) * inv % pm;
    if (v < 0) v += pm;
    out = v.get_si();
    return true;
  }
  long g = gens[static_cast<std::size_t>(s.tower()->depth() - 1)];
  long acc = 0;
  const Vec& c = s.coords();
  for (std::size_t i = c.size(); i-- > 0;) {
    long ci = 0;
    if (!eval_mod(c[i], gens, p, ci)) return false;
    acc = static_cast<long>((static_cast<__int128>(acc) * g + ci) % p);
  }
  out = acc;
  return true;
}

void enumerate_homs(const std::vector<TowerPtr>& chain, std::size_t level, long p, std::vector<long>& gens,
                    std::vector<std::vector<long>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (level == chain.size()) {
    out.push_back(gens);
    return;
  }
  const Vec& mp = chain[level]->minpoly();
  std::vector<long> cm;
  for (const auto& c : mp) {
    long v = 0;
    if (!eval_mod(c, gens, p, v)) return;
    cm.push_back(v);
  }
  for (long u = 0; u < p; ++u) {
    long acc = 0;
    for (std::size_t i = cm.size(); i-- > 0;) acc = static_cast<long>((static_cast<__int128>(acc) * u + cm[i]) % p);
    if (acc != 0) continue;
    gens.push_back(u);
    enumerate_homs(chain, level + 1, p, gens, out, limit);
    gens.pop_back();
  }
}

bool certified_nonsquare(TowerPtr t, const Scalar& s) {
  std::vector<TowerPtr> chain = chain_of(t);
  int tried = 0;
  for (long p = 3; p < 20000 && tried < 60; p += 2) {
    bool prime = true;
    for (long d = 3; d * d <= p; d += 2)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    std::vector<std::vector<long>> homs;
    std::vector<long> gens;
    enumerate_homs(chain, 0, p, gens, homs, 8);
    if (homs.empty()) continue;
    ++tried;
    for (const auto& h : homs) {
      long v = 0;
      if (!eval_mod(s, h, p, v) || v == 0) continue;
      if (powmod(v, (p - 1) / 2, p) == p - 1) return true;
    }
  }
  return false;
}

std::optional<Scalar> sqrt_rational(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Scalar(mpq_class(rn, rd));
}

// Some square root of s inside tower t (not necessarily principal).
std::optional<Scalar> any_sqrt_in(TowerPtr t, const Scalar& s) {
  if (s.is_zero()) return Scalar(0);
  if (t == nullptr) {
    if (s.tower() != nullptr) return std::nullopt;
    return sqrt_rational(s.rational());
  }
  Scalar sv = map_into(s, t);
  TowerPtr parent = t->parent();
  Vec c = coords_in(sv, t);
  c.resize(static_cast<std::size_t>(t->step_degree()));
  if (t->step_degree() == 2) {
    // generator u with u^2 + b u + c0 = 0; delta = 2u + b squares to disc
    const Vec& mp = t->minpoly();
    Scalar b = mp[1], c0 = mp[0];
    Scalar disc = b * b - Scalar(4) * c0;
    Scalar delta = Scalar(2) * t->generator() + b;
    Scalar U = c[0] - c[1] * b / Scalar(2);
    Scalar V = c[1] / Scalar(2);
    if (V.is_zero()) {
      if (auto r = any_sqrt_in(parent, U)) return *r;
      if (auto r = any_sqrt_in(parent, U / disc)) return *r * delta;
      return std::nullopt;
    }
    Scalar N = U * U - disc * V * V;
    auto n = any_sqrt_in(parent, N);
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
      Scalar P2 = (U + Scalar(sign) * *n) / Scalar(2);
      auto pr = any_sqrt_in(parent, P2);
      if (!pr || pr->is_zero()) continue;
      Scalar Q = V / (Scalar(2) * *pr);
      Scalar r = *pr + Q * delta;
      if (r * r == sv) return r;
    }
    return std::nullopt;
  }
  // Higher-degree cyclotomic step: monomial elements c * zeta^k.
  int nz = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) {
      ++nz;
      k = i;
    }
  if (nz == 1 && t->kind() == Tower::Kind::Cyclotomic) {
    long m = t->cyclotomic_order();
    std::optional<long> half;
    if (k % 2 == 0)
      half = static_cast<long>(k / 2);
    else if (m % 2 == 1)
      half = static_cast<long>((static_cast<long>(k) * ((m + 1) / 2)) % m);
    if (half) {
      if (auto r = any_sqrt_in(parent, c[k])) return *r * t->generator().pow(*half);
    }
  }
  if (certified_nonsquare(t, sv)) return std::nullopt;
  throw Error(ErrorKind::RootNotComputable, "cannot decide whether " + sv.str() + " is a square in " + tower_key(t));
}

std::optional<Scalar> sqrt_in(TowerPtr t, const Scalar& s) {
  auto r = any_sqrt_in(t, s);
  if (!r) return r;
  if (r->is_zero()) return r;
  return principal(*r);
}

std::optional<Scalar> find_root_of_unity(TowerPtr t, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order must be positive");
  if (m == 1) return Scalar(1);
  if (m == 2) return Scalar(-1);
  // roots carried by cyclotomic steps
  long big = 2;
  Scalar zb(-1);
  for (TowerPtr u : chain_of(t)) {
    if (u->kind() != Tower::Kind::Cyclotomic) continue;
    long L = u->cyclotomic_order();
    Scalar zl = map_into(u->generator(), t);
    long M = lcml(big, L);
    // zeta_M = zb^a zl^b with a (M/big) + b (M/L) = 1; the two cofactors are coprime
    mpz_class g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), mpz_class(M / big).get_mpz_t(),
               mpz_class(M / L).get_mpz_t());
    zb = zb.pow(a.get_si()) * zl.pow(b.get_si());
    big = M;
  }
  if (big % m == 0) return zb.pow(big / m);
  if (euler_phi(m) == 2) {
    Scalar disc = m == 4 ? Scalar(-1) : Scalar(-3);
    auto r = sqrt_in(t, disc);
    if (!r) return std::nullopt;
    if (m == 4) return *r;
    if (m == 3) return (Scalar(-1) + *r) / Scalar(2);
    return (Scalar(1) + *r) / Scalar(2);
  }
  return std::nullopt;
}

TowerPtr unify(TowerPtr a, TowerPtr b) {
  {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto it = unify_cache().find({a, b});
    if (it != unify_cache().end()) return it->second;
  }
  TowerPtr t = a;
  for (TowerPtr step : chain_of(b)) {
    if (step->kind() == Tower::Kind::Sqrt) {
      Scalar d = map_into(step->radicand(), t);
      t = adjoin_sqrt(t, d).tower;
    } else {
      t = adjoin_root_of_unity(t, step->cyclotomic_order()).tower;
    }
  }
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  unify_cache().emplace(UnifyKey{a, b}, t);
  return t;
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& s) { return sqrt_in(s.tower(), s); }

Extension adjoin_sqrt(TowerPtr t, const Scalar& s) {
  TowerPtr base = common_tower(t, s.tower());
  Scalar sv = map_into(s, base);
  if (sv.is_zero()) return {base, Scalar(0)};
  if (auto r = sqrt_in(base, sv)) return {base, *r};
  Scalar factor(1);
  if (sv.is_rational()) {
    // sqrt(n/d) = (k/d) sqrt(m) with n d = k^2 m, small square factors only
    mpq_class q = sv.rational();
    mpz_class nd = q.get_num() * q.get_den(), k = 1;
    mpz_class sign = nd < 0 ? -1 : 1;
    nd = abs(nd);
    for (unsigned long f = 2; f < 100000 && f * f <= nd; ++f) {
      mpz_class f2 = f * f;
      while (nd % f2 == 0) {
        nd /= f2;
        k *= f;
      }
    }
    factor = Scalar(mpq_class(k, q.get_den()));
    sv = Scalar(mpq_class(sign * nd));
    sv = map_into(sv, base);
    if (auto r = sqrt_in(base, sv)) return {base, *r * factor};
    if (base == nullptr && sv == Scalar(-1)) {
      // i is the principal root; share the tower with zeta(4)
      TowerPtr cyc = Tower::make_cyclotomic(4);
      return {cyc, cyc->generator() * map_into(factor, cyc)};
    }
  }
  TowerPtr ext = Tower::make_sqrt(base, sv);
  return {ext, ext->generator() * map_into(factor, ext)};
}

Scalar sqrt(const Scalar& s) { return adjoin_sqrt(s.tower(), s).value; }

Extension adjoin_root_of_unity(TowerPtr t, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "root of unity order must be positive");
  if (auto r = find_root_of_unity(t, m)) return {t, *r};
  if (t == nullptr) {
    TowerPtr ext = Tower::make_cyclotomic(m);
    return {ext, ext->generator()};
  }
  if (euler_phi(m) == 2) {
    Extension e = adjoin_sqrt(t, Scalar(m == 4 ? -1 : -3));
    auto r = find_root_of_unity(e.tower, m);
    return {e.tower, *r};
  }
  // Adjoin the full cyclotomic field first, then replay t on top of it.
  long M = m;
  for (TowerPtr u : chain_of(t))
    if (u->kind() == Tower::Kind::Cyclotomic) M = lcml(M, u->cyclotomic_order());
  TowerPtr base = Tower::make_cyclotomic(static_cast<int>(M));
  TowerPtr ext = unify(base, t);
  auto r = find_root_of_unity(ext, m);
  if (!r) throw Error(ErrorKind::Internal, "root of unity lost during tower replay");
  return {ext, *r};
}

Scalar zeta(int m) { return adjoin_root_of_unity(nullptr, m).value; }

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

MultOrder mult_order(const Scalar& s) {
  if (s.is_zero()) throw Error(ErrorKind::ZeroInput, "multiplicative order of zero");
  ComplexBall b = embed_numeric(s, 64);
  Real one = Real::from_d(1.0, b.prec());
  if (mpfr_cmp(b.abs_lower().get(), one.get()) > 0 || mpfr_cmp(b.abs_upper().get(), one.get()) < 0) return {false, 0};
  long D = tower_degree(s.tower());
  long bound = 2 * D * D + 2;
  Scalar p(1);
  for (long m = 1; m <= bound; ++m) {
    p *= s;
    if (euler_phi(m) <= D && p.is_one()) return {true, m};
  }
  return {false, 0};
}

ComplexBall embed_numeric(const Scalar& s, long prec_bits) {
  ComplexBall b = embed_at(s, working_prec(prec_bits, s.tower()));
  return b;
}

ComplexBall embed_numeric(const Scalar& s) { return embed_numeric(s, default_precision_bits()); }

}  // namespace gwalg
