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

#include <map>

#include "gwalg/errors.hpp"
#include "gwalg/skew.hpp"

namespace gwalg {

namespace {

// Dense polynomials over the prime field, low degree first.
class ModPoly {
 public:
  ModPoly(long p, std::vector<long> c) : p_(p), c_(std::move(c)) { trim(); }
  static ModPoly constant(long p, long v) { return ModPoly(p, {((v % p) + p) % p}); }

  bool is_zero() const { return c_.empty(); }
  ModPoly operator+(const ModPoly& o) const {
    std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (at(i) + o.at(i)) % p_;
    return ModPoly(p_, r);
  }
  ModPoly operator-(const ModPoly& o) const {
    std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((at(i) - o.at(i)) % p_ + p_) % p_;
    return ModPoly(p_, r);
  }
  ModPoly operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_, {});
    std::vector<long> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
    return ModPoly(p_, r);
  }
  bool operator==(const ModPoly& o) const { return c_ == o.c_; }
  /// q(z - s)
  ModPoly shift(long s) const {
    ModPoly lin(p_, {((-s) % p_ + p_) % p_, 1});
    ModPoly acc(p_, {});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(p_, c_[i]);
    return acc;
  }

 private:
  long at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  long p_;
  std::vector<long> c_;
};

// The GWA over the prime field with sigma(z) = z - 1 and yx = a.
class ModGwa {
 public:
  using Elem = std::map<int, ModPoly>;

  ModGwa(long p, ModPoly a) : p_(p), a_(std::move(a)) {}

  Elem x() const { return {{1, one()}}; }
  Elem y() const { return {{-1, one()}}; }
  Elem z() const { return {{0, ModPoly(p_, {0, 1})}}; }
  Elem poly(const ModPoly& q) const { return q.is_zero() ? Elem{} : Elem{{0, q}}; }
  ModPoly one() const { return ModPoly::constant(p_, 1); }
  const ModPoly& a() const { return a_; }

  Elem mul(const Elem& u, const Elem& v) const {
    Elem out;
    for (const auto& [d1, p1] : u)
      for (const auto& [d2, p2] : v) {
        auto [mono, d] = monomial(d1, d2);
        add_to(out, d, p1 * p2.shift(d1) * mono);
      }
    return out;
  }
  Elem sub(const Elem& u, const Elem& v) const {
    Elem out = u;
    for (const auto& [d, q] : v) add_to(out, d, ModPoly(p_, {}) - q);
    return out;
  }
  Elem pow(const Elem& u, long e) const {
    Elem r = poly(one());
    for (long i = 0; i < e; ++i) r = mul(r, u);
    return r;
  }

 private:
  void add_to(Elem& out, int d, const ModPoly& q) const {
    auto it = out.find(d);
    ModPoly s = it == out.end() ? q : it->second + q;
    if (s.is_zero()) {
      if (it != out.end()) out.erase(it);
    } else {
      out.insert_or_assign(d, s);
    }
  }
  // x^{d1} x^{d2} with negative powers read as y
  std::pair<ModPoly, int> monomial(int d1, int d2) const {
    if ((d1 >= 0 && d2 >= 0) || (d1 <= 0 && d2 <= 0)) return {one(), d1 + d2};
    auto down = [&](int k) {  // prod_{i=1..k} a(z - i)
      ModPoly r = one();
      for (int i = 1; i <= k; ++i) r = r * a_.shift(i);
      return r;
    };
    auto up = [&](int k) {  // prod_{i=0..k-1} a(z + i)
      ModPoly r = one();
      for (int i = 0; i < k; ++i) r = r * a_.shift(-i);
      return r;
    };
    if (d1 > 0) {
      int j = d1, k = -d2;
      if (j >= k) return {down(k).shift(j - k), j - k};
      return {down(j), j - k};
    }
    int k = -d1, j = d2;
    if (k >= j) return {up(j).shift(-(k - j)), j - k};
    return {up(k), j - k};
  }

  long p_;
  ModPoly a_;
};

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long reduce(const Scalar& s, long p) {
  if (!s.is_rational()) throw Error(ErrorKind::InvalidArgument, "coefficient " + s.str() + " is not rational");
  mpz_class num = s.rational().get_num(), den = s.rational().get_den();
  mpz_class pm = p;
  if (den % pm == 0) throw Error(ErrorKind::InvalidArgument, "denominator of " + s.str() + " vanishes mod p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
  mpz_class r = num * inv % pm;
  if (r < 0) r += pm;
  return r.get_si();
}

}  // namespace

CharpReport charp_report(const ZPoly& a, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > 3037000499L) throw Error(ErrorKind::InvalidArgument, "prime too large for word arithmetic");
  std::vector<long> c;
  for (const auto& s : a.coeffs()) c.push_back(reduce(s, p));
  ModGwa R(p, ModPoly(p, c));
  CharpReport rep;
  rep.p = p;
  auto x = R.x(), y = R.y(), z = R.z();
  auto xp = R.pow(x, p), yp = R.pow(y, p);
  auto comm = [&](const ModGwa::Elem& u, const ModGwa::Elem& v) { return R.sub(R.mul(u, v), R.mul(v, u)).empty(); };
  rep.commutators = {{"[x^p, z]", comm(xp, z)}, {"[y^p, z]", comm(yp, z)}, {"[x^p, y]", comm(xp, y)}, {"[x, y^p]", comm(x, yp)}};
  // b = xy = a(z - 1)
  ModPoly b = R.a().shift(1);
  for (long k = 1; k < p; ++k) {
    auto xk = R.pow(x, k);
    auto lhs = R.sub(R.mul(xk, y), R.mul(y, xk));
    auto rhs = R.mul(R.poly(b.shift(k - 1) - b.shift(-1)), R.pow(x, k - 1));
    rep.induction.emplace_back(k, R.sub(lhs, rhs).empty());
  }
  rep.central = true;
  for (const auto& [name, ok] : rep.commutators) rep.central = rep.central && ok;
  return rep;
}

bool charp_center_check(const ZPoly& a, long p) { return charp_report(a, p).central; }

}  // namespace gwalg
