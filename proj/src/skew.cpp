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

#include "gwalg/skew.hpp"

#include <algorithm>
#include <unordered_map>

#include "gwalg/errors.hpp"
#include "gwalg/fixed.hpp"
#include "gwalg/linalg.hpp"

namespace gwalg {

namespace {

std::string action_key(const GradedAction& a) {
  return a.images[0].str() + "|" + a.images[1].str() + "|" + a.images[2].str();
}

std::string aut_key(const Automorphism& a) {
  return a.image_x().str() + "|" + a.image_y().str() + "|" + a.image_z().str();
}

template <class Action, class Compose, class Key>
FiniteGroup<Action> closure(const Action& id, const std::vector<Action>& gens, std::size_t limit, const Compose& compose,
                            const Key& key) {
  FiniteGroup<Action> G;
  G.elements.push_back(id);
  std::unordered_map<std::string, int> index{{key(id), 0}};
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    for (const auto& s : gens) {
      Action next = compose(G.elements[i], s);
      std::string k = key(next);
      if (index.count(k)) continue;
      if (G.elements.size() >= limit)
        throw Error(ErrorKind::GroupNotClosed, "closure exceeds " + std::to_string(limit) + " elements");
      index.emplace(k, static_cast<int>(G.elements.size()));
      G.elements.push_back(next);
    }
  }
  std::size_t N = G.elements.size();
  G.table.assign(N, std::vector<int>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      auto it = index.find(key(compose(G.elements[i], G.elements[j])));
      if (it == index.end()) throw Error(ErrorKind::GroupNotClosed, "product outside the listed group");
      G.table[i][j] = it->second;
    }
  }
  return G;
}

}  // namespace

GradedGroup graded_group(const std::vector<GradedAction>& gens, std::size_t limit) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  for (const auto& g : gens) check_graded_action(g);
  return closure(graded_identity(gens.front().images[0].ring()), gens, limit, compose_graded, action_key);
}

AutGroup aut_group(const std::vector<Automorphism>& gens, std::size_t limit) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  return closure(identity(gens.front().presentation()), gens, limit,
                 [](const Automorphism& a, const Automorphism& b) { return compose(a, b); }, aut_key);
}

void fill_table(GradedGroup& G) {
  if (G.elements.empty()) throw Error(ErrorKind::InvalidArgument, "empty group");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    check_graded_action(G.elements[i]);
    if (!index.emplace(action_key(G.elements[i]), static_cast<int>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "repeated group element");
  }
  if (!(G.elements[0] == graded_identity(G.elements[0].images[0].ring())))
    throw Error(ErrorKind::InvalidArgument, "element 0 is not the identity");
  std::size_t N = G.elements.size();
  G.table.assign(N, std::vector<int>(N, 0));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      auto it = index.find(action_key(compose_graded(G.elements[i], G.elements[j])));
      if (it == index.end()) throw Error(ErrorKind::GroupNotClosed, "product outside the listed group");
      G.table[i][j] = it->second;
    }
  }
}

namespace {

template <class C>
SkewElement<C> add(const SkewElement<C>& a, const SkewElement<C>& b) {
  SkewElement<C> r = a;
  for (const auto& [g, c] : b.comps) {
    auto it = r.comps.find(g);
    if (it == r.comps.end()) {
      r.comps.emplace(g, c);
      continue;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) r.comps.erase(it);
  }
  return r;
}

template <class C>
bool same(const SkewElement<C>& a, const SkewElement<C>& b) {
  if (a.comps.size() != b.comps.size()) return false;
  auto it = b.comps.begin();
  for (const auto& [g, c] : a.comps) {
    if (it->first != g || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

template <class C, class Group, class Act>
SkewElement<C> multiply(const SkewElement<C>& u, const SkewElement<C>& v, const Group& G, const Act& act) {
  SkewElement<C> r;
  auto check = [&](int g) {
    if (g < 0 || static_cast<std::size_t>(g) >= G.size())
      throw Error(ErrorKind::GroupNotClosed, "group index " + std::to_string(g) + " is not in the listed group");
  };
  for (const auto& [g, a] : u.comps) {
    check(g);
    for (const auto& [h, b] : v.comps) {
      check(h);
      C prod = a * act(G.elements[static_cast<std::size_t>(g)], b);
      if (prod.is_zero()) continue;
      SkewElement<C> t;
      t.comps.emplace(G.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)], prod);
      r = add(r, t);
    }
  }
  return r;
}

}  // namespace

GrSkew skew_term(const GrElement& c, int g) {
  GrSkew r;
  if (!c.is_zero()) r.comps.emplace(g, c);
  return r;
}

RSkew skew_term(const GwaElement& c, int g) {
  RSkew r;
  if (!c.is_zero()) r.comps.emplace(g, c);
  return r;
}

GrSkew operator+(const GrSkew& a, const GrSkew& b) { return add(a, b); }
RSkew operator+(const RSkew& a, const RSkew& b) { return add(a, b); }
bool operator==(const GrSkew& a, const GrSkew& b) { return same(a, b); }
bool operator==(const RSkew& a, const RSkew& b) { return same(a, b); }

GrSkew scaled(const GrSkew& a, const Scalar& s) {
  GrSkew r;
  if (s.is_zero()) return r;
  for (const auto& [g, c] : a.comps) r.comps.emplace(g, c.scaled(s));
  return r;
}

GrSkew skew_multiply(const GrSkew& u, const GrSkew& v, const GradedGroup& G) {
  return multiply(u, v, G, apply_graded);
}

RSkew skew_multiply(const RSkew& u, const RSkew& v, const AutGroup& G) {
  return multiply(u, v, G, [](const Automorphism& g, const GwaElement& b) { return apply(g, b); });
}

GrSkew group_sum(const GrRing& r, const GradedGroup& G) {
  GrSkew f;
  for (std::size_t i = 0; i < G.size(); ++i) f.comps.emplace(static_cast<int>(i), GrElement::scalar(r, Scalar(1)));
  return f;
}

std::string skew_str(const GrSkew& u) {
  if (u.comps.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : u.comps) {
    std::string t = c.terms().size() > 1 ? "(" + c.str() + ")" : c.str();
    out += (out.empty() ? "" : " + ") + t + " # g" + std::to_string(g);
  }
  return out;
}

// ---- quotient bases ----

namespace {

// x = s^n, y = t^n, z = st embeds gr R in k[s, t].
std::pair<int, int> st_exponents(const GrRing& r, const GrMonomial& m) {
  return {r.n * m[0] + m[2], r.n * m[1] + m[2]};
}

GrMonomial from_st(const GrRing& r, int a, int b) {
  int k = std::min(a, b);
  return {(a - k) / r.n, (b - k) / r.n, k};
}

bool divides(const GrRing& r, const GrMonomial& g, const GrMonomial& m) {
  auto [ga, gb] = st_exponents(r, g);
  auto [ma, mb] = st_exponents(r, m);
  return ga <= ma && gb <= mb;
}

bool in_monomial_ideal(const GrRing& r, const std::vector<GrMonomial>& gens, const GrMonomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const GrMonomial& g) { return divides(r, g, m); });
}

}  // namespace

std::optional<std::vector<GrMonomial>> quotient_basis(const GrRing& r, const std::vector<GrMonomial>& gens) {
  int ax = -1, by = -1;
  for (const auto& g : gens) {
    if (g[1] == 0 && g[2] == 0) ax = ax < 0 ? r.n * g[0] : std::min(ax, r.n * g[0]);
    if (g[0] == 0 && g[2] == 0) by = by < 0 ? r.n * g[1] : std::min(by, r.n * g[1]);
  }
  if (ax < 0 || by < 0) return std::nullopt;  // a whole ray of x or y powers survives
  std::vector<GrMonomial> out;
  for (int a = 0; a < std::max(ax, 1); ++a) {
    for (int b = 0; b < std::max(by, 1); ++b) {
      if ((a - b) % r.n != 0) continue;
      GrMonomial m = from_st(r, a, b);
      if (!in_monomial_ideal(r, gens, m)) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [&](const GrMonomial& u, const GrMonomial& v) {
    int du = monomial_degree(r, u), dv = monomial_degree(r, v);
    if (du != dv) return du < dv;
    return u[0] - u[1] > v[0] - v[1];
  });
  return out;
}

// ---- certificates ----

namespace {

GrSkew evaluate(const std::vector<DerivationTerm>& terms, const std::vector<CertificateStep>& steps, std::size_t upto,
                const GrSkew& f, const GradedGroup& G) {
  GrSkew acc;
  for (const auto& t : terms) {
    if (t.source < -1 || t.source >= static_cast<int>(upto))
      throw Error(ErrorKind::InvalidArgument, "derivation references a later step");
    const GrSkew& src = t.source < 0 ? f : steps[static_cast<std::size_t>(t.source)].element;
    acc = acc + scaled(skew_multiply(skew_multiply(t.left, src, G), t.right, G), t.coeff);
  }
  return acc;
}

class Builder {
 public:
  Builder(std::string kind, GrRing ring, GradedGroup group, GrSkew f) {
    c_.kind = std::move(kind);
    c_.ring = std::move(ring);
    c_.group = std::move(group);
    c_.f = std::move(f);
    c_.f_is_group_sum = c_.f == group_sum(c_.ring, c_.group);
  }

  GrSkew e(const GrElement& s) const { return skew_term(s, 0); }
  GrSkew one() const { return e(GrElement::scalar(c_.ring, Scalar(1))); }
  GrElement x() const { return GrElement::x(c_.ring); }
  GrElement y() const { return GrElement::y(c_.ring); }
  GrElement z() const { return GrElement::z(c_.ring); }

  int add(std::vector<DerivationTerm> terms, std::string note) {
    GrSkew el = evaluate(terms, c_.steps, c_.steps.size(), c_.f, c_.group);
    c_.steps.push_back({el, std::move(terms), std::move(note)});
    return static_cast<int>(c_.steps.size()) - 1;
  }
  // left * src * right - left2 * src * right2
  int difference(const GrSkew& l1, int src, const GrSkew& r1, const GrSkew& l2, const GrSkew& r2, std::string note,
                 const Scalar& sign = Scalar(-1)) {
    return add({{Scalar(1), l1, src, r1}, {sign, l2, src, r2}}, std::move(note));
  }
  int rescale(int src, const Scalar& s, std::string note) { return add({{s, one(), src, one()}}, std::move(note)); }
  const GrSkew& element(int i) const { return c_.steps[static_cast<std::size_t>(i)].element; }

  // Asserts step i is c * m # e and returns c.
  Scalar expect_monomial(int i, const GrMonomial& m) const {
    const GrSkew& el = element(i);
    if (el.comps.size() != 1 || el.comps.begin()->first != 0)
      throw Error(ErrorKind::Internal, "step " + std::to_string(i) + " left the identity component: " + skew_str(el));
    const GrElement& c = el.comps.begin()->second;
    if (c.terms().size() != 1 || c.terms().begin()->first != m)
      throw Error(ErrorKind::Internal, "step " + std::to_string(i) + " is not the expected monomial: " + skew_str(el));
    return c.terms().begin()->second;
  }
  void expect(int i, const GrSkew& want) const {
    if (!(element(i) == want))
      throw Error(ErrorKind::Internal, "step " + std::to_string(i) + " gave " + skew_str(element(i)) + ", expected " + skew_str(want));
  }

  Certificate finish(std::vector<GrMonomial> conclusion, std::vector<std::string> notes) {
    c_.conclusion = std::move(conclusion);
    auto basis = quotient_basis(c_.ring, c_.conclusion);
    c_.finite = basis.has_value();
    if (basis) c_.findim_basis = *basis;
    c_.notes = std::move(notes);
    return c_;
  }

  Certificate& cert() { return c_; }

 private:
  Certificate c_;
};

GradedAction theta_action(const GrRing& r, const Scalar& beta) {
  return {{GrElement::x(r).scaled(beta), GrElement::y(r).scaled(beta.inv()), GrElement::z(r)}};
}

// f = sum_i 1 # theta^i; derives x^{l-1}, y^{l-1} and z^{n(l-1)}.
Certificate theta_chain(const GrRing& r, const Scalar& beta, std::vector<std::string> notes) {
  MultOrder mo = mult_order(beta);
  if (!mo.finite || mo.order < 2) throw Error(ErrorKind::NotEligible, "beta is not a root of unity of order >= 2");
  long ell = mo.order;
  GradedGroup G = graded_group({theta_action(r, beta)});
  Builder b("theta", r, G, group_sum(r, G));
  auto chain = [&](const GrElement& v, const Scalar& w, const char* name) {
    int prev = -1;
    for (long k = 0; k + 1 < ell; ++k) {
      // v u - u (w^{k+1} v) kills the component of theta^{l-1-k}
      prev = b.difference(b.e(v), prev, b.one(), b.one(), b.e(v.scaled(w.pow(k + 1))),
                          std::string(name) + " u - u (" + name + "), round " + std::to_string(k + 1));
    }
    GrMonomial m{0, 0, 0};
    m[name[0] == 'x' ? 0 : 1] = static_cast<int>(ell - 1);
    Scalar c = b.expect_monomial(prev, m);
    int last = b.rescale(prev, c.inv(), std::string(name) + "^" + std::to_string(ell - 1) + " # e");
    b.expect_monomial(last, m);
    return last;
  };
  int xs = chain(b.x(), beta, "x");
  int ys = chain(b.y(), beta.inv(), "y");
  int el = static_cast<int>(ell - 1);
  GrMonomial zm{0, 0, r.n * el};
  int zs = b.add({{r.lead.pow(-el), b.e(b.y().pow(el)), xs, b.one()}}, "y^(l-1) x^(l-1) = c^(l-1) z^(n(l-1))");
  b.expect_monomial(zs, zm);
  (void)ys;
  return b.finish({{el, 0, 0}, {0, el, 0}, zm}, std::move(notes));
}

// n even: f = 1 # e + 1 # phi with phi(y) = beta x.
Certificate theta_omega_even(const GrRing& r, const GradedGroup& G, const Scalar& beta, std::vector<std::string> notes) {
  Builder b("theta-omega, n even", r, G, group_sum(r, G));
  Scalar bi = beta.inv();
  int s1 = b.difference(b.e(b.x()), -1, b.one(), b.one(), b.e(b.y().scaled(bi)), "x f - f (y/beta)");
  b.expect(s1, b.e(b.x() - b.y().scaled(bi)));
  int s2 = b.difference(b.e(b.x().pow(2)), -1, b.one(), b.one(), b.e(b.y().pow(2).scaled(bi * bi)), "x^2 f - f (y^2/beta^2)");
  b.expect(s2, b.e(b.x().pow(2) - b.y().pow(2).scaled(bi * bi)));
  int s3 = b.difference(b.e(b.z()), -1, b.one(), b.one(), b.e(b.z()), "z f + f z", Scalar(1));
  b.expect(s3, b.e(b.z().scaled(Scalar(2))));
  int zs = b.rescale(s3, Scalar::frac(1, 2), "z # e");
  GrElement zn1 = b.z().pow(r.n - 1);
  // (x - y/beta) x = x^2 - c z^n / beta
  int xs = b.add({{Scalar(1), b.one(), s1, b.e(b.x())}, {bi * r.lead, b.e(zn1), zs, b.one()}}, "x^2 # e");
  b.expect(xs, b.e(b.x().pow(2)));
  // (x - y/beta) y = c z^n - y^2 / beta
  int ys = b.add({{-beta, b.one(), s1, b.e(b.y())}, {beta * r.lead, b.e(zn1), zs, b.one()}}, "y^2 # e");
  b.expect(ys, b.e(b.y().pow(2)));
  return b.finish({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}, std::move(notes));
}

// n odd with f = 1 # e + 1 # phi, phi(x) = y/beta, phi(y) = -beta x.
Certificate theta_omega_odd_two_term(const GrRing& r, const GradedGroup& G, const Scalar& beta,
                                     std::vector<std::string> notes) {
  GrSkew f = skew_term(GrElement::scalar(r, Scalar(1)), 0) + skew_term(GrElement::scalar(r, Scalar(1)), 1);
  Builder b("theta-omega, n odd, two-term element", r, G, f);
  Scalar bi = beta.inv();
  int s1 = b.difference(b.e(b.x()), -1, b.one(), b.one(), b.e(b.y().scaled(bi)), "x f + f (y/beta)", Scalar(1));
  b.expect(s1, b.e(b.x() + b.y().scaled(bi)));
  int s2 = b.difference(b.e(b.y()), -1, b.one(), b.one(), b.e(b.x().scaled(beta)), "y f - f (beta x)");
  b.expect(s2, b.e(b.y() - b.x().scaled(beta)));
  int ys = b.add({{beta / Scalar(2), b.one(), s1, b.one()}, {Scalar::frac(1, 2), b.one(), s2, b.one()}}, "y # e");
  b.expect(ys, b.e(b.y()));
  int xs = b.add({{Scalar(1), b.one(), s1, b.one()}, {-bi, b.one(), ys, b.one()}}, "x # e");
  b.expect(xs, b.e(b.x()));
  return b.finish({{1, 0, 0}, {0, 1, 0}}, std::move(notes));
}

// Degree by degree: the part of (f) in degree d is spanned by (s # e) f (t # e).
Certificate search_chain(const std::string& kind, const GrRing& r, const GradedGroup& G, int max_degree,
                         std::vector<std::string> notes) {
  Builder b(kind, r, G, group_sum(r, G));
  std::vector<GrMonomial> found;
  const std::size_t N = G.size();
  for (int d = 1; d <= max_degree && !quotient_basis(r, found); ++d) {
    std::vector<GrMonomial> targets;
    for (const auto& m : monomials_of_degree(r, d))
      if (!in_monomial_ideal(r, found, m)) targets.push_back(m);
    if (targets.empty()) continue;
    std::vector<GrMonomial> mons = monomials_of_degree(r, d);
    auto row_of = [&](int g, const GrMonomial& m) {
      auto it = std::find(mons.begin(), mons.end(), m);
      return static_cast<std::size_t>(g) * mons.size() + static_cast<std::size_t>(it - mons.begin());
    };
    std::vector<std::pair<GrMonomial, GrMonomial>> pairs;
    std::vector<GrSkew> cols;
    for (int ds = 0; ds <= d; ++ds) {
      for (const auto& s : monomials_of_degree(r, ds)) {
        for (const auto& t : monomials_of_degree(r, d - ds)) {
          GrSkew v = skew_multiply(skew_multiply(b.e(GrElement::monomial(r, s)), b.cert().f, G),
                                   b.e(GrElement::monomial(r, t)), G);
          if (v.comps.empty()) continue;
          pairs.emplace_back(s, t);
          cols.push_back(v);
        }
      }
    }
    Matrix M(N * mons.size(), Vector(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [g, c] : cols[j].comps)
        for (const auto& [m, coeff] : c.terms()) M[row_of(g, m)][j] = coeff;
    for (const auto& m : targets) {
      if (in_monomial_ideal(r, found, m)) continue;
      Vector rhs(M.size());
      rhs[row_of(0, m)] = Scalar(1);
      auto sol = solve(M, rhs, cols.size());
      if (!sol) continue;
      std::vector<DerivationTerm> terms;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!(*sol)[j].is_zero())
          terms.push_back({(*sol)[j], b.e(GrElement::monomial(r, pairs[j].first)), -1, b.e(GrElement::monomial(r, pairs[j].second))});
      int st = b.add(std::move(terms), GrElement::monomial(r, m).str() + " # e, degree " + std::to_string(d));
      b.expect_monomial(st, m);
      found.push_back(m);
    }
  }
  return b.finish(found, std::move(notes));
}

std::string basis_note(const Diagonalization& d) {
  return "eigenbasis X = " + d.X.str() + ", Y = " + d.Y.str() + ", Z = " + d.Z.str() + "; YX = " + d.new_a.str("Z") +
         "; the map scales X by " + d.gamma.str();
}

}  // namespace

ReplayResult replay(const Certificate& c) {
  try {
    GradedGroup G = c.group;
    fill_table(G);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      GrSkew got = evaluate(c.steps[i].derivation, c.steps, i, c.f, G);
      if (!(got == c.steps[i].element))
        return {false, "step " + std::to_string(i) + " evaluates to " + skew_str(got) + ", recorded " + skew_str(c.steps[i].element)};
    }
    for (const auto& m : c.conclusion) {
      GrSkew want = skew_term(GrElement::monomial(c.ring, m), 0);
      bool seen = std::any_of(c.steps.begin(), c.steps.end(), [&](const CertificateStep& s) { return s.element == want; });
      if (!seen) return {false, "conclusion " + GrElement::monomial(c.ring, m).str() + " is not derived"};
    }
    auto basis = quotient_basis(c.ring, c.conclusion);
    if (basis.has_value() != c.finite) return {false, "finiteness flag does not match the conclusion"};
    if (basis && *basis != c.findim_basis) return {false, "recorded quotient basis differs from the recomputed one"};
    if (c.f_is_group_sum != (c.f == group_sum(c.ring, G))) return {false, "group-sum flag does not match f"};
    return {true, ""};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

Certificate auslander_witness(const Automorphism& g, const WitnessOptions& opt) {
  const Presentation& p = g.presentation();
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  if (is_identity(g)) throw Error(ErrorKind::NotEligible, "the identity generates the trivial group");
  MultOrder mo = order(g);
  if (!mo.finite) throw Error(ErrorKind::NotEligible, "map has infinite order");
  GrRing r = gr_ring(p);
  Scalar bx = g.image_x().coeff(1).coeff(0);
  bool diagonal = !bx.is_zero() && g.image_x() == GwaElement::x(p).scaled(bx) &&
                  g.image_y() == GwaElement::y(p).scaled(bx.inv()) && g.image_z() == GwaElement::z(p);
  if (diagonal) return theta_chain(r, bx, {"diagonal action on x, y, z"});
  int n = p->n();
  if (n <= 2) {
    Diagonalization d = n == 1 ? diagonalize_weyl(g) : diagonalize_deg2(g);
    GrRing r2{n, Scalar(1)};
    return theta_chain(r2, d.gamma, {basis_note(d)});
  }
  CanonicalForm cf = canonical_form(g);
  if (cf.kind != CanonicalForm::Kind::ThetaOmega) throw Error(ErrorKind::Internal, "unexpected canonical form " + cf.str());
  GradedGroup G = graded_group({graded_action(g)});
  if (n % 2 == 0) return theta_omega_even(r, G, cf.beta, {});
  if (opt.two_term_element)
    return theta_omega_odd_two_term(r, G, cf.beta,
                                    {"f = 1 # e + 1 # g is not the group sum: the group has order " + std::to_string(G.size())});
  return search_chain("theta-omega, n odd", r, G, opt.max_degree, {});
}

}  // namespace gwalg
