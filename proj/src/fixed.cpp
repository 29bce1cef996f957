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

#include "gwalg/fixed.hpp"

#include "gwalg/errors.hpp"
#include "gwalg/linalg.hpp"

namespace gwalg {

std::optional<Reflectivity> reflective(const ZPoly& a) {
  int n = a.degree();
  if (n < 1) return std::nullopt;
  // match the z^{n-1} coefficients of a(rho - z) and (-1)^n a(z)
  Scalar rho = Scalar(-2) * a.coeff(n - 1) / (Scalar(n) * a.leading());
  ZPoly lhs = affine_substitute(a, Scalar(-1), rho);
  ZPoly rhs = n % 2 == 0 ? a : -a;
  if (lhs != rhs) return std::nullopt;
  return Reflectivity{rho, n % 2 == 0};
}

namespace {

GwaElement one(const Presentation& p) { return GwaElement::scalar(p, Scalar(1)); }

// Coordinates in span(1, x, y, z).
Vector coords_v(const GwaElement& e) {
  Vector v{e.coeff(0).coeff(0), e.coeff(1).coeff(0), e.coeff(-1).coeff(0), e.coeff(0).coeff(1)};
  for (const auto& [d, q] : e.terms()) {
    bool ok = (d == 0 && q.degree() <= 1) || ((d == 1 || d == -1) && q.degree() <= 0);
    if (!ok) throw Error(ErrorKind::Internal, "element " + e.str() + " leaves span(1, x, y, z)");
  }
  return v;
}

GwaElement elem_v(const Presentation& p, const Vector& v) {
  return GwaElement::scalar(p, v[0]) + GwaElement::x(p).scaled(v[1]) + GwaElement::y(p).scaled(v[2]) +
         GwaElement::z(p).scaled(v[3]);
}

// Coefficients c with sum c_i basis_i = target, compared term by term.
std::optional<Vector> solve_combination(const std::vector<GwaElement>& basis, const GwaElement& target) {
  std::map<std::pair<int, int>, std::size_t> rows;
  auto index = [&](const GwaElement& e) {
    for (const auto& [d, q] : e.terms())
      for (int k = 0; k <= q.degree(); ++k) rows.emplace(std::make_pair(d, k), rows.size());
  };
  for (const auto& b : basis) index(b);
  index(target);
  Matrix m(rows.size(), Vector(basis.size()));
  Vector rhs(rows.size());
  for (const auto& [key, r] : rows) {
    for (std::size_t j = 0; j < basis.size(); ++j) m[r][j] = basis[j].coeff(key.first).coeff(key.second);
    rhs[r] = target.coeff(key.first).coeff(key.second);
  }
  return solve(m, rhs, basis.size());
}

// First nonzero coordinate in the order x, y, z, 1.
Scalar lead_coordinate(const Vector& v) {
  for (std::size_t i : {1, 2, 3, 0})
    if (!v[i].is_zero()) return v[i];
  return Scalar(0);
}

// gamma with g(e) = gamma e, if e is an eigenvector.
std::optional<Scalar> eigenvalue(const Automorphism& g, const GwaElement& e) {
  GwaElement ge = apply(g, e);
  const auto& [d, q] = *e.terms().begin();
  Scalar gamma = ge.coeff(d).leading() / q.leading();
  if (ge != e.scaled(gamma)) return std::nullopt;
  return gamma;
}

void set_roots(Diagonalization& d) {
  Scalar b = d.new_a.coeff(1), c = d.new_a.coeff(0);
  Scalar s = sqrt(b * b - Scalar(4) * c);
  d.k_plus = (-b + s) / Scalar(2);
  d.k_minus = (-b - s) / Scalar(2);
}

Diagonalization trivial_basis(const Presentation& p, const Scalar& gamma, const std::string& branch) {
  Diagonalization d{GwaElement::x(p), GwaElement::y(p), GwaElement::z(p), p->a(), gamma, Scalar(0), Scalar(0), std::nullopt, branch};
  if (p->n() == 2) {
    set_roots(d);
  }
  return d;
}

}  // namespace

std::vector<std::string> check_diagonalization(const Automorphism& g, const Diagonalization& d) {
  std::vector<std::string> bad;
  const Presentation& p = g.presentation();
  GwaElement o = one(p);
  if (d.X * d.Z != (d.Z - o) * d.X) bad.push_back("XZ = (Z - 1)X");
  if (d.Y * d.Z != (d.Z + o) * d.Y) bad.push_back("YZ = (Z + 1)Y");
  if (d.Y * d.X != eval_at(d.new_a, d.Z)) bad.push_back("YX = a'(Z)");
  if (d.X * d.Y != eval_at(sigma_power(d.new_a, 1), d.Z)) bad.push_back("XY = a'(Z - 1)");
  if (apply(g, d.X) != d.X.scaled(d.gamma)) bad.push_back("g(X) = gamma X");
  if (apply(g, d.Y) != d.Y.scaled(d.gamma.inv())) bad.push_back("g(Y) = gamma^-1 Y");
  if (apply(g, d.Z) != d.Z) bad.push_back("g(Z) = Z");
  return bad;
}

Diagonalization diagonalize_weyl(const Automorphism& g) {
  const Presentation& p = g.presentation();
  if (p->n() != 1 || p->a() != ZPoly::var()) throw Error(ErrorKind::NotWeyl, "needs the Weyl presentation a = z");
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  if (!order(g).finite) throw Error(ErrorKind::InfiniteOrder, "map has infinite order");
  if (is_identity(g)) return trivial_basis(p, Scalar(1), "identity");
  CanonicalForm c = canonical_form(g);
  const auto& [a1, a2, a3, b1, b2, b3] = c.weyl;
  Scalar w = a1 + b2;
  Scalar s = sqrt(w * w - Scalar(4));
  Scalar beta = (w + s) / Scalar(2), beta_inv = (w - s) / Scalar(2);
  // columns are the (x, y) parts of g(x), g(y)
  Matrix m{{a1, b1}, {a2, b2}};
  auto eigvec = [&](const Scalar& ev, std::size_t fallback) {
    Matrix shifted{{m[0][0] - ev, m[0][1]}, {m[1][0], m[1][1] - ev}};
    auto ns = nullspace(shifted, 2);
    if (ns.size() == 1) return ns[0];
    Vector v(2);
    v[fallback] = Scalar(1);
    return v;
  };
  Vector u = eigvec(beta, 0), v = eigvec(beta_inv, 1);
  Scalar ru = (u[0] * a3 + u[1] * b3) / (beta - Scalar(1));
  Scalar rv = (v[0] * a3 + v[1] * b3) / (beta_inv - Scalar(1));
  Scalar det = u[0] * v[1] - u[1] * v[0];
  GwaElement X = (GwaElement::x(p).scaled(u[0]) + GwaElement::y(p).scaled(u[1]) + GwaElement::scalar(p, ru)).scaled(det.inv());
  GwaElement Y = GwaElement::x(p).scaled(v[0]) + GwaElement::y(p).scaled(v[1]) + GwaElement::scalar(p, rv);
  Diagonalization d{X, Y, Y * X, ZPoly::var(), beta, Scalar(0), Scalar(0), beta, ""};
  bool degenerate = (b2 - a1 + s).is_zero() || (b2 - a1 - s).is_zero();
  d.branch = degenerate ? "weyl degenerate" : "weyl generic";
  auto bad = check_diagonalization(g, d);
  if (!bad.empty()) throw Error(ErrorKind::Internal, "Weyl diagonalization failed: " + bad.front());
  return d;
}

std::string reference_branch(const CanonicalForm& c) {
  if (c.kind == CanonicalForm::Kind::Tau) return "tau";
  if (c.kind != CanonicalForm::Kind::TauOmega) throw Error(ErrorKind::InvalidArgument, "not a tau form");
  return c.lambda * c.mu == Scalar(1) ? "tau-omega special" : "tau-omega";
}

std::optional<Scalar> reference_eigenvalue(const CanonicalForm& c) {
  const Scalar &l = c.lambda, &m = c.mu, &b = c.beta;
  Scalar w;
  std::string branch = reference_branch(c);
  if (branch == "tau-omega special") return l * l / b;
  w = branch == "tau" ? b * l * m - b - Scalar(1) : l + m * b;
  Scalar disc = w * w - Scalar(4) * b;
  if (disc.is_zero()) return std::nullopt;
  return (w * w - Scalar(2) * b + w * sqrt(disc)) / (Scalar(2) * b);
}

Diagonalization diagonalize_deg2(const Automorphism& g) {
  const Presentation& p = g.presentation();
  if (p->n() != 2) throw Error(ErrorKind::WrongDegree, "needs deg a = 2");
  if (!p->normalized()) throw Error(ErrorKind::HypothesisViolation, "needs normalized a = z(z - t)");
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  if (is_identity(g)) return trivial_basis(p, Scalar(1), "identity");
  auto forms = canonical_forms(g);
  if (forms.empty()) throw Error(ErrorKind::NonCanonical, "map matches neither tau form");
  const CanonicalForm& cf = forms.back();  // the tau-omega reading when there is one
  std::optional<Scalar> ref = reference_eigenvalue(cf);
  std::string branch = reference_branch(cf);

  // fixed direction of the linear part, constants removed
  std::vector<GwaElement> basis{one(p), GwaElement::x(p), GwaElement::y(p), GwaElement::z(p)};
  Matrix gm(4, Vector(4));
  for (std::size_t j = 0; j < 4; ++j) {
    Vector c = coords_v(apply(g, basis[j]));
    for (std::size_t i = 0; i < 4; ++i) gm[i][j] = c[i] - (i == j ? Scalar(1) : Scalar(0));
  }
  std::vector<Vector> fixed;
  for (auto v : nullspace(gm, 4)) {
    v[0] = Scalar(0);
    if (!v[1].is_zero() || !v[2].is_zero() || !v[3].is_zero()) fixed.push_back(v);
  }
  if (fixed.size() != 1) throw Error(ErrorKind::DegenerateSplit, "fixed direction is not unique");
  const Vector& zl = fixed[0];
  // ad_Z has eigenvalues 0, +-kappa with kappa^2 = r^2 - 4pq
  Scalar kappa2 = zl[3] * zl[3] - Scalar(4) * zl[1] * zl[2];
  if (kappa2.is_zero()) throw Error(ErrorKind::DegenerateSplit, "fixed direction is nilpotent");
  GwaElement z0 = elem_v(p, zl).scaled(sqrt(kappa2).inv());

  auto attempt = [&](const GwaElement& Z) -> std::optional<Diagonalization> {
    Matrix ad(4, Vector(4));
    for (std::size_t j = 0; j < 4; ++j) {
      Vector c = coords_v(Z * basis[j] - basis[j] * Z);
      for (std::size_t i = 0; i < 4; ++i) ad[i][j] = c[i];
    }
    auto eig = [&](const Scalar& ev) {
      Matrix s = ad;
      for (std::size_t i = 0; i < 4; ++i) s[i][i] -= ev;
      return nullspace(s, 4);
    };
    auto xs = eig(Scalar(1)), ys = eig(Scalar(-1));
    if (xs.size() != 1 || ys.size() != 1) return std::nullopt;
    GwaElement X = elem_v(p, xs[0]).scaled(lead_coordinate(xs[0]).inv());
    GwaElement Y = elem_v(p, ys[0]);
    auto sol = solve_combination({Z * Z, Z, one(p)}, Y * X);
    if (!sol || (*sol)[0].is_zero()) return std::nullopt;
    const Scalar& u = (*sol)[0];
    Y = Y.scaled(u.inv());
    ZPoly na(std::vector<Scalar>{(*sol)[2] / u, (*sol)[1] / u, Scalar(1)});
    auto gamma = eigenvalue(g, X);
    if (!gamma) return std::nullopt;
    Diagonalization d{X, Y, Z, na, *gamma, Scalar(0), Scalar(0), ref, branch};
    return d;
  };
  if (!ref) throw Error(ErrorKind::DegenerateSplit, "w^2 - 4 beta = 0: the eigenvalue is 1 and the map is not diagonalizable");
  auto d = attempt(z0);
  if (!d || d->gamma != *ref) {
    auto flipped = attempt(-z0);
    if (flipped && (!d || flipped->gamma == *ref)) d = flipped;
  }
  if (!d) throw Error(ErrorKind::DegenerateSplit, "no eigenbasis found");
  set_roots(*d);
  auto bad = check_diagonalization(g, *d);
  if (!bad.empty()) throw Error(ErrorKind::DegenerateSplit, "identity fails: " + bad.front());
  return *d;
}

ZPoly jordan_wells_product(const ZPoly& a, long ell) {
  ZPoly h(1);
  for (long i = 0; i < ell; ++i) h *= sigma_power(a, -i);
  return h;
}

namespace {

FixedRing from_basis(const Automorphism* g, const GwaElement& X, const GwaElement& Y, const GwaElement& Z, const ZPoly& a,
                     long ell) {
  FixedRing fr;
  fr.kind = FixedRing::Kind::ClassicalGwa;
  fr.group_order = ell;
  fr.defining = jordan_wells_product(a, ell);
  fr.classical = affine_substitute(fr.defining, Scalar(ell), Scalar(0)).monic();
  GwaElement xl = X.pow(static_cast<int>(ell)), yl = Y.pow(static_cast<int>(ell));
  if (yl * xl != eval_at(fr.defining, Z)) throw Error(ErrorKind::Internal, "Y^l X^l differs from the product polynomial");
  if (g != nullptr) {
    for (const GwaElement* e : std::initializer_list<const GwaElement*>{&xl, &yl, &Z})
      if (apply(*g, *e) != *e) throw Error(ErrorKind::Internal, "generator " + e->str() + " is not fixed");
  }
  fr.gen_x = xl;
  fr.gen_y = yl;
  fr.gen_z = Z;
  return fr;
}

}  // namespace

FixedRing fixed_ring_diagonal(const Presentation& p, long ell) {
  if (ell < 2) throw Error(ErrorKind::BadOrder, "group order must be at least 2");
  return from_basis(nullptr, GwaElement::x(p), GwaElement::y(p), GwaElement::z(p), p->a(), ell);
}

FixedRing fixed_ring_cyclic(const Automorphism& g) {
  const Presentation& p = g.presentation();
  if (!is_filtered(g)) throw Error(ErrorKind::NotCyclicCase, "map is not filtered");
  MultOrder o = order(g);
  if (!o.finite) throw Error(ErrorKind::NotCyclicCase, "map has infinite order");
  if (o.order < 2) throw Error(ErrorKind::NotCyclicCase, "map is the identity");
  long ell = o.order;
  int n = p->n();
  if (n <= 2) {
    Diagonalization d = n == 1 ? diagonalize_weyl(g) : diagonalize_deg2(g);
    return from_basis(&g, d.X, d.Y, d.Z, d.new_a, ell);
  }
  CanonicalForm c = canonical_form(g);
  if (c.kind == CanonicalForm::Kind::Theta)
    return from_basis(&g, GwaElement::x(p), GwaElement::y(p), GwaElement::z(p), p->a(), ell);
  // theta(b) * omega sends x to y / b, so x + y / b (or x^2 + y^2 / b^2) is fixed
  OmegaInvariants inv = omega_invariants(p, c.beta.inv());
  for (const GwaElement* e : {&inv.A, &inv.B, &inv.C})
    if (apply(g, *e) != *e) throw Error(ErrorKind::Internal, "generator " + e->str() + " is not fixed");
  FixedRing fr;
  fr.kind = FixedRing::Kind::GeneratorsRelations;
  fr.group_order = ell;
  fr.omega = inv;
  return fr;
}

ZPoly express_in_C(const ZPoly& p, const Scalar& rho) {
  if (affine_substitute(p, Scalar(-1), Scalar(1) + rho) != p)
    throw Error(ErrorKind::NotSymmetric, "polynomial is not invariant under z -> 1 + rho - z");
  ZPoly c(std::vector<Scalar>{Scalar(0), Scalar(1) + rho, Scalar(-1)});
  ZPoly r = p;
  std::vector<Scalar> q;
  while (r.degree() > 0) {
    int k = r.degree() / 2;
    // C^k has leading coefficient (-1)^k
    Scalar coef = k % 2 == 0 ? r.leading() : -r.leading();
    if (static_cast<int>(q.size()) <= k) q.resize(static_cast<std::size_t>(k) + 1);
    q[static_cast<std::size_t>(k)] += coef;
    r -= c.pow(k).scaled(coef);
  }
  if (q.empty()) q.resize(1);
  q[0] += r.coeff(0);
  return ZPoly(std::move(q));
}

OmegaInvariants omega_invariants(const Presentation& p, const Scalar& beta) {
  int n = p->n();
  if (n < 3) throw Error(ErrorKind::DegreeTooSmall, "needs n >= 3");
  auto r = reflective(p->a());
  if (!r) throw Error(ErrorKind::NotReflective, "a is not reflective");
  const Scalar& rho = r->rho;
  bool even = n % 2 == 0;
  GwaElement x = GwaElement::x(p), y = GwaElement::y(p), z = GwaElement::z(p), o = one(p);
  GwaElement zr = o.scaled(Scalar(1) + rho) - z;  // 1 + rho - z
  GwaElement xs = even ? x : x * x, ys = even ? y : y * y;
  Scalar bs = even ? beta : beta * beta;
  OmegaInvariants out{xs + ys.scaled(bs), z * xs + (zr * ys).scaled(bs), z * zr, rho, beta, even, ZPoly(), ZPoly(), {}};
  const GwaElement &A = out.A, &B = out.B, &C = out.C;
  auto comm = [](const GwaElement& u, const GwaElement& v) { return u * v - v * u; };

  auto record = [&](const std::string& name, const std::string& text, bool holds) {
    out.relations.push_back({name, text, holds});
  };
  Scalar rr = rho;
  if (even) {
    record("[A,C]", "[A,C] = 2B - (2 + rho)A", comm(A, C) == B.scaled(Scalar(2)) - A.scaled(Scalar(2) + rr));
    record("[B,C]", "[B,C] = rho B - 2CA", comm(B, C) == B.scaled(rr) - (C * A).scaled(Scalar(2)));
  } else {
    record("[A,C]", "[A,C] = 4B - 2(3 + rho)A", comm(A, C) == B.scaled(Scalar(4)) - A.scaled(Scalar(2) * (Scalar(3) + rr)));
    record("[B,C]", "[B,C] = 2(rho - 1)B - 4CA",
           comm(B, C) == B.scaled(Scalar(2) * (rr - Scalar(1))) - (C * A).scaled(Scalar(4)));
  }
  // residuals must be Omega-symmetric elements of k[z]
  auto residual_in_C = [&](const GwaElement& res, ZPoly& target) {
    if (res.terms().size() > 1 || (res.terms().size() == 1 && res.terms().begin()->first != 0)) return false;
    ZPoly q = res.coeff(0).scaled(beta.inv());
    try {
      target = express_in_C(q, rho);
    } catch (const Error&) {
      return false;
    }
    return res == eval_at(target, C).scaled(beta);
  };
  GwaElement ba_struct = even ? A * A : (A * A).scaled(Scalar(2));
  bool f_ok = residual_in_C(comm(B, A) - ba_struct, out.f_C);
  record("[B,A]", even ? "[B,A] = A^2 + beta f(C)" : "[B,A] = 2A^2 + beta f(C)", f_ok);
  GwaElement bb_struct = (B * A).scaled(even ? rr : rr - Scalar(1)) - C * A * A;
  bool g_ok = residual_in_C(B * B - bb_struct, out.g_C);
  record("B^2", even ? "B^2 = rho BA - CA^2 + beta g(C)" : "B^2 = (rho - 1)BA - CA^2 + beta g(C)", g_ok);
  return out;
}

}  // namespace gwalg
