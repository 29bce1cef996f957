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

#include "gwalg/autos.hpp"

#include <map>
#include <unordered_map>

#include "gwalg/errors.hpp"
#include "gwalg/fixed.hpp"

namespace gwalg {

std::string Generator::str() const {
  switch (kind) {
    case Kind::Theta:
      return "theta(" + param.str() + ")";
    case Kind::Psi:
      return "psi(" + std::to_string(m) + ", " + param.str() + ")";
    case Kind::Phi:
      return "phi(" + std::to_string(m) + ", " + param.str() + ")";
    case Kind::Omega:
      return "omega";
  }
  return "";
}

Automorphism::Automorphism(Presentation p, std::vector<Generator> word, GwaElement x, GwaElement y, GwaElement z)
    : p_(std::move(p)), word_(std::move(word)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

std::string Automorphism::str() const {
  if (word_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += " * ";
    out += word_[i].str();
  }
  return out;
}

namespace {

Scalar sign_pow(int n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

Scalar factorial(long i) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
  return Scalar(mpq_class(f));
}

bool is_trivial(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Theta:
      return g.param.is_one();
    case Generator::Kind::Psi:
    case Generator::Kind::Phi:
      return g.m == 0 || g.param.is_zero();
    case Generator::Kind::Omega:
      return false;
  }
  return false;
}

// Merges adjacent generators of one family; words are provenance only.
std::vector<Generator> simplify(const std::vector<Generator>& word, int n) {
  std::vector<Generator> out;
  for (const auto& g : word) {
    if (is_trivial(g)) continue;
    if (!out.empty()) {
      Generator& last = out.back();
      bool merged = false;
      if (last.kind == g.kind && g.kind == Generator::Kind::Theta) {
        last.param = last.param * g.param;
        merged = true;
      } else if (last.kind == g.kind && (g.kind == Generator::Kind::Psi || g.kind == Generator::Kind::Phi) && last.m == g.m) {
        last.param = last.param + g.param;
        merged = true;
      } else if (last.kind == g.kind && g.kind == Generator::Kind::Omega) {
        last = Generator::theta(sign_pow(n));
        merged = true;
      }
      if (merged) {
        if (is_trivial(last)) out.pop_back();
        continue;
      }
    }
    out.push_back(g);
  }
  return out;
}

Scalar cx(const GwaElement& e) { return e.coeff(1).coeff(0); }
Scalar cy(const GwaElement& e) { return e.coeff(-1).coeff(0); }
Scalar cz(const GwaElement& e) { return e.coeff(0).coeff(1); }
Scalar c1(const GwaElement& e) { return e.coeff(0).coeff(0); }

}  // namespace

bool preserves_relations(const GwaElement& x, const GwaElement& y, const GwaElement& z) {
  const Presentation& p = x.presentation();
  const ZPoly& a = p->a();
  GwaElement one = GwaElement::scalar(p, Scalar(1));
  if (y * x != eval_at(a, z)) return false;
  if (x * y != eval_at(sigma_power(a, 1), z)) return false;
  if (x * z != (z - one) * x) return false;
  if (y * z != (z + one) * y) return false;
  return true;
}

Automorphism identity(const Presentation& p) {
  return Automorphism(p, {}, GwaElement::x(p), GwaElement::y(p), GwaElement::z(p));
}

Automorphism make_generator(const Presentation& p, const Generator& g) {
  GwaElement X = GwaElement::x(p), Y = GwaElement::y(p), Z = GwaElement::z(p);
  const ZPoly& a = p->a();
  int n = p->n();
  switch (g.kind) {
    case Generator::Kind::Theta:
      if (g.param.is_zero()) throw Error(ErrorKind::ZeroBeta, "theta needs a nonzero parameter");
      X = X.scaled(g.param);
      Y = Y.scaled(g.param.inv());
      break;
    case Generator::Kind::Psi:
      if (g.m < 0) throw Error(ErrorKind::InvalidArgument, "psi needs m >= 0");
      if (g.m == 0) break;
      for (long i = 1; i <= n; ++i) {
        Scalar c = g.param.pow(i) / factorial(i);
        Y += GwaElement::term(p, static_cast<int>(i * g.m - 1), delta_power(a, g.m, i).scaled(c));
      }
      Z -= GwaElement::term(p, static_cast<int>(g.m), ZPoly(Scalar(g.m) * g.param));
      break;
    case Generator::Kind::Phi:
      if (g.m < 0) throw Error(ErrorKind::InvalidArgument, "phi needs m >= 0");
      if (g.m == 0) break;
      for (long i = 1; i <= n; ++i) {
        Scalar c = (-g.param).pow(i) / factorial(i);
        long k = i * g.m - 1;
        // y^k q(z) = q(z + k) y^k
        X += GwaElement::term(p, static_cast<int>(-k), sigma_power(delta_power(a, g.m, i), -k).scaled(c));
      }
      Z += GwaElement::term(p, static_cast<int>(-g.m), ZPoly(Scalar(g.m) * g.param));
      break;
    case Generator::Kind::Omega: {
      auto r = reflective(a);
      if (!r) throw Error(ErrorKind::NotReflective, "omega needs a reflective defining polynomial");
      GwaElement nx = Y;
      Y = X.scaled(sign_pow(n));
      X = nx;
      Z = GwaElement::poly(p, ZPoly(std::vector<Scalar>{Scalar(1) + r->rho, Scalar(-1)}));
      break;
    }
  }
  if (!preserves_relations(X, Y, Z)) throw Error(ErrorKind::Internal, "generator " + g.str() + " does not preserve the relations");
  return Automorphism(p, simplify({g}, n), X, Y, Z);
}

Automorphism make_word(const Presentation& p, const std::vector<Generator>& word) {
  Automorphism acc = identity(p);
  for (const auto& g : word) acc = compose(acc, make_generator(p, g));
  return acc;
}

Automorphism from_images(const Presentation& p, const GwaElement& x, const GwaElement& y, const GwaElement& z) {
  check_same(p, x.presentation());
  check_same(p, y.presentation());
  check_same(p, z.presentation());
  if (!preserves_relations(x, y, z)) throw Error(ErrorKind::InvalidArgument, "images do not preserve the defining relations");
  return Automorphism(p, {}, x, y, z);
}

GwaElement apply(const Automorphism& g, const GwaElement& e) {
  check_same(g.presentation(), e.presentation());
  const Presentation& p = g.presentation();
  GwaElement out(p);
  std::vector<GwaElement> xp{GwaElement::scalar(p, Scalar(1))}, yp{GwaElement::scalar(p, Scalar(1))};
  for (const auto& [d, q] : e.terms()) {
    std::vector<GwaElement>& pw = d >= 0 ? xp : yp;
    const GwaElement& base = d >= 0 ? g.image_x() : g.image_y();
    std::size_t k = static_cast<std::size_t>(d >= 0 ? d : -d);
    while (pw.size() <= k) pw.push_back(pw.back() * base);
    out += eval_at(q, g.image_z()) * pw[k];
  }
  return out;
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
  check_same(g.presentation(), h.presentation());
  std::vector<Generator> word = g.word();
  word.insert(word.end(), h.word().begin(), h.word().end());
  return Automorphism(g.presentation(), simplify(word, g.presentation()->n()), apply(g, h.image_x()),
                      apply(g, h.image_y()), apply(g, h.image_z()));
}

Automorphism invert(const Automorphism& g) {
  if (g.word().empty()) {
    if (is_identity(g)) return g;
    throw Error(ErrorKind::InvalidArgument, "cannot invert a map given only by images");
  }
  int n = g.presentation()->n();
  std::vector<Generator> inv;
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    switch (it->kind) {
      case Generator::Kind::Theta:
        inv.push_back(Generator::theta(it->param.inv()));
        break;
      case Generator::Kind::Psi:
        inv.push_back(Generator::psi(it->m, -it->param));
        break;
      case Generator::Kind::Phi:
        inv.push_back(Generator::phi(it->m, -it->param));
        break;
      case Generator::Kind::Omega:
        inv.push_back(Generator::theta(sign_pow(n)));
        inv.push_back(Generator::omega());
        break;
    }
  }
  return make_word(g.presentation(), inv);
}

Automorphism power(const Automorphism& g, long k) {
  if (k < 0) return power(invert(g), -k);
  Automorphism acc = identity(g.presentation());
  for (long i = 0; i < k; ++i) acc = compose(acc, g);
  return acc;
}

bool same_map(const Automorphism& g, const Automorphism& h) {
  return g.image_x() == h.image_x() && g.image_y() == h.image_y() && g.image_z() == h.image_z();
}

bool is_identity(const Automorphism& g) { return same_map(g, identity(g.presentation())); }

bool is_filtered(const Automorphism& g) {
  long n = g.presentation()->n();
  return filtration_degree(g.image_x()) == n && filtration_degree(g.image_y()) == n && filtration_degree(g.image_z()) == 2L;
}

std::array<std::array<Scalar, 3>, 3> linear_part(const Automorphism& g) {
  int n = g.presentation()->n();
  const int deg[3] = {n, n, 2};
  const GwaElement* img[3] = {&g.image_x(), &g.image_y(), &g.image_z()};
  std::array<std::array<Scalar, 3>, 3> m;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      if (deg[i] != deg[j]) continue;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == 0 ? cx(*img[j]) : i == 1 ? cy(*img[j]) : cz(*img[j]);
    }
  }
  return m;
}

std::string CanonicalForm::str() const {
  switch (kind) {
    case Kind::Tau:
      return "TauForm(" + lambda.str() + ", " + mu.str() + ", " + beta.str() + ")";
    case Kind::TauOmega:
      return "TauOmegaForm(" + lambda.str() + ", " + mu.str() + ", " + beta.str() + ")";
    case Kind::Theta:
      return "ThetaForm(" + beta.str() + ")";
    case Kind::ThetaOmega:
      return "ThetaOmegaForm(" + beta.str() + ")";
    case Kind::Weyl: {
      std::string out = "WeylForm(";
      for (std::size_t i = 0; i < 6; ++i) out += (i ? ", " : "") + weyl[i].str();
      return out + ")";
    }
  }
  return "";
}

Automorphism reconstruct(const Presentation& p, const CanonicalForm& c) {
  switch (c.kind) {
    case CanonicalForm::Kind::Theta:
      return make_generator(p, Generator::theta(c.beta));
    case CanonicalForm::Kind::ThetaOmega:
      return make_word(p, {Generator::theta(c.beta), Generator::omega()});
    case CanonicalForm::Kind::Tau:
      return make_word(p, {Generator::psi(1, c.lambda), Generator::phi(1, c.mu), Generator::theta(c.beta)});
    case CanonicalForm::Kind::TauOmega:
      return make_word(p, {Generator::psi(1, c.lambda), Generator::phi(1, c.mu), Generator::theta(c.beta), Generator::omega()});
    case CanonicalForm::Kind::Weyl: {
      if (p->n() != 1) throw Error(ErrorKind::NotWeyl, "Weyl form needs a linear defining polynomial");
      const auto& w = c.weyl;
      GwaElement X = GwaElement::x(p), Y = GwaElement::y(p);
      GwaElement one = GwaElement::scalar(p, Scalar(1));
      GwaElement nx = X.scaled(w[0]) + Y.scaled(w[1]) + one.scaled(w[2]);
      GwaElement ny = X.scaled(w[3]) + Y.scaled(w[4]) + one.scaled(w[5]);
      // yx = c1 z + c0
      const ZPoly& a = p->a();
      GwaElement nz = (ny * nx - one.scaled(a.coeff(0))).scaled(a.coeff(1).inv());
      return from_images(p, nx, ny, nz);
    }
  }
  throw Error(ErrorKind::Internal, "unknown canonical form");
}

namespace {

std::optional<CanonicalForm> tau_params(const Automorphism& h) {
  const GwaElement& z = h.image_z();
  Scalar lead = h.presentation()->a().leading();
  Scalar mu = cy(z);
  Scalar lambda = mu.is_zero() ? -cx(z) : (Scalar(1) - cz(z)) / (Scalar(2) * lead * mu);
  Scalar yc = cy(h.image_y());
  if (yc.is_zero()) return std::nullopt;
  CanonicalForm c;
  c.kind = CanonicalForm::Kind::Tau;
  c.n = 2;
  c.lambda = lambda;
  c.mu = mu;
  c.beta = yc.inv();
  if (!same_map(reconstruct(h.presentation(), c), h)) return std::nullopt;
  return c;
}

}  // namespace

std::vector<CanonicalForm> canonical_forms(const Automorphism& g) {
  const Presentation& p = g.presentation();
  if (p->n() != 2) return {canonical_form(g)};
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  std::vector<CanonicalForm> out;
  if (auto t = tau_params(g)) out.push_back(*t);
  Automorphism h = compose(g, invert(make_generator(p, Generator::omega())));
  if (auto t = tau_params(h)) {
    t->kind = CanonicalForm::Kind::TauOmega;
    out.push_back(*t);
  }
  return out;
}

CanonicalForm canonical_form(const Automorphism& g) {
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  const Presentation& p = g.presentation();
  int n = p->n();
  CanonicalForm c;
  c.n = n;
  if (n == 1) {
    c.kind = CanonicalForm::Kind::Weyl;
    const GwaElement &X = g.image_x(), &Y = g.image_y();
    c.weyl = {cx(X), cy(X), c1(X), cx(Y), cy(Y), c1(Y)};
    if (!same_map(reconstruct(p, c), g)) throw Error(ErrorKind::NonCanonical, "map is not affine");
    return c;
  }
  if (n == 2) {
    auto all = canonical_forms(g);
    if (all.empty()) throw Error(ErrorKind::NonCanonical, "map matches neither tau form");
    return all.front();
  }
  if (g.image_z() == GwaElement::z(p)) {
    c.kind = CanonicalForm::Kind::Theta;
    c.beta = cx(g.image_x());
  } else {
    c.kind = CanonicalForm::Kind::ThetaOmega;
    Scalar yc = cy(g.image_x());
    if (yc.is_zero()) throw Error(ErrorKind::NonCanonical, "map matches neither theta form");
    c.beta = yc.inv();
  }
  if (c.beta.is_zero() || !same_map(reconstruct(p, c), g))
    throw Error(ErrorKind::NonCanonical, "map matches neither theta form");
  return c;
}

MultOrder order(const Automorphism& g) {
  CanonicalForm c = canonical_form(g);
  long candidate = 0;
  switch (c.kind) {
    case CanonicalForm::Kind::Theta: {
      MultOrder mo = mult_order(c.beta);
      if (!mo.finite) return mo;
      candidate = mo.order;
      break;
    }
    case CanonicalForm::Kind::ThetaOmega:
      candidate = c.n % 2 == 0 ? 2 : 4;
      break;
    default: {
      Scalar s;
      if (c.kind == CanonicalForm::Kind::Weyl) {
        s = c.weyl[0] + c.weyl[4];
      } else {
        auto m = linear_part(g);
        s = m[0][0] + m[1][1] + m[2][2] - Scalar(1);
      }
      // gamma + 1/gamma = s
      Scalar gamma = (s + sqrt(s * s - Scalar(4))) / Scalar(2);
      MultOrder mo = mult_order(gamma);
      if (!mo.finite) return mo;
      candidate = mo.order;
      break;
    }
  }
  if (!is_identity(power(g, candidate))) return {false, 0};
  for (long d = 1; d < candidate; ++d) {
    if (candidate % d == 0 && is_identity(power(g, d))) return {true, d};
  }
  return {true, candidate};
}

Scalar hdet_linear(const Automorphism& g) {
  if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "map is not filtered");
  if (g.presentation()->n() == 1) {
    const GwaElement &X = g.image_x(), &Y = g.image_y();
    return cx(X) * cy(Y) - cy(X) * cx(Y);
  }
  auto m = linear_part(g);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<RelationSample> default_relation_samples() {
  Scalar r2 = sqrt(Scalar(2)), z3 = zeta(3), z4 = zeta(4);
  return {
      {Scalar(3), Scalar(2), Scalar(2), Scalar::frac(-1, 2)},
      {Scalar::frac(-1, 2), Scalar::frac(5, 3), Scalar(-3), Scalar(4)},
      {r2, Scalar(1), r2, Scalar(1) + r2},
      {z3, -z3 * z3, z3, z4},
      {z4, Scalar::frac(1, 2), z4, z3},
      {Scalar(1), Scalar(1), Scalar(3), z3},
  };
}

long RelationReport::count(RelationCheck::Status s) const {
  long k = 0;
  for (const auto& c : checks)
    if (c.status == s) ++k;
  return k;
}

const char* status_name(RelationCheck::Status s) {
  switch (s) {
    case RelationCheck::Status::Pass:
      return "pass";
    case RelationCheck::Status::Fail:
      return "fail";
    case RelationCheck::Status::Skipped:
      return "skipped";
  }
  return "";
}

RelationReport verify_relations(const Presentation& p, const std::vector<RelationSample>& samples, const std::vector<long>& ms) {
  RelationReport report;
  bool has_omega = reflective(p->a()).has_value();
  int n = p->n();
  auto gen = [&](const Generator& g) { return make_generator(p, g); };
  auto check = [&](const std::string& name, long m, const std::string& params, auto&& lhs, auto&& rhs) {
    RelationCheck c{name, m, params, RelationCheck::Status::Pass, ""};
    try {
      if (!same_map(lhs(), rhs())) c.status = RelationCheck::Status::Fail;
    } catch (const Error& e) {
      c.status = RelationCheck::Status::Fail;
      c.reason = e.what();
    }
    report.checks.push_back(c);
  };
  auto skip = [&](const std::string& name, long m, const std::string& params, const std::string& why) {
    report.checks.push_back({name, m, params, RelationCheck::Status::Skipped, why});
  };
  for (const auto& s : samples) {
    const Scalar &l = s.lambda, &mu = s.mu, &b = s.beta, &c = s.gamma;
    for (long m : ms) {
      std::string lm = "lambda=" + l.str() + ", mu=" + mu.str();
      check("(1) phi", m, lm, [&] { return compose(gen(Generator::phi(m, mu)), gen(Generator::phi(m, l))); },
            [&] { return gen(Generator::phi(m, mu + l)); });
      check("(1) psi", m, lm, [&] { return compose(gen(Generator::psi(m, mu)), gen(Generator::psi(m, l))); },
            [&] { return gen(Generator::psi(m, mu + l)); });
      std::string lb = "lambda=" + l.str() + ", beta=" + b.str();
      check("(2) phi", m, lb, [&] { return compose(gen(Generator::theta(b)), gen(Generator::phi(m, l))); },
            [&] { return compose(gen(Generator::phi(m, l * b.pow(-m))), gen(Generator::theta(b))); });
      check("(2) psi", m, lb, [&] { return compose(gen(Generator::theta(b)), gen(Generator::psi(m, l))); },
            [&] { return compose(gen(Generator::psi(m, l * b.pow(m))), gen(Generator::theta(b))); });
      if (has_omega) {
        check("(5) phi omega", m, "lambda=" + l.str(), [&] { return compose(gen(Generator::phi(m, l)), gen(Generator::omega())); },
              [&] { return compose(gen(Generator::omega()), gen(Generator::psi(m, l))); });
      } else {
        skip("(5) phi omega", m, "lambda=" + l.str(), "a is not reflective");
      }
    }
    std::string bc = "beta=" + b.str() + ", gamma=" + c.str();
    check("(3) theta", 0, bc, [&] { return compose(gen(Generator::theta(b)), gen(Generator::theta(c))); },
          [&] { return gen(Generator::theta(b * c)); });
    if (has_omega) {
      check("(4) omega theta", 0, "beta=" + b.str(), [&] { return compose(gen(Generator::omega()), gen(Generator::theta(b))); },
            [&] { return compose(gen(Generator::theta(b.inv())), gen(Generator::omega())); });
    } else {
      skip("(4) omega theta", 0, "beta=" + b.str(), "a is not reflective");
    }
    std::string lmu = "lambda=" + l.str() + ", mu=" + mu.str();
    Scalar eta = Scalar(1) - l * mu;
    if (n != 2) {
      skip("phipsi", 1, lmu, "stated for n = 2");
    } else if (eta.is_zero()) {
      skip("phipsi", 1, lmu, "eta = 1 - lambda*mu is zero");
    } else {
      check("phipsi", 1, lmu, [&] { return compose(gen(Generator::phi(1, mu)), gen(Generator::psi(1, l))); },
            [&] {
              return make_word(p, {Generator::psi(1, l * eta.inv()), Generator::phi(1, mu * eta), Generator::theta(eta.pow(-2))});
            });
    }
  }
  return report;
}

std::string GroupClass::str() const {
  switch (kind) {
    case Kind::Cyclic:
      return "Cyclic(" + std::to_string(order) + ")";
    case Kind::Dihedral:
      return "Dihedral(" + std::to_string(order) + ")";
    case Kind::BinaryDihedral:
      return "BinaryDihedral(" + std::to_string(order) + ")";
    case Kind::C2:
      return "C2";
    case Kind::C4:
      return "C4";
    case Kind::Infinite:
      return "Infinite";
  }
  return "";
}

namespace {

std::string map_key(const Automorphism& g) {
  return g.image_x().str() + "|" + g.image_y().str() + "|" + g.image_z().str();
}

}  // namespace

std::vector<Automorphism> group_closure(const std::vector<Automorphism>& gens, std::size_t limit) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  std::vector<Automorphism> elems{identity(gens.front().presentation())};
  std::unordered_map<std::string, std::size_t> index{{map_key(elems.front()), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Automorphism next = compose(elems[i], s);
      std::string key = map_key(next);
      if (index.count(key)) continue;
      if (elems.size() >= limit) throw Error(ErrorKind::GroupNotClosed, "closure exceeds " + std::to_string(limit) + " elements");
      index.emplace(key, elems.size());
      elems.push_back(next);
    }
  }
  return elems;
}

GroupClass classify_finite_subgroup(const std::vector<Automorphism>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  int n = gens.front().presentation()->n();
  if (n <= 2) throw Error(ErrorKind::DegreeTooSmall, "classification needs n >= 3");
  for (const auto& g : gens) {
    if (!is_filtered(g)) throw Error(ErrorKind::NotFiltered, "generator " + g.str() + " is not filtered");
    if (!order(g).finite) return {GroupClass::Kind::Infinite, 0};
  }
  // products of finite-order generators can still have infinite order
  std::vector<Automorphism> elems;
  try {
    elems = group_closure(gens);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GroupNotClosed) return {GroupClass::Kind::Infinite, 0};
    throw;
  }
  long size = static_cast<long>(elems.size());
  GwaElement z = GwaElement::z(gens.front().presentation());
  long reflections = 0;
  for (const auto& e : elems) {
    if (e.image_z() == z) continue;
    ++reflections;
    MultOrder o = order(e);
    long expected = n % 2 == 0 ? 2 : 4;
    if (!o.finite || o.order != expected) throw Error(ErrorKind::Internal, "unexpected order of " + e.str());
  }
  if (reflections == 0) return {GroupClass::Kind::Cyclic, size};
  if (2 * reflections != size) throw Error(ErrorKind::Internal, "diagonal part is not of index 2");
  if (n % 2 == 0) return size == 2 ? GroupClass{GroupClass::Kind::C2, 2} : GroupClass{GroupClass::Kind::Dihedral, size};
  return size == 4 ? GroupClass{GroupClass::Kind::C4, 4} : GroupClass{GroupClass::Kind::BinaryDihedral, size};
}

}  // namespace gwalg
