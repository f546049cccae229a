#include "pvs/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvs {

namespace {

constexpr int kMaxDoublings = 64;
constexpr int kMaxHalvings = 64;

using Form = AlternatingForm<Rational>;

Rational c(const Form& z, std::initializer_list<int> idx) { return z.coeff(make_blade(idx, z.dim())); }
void put(Form& z, std::initializer_list<int> idx, const Rational& v) { z.set(make_blade(idx, z.dim()), v); }

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
}

Form start_form(const PartialTarget& y) {
  y.validate();
  Form z(y.dim(), y.degree());
  for (const auto& [b, v] : y.values) z.set(b, Rational::from_double(v));
  return z;
}

/// Adds delta to one coordinate, trying coordinates in order and halving delta
/// (starting from delta0) until pred holds. When no single coordinate works at
/// a given delta (pred may vanish to second order, e.g. at y = 0), delta is
/// also added cumulatively along the same order. Each coordinate moves by at
/// most delta0.
template <class Pred>
bool nudge(Form& z, const std::vector<Blade>& coords, const Rational& delta0, Pred pred, int& count) {
  if (pred(z)) return true;
  Rational delta = delta0;
  for (int h = 0; h < kMaxHalvings; ++h, delta *= Rational(1, 2)) {
    for (Blade b : coords) {
      Form t = z;
      t.add(b, delta);
      if (pred(t)) {
        z = std::move(t);
        ++count;
        return true;
      }
    }
    Form t = z;
    for (Blade b : coords) {
      t.add(b, delta);
      if (pred(t)) {
        z = std::move(t);
        ++count;
        return true;
      }
    }
  }
  return false;
}

/// Smallest q = 2^k >= 1 with pred(q); logic_error past 2^64.
template <class Pred>
Rational grow(Pred pred, int& doublings) {
  Rational q(1);
  for (int k = 0; k <= kMaxDoublings; ++k, q *= Rational(2)) {
    if (pred(q)) return q;
    ++doublings;
  }
  throw std::logic_error("doubling did not terminate below 2^64");
}

Rational half_eps(double epsilon, int shift) {
  return Rational::from_double(epsilon) * pow(Rational(1, 2), static_cast<unsigned>(shift));
}

PerturbationCertificate finish(const PartialTarget& y, Form z, double epsilon, RealOrbit requested,
                               PerturbationCertificate cert) {
  cert.z = form_cast<double>(z);
  cert.z_exact = std::move(z);
  cert.epsilon = epsilon;
  cert.requested = requested;
  double dev = 0.0;
  for (const auto& [b, v] : y.values) dev = std::max(dev, std::abs(v - cert.z.coeff(b)));
  cert.deviation = dev;
  cert.orbit = classify_real(cert.z, 1e-9);
  return cert;
}

int sign_of(const Rational& q) { return q.sign() < 0 ? -1 : 1; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Blade> constrained_blades(FormCase c, int n) {
  switch (c) {
    case FormCase::case1: return all_blades(5, 3);
    case FormCase::case2: return all_blades(6, 3);
    case FormCase::case3:
      if (n < 1) throw std::invalid_argument("case 3 needs n >= 1");
      return all_blades(2 * n - 1, 2);
  }
  return {};
}

int PartialTarget::dim() const {
  switch (form_case) {
    case FormCase::case1: return 6;
    case FormCase::case2: return 7;
    case FormCase::case3: return 2 * n;
  }
  return 0;
}

int PartialTarget::degree() const { return form_case == FormCase::case3 ? 2 : 3; }

void PartialTarget::validate() const {
  const auto want = constrained_blades(form_case, n);
  if (values.size() != want.size()) {
    throw std::invalid_argument("target has " + std::to_string(values.size()) + " values, expected " +
                                std::to_string(want.size()));
  }
  for (Blade b : want) {
    auto it = values.find(b);
    if (it == values.end()) throw std::invalid_argument("target is missing coordinate " + blade_key(b));
    if (!std::isfinite(it->second)) throw std::invalid_argument("target coordinate " + blade_key(b) + " is not finite");
  }
}

PartialTarget restrict_target(const AlternatingForm<double>& y) {
  PartialTarget t{detect_case(y), y.degree() == 2 ? y.dim() / 2 : 0, {}};
  for (Blade b : constrained_blades(t.form_case, t.n)) t.values[b] = y.coeff(b);
  return t;
}

PartialTarget zero_target(FormCase c, int n) {
  PartialTarget t{c, c == FormCase::case3 ? n : 0, {}};
  for (Blade b : constrained_blades(c, t.n)) t.values[b] = 0.0;
  return t;
}

double PerturbationCertificate::aux_value(const std::string& name) const {
  for (const auto& [k, v] : aux)
    if (k == name) return v;
  throw std::out_of_range("no auxiliary value " + name);
}

// ---------------------------------------------------------------------------

Quadratic delta_in_z456(const Form& z) {
  auto at = [&](long t) {
    Form u = z;
    put(u, {4, 5, 6}, Rational(t));
    return delta_case1_explicit(u);
  };
  const Rational d0 = at(0), dp = at(1), dm = at(-1);
  return {(dp + dm) * Rational(1, 2) - d0, (dp - dm) * Rational(1, 2), d0};
}

BilinearFit case1_discriminant_fit(const Form& z) {
  auto disc = [&](long s, long t) {
    Form u = z;
    put(u, {1, 5, 6}, Rational(s));
    put(u, {2, 4, 6}, Rational(t));
    return delta_in_z456(u).discriminant();
  };
  const Rational d00 = disc(0, 0), d10 = disc(1, 0), d01 = disc(0, 1), d11 = disc(1, 1);
  return {d11 - d10 - d01 + d00, d10 - d00, d01 - d00, d00};
}

Rational case1_f1(const Form& z) {
  const Rational z123 = c(z, {1, 2, 3});
  return Rational(16) * z123 * z123 *
         (z123 * c(z, {3, 4, 5}) - c(z, {1, 3, 4}) * c(z, {2, 3, 5}) + c(z, {1, 3, 5}) * c(z, {2, 3, 4}));
}

Rational case2_f3(const Form& z) {
  return Rational(2) * (c(z, {1, 3, 4}) * c(z, {1, 5, 6}) - c(z, {1, 3, 5}) * c(z, {1, 4, 6}) +
                        c(z, {1, 3, 6}) * c(z, {1, 4, 5}));
}

// ---------------------------------------------------------------------------

PerturbationCertificate extend_case1(const PartialTarget& y, double epsilon, OrbitSign sign) {
  check_epsilon(epsilon);
  if (y.form_case != FormCase::case1) throw std::invalid_argument("extend_case1 needs a case 1 target");
  Form z = start_form(y);
  PerturbationCertificate cert;
  const auto coords = constrained_blades(FormCase::case1);

  // z123 bounded away from zero by eps/2
  const Rational half = half_eps(epsilon, 1);
  const Rational y123 = c(z, {1, 2, 3});
  if (abs(y123) < half) put(z, {1, 2, 3}, y123 + (y123.sign() < 0 ? -half : half));

  if (sign == OrbitSign::positive) {
    const Rational q = grow(
        [&](const Rational& t) {
          put(z, {4, 5, 6}, t);
          return delta_case1_explicit(z) > Rational(0);
        },
        cert.doublings);
    put(z, {4, 5, 6}, q);
    cert.aux.emplace_back("delta", delta_case1_explicit(z).to_double());
    return finish(y, std::move(z), epsilon, RealOrbit::case1_positive, std::move(cert));
  }

  if (!nudge(z, coords, half_eps(epsilon, 2), [](const Form& t) { return !case1_f1(t).is_zero(); }, cert.nudges))
    throw std::logic_error("no nudge makes f1 nonzero");
  const BilinearFit fit = case1_discriminant_fit(z);
  const int s = sign_of(fit.f1);
  const Rational q = grow([&](const Rational& t) { return fit(Rational(s) * t, t) > Rational(0); }, cert.doublings);
  put(z, {1, 5, 6}, Rational(s) * q);
  put(z, {2, 4, 6}, q);
  const Quadratic quad = delta_in_z456(z);
  // vertex of a t^2 + b t + c; its value is -disc / (4a) < 0
  put(z, {4, 5, 6}, -quad.b / (Rational(2) * quad.a));
  cert.aux = {{"f1", fit.f1.to_double()},
              {"f1_closed", case1_f1(z).to_double()},
              {"f2", fit.f2.to_double()},
              {"f3", fit.f3.to_double()},
              {"f4", fit.f4.to_double()},
              {"discriminant", quad.discriminant().to_double()},
              {"delta", delta_case1_explicit(z).to_double()}};
  return finish(y, std::move(z), epsilon, RealOrbit::case1_negative, std::move(cert));
}

PerturbationCertificate extend_case2(const PartialTarget& y, double epsilon) {
  check_epsilon(epsilon);
  if (y.form_case != FormCase::case2) throw std::invalid_argument("extend_case2 needs a case 2 target");
  Form z = start_form(y);
  PerturbationCertificate cert;
  const auto coords = constrained_blades(FormCase::case2);

  if (!nudge(z, coords, half_eps(epsilon, 2), [](const Form& t) { return !case2_f3(t).is_zero(); }, cert.nudges))
    throw std::logic_error("no nudge makes f3 nonzero");
  const Rational f3 = case2_f3(z);
  const int s = sign_of(f3);
  auto gram = [](const Form& t) { return q_case2(t).gram; };
  put(z, {3, 4, 7}, Rational(1));
  put(z, {5, 6, 7}, Rational(-s));
  const Rational q = grow(
      [&](const Rational& t) {
        put(z, {1, 2, 7}, Rational(s) * t);
        return gram(z)(0, 0) > Rational(0);
      },
      cert.doublings);
  put(z, {1, 2, 7}, Rational(s) * q);
  auto good = [&](const Form& t) {
    const auto g = gram(t);
    return g(0, 0) > Rational(0) && g(6, 6) < Rational(0) && !det(g).is_zero();
  };
  if (!nudge(z, coords, half_eps(epsilon, 2), good, cert.nudges)) throw std::logic_error("no nudge makes z semistable");
  const auto g = gram(z);
  const Rational z127 = c(z, {1, 2, 7});
  const Rational f3z = case2_f3(z);
  cert.aux = {{"f1", g(0, 0).to_double()},
              {"f2", g(6, 6).to_double()},
              {"f3", f3z.to_double()},
              {"f4", (g(0, 0) - Rational(3) * z127 * f3z).to_double()},
              {"det_q", det(g).to_double()}};
  return finish(y, std::move(z), epsilon, RealOrbit::case2_split, std::move(cert));
}

PerturbationCertificate extend_case3(const PartialTarget& y, double epsilon) {
  check_epsilon(epsilon);
  if (y.form_case != FormCase::case3) throw std::invalid_argument("extend_case3 needs a case 3 target");
  Form z = start_form(y);
  PerturbationCertificate cert;
  const int dim = 2 * y.n;
  // pf is linear in the free column z_{i,2n}; find a column entry with nonzero coefficient
  auto pivot = [&](const Form& t) -> int {
    for (int i = 1; i < dim; ++i) {
      Form u = t;
      u.set(make_blade({i, dim}, dim), Rational(1));
      if (!pfaffian(u).is_zero()) return i;
    }
    return 0;
  };
  if (!nudge(z, constrained_blades(FormCase::case3, y.n), half_eps(epsilon, 1),
             [&](const Form& t) { return pivot(t) != 0; }, cert.nudges))
    throw std::logic_error("no nudge makes the pfaffian nonzero");
  z.set(make_blade({pivot(z), dim}, dim), Rational(1));
  cert.aux.emplace_back("pfaffian", pfaffian(z).to_double());
  return finish(y, std::move(z), epsilon, RealOrbit::case3_nondegenerate, std::move(cert));
}

PerturbationCertificate extend(const PartialTarget& y, double epsilon, OrbitSign sign) {
  switch (y.form_case) {
    case FormCase::case1: return extend_case1(y, epsilon, sign);
    case FormCase::case2: return extend_case2(y, epsilon);
    case FormCase::case3: return extend_case3(y, epsilon);
  }
  throw std::invalid_argument("unknown case");
}

}  // namespace pvs
