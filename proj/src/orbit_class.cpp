#include "pvs/orbit_class.hpp"

#include "pvs/representatives.hpp"

namespace pvs {

std::string to_string(RealOrbit o) {
  switch (o) {
    case RealOrbit::case1_positive: return "case1_positive";
    case RealOrbit::case1_negative: return "case1_negative";
    case RealOrbit::case2_split: return "case2_split";
    case RealOrbit::case2_nonsplit: return "case2_nonsplit";
    case RealOrbit::case3_nondegenerate: return "case3_nondegenerate";
    case RealOrbit::degenerate: return "degenerate";
  }
  return "?";
}

bool real_rank_positive(RealOrbit o) {
  switch (o) {
    case RealOrbit::case1_positive:
    case RealOrbit::case1_negative:
    case RealOrbit::case2_split:
    case RealOrbit::case3_nondegenerate:
      return true;
    case RealOrbit::case2_nonsplit:
    case RealOrbit::degenerate:
      return false;
  }
  return false;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

Definiteness definiteness(const Matrix<double>& gram, double tol) {
  const auto n = static_cast<Eigen::Index>(gram.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double bound = tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(ev(i)) <= bound) return Definiteness::degenerate;
    (ev(i) > 0 ? pos : neg)++;
  }
  if (neg == 0) return Definiteness::positive;
  if (pos == 0) return Definiteness::negative;
  return Definiteness::indefinite;
}

long field_kx(const AlternatingForm<Rational>& x) {
  detail::check_shape(x, 6, 3, "field_kx");
  const Rational delta = delta_case1(x);
  if (delta.is_zero()) throw DomainError("not semistable: Delta(x) = 0");
  return squarefree_part(delta).d;
}

GrassmannPoint<QuadExt> eigenspaces(const AlternatingForm<Rational>& x) {
  detail::check_shape(x, 6, 3, "eigenspaces");
  const Matrix<Rational> s = s_case1(x);
  const Rational delta = delta_case1(x);
  if (delta.is_zero()) throw DomainError("not semistable: Delta(x) = 0");
  const auto split = squarefree_part(delta);
  const Rational r = abs(split.r);
  const QuadExt root = split.d == 1 ? QuadExt(r) : QuadExt(Rational(0), r, split.d);
  return detail::grassmann_point(matrix_cast<QuadExt>(s), root, ExactZero{});
}

GrassmannPoint<QuadExt> eigenspaces(const AlternatingForm<QuadExt>& x) {
  detail::check_shape(x, 6, 3, "eigenspaces");
  const Matrix<QuadExt> s = s_case1(x);
  const QuadExt delta = delta_case1(x);
  if (delta.is_zero()) throw DomainError("not semistable: Delta(x) = 0");
  const auto root = exact_sqrt(delta);
  if (!root) throw DomainError("sqrt(Delta(x)) is not in the coefficient field");
  return detail::grassmann_point(s, *root, ExactZero{});
}

GrassmannPoint<std::complex<double>> eigenspaces(const AlternatingForm<double>& x, double tol) {
  using C = std::complex<double>;
  detail::check_shape(x, 6, 3, "eigenspaces");
  const Matrix<double> s = s_case1(x);
  const double delta = delta_case1(x);
  double size = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) size = std::max(size, std::abs(s(i, j)));
  if (std::abs(delta) <= tol * std::max(1.0, size * size)) throw DomainError("not semistable: Delta(x) = 0");
  const C root = std::sqrt(C(delta, 0.0));
  return detail::grassmann_point(matrix_cast<C>(s), root, NearZero{tol * std::max(1.0, size)});
}

GrassmannPoint<QuadExt> galois_conj(const GrassmannPoint<QuadExt>& g) {
  auto conj_vec = [](const std::vector<QuadExt>& v) {
    std::vector<QuadExt> out;
    for (const auto& c : v) out.push_back(c.conj());
    return out;
  };
  return {galois_conj(g.e1), galois_conj(g.e2), conj_vec(g.plucker1), conj_vec(g.plucker2)};
}

// ---------------------------------------------------------------------------

std::string PointVerdict::label() const {
  if (!applicable) return "not applicable";
  if (rational) return certified ? "rational (certified)" : "rational (reconstructed)";
  return certified ? "irrational (certified)" : "no rational point found (heuristic irrational)";
}

namespace {

template <class T, class IsZero>
std::vector<T> normalized(const std::vector<T>& v, IsZero is_zero) {
  auto it = std::find_if(v.begin(), v.end(), [&](const T& c) { return !is_zero(c); });
  if (it == v.end()) throw DomainError("zero vector has no projective point");
  const T lead = *it;
  std::vector<T> out;
  for (const auto& c : v) out.push_back(c / lead);
  return out;
}

bool all_rational(const std::vector<QuadExt>& v) {
  return std::all_of(v.begin(), v.end(), [](const QuadExt& c) { return c.is_rational(); });
}

using Cd = std::complex<double>;

bool all_reconstruct(const std::vector<Cd>& v, long max_den, double tol) {
  return std::all_of(v.begin(), v.end(), [&](const Cd& c) {
    return std::abs(c.imag()) <= tol && rational_reconstruct(c.real(), max_den, tol).has_value();
  });
}

std::vector<Cd> normalized_float(const std::vector<Cd>& v, double tol) {
  double m = 0.0;
  for (const Cd& c : v) m = std::max(m, std::abs(c));
  return normalized(v, [&](const Cd& c) { return std::abs(c) <= tol * m; });
}

template <class T>
std::vector<QuadExt> to_quadext(const std::vector<T>& v) {
  std::vector<QuadExt> out;
  for (const auto& c : v) out.push_back(QuadExt(c));
  return out;
}

template <class T>
std::vector<T> upper_triangle(const Matrix<T>& m) {
  std::vector<T> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

void finish_mode(IrrationalityReport& r) {
  bool exact = r.x.certified;
  bool any_exact = r.x.certified;
  for (const auto* v : {&r.q, &r.e1, &r.e2, &r.gr}) {
    if (!*v || !(*v)->applicable) continue;
    exact = exact && (*v)->certified;
    any_exact = any_exact || (*v)->certified;
  }
  r.mode = exact ? "exact" : (any_exact ? "mixed" : "float");
}

void float_case1(IrrationalityReport& r, const AlternatingForm<double>& x, long max_den, double tol) {
  const auto g = eigenspaces(x, tol);
  r.e1 = projective_verdict(g.plucker1, max_den, tol);
  r.e2 = projective_verdict(g.plucker2, max_den, tol);
  r.gr = pair_verdict(g.plucker1, g.plucker2, max_den, tol);
}

void exact_case1(IrrationalityReport& r, const GrassmannPoint<QuadExt>& g) {
  r.e1 = projective_verdict(g.plucker1);
  r.e2 = projective_verdict(g.plucker2);
  r.gr = pair_verdict(g.plucker1, g.plucker2);
}

}  // namespace

PointVerdict projective_verdict(const std::vector<QuadExt>& coords) {
  const auto n = normalized(coords, [](const QuadExt& c) { return c.is_zero(); });
  return {true, all_rational(n), true};
}

PointVerdict pair_verdict(const std::vector<QuadExt>& p1, const std::vector<QuadExt>& p2) {
  auto is_zero = [](const QuadExt& c) { return c.is_zero(); };
  const auto a = normalized(p1, is_zero);
  const auto b = normalized(p2, is_zero);
  std::vector<QuadExt> sym;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sym.push_back(a[i] + b[i]);
    sym.push_back(a[i] * b[i]);
  }
  return {true, all_rational(sym), true};
}

PointVerdict projective_verdict(const std::vector<Cd>& coords, long max_den, double tol) {
  return {true, all_reconstruct(normalized_float(coords, tol), max_den, tol), false};
}

PointVerdict projective_verdict(const std::vector<double>& coords, long max_den, double tol) {
  return projective_verdict(std::vector<Cd>(coords.begin(), coords.end()), max_den, tol);
}

PointVerdict pair_verdict(const std::vector<Cd>& p1, const std::vector<Cd>& p2, long max_den, double tol) {
  const auto a = normalized_float(p1, tol);
  const auto b = normalized_float(p2, tol);
  std::vector<Cd> sym;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sym.push_back(a[i] + b[i]);
    sym.push_back(a[i] * b[i]);
  }
  return {true, all_reconstruct(sym, max_den, tol), false};
}

IrrationalityReport irrationality_report(const AlternatingForm<Rational>& x) {
  IrrationalityReport r{detect_case(x), "exact", {true, true, true}, {}, {}, {}, {}};
  if (x.coeffs().empty()) throw DomainError("zero vector has no projective point");
  if (r.form_case == FormCase::case2) r.q = projective_verdict(to_quadext(upper_triangle(q_case2(x).gram)));
  if (r.form_case == FormCase::case1) exact_case1(r, eigenspaces(x));
  return r;
}

IrrationalityReport irrationality_report(const AlternatingForm<QuadExt>& x, long max_den, double tol) {
  for (const auto& [b, c] : x.coeffs())
    if (c.d() < 0 && !c.is_rational()) throw DomainError("coefficients are not real");
  IrrationalityReport r{detect_case(x), "exact", projective_verdict(x.to_vector()), {}, {}, {}, {}};
  if (r.form_case == FormCase::case2) r.q = projective_verdict(upper_triangle(q_case2(x).gram));
  if (r.form_case == FormCase::case1) {
    const QuadExt delta = delta_case1(x);
    if (delta.is_zero()) throw DomainError("not semistable: Delta(x) = 0");
    if (exact_sqrt(delta)) {
      exact_case1(r, eigenspaces(x));
    } else {
      float_case1(r, form_cast<double>(x), max_den, tol);
    }
  }
  finish_mode(r);
  return r;
}

IrrationalityReport irrationality_report(const AlternatingForm<double>& x, long max_den, double tol) {
  IrrationalityReport r{detect_case(x), "float", projective_verdict(x.to_vector(), max_den, tol), {}, {}, {}, {}};
  if (r.form_case == FormCase::case2) r.q = projective_verdict(upper_triangle(q_case2(x).gram), max_den, tol);
  if (r.form_case == FormCase::case1) float_case1(r, x, max_den, tol);
  return r;
}

}  // namespace pvs
