#pragma once

// Real orbit classification, the field k(x), the eigenspaces of S_x and the
// projective irrationality tests.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pvs/invariants.hpp"
#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"
#include "pvs/scalars.hpp"

namespace pvs {

enum class RealOrbit { case1_positive, case1_negative, case2_split, case2_nonsplit, case3_nondegenerate, degenerate };

std::string to_string(RealOrbit o);

/// Positive real rank of the generic stabilizer, read from the orbit tag.
bool real_rank_positive(RealOrbit o);

struct OrbitReport {
  FormCase form_case;
  RealOrbit real_orbit;
  std::optional<long> field_kx;  // case 1 over Q only, when computable; 1 means k(x) = Q
  bool real_rank_positive;
};

enum class Definiteness { positive, negative, indefinite, degenerate };

std::string to_string(Definiteness d);

/// Sylvester's criterion on the leading principal minors. T must be ordered
/// (Rational, or QuadExt over a real field).
template <ExactScalar T>
Definiteness definiteness(const Matrix<T>& gram) {
  const std::size_t n = gram.rows();
  if (det(gram) == T(0)) return Definiteness::degenerate;
  bool pos = true;
  bool neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    const int s = real_sign(det(lead));
    if (s <= 0) pos = false;
    if (s == 0 || s != (k % 2 == 0 ? 1 : -1)) neg = false;
  }
  if (pos) return Definiteness::positive;
  if (neg) return Definiteness::negative;
  return Definiteness::indefinite;
}

/// Eigenvalue signs; an eigenvalue is zero when |lambda| <= tol * max(1, max |lambda|).
Definiteness definiteness(const Matrix<double>& gram, double tol);

namespace detail {

template <class T>
double max_abs_coeff(const AlternatingForm<T>& x) {
  double m = 0.0;
  for (const auto& [b, c] : x.coeffs()) m = std::max(m, std::abs(ScalarTraits<T>::to_double(c)));
  return m;
}

/// Zero test for a float invariant homogeneous of the given degree in x.
inline bool invariant_is_zero(double value, double scale, int degree, double tol) {
  return std::abs(value) <= tol * std::max(1.0, std::pow(scale, degree));
}

}  // namespace detail

/// Rational or real-quadratic coefficients are classified exactly; doubles use
/// tol relative to the size of x.
template <class T>
OrbitReport classify_real(const AlternatingForm<T>& x, double tol = 1e-9) {
  OrbitReport r{detect_case(x), RealOrbit::degenerate, std::nullopt, false};
  const double scale = detail::max_abs_coeff(x);
  switch (r.form_case) {
    case FormCase::case1: {
      const T delta = delta_case1(x);
      int s = 0;
      if constexpr (FloatScalar<T>) {
        s = detail::invariant_is_zero(delta, scale, 4, tol) ? 0 : real_sign(delta);
      } else {
        s = real_sign(delta);
      }
      if (s > 0) r.real_orbit = RealOrbit::case1_positive;
      if (s < 0) r.real_orbit = RealOrbit::case1_negative;
      if constexpr (std::is_same_v<T, Rational>) {
        // unset when the squarefree kernel of Delta cannot be factored or exceeds long
        if (s != 0) {
          try {
            r.field_kx = squarefree_part(delta).d;
          } catch (const DomainError&) {
          }
        }
      }
      break;
    }
    case FormCase::case2: {
      const Matrix<T> gram = q_case2(x).gram;
      Definiteness d;
      if constexpr (FloatScalar<T>) {
        d = definiteness(gram, tol);
      } else {
        d = definiteness(gram);
      }
      if (d == Definiteness::indefinite) r.real_orbit = RealOrbit::case2_split;
      if (d == Definiteness::positive || d == Definiteness::negative) r.real_orbit = RealOrbit::case2_nonsplit;
      break;
    }
    case FormCase::case3: {
      const T pf = pfaffian(x);
      bool zero;
      if constexpr (FloatScalar<T>) {
        zero = detail::invariant_is_zero(pf, scale, x.dim() / 2, tol);
      } else {
        zero = pf == T(0);
      }
      if (!zero) r.real_orbit = RealOrbit::case3_nondegenerate;
      break;
    }
  }
  r.real_rank_positive = real_rank_positive(r.real_orbit);
  return r;
}

/// Squarefree d with k(x) = Q(sqrt d); DomainError when Delta(x) = 0.
long field_kx(const AlternatingForm<Rational>& x);

/// Unordered pair of 3-dimensional subspaces of k^6, each stored as a 3x6
/// row basis in reduced row echelon form, with their Pluecker coordinates.
template <class T>
struct GrassmannPoint {
  Matrix<T> e1;
  Matrix<T> e2;
  std::vector<T> plucker1;
  std::vector<T> plucker2;
};

/// The 20 maximal minors of a 3x6 basis, indexed by all_blades(6, 3).
template <class T>
std::vector<T> plucker(const Matrix<T>& basis) {
  std::vector<T> out;
  for (Blade b : all_blades(6, 3)) {
    const auto cols = blade_indices(b);
    Matrix<T> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = basis(i, static_cast<std::size_t>(cols[j] - 1));
    out.push_back(det(m));
  }
  return out;
}

namespace detail {

template <class T, class ZeroTest>
Matrix<T> eigen_basis(const Matrix<T>& s, const T& lambda, ZeroTest zero) {
  Matrix<T> m = s - Matrix<T>::identity(6) * lambda;
  const auto ns = nullspace(m, zero);
  if (ns.size() != 3) throw std::logic_error("eigenspace of S_x is not 3-dimensional");
  return rref(from_rows(ns, 6), zero).m;
}

template <class T, class ZeroTest>
GrassmannPoint<T> grassmann_point(const Matrix<T>& s, const T& root, ZeroTest zero) {
  GrassmannPoint<T> g{eigen_basis(s, root, zero), eigen_basis(s, -root, zero), {}, {}};
  g.plucker1 = plucker(g.e1);
  g.plucker2 = plucker(g.e2);
  return g;
}

}  // namespace detail

/// E_{x1}, E_{x2} for rational x, exactly over Q(sqrt d) with d = field_kx(x).
/// e1 belongs to +sqrt(Delta), where sqrt(d) is the positive (or +i) root.
GrassmannPoint<QuadExt> eigenspaces(const AlternatingForm<Rational>& x);

/// Same for x over Q(sqrt d); requires Delta(x) to be a square in Q(sqrt d).
GrassmannPoint<QuadExt> eigenspaces(const AlternatingForm<QuadExt>& x);

/// Float eigenspaces over C; tol is relative to the size of S_x.
GrassmannPoint<std::complex<double>> eigenspaces(const AlternatingForm<double>& x, double tol = 1e-9);

/// Same subspace: equal reduced row echelon bases.
template <class T>
bool same_pair(const GrassmannPoint<T>& a, const GrassmannPoint<T>& b) {
  return (a.e1 == b.e1 && a.e2 == b.e2) || (a.e1 == b.e2 && a.e2 == b.e1);
}

GrassmannPoint<QuadExt> galois_conj(const GrassmannPoint<QuadExt>& g);

// ---------------------------------------------------------------------------
// Irrationality

struct PointVerdict {
  bool applicable = true;
  bool rational = false;
  bool certified = false;  // exact arithmetic decided the verdict

  [[nodiscard]] std::string label() const;
};

struct IrrationalityReport {
  FormCase form_case;
  std::string mode;  // "exact", "float", or "mixed"
  PointVerdict x;    // [x] in P(V)
  std::optional<PointVerdict> q;   // [Q_x], case 2
  std::optional<PointVerdict> e1;  // [E_x1] in Gr(3,6)(C), case 1
  std::optional<PointVerdict> e2;  // [E_x2] in Gr(3,6)(C), case 1
  std::optional<PointVerdict> gr;  // Gr(x) as an unordered pair, case 1; a real point for either sign of Delta
};

/// Exact verdicts: a projective point with coordinates in Q(sqrt d) is rational
/// iff its normalized coordinates are rational.
PointVerdict projective_verdict(const std::vector<QuadExt>& coords);
PointVerdict pair_verdict(const std::vector<QuadExt>& p1, const std::vector<QuadExt>& p2);

/// Float verdicts by bounded-denominator reconstruction of normalized coordinates.
/// Every real number has a convergent p/q, q <= Q, within about 1/(q Q), so the
/// verdict only separates anything when tol * max_den^2 is well below 1.
/// A complex coordinate counts as rational when its imaginary part is within tol
/// of zero and its real part reconstructs.
PointVerdict projective_verdict(const std::vector<std::complex<double>>& coords, long max_den, double tol);
PointVerdict projective_verdict(const std::vector<double>& coords, long max_den, double tol);
PointVerdict pair_verdict(const std::vector<std::complex<double>>& p1, const std::vector<std::complex<double>>& p2,
                          long max_den, double tol);

IrrationalityReport irrationality_report(const AlternatingForm<Rational>& x);
IrrationalityReport irrationality_report(const AlternatingForm<QuadExt>& x, long max_den = 1000, double tol = 1e-9);
IrrationalityReport irrationality_report(const AlternatingForm<double>& x, long max_den = 1000, double tol = 1e-9);

}  // namespace pvs
