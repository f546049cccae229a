#pragma once

// Relative invariants of the three spaces:
//   case 1  wedge^3 k^6 : S_x (6x6) with S_x^2 = Delta(x) I, Delta of degree 4
//   case 2  wedge^3 k^7 : S_x, the quadratic form Q_x, Delta of degree 7
//   case 3  wedge^2 k^2n: the Pfaffian

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"

namespace pvs {

enum class FormCase { case1 = 1, case2 = 2, case3 = 3 };

/// Case from (dim, degree) alone; throws DomainError for any other shape.
FormCase detect_case(int dim, int degree);

template <class T>
FormCase detect_case(const AlternatingForm<T>& x) {
  return detect_case(x.dim(), x.degree());
}

/// Q(v) = v^T gram v.
template <class T>
struct QuadraticForm {
  Matrix<T> gram;

  [[nodiscard]] std::size_t dim() const { return gram.rows(); }
  [[nodiscard]] T operator()(const std::vector<T>& v) const { return polar(v, v); }
  /// Symmetric bilinear form with Q(v) = B(v, v).
  [[nodiscard]] T polar(const std::vector<T>& u, const std::vector<T>& v) const {
    T acc(0);
    for (std::size_t i = 0; i < gram.rows(); ++i) {
      if (u[i] == T(0)) continue;
      for (std::size_t j = 0; j < gram.cols(); ++j) acc += u[i] * gram(i, j) * v[j];
    }
    return acc;
  }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram == b.gram; }
};

namespace detail {

template <class T>
void check_shape(const AlternatingForm<T>& x, int dim, int degree, const char* op) {
  if (x.dim() != dim || x.degree() != degree) {
    throw std::invalid_argument(std::string(op) + ": expected a form of shape (" + std::to_string(dim) + ", " +
                                std::to_string(degree) + ")");
  }
}

/// D3(x) grouped by its wedge part: blade -> list of (vector index, coefficient).
template <class T>
std::unordered_map<Blade, std::vector<std::pair<int, T>>> d3_by_blade(const AlternatingForm<T>& x) {
  std::unordered_map<Blade, std::vector<std::pair<int, T>>> out;
  const auto dx = d3(x);
  for (const auto& [key, c] : dx.coeffs()) out[key.first].emplace_back(key.second[0], c);
  return out;
}

}  // namespace detail

/// S_x = x ^ D3(x) in wedge^5 W (x) W, read as a 6x6 matrix via
/// e_{complement(j)} -> -sign(e_{complement(j)} ^ e_j) f_j. The global sign
/// makes S_w = diag(1,1,1,-1,-1,-1) for w = e123 + e456.
template <class T>
Matrix<T> s_case1(const AlternatingForm<T>& x) {
  detail::check_shape(x, 6, 3, "s_case1");
  Matrix<T> s(6, 6);
  const auto dx = d3(x);
  constexpr Blade kAll = (Blade{1} << 6) - 1;
  for (const auto& [bx, cx] : x.coeffs()) {
    for (const auto& [key, cd] : dx.coeffs()) {
      const int s1 = wedge_sign(bx, key.first);
      if (s1 == 0) continue;
      const Blade five = bx | key.first;
      const Blade jb = kAll & ~five;
      const int j = std::countr_zero(jb) + 1;
      const int s2 = wedge_sign(five, jb);
      const T v = cx * cd;
      s(key.second[0] - 1, j - 1) += (s1 * s2 > 0) ? -v : v;
    }
  }
  return s;
}

/// Delta(x) with S_x^2 = Delta(x) I. For exact scalars a non-scalar S_x^2 is a
/// bug and raises std::logic_error; for floats the mean diagonal is returned.
template <class T>
T delta_case1(const AlternatingForm<T>& x) {
  const Matrix<T> s = s_case1(x);
  const Matrix<T> s2 = s * s;
  if constexpr (FloatScalar<T>) {
    T acc(0);
    for (std::size_t i = 0; i < 6; ++i) acc += s2(i, i);
    return acc / T(6);
  } else {
    const T d = s2(0, 0);
    if (!(s2 == Matrix<T>::identity(6) * d)) throw std::logic_error("S_x^2 is not a scalar matrix");
    return d;
  }
}

/// Closed form in the 20 coordinates:
///   (z123 z456 - tr XY)^2 + 4 z123 det Y + 4 z456 det X - 4 sum_ij det X_ij det Y_ji
/// with X_ij, Y_ji the 2x2 minors obtained by deleting row i / column j.
template <class T>
T delta_case1_explicit(const AlternatingForm<T>& z) {
  detail::check_shape(z, 6, 3, "delta_case1_explicit");
  auto c = [&](int i, int j, int k) { return z.coeff(make_blade({i, j, k}, 6)); };
  const Matrix<T> X{{c(2, 3, 4), -c(1, 3, 4), c(1, 2, 4)},
                    {c(2, 3, 5), -c(1, 3, 5), c(1, 2, 5)},
                    {c(2, 3, 6), -c(1, 3, 6), c(1, 2, 6)}};
  const Matrix<T> Y{{c(1, 5, 6), -c(1, 4, 6), c(1, 4, 5)},
                    {c(2, 5, 6), -c(2, 4, 6), c(2, 4, 5)},
                    {c(3, 5, 6), -c(3, 4, 6), c(3, 4, 5)}};
  auto minor = [](const Matrix<T>& m, int r, int col) {
    std::array<int, 2> rows{}, cols{};
    for (int i = 0, a = 0, b = 0; i < 3; ++i) {
      if (i != r) rows[static_cast<std::size_t>(a++)] = i;
      if (i != col) cols[static_cast<std::size_t>(b++)] = i;
    }
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  };
  const T z123 = c(1, 2, 3);
  const T z456 = c(4, 5, 6);
  const T lead = z123 * z456 - trace(X * Y);
  T mixed(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mixed += minor(X, i, j) * minor(Y, j, i);
  return lead * lead + T(4) * z123 * det(Y) + T(4) * z456 * det(X) - T(4) * mixed;
}

/// S_x = x (wedge, tensor) D3(x) (wedge, tensor) D3(x), with wedge^7 W = k via e_1..7.
template <class T>
Matrix<T> s_case2(const AlternatingForm<T>& x) {
  detail::check_shape(x, 7, 3, "s_case2");
  Matrix<T> s(7, 7);
  const auto by_blade = detail::d3_by_blade(x);
  constexpr Blade kAll = (Blade{1} << 7) - 1;
  for (const auto& [bx, cx] : x.coeffs()) {
    for (const auto& [b2, list2] : by_blade) {
      const int s1 = wedge_sign(bx, b2);
      if (s1 == 0) continue;
      const Blade five = bx | b2;
      const Blade b3 = kAll & ~five;
      auto it = by_blade.find(b3);
      if (it == by_blade.end()) continue;
      const int s2 = wedge_sign(five, b3);
      for (const auto& [v2, c2] : list2) {
        const T a = cx * c2;
        for (const auto& [v3, c3] : it->second) {
          const T v = a * c3;
          s(v2 - 1, v3 - 1) += (s1 * s2 > 0) ? v : -v;
        }
      }
    }
  }
  return s;
}

/// Q_x = phi(S_x) with phi(M) = (M + M^T)/2.
template <class T>
QuadraticForm<T> q_case2(const AlternatingForm<T>& x) {
  const Matrix<T> s = s_case2(x);
  Matrix<T> g = s + s.transpose();
  g *= T(1) / T(2);
  return {g};
}

/// Delta(x)^3 = kDelta2Constant * det gram(Q_x); fixed by Delta(w) = 6.
inline const Rational kDelta2Constant{4, 81};

template <class T>
struct Delta2 {
  T cube;                 // Delta(x)^3, always exact for exact scalars
  std::optional<T> value;  // Delta(x) when it is a cube in the working field
  double approx = 0.0;    // real cube root of the cube
  [[nodiscard]] bool inexact() const { return !value.has_value(); }
};

template <class T>
Delta2<T> delta_case2(const AlternatingForm<T>& x) {
  const QuadraticForm<T> q = q_case2(x);
  Delta2<T> out{det(q.gram) * ScalarTraits<T>::from_rational(kDelta2Constant), std::nullopt, 0.0};
  if constexpr (FloatScalar<T>) {
    out.approx = std::cbrt(ScalarTraits<T>::to_double(out.cube));
    out.value = T(out.approx);
  } else {
    out.value = exact_cbrt(out.cube);
    out.approx = out.value ? ScalarTraits<T>::to_double(*out.value) : std::cbrt(ScalarTraits<T>::to_double(out.cube));
  }
  return out;
}

/// Pfaffian of the skew matrix A(i,j) = x_ij, by first-row expansion with
/// memoization over index subsets, times (-1)^(n(n-1)/2) so that
/// pf(e_{1,n+1} + ... + e_{n,2n}) = 1.
template <class T>
T pfaffian(const AlternatingForm<T>& x) {
  if (x.degree() != 2) throw std::invalid_argument("pfaffian needs a degree-2 form");
  if (x.dim() % 2 != 0) throw DomainError("pfaffian of an odd-dimensional form");
  std::unordered_map<Blade, T> memo;
  auto rec = [&](auto&& self, Blade set) -> T {
    if (set == 0) return T(1);
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    const int i = std::countr_zero(set);
    const Blade rest = set & ~(Blade{1} << i);
    T acc(0);
    int pos = 0;
    for (Blade r = rest; r != 0; r &= r - 1, ++pos) {
      const int j = std::countr_zero(r);
      const T a = x.coeff((Blade{1} << i) | (Blade{1} << j));
      if (a == T(0)) continue;
      const T sub = self(self, rest & ~(Blade{1} << j));
      acc += (pos % 2 == 0) ? a * sub : -(a * sub);
    }
    memo.emplace(set, acc);
    return acc;
  };
  const T pf = rec(rec, (Blade{1} << x.dim()) - 1);
  const int n = x.dim() / 2;
  return (n * (n - 1) / 2) % 2 == 0 ? pf : -pf;
}

/// Skew-symmetric coefficient matrix of a 2-form.
template <class T>
Matrix<T> skew_matrix(const AlternatingForm<T>& x) {
  if (x.degree() != 2) throw std::invalid_argument("skew_matrix needs a degree-2 form");
  const auto n = static_cast<std::size_t>(x.dim());
  Matrix<T> m(n, n);
  for (const auto& [b, c] : x.coeffs()) {
    const auto idx = blade_indices(b);
    m(idx[0] - 1, idx[1] - 1) = c;
    m(idx[1] - 1, idx[0] - 1) = -c;
  }
  return m;
}

template <class T>
struct InvariantReport {
  FormCase form_case;
  T delta{};                           // case 1, 2 (case 2: exact value when available)
  std::optional<Delta2<T>> delta2;     // case 2 only
  std::optional<Matrix<T>> s_matrix;   // case 1, 2
  std::optional<QuadraticForm<T>> q_form;  // case 2
  std::optional<T> pfaffian;           // case 3
};

template <class T>
InvariantReport<T> invariant_report(const AlternatingForm<T>& x) {
  InvariantReport<T> r{detect_case(x)};
  switch (r.form_case) {
    case FormCase::case1:
      r.s_matrix = s_case1(x);
      r.delta = delta_case1(x);
      break;
    case FormCase::case2: {
      r.s_matrix = s_case2(x);
      r.q_form = q_case2(x);
      r.delta2 = delta_case2(x);
      if (r.delta2->value) r.delta = *r.delta2->value;
      break;
    }
    case FormCase::case3:
      r.pfaffian = pfaffian(x);
      break;
  }
  return r;
}

}  // namespace pvs
