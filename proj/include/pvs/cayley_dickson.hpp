#pragma once

// Normed algebras from the Cayley-Dickson doubling
//   (a, b)(c, d) = (ac -+ conj(d) b, d a + b conj(c)),   |(a, b)| = |a| +- |b|
// stored as explicit structure-constant tables, and the algebra O_x rebuilt
// from a semistable trilinear form on W* (W = k^7).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvs/invariants.hpp"
#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"

namespace pvs {

template <class T>
class AlgebraStructure {
 public:
  using Vec = std::vector<T>;

  AlgebraStructure() = default;
  /// table[i][j] = coordinates of e_i e_j; e_unit is the identity.
  AlgebraStructure(std::string name, std::vector<std::vector<Vec>> table, QuadraticForm<T> norm, std::size_t unit = 0)
      : name_(std::move(name)), table_(std::move(table)), norm_(std::move(norm)), unit_(unit) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return table_.size(); }
  [[nodiscard]] std::size_t unit_index() const { return unit_; }
  [[nodiscard]] const std::vector<std::vector<Vec>>& table() const { return table_; }
  [[nodiscard]] const QuadraticForm<T>& norm_form() const { return norm_; }

  [[nodiscard]] Vec one() const { return basis(unit_); }
  [[nodiscard]] Vec basis(std::size_t i) const {
    Vec v(dim(), T(0));
    v[i] = T(1);
    return v;
  }

  [[nodiscard]] Vec mul(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Vec out(dim(), T(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == T(0)) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == T(0)) continue;
        const T c = x[i] * y[j];
        const Vec& e = table_[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!(e[k] == T(0))) out[k] += c * e[k];
      }
    }
    return out;
  }
  [[nodiscard]] T norm(const Vec& x) const { return norm_(x); }
  /// <x, y> with <x, x> = |x|.
  [[nodiscard]] T inner(const Vec& x, const Vec& y) const { return norm_.polar(x, y); }
  [[nodiscard]] T re(const Vec& x) const { return inner(x, one()); }
  [[nodiscard]] Vec im(const Vec& x) const {
    Vec v = x;
    const T r = re(x);
    v[unit_] -= r;
    return v;
  }
  /// 2 Re(x) 1 - x.
  [[nodiscard]] Vec conj(const Vec& x) const {
    Vec v(dim(), T(0));
    for (std::size_t i = 0; i < dim(); ++i) v[i] = -x[i];
    v[unit_] += T(2) * re(x);
    return v;
  }

  friend bool operator==(const AlgebraStructure& a, const AlgebraStructure& b) {
    return a.unit_ == b.unit_ && a.table_ == b.table_ && a.norm_ == b.norm_;
  }

 private:
  void check(const Vec& x) const {
    if (x.size() != dim()) throw std::invalid_argument("element does not belong to algebra " + name_);
  }

  std::string name_;
  std::vector<std::vector<Vec>> table_;
  QuadraticForm<T> norm_;
  std::size_t unit_ = 0;
};

template <class T>
std::vector<T> vec_add(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
std::vector<T> vec_sub(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
std::vector<T> vec_scale(std::vector<T> a, const T& s) {
  for (auto& v : a) v *= s;
  return a;
}

/// The ground field k as a 1-dimensional normed algebra.
template <class T>
AlgebraStructure<T> ground_field() {
  return {"k", {{{T(1)}}}, QuadraticForm<T>{Matrix<T>::identity(1)}, 0};
}

/// A(+) for sign = +1, A(-) for sign = -1.
template <class T>
AlgebraStructure<T> cd_double(const AlgebraStructure<T>& a, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("cd_double: sign must be +1 or -1");
  const std::size_t n = a.dim();
  const T s(sign);
  auto split = [n](const std::vector<T>& v) {
    return std::make_pair(std::vector<T>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
                          std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()));
  };
  auto join = [](std::vector<T> p, const std::vector<T>& q) {
    p.insert(p.end(), q.begin(), q.end());
    return p;
  };
  std::vector<std::vector<std::vector<T>>> table(2 * n, std::vector<std::vector<T>>(2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      std::vector<T> x(2 * n, T(0)), y(2 * n, T(0));
      x[i] = T(1);
      y[j] = T(1);
      const auto [p, q] = split(x);
      const auto [r, t] = split(y);
      // (p, q)(r, t) = (pr - s conj(t) q, t p + q conj(r))
      const auto first = vec_sub(a.mul(p, r), vec_scale(a.mul(a.conj(t), q), s));
      const auto second = vec_add(a.mul(t, p), a.mul(q, a.conj(r)));
      table[i][j] = join(first, second);
    }
  }
  Matrix<T> g(2 * n, 2 * n);
  const auto& ga = a.norm_form().gram;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = ga(i, j);
      g(n + i, n + j) = s * ga(i, j);
    }
  return {a.name() + (sign > 0 ? "(+)" : "(-)"), std::move(table), QuadraticForm<T>{g}, a.unit_index()};
}

template <class T>
AlgebraStructure<T> quaternions() {
  auto h = cd_double(cd_double(ground_field<T>(), 1), 1);
  return {"H", h.table(), h.norm_form(), h.unit_index()};
}

template <class T>
AlgebraStructure<T> octonions() {
  auto o = cd_double(quaternions<T>(), 1);
  return {"O", o.table(), o.norm_form(), o.unit_index()};
}

/// M(2,2) = k(+)(-).
template <class T>
AlgebraStructure<T> split_quaternions() {
  auto m = cd_double(cd_double(ground_field<T>(), 1), -1);
  return {"M22", m.table(), m.norm_form(), m.unit_index()};
}

/// Split octonions M(2,2)(+).
template <class T>
AlgebraStructure<T> split_octonions() {
  auto o = cd_double(split_quaternions<T>(), 1);
  return {"O~", o.table(), o.norm_form(), o.unit_index()};
}

/// Coordinates in M(2,2) = k(+)(-) of the matrix [[p, q], [r, s]]
/// (the matrix of a + b J + (c + d J) E with J = [[0,-1],[1,0]], E = diag(1,-1)).
template <class T>
std::vector<T> m22_coords(const T& p, const T& q, const T& r, const T& s) {
  const T half = T(1) / T(2);
  return {(p + s) * half, (r - q) * half, (p - s) * half, (q + r) * half};
}

/// f1..f7 in split-octonion coordinates:
///   f1 = diag(1,-1), f2 = E12, f3 = E11 e, f4 = -E21 e, f5 = -E21, f6 = E22 e, f7 = E12 e
template <class T>
std::vector<std::vector<T>> split_octonion_f_basis() {
  const T o(1), z(0), m(-1);
  auto pair = [&](const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
  };
  const auto zero = m22_coords(z, z, z, z);
  return {pair(m22_coords(o, z, z, m), zero), pair(m22_coords(z, o, z, z), zero),
          pair(zero, m22_coords(o, z, z, z)), pair(zero, m22_coords(z, z, m, z)),
          pair(m22_coords(z, z, m, z), zero), pair(zero, m22_coords(z, z, z, o)),
          pair(zero, m22_coords(z, o, z, z))};
}

/// Basis e_1..e_{dim-1} (everything but the unit), orthogonal to 1 in every
/// doubled algebra.
template <class T>
std::vector<std::vector<T>> standard_im_basis(const AlgebraStructure<T>& a) {
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != a.unit_index()) out.push_back(a.basis(i));
  return out;
}

/// The same algebra written in the basis (new_basis[0], ..., new_basis[dim-1]);
/// the unit index is wherever 1 appears in new_basis.
template <ExactScalar T>
AlgebraStructure<T> change_basis(const AlgebraStructure<T>& a, const std::vector<std::vector<T>>& new_basis,
                                 const std::string& name) {
  const std::size_t n = a.dim();
  const Matrix<T> p = from_rows(new_basis, n).transpose();  // columns = new basis vectors
  const Matrix<T> pinv = inverse(p);
  std::vector<std::vector<std::vector<T>>> table(n, std::vector<std::vector<T>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = pinv * a.mul(new_basis[i], new_basis[j]);
  Matrix<T> g = p.transpose() * a.norm_form().gram * p;
  std::size_t unit = n;
  for (std::size_t i = 0; i < n; ++i)
    if (new_basis[i] == a.one()) unit = i;
  if (unit == n) throw std::invalid_argument("change_basis: the new basis must contain 1");
  return {name, std::move(table), QuadraticForm<T>{g}, unit};
}

/// C(x, y, z) = <x, yz> on the given basis of Im(A), as a 3-form whose
/// coefficient at (i, j, k) is C(b_i, b_j, b_k). Alternation is verified on
/// every basis triple; a failure is a bug and raises std::logic_error.
template <class T>
AlternatingForm<T> c_form(const AlgebraStructure<T>& a, const std::vector<std::vector<T>>& im_basis) {
  const int m = static_cast<int>(im_basis.size());
  AlternatingForm<T> out(m, 3);
  std::vector<T> values(static_cast<std::size_t>(m * m * m));
  auto at = [&](int i, int j, int k) -> T& { return values[static_cast<std::size_t>((i * m + j) * m + k)]; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto bj = im_basis[static_cast<std::size_t>(j)];
      for (int k = 0; k < m; ++k)
        at(i, j, k) = a.inner(im_basis[static_cast<std::size_t>(i)], a.mul(bj, im_basis[static_cast<std::size_t>(k)]));
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const T v = at(i, j, k);
        if (!(at(j, i, k) == -v) || !(at(i, k, j) == -v)) throw std::logic_error("C is not alternating");
        if (i < j && j < k) out.set(make_blade({i + 1, j + 1, k + 1}, m), v);
      }
  return out;
}

/// O_x: basis (1, f_1, ..., f_7) with f the dual basis of W*, and
///   Re(v1 v2) = -Delta^{-1} Q_x(v1, v2),   Q_x(v1, Im(v2 v3)) = 3 x(v1, v2, v3),
///   |1| = 1, |v| = Delta^{-1} Q_x(v).
/// Throws DomainError("not semistable") when Q_x is degenerate, and for exact
/// scalars also when Delta(x) is not in the working field.
template <class T>
AlgebraStructure<T> octonion_from_form(const AlternatingForm<T>& x, double tol = 1e-9) {
  detail::check_shape(x, 7, 3, "octonion_from_form");
  const auto q = q_case2(x);
  const auto d2 = delta_case2(x);
  if constexpr (FloatScalar<T>) {
    if (std::abs(d2.approx) <= tol) throw DomainError("not semistable");
  } else {
    if (d2.cube == T(0)) throw DomainError("not semistable");
    if (!d2.value) throw DomainError("Delta(x) is not in the working field; use float scalars");
  }
  const T delta = *d2.value;
  const T inv_delta = T(1) / delta;
  std::vector<std::vector<std::vector<T>>> table(8, std::vector<std::vector<T>>(8, std::vector<T>(8, T(0))));
  for (std::size_t i = 0; i < 8; ++i) {
    table[0][i][i] = T(1);
    table[i][0][i] = T(1);
  }
  std::vector<std::vector<T>> f(7, std::vector<T>(7, T(0)));
  for (std::size_t i = 0; i < 7; ++i) f[i][i] = T(1);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      std::vector<T> rhs(7);
      for (std::size_t k = 0; k < 7; ++k) rhs[k] = T(3) * evaluate(x, {f[k], f[i], f[j]});
      std::optional<std::vector<T>> u;
      if constexpr (FloatScalar<T>) {
        u = solve(q.gram, rhs, NearZero{tol});
        if (u) {
          const auto back = q.gram * *u;
          double scale = 1.0, resid = 0.0;
          for (std::size_t k = 0; k < 7; ++k) {
            scale = std::max(scale, std::abs(rhs[k]));
            resid = std::max(resid, std::abs(back[k] - rhs[k]));
          }
          if (resid > tol * scale) throw DomainError("O_x product solve did not converge");
        }
      } else {
        u = solve(q.gram, rhs, ExactZero{});
      }
      if (!u) throw DomainError("not semistable");
      auto& e = table[i + 1][j + 1];
      e[0] = -inv_delta * q.gram(i, j);
      for (std::size_t k = 0; k < 7; ++k) e[k + 1] = (*u)[k];
    }
  }
  Matrix<T> g(8, 8);
  g(0, 0) = T(1);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) g(i + 1, j + 1) = q.gram(i, j) * inv_delta;
  return {"O_x", std::move(table), QuadraticForm<T>{g}, 0};
}

struct NormedCheck {
  std::size_t samples = 0;
  bool norm_multiplicative = true;  // |xy| = |x||y|
  bool conj_antimultiplicative = true;  // conj(xy) = conj(y) conj(x)
  bool inner_is_re = true;  // <x, y> = Re(x conj(y))
  bool x_conj_x = true;  // x conj(x) = |x| 1
  bool alternative = true;  // (x, x, y) = (y, x, x) = 0
  bool associative = true;
  [[nodiscard]] bool normed() const {
    return norm_multiplicative && conj_antimultiplicative && inner_is_re && x_conj_x && alternative;
  }
};

/// Identities checked on consecutive sample triples (s_k, s_k+1, s_k+2).
template <ExactScalar T>
NormedCheck normed_check(const AlgebraStructure<T>& a, const std::vector<std::vector<T>>& samples) {
  NormedCheck r;
  const std::size_t m = samples.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& x = samples[k];
    const auto& y = samples[(k + 1) % m];
    const auto& z = samples[(k + 2) % m];
    const auto xy = a.mul(x, y);
    r.norm_multiplicative = r.norm_multiplicative && a.norm(xy) == a.norm(x) * a.norm(y);
    r.conj_antimultiplicative = r.conj_antimultiplicative && a.conj(xy) == a.mul(a.conj(y), a.conj(x));
    r.inner_is_re = r.inner_is_re && a.inner(x, y) == a.re(a.mul(x, a.conj(y)));
    r.x_conj_x = r.x_conj_x && a.mul(x, a.conj(x)) == vec_scale(a.one(), a.norm(x));
    const std::vector<T> zero(a.dim(), T(0));
    r.alternative = r.alternative && vec_sub(a.mul(a.mul(x, x), y), a.mul(x, xy)) == zero &&
                    vec_sub(a.mul(a.mul(y, x), x), a.mul(y, a.mul(x, x))) == zero;
    r.associative = r.associative && vec_sub(a.mul(xy, z), a.mul(x, a.mul(y, z))) == zero;
    ++r.samples;
  }
  return r;
}

struct IsoReport {
  bool unit = false;      // m(1) = 1
  bool products = false;  // m(ab) = m(a) m(b) on all basis pairs
  bool norms = false;     // |m(v)|_y = |v|_x
  bool imaginary = false;  // m(Im) = Im
  [[nodiscard]] bool ok() const { return unit && products && norms && imaginary; }
};

/// Checks that m(1) = 1, m(v) = t^2 det(g) g.v (g acting on W* contragrediently)
/// is an isomorphism O_x -> O_y. Requires y = t (g x); throws
/// std::invalid_argument otherwise.
template <ExactScalar T>
IsoReport iso_check(const AlternatingForm<T>& x, const AlternatingForm<T>& y, const T& t, const Matrix<T>& g) {
  if (!(y == t * gl_action(g, x))) throw std::invalid_argument("iso_check: y != (t, g) x");
  const auto ox = octonion_from_form(x);
  const auto oy = octonion_from_form(y);
  const Matrix<T> gi = inverse(g).transpose() * (t * t * det(g));
  Matrix<T> m(8, 8);
  m(0, 0) = T(1);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) m(i + 1, j + 1) = gi(i, j);
  IsoReport r;
  r.unit = (m * ox.one()) == oy.one();
  r.products = true;
  for (std::size_t i = 0; i < 8 && r.products; ++i)
    for (std::size_t j = 0; j < 8 && r.products; ++j) {
      const auto a = ox.basis(i), b = ox.basis(j);
      r.products = (m * ox.mul(a, b)) == oy.mul(m * a, m * b);
    }
  r.norms = (m.transpose() * oy.norm_form().gram * m) == ox.norm_form().gram;
  r.imaginary = true;
  for (std::size_t i = 1; i < 8; ++i) r.imaginary = r.imaginary && oy.re(m * ox.basis(i)) == T(0);
  return r;
}

}  // namespace pvs
