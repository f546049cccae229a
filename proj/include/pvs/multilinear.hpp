#pragma once

// Alternating tensors on W = k^n.
//
// Convention (fixed here, used everywhere):
//   * coefficients live on the standard basis e_I of wedge^d W, I strictly
//     increasing, 1-based;
//   * gl_action pushes forward: g e_j = sum_i g(i,j) e_i, so
//       (g x)_J = sum_I x_I det g[J, I];
//   * evaluate reads x as a form on W*: evaluate(x, f_i, f_j, f_k) = x_ijk for
//     the dual basis f, and evaluate(g x, v...) = evaluate(x, g^T v...).

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pvs/matrix.hpp"
#include "pvs/scalars.hpp"

namespace pvs {

/// Set of 1-based indices, bit (i-1) for index i.
using Blade = std::uint32_t;

inline constexpr int kMaxDim = 16;

inline int blade_degree(Blade b) { return std::popcount(b); }

/// Ascending 1-based indices of a blade.
inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  while (b != 0) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

/// Blade of a strictly increasing index list; throws otherwise.
Blade make_blade(const std::vector<int>& idx, int dim);

/// Sorts idx and returns the permutation sign; 0 if an index repeats.
int sort_sign(std::vector<int>& idx);

/// Sign of e_a ^ e_b relative to e_(a|b); 0 if they share an index.
inline int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  // count pairs (i in a, j in b) with i > j
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const Blade below = (rest & (~rest + 1)) - 1;
    swaps += std::popcount(a & ~below & ~(rest & (~rest + 1)));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

/// Lexicographic order on index tuples of equal length.
struct BladeLess {
  bool operator()(Blade a, Blade b) const {
    while (a != b) {
      const Blade la = a & (~a + 1);
      const Blade lb = b & (~b + 1);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  }
};

/// All degree-d blades of {1..n} in lexicographic order.
std::vector<Blade> all_blades(int n, int d);

std::string blade_key(Blade b);  // "1,2,3"
std::string blade_label(Blade b);  // "123" (or "1,10,11" when n > 9)

template <class T>
class AlternatingForm {
 public:
  using Map = std::map<Blade, T, BladeLess>;

  AlternatingForm() = default;
  AlternatingForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > kMaxDim || degree < 0 || degree > dim) {
      throw std::invalid_argument("bad form shape (" + std::to_string(dim) + ", " + std::to_string(degree) + ")");
    }
  }
  AlternatingForm(int dim, int degree, std::initializer_list<std::pair<std::vector<int>, T>> terms)
      : AlternatingForm(dim, degree) {
    for (const auto& [idx, c] : terms) add(idx, c);
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Map& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  [[nodiscard]] T coeff(Blade b) const {
    auto it = coeffs_.find(b);
    return it == coeffs_.end() ? T(0) : it->second;
  }
  /// Coefficient at any index order, with the permutation sign applied.
  [[nodiscard]] T at(std::vector<int> idx) const {
    const int s = sort_sign(idx);
    if (s == 0) return T(0);
    const T c = coeff(make_blade(idx, dim_));
    return s > 0 ? c : -c;
  }

  void set(Blade b, const T& v) {
    check_blade(b);
    if (v == T(0)) {
      coeffs_.erase(b);
    } else {
      coeffs_[b] = v;
    }
  }
  void add(Blade b, const T& v) {
    check_blade(b);
    if (v == T(0)) return;
    auto it = coeffs_.find(b);
    if (it == coeffs_.end()) {
      coeffs_.emplace(b, v);
      return;
    }
    it->second += v;
    if (it->second == T(0)) coeffs_.erase(it);
  }
  /// Adds v to e_{idx} for any index order.
  void add(std::vector<int> idx, const T& v) {
    const int s = sort_sign(idx);
    if (s == 0) return;
    add(make_blade(idx, dim_), s > 0 ? v : -v);
  }
  void set(std::vector<int> idx, const T& v) {
    const int s = sort_sign(idx);
    if (s == 0) throw std::invalid_argument("repeated index");
    set(make_blade(idx, dim_), s > 0 ? v : -v);
  }

  /// Dense coefficient vector in lexicographic blade order.
  [[nodiscard]] std::vector<T> to_vector() const {
    std::vector<T> v;
    for (Blade b : all_blades(dim_, degree_)) v.push_back(coeff(b));
    return v;
  }
  static AlternatingForm from_vector(int dim, int degree, const std::vector<T>& v) {
    AlternatingForm f(dim, degree);
    const auto blades = all_blades(dim, degree);
    if (v.size() != blades.size()) throw std::invalid_argument("coefficient vector length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) f.set(blades[i], v[i]);
    return f;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    AlternatingForm<U> out(dim_, degree_);
    for (const auto& [b, c] : coeffs_) out.set(b, f(c));
    return out;
  }

  AlternatingForm& operator+=(const AlternatingForm& o) {
    check_shape(o);
    for (const auto& [b, c] : o.coeffs_) add(b, c);
    return *this;
  }
  AlternatingForm& operator-=(const AlternatingForm& o) {
    check_shape(o);
    for (const auto& [b, c] : o.coeffs_) add(b, -c);
    return *this;
  }
  AlternatingForm& operator*=(const T& s) {
    if (s == T(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [b, c] : coeffs_) c *= s;
    return *this;
  }
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator-(AlternatingForm a) {
    for (auto& [b, c] : a.coeffs_) c = -c;
    return a;
  }
  friend AlternatingForm operator*(const T& s, AlternatingForm a) { return a *= s; }
  friend AlternatingForm operator*(AlternatingForm a, const T& s) { return a *= s; }
  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_blade(Blade b) const {
    if (blade_degree(b) != degree_ || (dim_ < 32 && (b >> dim_) != 0)) {
      throw std::invalid_argument("index tuple " + blade_key(b) + " does not fit shape (" +
                                  std::to_string(dim_) + ", " + std::to_string(degree_) + ")");
    }
  }
  void check_shape(const AlternatingForm& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("form shape mismatch");
  }

  int dim_ = 0;
  int degree_ = 0;
  Map coeffs_;
};

template <class To, class From>
AlternatingForm<To> form_cast(const AlternatingForm<From>& x) {
  return x.map([](const From& v) { return scalar_cast<To>(v); });
}

/// Basis element e_I.
template <class T>
AlternatingForm<T> basis_form(int dim, const std::vector<int>& idx) {
  AlternatingForm<T> f(dim, static_cast<int>(idx.size()));
  f.add(idx, T(1));
  return f;
}

/// "e123 + -2*e456" style rendering, for diagnostics.
template <class T>
std::string to_string(const AlternatingForm<T>& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [b, c] : x.coeffs()) {
    if (!s.empty()) s += " + ";
    s += scalar_to_string(c) + "*e" + blade_label(b);
  }
  return s;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const AlternatingForm<T>& x) {
  return os << to_string(x);
}

/// Elements of wedge^a W (x) W^{(x)b}: keys are (blade, ordered b-tuple).
template <class T>
class MixedTensor {
 public:
  using Key = std::pair<Blade, std::vector<int>>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return BladeLess{}(a.first, b.first);
      return a.second < b.second;
    }
  };
  using Map = std::map<Key, T, KeyLess>;

  MixedTensor(int dim, int wedge_degree, int arity) : dim_(dim), a_(wedge_degree), b_(arity) {}

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int wedge_degree() const { return a_; }
  [[nodiscard]] int arity() const { return b_; }
  [[nodiscard]] const Map& coeffs() const { return coeffs_; }

  void add(Blade b, std::vector<int> tail, const T& v) {
    if (blade_degree(b) != a_ || static_cast<int>(tail.size()) != b_) {
      throw std::invalid_argument("mixed tensor key shape mismatch");
    }
    if (v == T(0)) return;
    Key k{b, std::move(tail)};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(std::move(k), v);
      return;
    }
    it->second += v;
    if (it->second == T(0)) coeffs_.erase(it);
  }
  [[nodiscard]] T coeff(Blade b, const std::vector<int>& tail) const {
    auto it = coeffs_.find(Key{b, tail});
    return it == coeffs_.end() ? T(0) : it->second;
  }
  friend bool operator==(const MixedTensor& x, const MixedTensor& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_ && x.b_ == y.b_ && x.coeffs_ == y.coeffs_;
  }

 private:
  int dim_;
  int a_;
  int b_;
  Map coeffs_;
};

// ---------------------------------------------------------------------------

template <class T>
AlternatingForm<T> wedge(const AlternatingForm<T>& a, const AlternatingForm<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) return AlternatingForm<T>(a.dim(), a.dim());
  AlternatingForm<T> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.coeffs()) {
    for (const auto& [bb, cb] : b.coeffs()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      const T prod = ca * cb;
      out.add(ba | bb, s > 0 ? prod : -prod);
    }
  }
  return out;
}

/// D3(e_ijk) = e_jk (x) e_i - e_ik (x) e_j + e_ij (x) e_k.
template <class T>
MixedTensor<T> d3(const AlternatingForm<T>& x) {
  if (x.degree() != 3) throw std::invalid_argument("d3 needs a degree-3 form");
  MixedTensor<T> out(x.dim(), 2, 1);
  for (const auto& [b, c] : x.coeffs()) {
    const auto idx = blade_indices(b);
    const Blade bi = Blade{1} << (idx[0] - 1);
    const Blade bj = Blade{1} << (idx[1] - 1);
    const Blade bk = Blade{1} << (idx[2] - 1);
    out.add(bj | bk, {idx[0]}, c);
    out.add(bi | bk, {idx[1]}, -c);
    out.add(bi | bj, {idx[2]}, c);
  }
  return out;
}

/// Determinant of the k x k matrix m[rows[r]-1][cols[c]-1] (1-based index lists).
template <class T, class Get>
T small_minor(const std::vector<int>& rows, const std::vector<int>& cols, Get get) {
  const std::size_t k = rows.size();
  if (k == 1) return get(rows[0], cols[0]);
  if (k == 2) return get(rows[0], cols[0]) * get(rows[1], cols[1]) - get(rows[0], cols[1]) * get(rows[1], cols[0]);
  if (k == 3) {
    auto g = [&](int r, int c) { return get(rows[r], cols[c]); };
    return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
           g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
  }
  Matrix<T> m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(r, c) = get(rows[r], cols[c]);
  return det(m);
}

/// Push-forward of x by g (see the convention at the top of this file).
template <class T>
AlternatingForm<T> gl_action(const Matrix<T>& g, const AlternatingForm<T>& x) {
  if (!g.square() || static_cast<int>(g.rows()) != x.dim()) throw std::invalid_argument("gl_action: dimension mismatch");
  AlternatingForm<T> out(x.dim(), x.degree());
  if (x.degree() == 0) return x;
  const auto targets = all_blades(x.dim(), x.degree());
  auto get = [&](int i, int j) -> T { return g(i - 1, j - 1); };
  for (Blade bj : targets) {
    const auto rows = blade_indices(bj);
    T acc(0);
    for (const auto& [bi, c] : x.coeffs()) acc += c * small_minor<T>(rows, blade_indices(bi), get);
    out.set(bj, acc);
  }
  return out;
}

/// Derived action: sum over slots of X applied in that slot.
template <class T>
AlternatingForm<T> lie_action(const Matrix<T>& X, const AlternatingForm<T>& x) {
  if (!X.square() || static_cast<int>(X.rows()) != x.dim()) throw std::invalid_argument("lie_action: dimension mismatch");
  AlternatingForm<T> out(x.dim(), x.degree());
  const int n = x.dim();
  for (const auto& [b, c] : x.coeffs()) {
    const auto idx = blade_indices(b);
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      const int i = idx[slot];
      const Blade rest = b & ~(Blade{1} << (i - 1));
      for (int m = 1; m <= n; ++m) {
        const T& xm = X(m - 1, i - 1);
        if (xm == T(0)) continue;
        const Blade bm = Blade{1} << (m - 1);
        if ((rest & bm) != 0) continue;
        // e_{i1..m..id} with m in position `slot`: move m to its sorted place.
        const int below_i = std::popcount(rest & (bm - 1));
        const int shift = below_i - static_cast<int>(slot);
        const T v = c * xm;
        out.add(rest | bm, (shift % 2 == 0) ? v : -v);
      }
    }
  }
  return out;
}

/// x(u_1, ..., u_d) = sum_I x_I det[u_s(i_t)].
template <class T>
T evaluate(const AlternatingForm<T>& x, const std::vector<std::vector<T>>& u) {
  if (static_cast<int>(u.size()) != x.degree()) throw std::invalid_argument("evaluate: wrong number of vectors");
  for (const auto& v : u)
    if (static_cast<int>(v.size()) != x.dim()) throw std::invalid_argument("evaluate: vector length mismatch");
  std::vector<int> slots(u.size());
  for (std::size_t s = 0; s < u.size(); ++s) slots[s] = static_cast<int>(s) + 1;
  auto get = [&](int s, int i) -> T { return u[s - 1][i - 1]; };
  T acc(0);
  for (const auto& [b, c] : x.coeffs()) acc += c * small_minor<T>(slots, blade_indices(b), get);
  return acc;
}

}  // namespace pvs
