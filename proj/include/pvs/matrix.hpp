#pragma once

// Dense matrices over any ScalarField, with elimination routines that take an
// explicit zero test (ExactZero for Rational/QuadExt, NearZero{tol} for floats).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pvs/scalars.hpp"

namespace pvs {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// E_ij with 0-based (i, j).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }
  static Matrix diag(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  [[nodiscard]] std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T trace(const Matrix<T>& m) {
  T t(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

/// Block diagonal d(A, B).
template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <class T, class ZeroTest>
bool is_zero_matrix(const Matrix<T>& m, ZeroTest zero) {
  return std::all_of(m.data().begin(), m.data().end(), [&](const T& v) { return zero(v); });
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << scalar_to_string(m(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  return os << to_string(m);
}

// ---------------------------------------------------------------------------
// Elimination

template <class T>
struct Echelon {
  Matrix<T> m;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are chosen by largest magnitude, which for
/// exact scalars means "first nonzero".
template <class T, class ZeroTest>
Echelon<T> rref(Matrix<T> m, ZeroTest zero) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = r;
    double best_mag = -1.0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (zero(m(i, c))) continue;
      const double mag = magnitude(m(i, c));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
        if constexpr (!FloatScalar<T>) break;
      }
    }
    if (best_mag < 0.0) {
      for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = T(0);
      continue;
    }
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    m(r, c) = T(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || zero(m(i, c))) {
        if (i != r) m(i, c) = T(0);
        continue;
      }
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = T(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactScalar T>
Echelon<T> rref(Matrix<T> m) {
  return rref(std::move(m), ExactZero{});
}

template <class T, class ZeroTest>
std::size_t rank(const Matrix<T>& m, ZeroTest zero) {
  return rref(m, zero).pivots.size();
}

template <ExactScalar T>
std::size_t rank(const Matrix<T>& m) {
  return rank(m, ExactZero{});
}

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
template <class T, class ZeroTest>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, ZeroTest zero) {
  const auto e = rref(m, zero);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactScalar T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  return nullspace(m, ExactZero{});
}

/// Determinant: Bareiss elimination for exact scalars, partial pivoting for floats.
template <class T>
T det(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if constexpr (FloatScalar<T>) {
    T d(1);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t best = c;
      for (std::size_t i = c + 1; i < n; ++i)
        if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
      if (m(best, c) == T(0)) return T(0);
      if (best != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
        d = -d;
      }
      d *= m(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        const T f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  } else {
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == T(0)) {
        std::size_t s = k + 1;
        while (s < n && m(s, k) == T(0)) ++s;
        if (s == n) return T(0);
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
        m(i, k) = T(0);
      }
      prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
  }
}

/// Solves a x = b for square nonsingular a; nullopt if singular under `zero`.
template <class T, class ZeroTest>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b, ZeroTest zero) {
  if (!a.square() || a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto e = rref(std::move(aug), zero);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.m(i, n);
  return x;
}

template <class T, class ZeroTest>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, ZeroTest zero) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto e = rref(std::move(aug), zero);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

/// Exact inverse; throws DomainError if singular.
template <ExactScalar T>
Matrix<T> inverse(const Matrix<T>& a) {
  auto inv = inverse(a, ExactZero{});
  if (!inv) throw DomainError("singular matrix");
  return *inv;
}

/// Stacks vectors as the rows of a matrix.
template <class T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  return m.map([](const From& v) { return scalar_cast<To>(v); });
}

}  // namespace pvs
