#pragma once

// Stabilizer Lie algebras, fixed spaces and the block subalgebras of sl(6)
// used for the w = e123 + e456 decomposition.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"

namespace pvs {

template <class T>
struct LieSubalgebra {
  std::size_t n = 0;
  std::vector<Matrix<T>> basis;
  std::string label;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

template <class T>
Matrix<T> bracket(const Matrix<T>& x, const Matrix<T>& y) {
  if (!x.square() || x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("bracket: dimension mismatch");
  return x * y - y * x;
}

/// Standard basis of sl(n): E_ij (i != j), then E_ii - E_nn.
template <class T>
std::vector<Matrix<T>> sl_basis(std::size_t n) {
  std::vector<Matrix<T>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(Matrix<T>::unit(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(Matrix<T>::unit(n, i, i) - Matrix<T>::unit(n, n - 1, n - 1));
  return out;
}

template <class T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.data();
}

template <class T>
Matrix<T> unflatten(const std::vector<T>& v, std::size_t n) {
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Rank of the span of a list of matrices.
template <class T, class ZeroTest>
std::size_t span_rank(const std::vector<Matrix<T>>& mats, ZeroTest zero) {
  if (mats.empty()) return 0;
  std::vector<std::vector<T>> rows;
  for (const auto& m : mats) rows.push_back(flatten(m));
  return rank(from_rows(rows, rows[0].size()), zero);
}

/// {X in sl(n) : lie_action(X, x) = 0}, as an exact (or tolerance-based) nullspace.
template <class T, class ZeroTest>
LieSubalgebra<T> stab_lie_algebra(const AlternatingForm<T>& x, ZeroTest zero) {
  const auto n = static_cast<std::size_t>(x.dim());
  const auto gens = sl_basis<T>(n);
  const auto rows = all_blades(x.dim(), x.degree());
  Matrix<T> a(rows.size(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const auto img = lie_action(gens[c], x);
    for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = img.coeff(rows[r]);
  }
  LieSubalgebra<T> out{n, {}, "stab"};
  for (const auto& v : nullspace(a, zero)) {
    Matrix<T> m(n, n);
    for (std::size_t c = 0; c < gens.size(); ++c)
      if (!zero(v[c])) m += gens[c] * v[c];
    out.basis.push_back(std::move(m));
  }
  return out;
}

template <ExactScalar T>
LieSubalgebra<T> stab_lie_algebra(const AlternatingForm<T>& x) {
  return stab_lie_algebra(x, ExactZero{});
}

/// Basis of {y in wedge^degree k^n : lie_action(X, y) = 0 for all X in L}.
template <class T, class ZeroTest>
std::vector<AlternatingForm<T>> fixed_space(const LieSubalgebra<T>& l, int degree, ZeroTest zero) {
  const int n = static_cast<int>(l.n);
  const auto blades = all_blades(n, degree);
  Matrix<T> a(blades.size() * std::max<std::size_t>(l.dim(), 1), blades.size());
  for (std::size_t k = 0; k < l.dim(); ++k) {
    for (std::size_t c = 0; c < blades.size(); ++c) {
      AlternatingForm<T> e(n, degree);
      e.set(blades[c], T(1));
      const auto img = lie_action(l.basis[k], e);
      for (std::size_t r = 0; r < blades.size(); ++r) a(k * blades.size() + r, c) = img.coeff(blades[r]);
    }
  }
  std::vector<AlternatingForm<T>> out;
  for (const auto& v : nullspace(a, zero)) out.push_back(AlternatingForm<T>::from_vector(n, degree, v));
  return out;
}

template <ExactScalar T>
std::vector<AlternatingForm<T>> fixed_space(const LieSubalgebra<T>& l, int degree) {
  return fixed_space(l, degree, ExactZero{});
}

struct ClosureResult {
  bool closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // basis indices whose bracket leaves the span
};

template <class T, class ZeroTest>
ClosureResult subalgebra_closed(const LieSubalgebra<T>& l, ZeroTest zero) {
  const std::size_t base = span_rank(l.basis, zero);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      auto mats = l.basis;
      mats.push_back(bracket(l.basis[i], l.basis[j]));
      if (span_rank(mats, zero) > base) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

template <ExactScalar T>
ClosureResult subalgebra_closed(const LieSubalgebra<T>& l) {
  return subalgebra_closed(l, ExactZero{});
}

/// Concatenation of bases, labelled "a+b".
template <class T>
LieSubalgebra<T> direct_sum(const std::vector<LieSubalgebra<T>>& parts) {
  LieSubalgebra<T> out{parts.empty() ? 0 : parts[0].n, {}, ""};
  for (const auto& p : parts) {
    if (p.n != out.n) throw std::invalid_argument("direct_sum: dimension mismatch");
    out.basis.insert(out.basis.end(), p.basis.begin(), p.basis.end());
    out.label += (out.label.empty() ? "" : "+") + p.label;
  }
  return out;
}

/// Block subalgebras of sl(6) for w = e123 + e456:
///   h1 = {d(A, B) : tr A = tr B = 0}, u1 = upper-right 3x3 block,
///   u2 = lower-left 3x3 block, t = k diag(I3, -I3).
template <class T>
LieSubalgebra<T> block_subalgebra(const std::string& label) {
  LieSubalgebra<T> out{6, {}, label};
  auto add_unit = [&](std::size_t i, std::size_t j) { out.basis.push_back(Matrix<T>::unit(6, i, j)); };
  if (label == "h1") {
    for (std::size_t off : {0u, 3u}) {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) add_unit(off + i, off + j);
      for (std::size_t i = 0; i < 2; ++i)
        out.basis.push_back(Matrix<T>::unit(6, off + i, off + i) - Matrix<T>::unit(6, off + 2, off + 2));
    }
  } else if (label == "u1" || label == "u2") {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) label == "u1" ? add_unit(i, 3 + j) : add_unit(3 + i, j);
  } else if (label == "t") {
    out.basis.push_back(Matrix<T>::diag({T(1), T(1), T(1), T(-1), T(-1), T(-1)}));
  } else if (label == "h3" || label == "h4" || label == "h1'" || label == "h3'" || label == "h4'" || label == "h2") {
    std::vector<LieSubalgebra<T>> parts{block_subalgebra<T>("h1")};
    if (label == "h3" || label == "h3'" || label == "h2") parts.push_back(block_subalgebra<T>("u1"));
    if (label == "h4" || label == "h4'" || label == "h2") parts.push_back(block_subalgebra<T>("u2"));
    if (label.back() == '\'' || label == "h2") parts.push_back(block_subalgebra<T>("t"));
    out = direct_sum(parts);
    out.label = label;
  } else {
    throw std::invalid_argument("unknown block subalgebra \"" + label + "\"");
  }
  return out;
}

}  // namespace pvs
