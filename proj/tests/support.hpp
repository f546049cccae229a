#pragma once

#include <random>

#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"

namespace pvs::testing {

inline AlternatingForm<Rational> random_form(std::mt19937_64& rng, int dim, int degree, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> dist(lo, hi);
  AlternatingForm<Rational> x(dim, degree);
  for (Blade b : all_blades(dim, degree)) x.set(b, Rational(dist(rng)));
  return x;
}

inline AlternatingForm<Rational> random_fraction_form(std::mt19937_64& rng, int dim, int degree) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  AlternatingForm<Rational> x(dim, degree);
  for (Blade b : all_blades(dim, degree)) x.set(b, Rational(num(rng), den(rng)));
  return x;
}

inline Matrix<Rational> random_int_matrix(std::mt19937_64& rng, std::size_t n, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
  return m;
}

inline Matrix<Rational> random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_int_matrix(rng, n);
    if (!det(m).is_zero()) return m;
  }
}

/// Product of random elementary matrices: an integer matrix of determinant 1.
inline Matrix<Rational> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> val(-2, 2);
  Matrix<Rational> m = Matrix<Rational>::identity(n);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix<Rational> e = Matrix<Rational>::identity(n);
    e(i, j) = Rational(val(rng));
    m = m * e;
  }
  return m;
}

}  // namespace pvs::testing
