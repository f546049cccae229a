#include <gtest/gtest.h>

#include "pvs/multilinear.hpp"
#include "support.hpp"

using namespace pvs;
using pvs::testing::random_form;
using pvs::testing::random_int_matrix;
using F = AlternatingForm<Rational>;

namespace {

F e(int dim, std::vector<int> idx) { return basis_form<Rational>(dim, idx); }

const F kW(6, 3, {{{1, 2, 3}, 1}, {{4, 5, 6}, 1}});

std::vector<Rational> unit(int n, int i) {
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

}  // namespace

TEST(Blades, Ordering) {
  const auto b = all_blades(6, 3);
  ASSERT_EQ(b.size(), 20u);
  EXPECT_EQ(blade_key(b.front()), "1,2,3");
  EXPECT_EQ(blade_key(b[1]), "1,2,4");
  EXPECT_EQ(blade_key(b.back()), "4,5,6");
  EXPECT_EQ(all_blades(7, 3).size(), 35u);
  EXPECT_THROW(make_blade({2, 1, 3}, 6), std::invalid_argument);
  EXPECT_THROW(make_blade({1, 2, 7}, 6), std::invalid_argument);
}

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge(e(6, {1, 2}), e(6, {3})), e(6, {1, 2, 3}));
  EXPECT_TRUE(wedge(e(6, {1, 2}), e(6, {2})).is_zero());
  EXPECT_EQ(wedge(e(6, {1, 3}), e(6, {2})), -e(6, {1, 2, 3}));
  EXPECT_THROW(wedge(e(6, {1}), e(5, {2})), std::invalid_argument);
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const F a = random_form(rng, 7, 2), b = random_form(rng, 7, 1), c = random_form(rng, 7, 3);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    EXPECT_EQ(wedge(a, b), wedge(b, a));
    EXPECT_EQ(wedge(b, c), -wedge(c, b));
  }
}

TEST(D3, BasisTrivector) {
  const auto t = d3(e(6, {1, 2, 3}));
  EXPECT_EQ(t.coeffs().size(), 3u);
  EXPECT_EQ(t.coeff(make_blade({2, 3}, 6), {1}), Rational(1));
  EXPECT_EQ(t.coeff(make_blade({1, 3}, 6), {2}), Rational(-1));
  EXPECT_EQ(t.coeff(make_blade({1, 2}, 6), {3}), Rational(1));
  EXPECT_TRUE(d3(F(6, 3)).coeffs().empty());
}

TEST(D3, Linear) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const F x = random_form(rng, 7, 3), y = random_form(rng, 7, 3);
    const Rational a(3, 2), b(-2);
    const auto lhs = d3(a * x + b * y);
    MixedTensor<Rational> rhs(7, 2, 1);
    const auto dx = d3(x), dy = d3(y);
    for (const auto& [k, c] : dx.coeffs()) rhs.add(k.first, k.second, a * c);
    for (const auto& [k, c] : dy.coeffs()) rhs.add(k.first, k.second, b * c);
    EXPECT_EQ(lhs, rhs);
  }
  MixedTensor<Rational> sum(6, 2, 1);
  for (const auto& term : {e(6, {1, 2, 3}), e(6, {4, 5, 6})}) {
    const auto dt = d3(term);
    for (const auto& [k, c] : dt.coeffs()) sum.add(k.first, k.second, c);
  }
  EXPECT_EQ(d3(kW), sum);
}

TEST(GlAction, IdentityAndFunctorial) {
  EXPECT_EQ(gl_action(Matrix<Rational>::identity(6), kW), kW);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_int_matrix(rng, 6), h = random_int_matrix(rng, 6);
    const F x = random_form(rng, 6, 3);
    EXPECT_EQ(gl_action(g * h, x), gl_action(g, gl_action(h, x)));
  }
}

TEST(GlAction, EvaluateCompatibility) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_int_matrix(rng, 7);
    const F x = random_form(rng, 7, 3);
    std::vector<std::vector<Rational>> v, gv;
    for (int s = 0; s < 3; ++s) {
      v.push_back(random_form(rng, 7, 1).to_vector());
      gv.push_back(g.transpose() * v.back());
    }
    EXPECT_EQ(evaluate(gl_action(g, x), v), evaluate(x, gv));
  }
}

TEST(LieAction, Examples) {
  const F x = random_form(*std::make_unique<std::mt19937_64>(9), 6, 3);
  EXPECT_EQ(lie_action(Matrix<Rational>::identity(6), x), Rational(3) * x);
  EXPECT_TRUE(lie_action(Matrix<Rational>::unit(6, 0, 1), e(6, {1, 2, 3})).is_zero());
  EXPECT_EQ(lie_action(Matrix<Rational>::unit(6, 3, 0), e(6, {1, 2, 3})), e(6, {2, 3, 4}));
}

TEST(LieAction, BracketCompatible) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto X = random_int_matrix(rng, 6), Y = random_int_matrix(rng, 6);
    const F x = random_form(rng, 6, 3);
    EXPECT_EQ(lie_action(Matrix<Rational>(X * Y - Y * X), x),
              lie_action(X, lie_action(Y, x)) - lie_action(Y, lie_action(X, x)));
  }
}

TEST(LieAction, DerivativeOfGlAction) {
  std::mt19937_64 rng(6);
  const F xr = random_form(rng, 6, 3);
  const auto Xr = random_int_matrix(rng, 6);
  const auto x = form_cast<double>(xr);
  const auto X = matrix_cast<double>(Xr);
  const auto target = form_cast<double>(lie_action(Xr, xr));
  double prev = 1e300;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    const auto moved = gl_action(Matrix<double>(Matrix<double>::identity(6) + X * t), x);
    double err = 0;
    for (Blade b : all_blades(6, 3)) err = std::max(err, std::abs((moved.coeff(b) - x.coeff(b)) / t - target.coeff(b)));
    EXPECT_LT(err, 200 * t);
    EXPECT_LT(err, prev);
    prev = err;
  }
}

TEST(Evaluate, Contract) {
  EXPECT_EQ(evaluate(kW, {unit(6, 1), unit(6, 2), unit(6, 3)}), Rational(1));
  EXPECT_EQ(evaluate(kW, {unit(6, 2), unit(6, 1), unit(6, 3)}), Rational(-1));
  EXPECT_EQ(evaluate(kW, {unit(6, 1), unit(6, 2), unit(6, 4)}), Rational(0));
  EXPECT_THROW(evaluate(kW, {unit(6, 1), unit(6, 2)}), std::invalid_argument);
}
