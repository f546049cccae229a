#include <gtest/gtest.h>

#include "pvs/invariants.hpp"
#include "pvs/lie_stab.hpp"
#include "pvs/representatives.hpp"
#include "support.hpp"

using namespace pvs;
using namespace pvs::testing;
using F = AlternatingForm<Rational>;
using M = Matrix<Rational>;
using L = LieSubalgebra<Rational>;

namespace {

F rep(RepKind k, long p = 0) { return make_rep({k, p}); }

bool same_span(const std::vector<M>& a, const std::vector<M>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto r = span_rank(both, ExactZero{});
  return r == span_rank(a, ExactZero{}) && r == span_rank(b, ExactZero{});
}

}  // namespace

TEST(Bracket, Basics) {
  const M e12 = M::unit(2, 0, 1), e21 = M::unit(2, 1, 0);
  EXPECT_EQ(bracket(e12, e12), M(2, 2));
  EXPECT_EQ(bracket(e12, e21), M::diag({1, -1}));
  std::mt19937_64 rng(301);
  for (int t = 0; t < 20; ++t) {
    const M x = random_int_matrix(rng, 4), y = random_int_matrix(rng, 4), z = random_int_matrix(rng, 4);
    EXPECT_EQ(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)), M(4, 4));
    EXPECT_EQ(bracket(x, y), -bracket(y, x));
  }
  EXPECT_THROW(bracket(M(2, 2), M(3, 3)), std::invalid_argument);
}

TEST(Stab, Dimensions) {
  const L s1 = stab_lie_algebra(rep(RepKind::case1_w));
  const L s2 = stab_lie_algebra(rep(RepKind::case2_w));
  const L s3 = stab_lie_algebra(rep(RepKind::case3_w, 2));
  EXPECT_EQ(s1.dim(), 16u);
  EXPECT_EQ(s2.dim(), 14u);
  EXPECT_EQ(s3.dim(), 10u);
  for (const L* l : {&s1, &s2, &s3}) {
    for (const auto& x : l->basis) EXPECT_EQ(trace(x), Rational(0));
  }
  for (const auto& x : s1.basis) EXPECT_TRUE(lie_action(x, rep(RepKind::case1_w)).is_zero());
  EXPECT_TRUE(same_span(s1.basis, block_subalgebra<Rational>("h1").basis));
}

TEST(Stab, FixedSpaces) {
  const auto f1 = fixed_space(stab_lie_algebra(rep(RepKind::case1_w)), 3);
  ASSERT_EQ(f1.size(), 2u);
  std::vector<M> as_mats;
  auto span_of = [](const std::vector<F>& forms) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : forms) rows.push_back(f.to_vector());
    return rank(from_rows(rows, rows[0].size()));
  };
  EXPECT_EQ(span_of({f1[0], f1[1], basis_form<Rational>(6, {1, 2, 3}), basis_form<Rational>(6, {4, 5, 6})}), 2u);

  const auto f2 = fixed_space(stab_lie_algebra(rep(RepKind::case2_w)), 3);
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(span_of({f2[0], rep(RepKind::case2_w)}), 1u);

  const auto f3 = fixed_space(stab_lie_algebra(rep(RepKind::case3_w, 2)), 2);
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(span_of({f3[0], rep(RepKind::case3_w, 2)}), 1u);
}

TEST(Stab, FixedSpaceContainsRepresentative) {
  for (const RepName& r : std::vector<RepName>{{RepKind::case1_w1}, {RepKind::case1_walpha, 3}, {RepKind::case2_w1},
                                               {RepKind::case2_wprime}, {RepKind::case3_w, 3}}) {
    const F x = make_rep(r);
    const auto fs = fixed_space(stab_lie_algebra(x), x.degree());
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : fs) rows.push_back(f.to_vector());
    const auto base = rank(from_rows(rows, x.to_vector().size()));
    rows.push_back(x.to_vector());
    EXPECT_EQ(rank(from_rows(rows, x.to_vector().size())), base) << to_string(r);
  }
}

TEST(Stab, DecompositionDimensions) {
  const L h1 = block_subalgebra<Rational>("h1"), u1 = block_subalgebra<Rational>("u1"),
          u2 = block_subalgebra<Rational>("u2"), t = block_subalgebra<Rational>("t");
  EXPECT_EQ(h1.dim(), 16u);
  EXPECT_EQ(u1.dim(), 9u);
  EXPECT_EQ(u2.dim(), 9u);
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(span_rank(direct_sum<Rational>({h1, u1, u2, t}).basis, ExactZero{}), 35u);
}

TEST(Stab, ClosureVerdicts) {
  EXPECT_TRUE(subalgebra_closed(block_subalgebra<Rational>("h3")).closed);
  EXPECT_TRUE(subalgebra_closed(block_subalgebra<Rational>("h4")).closed);
  EXPECT_TRUE(subalgebra_closed(block_subalgebra<Rational>("h3'")).closed);
  EXPECT_TRUE(subalgebra_closed(block_subalgebra<Rational>("t")).closed);
  const auto r = subalgebra_closed(direct_sum<Rational>(
      {block_subalgebra<Rational>("h1"), block_subalgebra<Rational>("u1"), block_subalgebra<Rational>("u2")}));
  EXPECT_FALSE(r.closed);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Stab, Equivariance) {
  std::mt19937_64 rng(302);
  for (int t = 0; t < 5; ++t) {
    const F x = random_form(rng, 6, 3, -1, 1) + rep(RepKind::case1_w);
    const M g = random_invertible(rng, 6);
    const M gi = inverse(g);
    std::vector<M> conj;
    for (const auto& X : stab_lie_algebra(x).basis) conj.push_back(g * X * gi);
    EXPECT_TRUE(same_span(stab_lie_algebra(gl_action(g, x)).basis, conj));
  }
}

TEST(Stab, Case2InsideOrthogonalAlgebra) {
  const auto gram = q_case2(rep(RepKind::case2_w)).gram;
  for (const auto& X : stab_lie_algebra(rep(RepKind::case2_w)).basis) {
    EXPECT_EQ(X * gram + gram * X.transpose(), M(7, 7));
  }
}
