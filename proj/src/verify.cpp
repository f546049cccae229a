#include "pvs/verify.hpp"

#include "pvs/cayley_dickson.hpp"
#include "pvs/invariants.hpp"
#include "pvs/lie_stab.hpp"
#include "pvs/representatives.hpp"

namespace pvs {

namespace {

using R = Rational;
using F = AlternatingForm<R>;

F rep(RepKind k, long param = 0) { return make_rep({k, param}); }

// gram of the quadratic form sum c_ij e_i e_j (i <= j, 1-based)
Matrix<R> quad_gram(std::size_t n, const std::vector<std::tuple<int, int, R>>& terms) {
  Matrix<R> g(n, n);
  for (const auto& [i, j, c] : terms) {
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    if (a == b) {
      g(a, a) += c;
    } else {
      g(a, b) += c / R(2);
      g(b, a) += c / R(2);
    }
  }
  return g;
}

GoldenRow compare_gram(const std::string& name, const Matrix<R>& got, const Matrix<R>& want) {
  std::size_t entries = 0, agree = 0;
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = i; j < got.cols(); ++j) {
      ++entries;
      if (got(i, j) == want(i, j)) ++agree;
    }
  return {name, agree == entries, to_string(got), to_string(want),
          std::to_string(agree) + "/" + std::to_string(entries) + " gram entries equal"};
}

GoldenRow compare(const std::string& name, const R& got, const R& want) {
  return {name, got == want, got.to_string(), want.to_string(), ""};
}

GoldenRow compare(const std::string& name, const QuadExt& got, const QuadExt& want) {
  return {name, got == want, to_string(got), to_string(want), ""};
}

GoldenRow compare_dim(const std::string& name, std::size_t got, std::size_t want) {
  return {name, got == want, std::to_string(got), std::to_string(want), ""};
}

GoldenRow compare_bool(const std::string& name, bool got, bool want) {
  return {name, got == want, got ? "true" : "false", want ? "true" : "false", ""};
}

}  // namespace

std::vector<GoldenRow> run_verify() {
  std::vector<GoldenRow> rows;
  const R six(6);

  rows.push_back(compare_gram("Q_w = 6(-e1^2 + e2e5 + e3e6 + e4e7)", q_case2(rep(RepKind::case2_w)).gram,
                              quad_gram(7, {{1, 1, -six}, {2, 5, six}, {3, 6, six}, {4, 7, six}})));
  rows.push_back(compare_gram("Q_w' = 6(-e1e4 + e2e3)", q_case2(rep(RepKind::case2_wprime)).gram,
                              quad_gram(7, {{1, 4, -six}, {2, 3, six}})));

  rows.push_back(compare("case1 Delta(w) = 1", delta_case1(rep(RepKind::case1_w)), R(1)));
  rows.push_back(compare("case1 Delta(w1) = -64", delta_case1(rep(RepKind::case1_w1)), R(-64)));
  for (long d : {-1L, 2L, 3L, 5L})
    rows.push_back(compare("case1 Delta(w_alpha) = 64d, d = " + std::to_string(d),
                           delta_case1(rep(RepKind::case1_walpha, d)), R(64 * d)));

  const auto d2w = delta_case2(rep(RepKind::case2_w));
  rows.push_back(compare("case2 Delta(w) = 6", d2w.value.value_or(R(0)), R(6)));
  const auto d2w1 = delta_case2(rep(RepKind::case2_w1));
  rows.push_back(compare("case2 Delta(w1) = 2^9 * 6", d2w1.value.value_or(R(0)), R(512 * 6)));

  {
    const F c = c_form(split_octonions<R>(), split_octonion_f_basis<R>());
    const F want = R(1, 2) * rep(RepKind::case2_w);
    std::size_t agree = 0;
    const auto blades = all_blades(7, 3);
    for (Blade b : blades)
      if (c.coeff(b) == want.coeff(b)) ++agree;
    rows.push_back({"C = 1/2(e234 + e567 + e125 + e136 + e147)", agree == blades.size(), to_string(c),
                    to_string(want), std::to_string(agree) + "/35 coefficients equal"});
  }

  const auto s1 = stab_lie_algebra(rep(RepKind::case1_w));
  const auto s2 = stab_lie_algebra(rep(RepKind::case2_w));
  const auto s3 = stab_lie_algebra(rep(RepKind::case3_w, 2));
  rows.push_back(compare_dim("stab case1 w dim = 16", s1.dim(), 16));
  rows.push_back(compare_dim("stab case2 w dim = 14", s2.dim(), 14));
  rows.push_back(compare_dim("stab case3 w (n = 2) dim = 10", s3.dim(), 10));
  rows.push_back(compare_dim("fixed-space case1 dim = 2", fixed_space(s1, 3).size(), 2));
  rows.push_back(compare_dim("fixed-space case2 dim = 1", fixed_space(s2, 3).size(), 1));
  rows.push_back(compare_dim("fixed-space case3 dim = 1", fixed_space(s3, 2).size(), 1));

  {
    const auto h1 = block_subalgebra<R>("h1"), u1 = block_subalgebra<R>("u1"), u2 = block_subalgebra<R>("u2"),
               t = block_subalgebra<R>("t");
    const std::size_t total = span_rank(direct_sum<R>({h1, u1, u2, t}).basis, ExactZero{});
    rows.push_back({"sl6 = h1 + u1 + u2 + t, 16 + 9 + 9 + 1 = 35",
                    h1.dim() == 16 && u1.dim() == 9 && u2.dim() == 9 && t.dim() == 1 && total == 35,
                    std::to_string(h1.dim()) + " + " + std::to_string(u1.dim()) + " + " + std::to_string(u2.dim()) +
                        " + " + std::to_string(t.dim()) + " = " + std::to_string(total),
                    "16 + 9 + 9 + 1 = 35", ""});
  }
  rows.push_back(compare_bool("h3 is a subalgebra", subalgebra_closed(block_subalgebra<R>("h3")).closed, true));
  rows.push_back(compare_bool("h4 is a subalgebra", subalgebra_closed(block_subalgebra<R>("h4")).closed, true));
  rows.push_back(compare_bool(
      "h1 + u1 + u2 is a subalgebra",
      subalgebra_closed(direct_sum<R>({block_subalgebra<R>("h1"), block_subalgebra<R>("u1"), block_subalgebra<R>("u2")}))
          .closed,
      false));

  for (long d : {2L, 3L, 5L}) {
    const QuadExt alpha = QuadExt::root(d);
    rows.push_back(compare("det g_alpha = -8 alpha, d = " + std::to_string(d), det(g_alpha(d)), QuadExt(-8) * alpha));
  }
  return rows;
}

}  // namespace pvs
