#include "pvs/representatives.hpp"

#include <stdexcept>

namespace pvs {

namespace {

void require_d(long d) {
  if (d == 1 || !is_squarefree(d)) throw DomainError("d must be squarefree and != 0, 1 (got " + std::to_string(d) + ")");
}

}  // namespace

RepName parse_rep_name(const std::string& tag, std::optional<long> d, std::optional<long> n) {
  static const std::pair<const char*, RepKind> kTags[] = {
      {"case1_w", RepKind::case1_w},         {"case1_w1", RepKind::case1_w1},
      {"case1_walpha", RepKind::case1_walpha}, {"case2_w", RepKind::case2_w},
      {"case2_wprime", RepKind::case2_wprime}, {"case2_w1", RepKind::case2_w1},
      {"case3_w", RepKind::case3_w}};
  for (const auto& [name, kind] : kTags) {
    if (tag != name) continue;
    if (kind == RepKind::case1_walpha) {
      if (!d) throw std::invalid_argument("case1_walpha needs --d");
      require_d(*d);
      return {kind, *d};
    }
    if (kind == RepKind::case3_w) {
      if (!n) throw std::invalid_argument("case3_w needs --n");
      if (*n < 1 || 2 * *n > kMaxDim) throw DomainError("n must be in 1.." + std::to_string(kMaxDim / 2));
      return {kind, *n};
    }
    return {kind, 0};
  }
  throw std::invalid_argument("unknown representative \"" + tag + "\"");
}

std::string to_string(const RepName& name) {
  switch (name.kind) {
    case RepKind::case1_w: return "case1_w";
    case RepKind::case1_w1: return "case1_w1";
    case RepKind::case1_walpha: return "case1_walpha(" + std::to_string(name.param) + ")";
    case RepKind::case2_w: return "case2_w";
    case RepKind::case2_wprime: return "case2_wprime";
    case RepKind::case2_w1: return "case2_w1";
    case RepKind::case3_w: return "case3_w(" + std::to_string(name.param) + ")";
  }
  return "?";
}

AlternatingForm<Rational> make_rep(const RepName& name) {
  using F = AlternatingForm<Rational>;
  switch (name.kind) {
    case RepKind::case1_w:
      return F(6, 3, {{{1, 2, 3}, 1}, {{4, 5, 6}, 1}});
    case RepKind::case1_w1:
      return F(6, 3, {{{1, 2, 3}, 1}, {{1, 5, 6}, -1}, {{2, 4, 6}, 1}, {{3, 4, 5}, -1}});
    case RepKind::case1_walpha: {
      require_d(name.param);
      const Rational d(name.param);
      return F(6, 3, {{{1, 2, 3}, 1}, {{1, 5, 6}, d}, {{2, 4, 6}, -d}, {{3, 4, 5}, d}});
    }
    case RepKind::case2_w:
      return F(7, 3, {{{2, 3, 4}, 1}, {{5, 6, 7}, 1}, {{1, 2, 5}, 1}, {{1, 3, 6}, 1}, {{1, 4, 7}, 1}});
    case RepKind::case2_wprime:
      return F(7, 3, {{{2, 3, 4}, 1}, {{3, 4, 6}, 1}, {{1, 2, 7}, 1}, {{1, 4, 5}, -1}});
    case RepKind::case2_w1: {
      F b(7, 3, {{{1, 4, 5}, 1}, {{1, 6, 7}, -1}, {{3, 4, 7}, 1}, {{3, 5, 6}, -1},
                 {{1, 2, 3}, 1}, {{2, 4, 6}, 1}, {{2, 5, 7}, 1}});
      return Rational(-2) * b;
    }
    case RepKind::case3_w: {
      const long n = name.param;
      if (n < 1 || 2 * n > kMaxDim) throw DomainError("n out of range");
      F w(static_cast<int>(2 * n), 2);
      for (int i = 1; i <= n; ++i) w.add({i, static_cast<int>(n) + i}, Rational(1));
      return w;
    }
  }
  throw std::logic_error("unhandled representative");
}

Matrix<QuadExt> g_alpha(long d) {
  require_d(d);
  const QuadExt alpha = QuadExt::root(d);
  const QuadExt half(Rational(1, 2), Rational(0), d);
  Matrix<QuadExt> g(6, 6);
  for (std::size_t j = 0; j < 3; ++j) {
    const QuadExt s = j == 0 ? half : QuadExt(Rational(1), Rational(0), d);
    g(j, j) = s;
    g(j + 3, j) = alpha * s;
    g(j, j + 3) = s;
    g(j + 3, j + 3) = -(alpha * s);
  }
  return g;
}

Matrix<Rational> tau_case1() {
  Matrix<Rational> t(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    t(i, i + 3) = 1;
    t(i + 3, i) = 1;
  }
  return t;
}

Matrix<QuadExt> galois_conj(const Matrix<QuadExt>& m) {
  return m.map([](const QuadExt& v) { return v.conj(); });
}

Matrix<Rational> stabilizer_witness_case1(const Matrix<QuadExt>& a, long d) {
  require_d(d);
  if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("A must be 3x3");
  if (!(det(a) == QuadExt(1))) throw DomainError("det A != 1");
  const Matrix<QuadExt> g = g_alpha(d);
  const Matrix<QuadExt> m = g * block_diag(a, galois_conj(a)) * inverse(g);
  Matrix<Rational> out(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (!m(i, j).is_rational()) throw std::logic_error("stabilizer witness has an irrational entry");
      out(i, j) = m(i, j).a();
    }
  return out;
}

}  // namespace pvs
