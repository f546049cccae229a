// Acceptance harness: `acceptance N` checks criterion N and prints one line.

#include <sys/wait.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pvs/cayley_dickson.hpp"
#include "pvs/invariants.hpp"
#include "pvs/lie_stab.hpp"
#include "pvs/perturb.hpp"
#include "pvs/representatives.hpp"
#include "pvs/search.hpp"
#include "pvs/verify.hpp"
#include "support.hpp"

using namespace pvs;
using namespace pvs::testing;
using R = Rational;
using F = AlternatingForm<R>;
using FD = AlternatingForm<double>;
using M = Matrix<R>;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    detail << what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

F rep(RepKind k, long p = 0) { return make_rep({k, p}); }

// --- 1 ----------------------------------------------------------------------

void golden_invariants(Outcome& o) {
  const auto t0 = Clock::now();
  int checked = 0;
  for (const auto& row : run_verify()) {
    const bool relevant = row.name.rfind("Q_w", 0) == 0 || row.name.rfind("case1 Delta", 0) == 0 ||
                          row.name.rfind("case2 Delta", 0) == 0 || row.name.rfind("C = ", 0) == 0;
    if (!relevant) continue;
    ++checked;
    std::string got = row.computed;
    std::replace(got.begin(), got.end(), '\n', ' ');
    o.require(row.pass, row.name + " (got " + got + ")");
  }
  const double s = seconds_since(t0);
  o.require(s < 5.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << checked << " golden rows exact";
}

// --- 2 ----------------------------------------------------------------------

void defining_identity(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2001);
  std::uniform_int_distribution<long> den(1, 4);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    F x(6, 3);
    for (Blade b : all_blades(6, 3)) {
      const long q = den(rng);
      x.set(b, R(std::uniform_int_distribution<long>(-5 * q, 5 * q)(rng), q));
    }
    const M s = s_case1(x);
    if (!(s * s == M::identity(6) * delta_case1_explicit(x))) ++bad;
  }
  const double s = seconds_since(t0);
  o.require(bad == 0, std::to_string(bad) + "/100 forms violate S_x^2 = Delta I");
  o.require(s < 30.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << "100/100 forms satisfy S_x^2 = Delta(x) I exactly";
}

// --- 3 ----------------------------------------------------------------------

void covariance(Outcome& o) {
  std::mt19937_64 rng(3001);
  std::uniform_int_distribution<long> tdist(1, 3);
  int bad_delta = 0, bad_q = 0, bad_pf = 0;
  for (int t = 0; t < 50; ++t) {
    const F x1 = random_form(rng, 6, 3, -3, 3);
    const M g1 = random_invertible(rng, 6);
    if (!(delta_case1(gl_action(g1, x1)) == det(g1) * det(g1) * delta_case1(x1))) ++bad_delta;

    const F x2 = random_form(rng, 7, 3, -2, 2);
    const M g2 = random_invertible(rng, 7);
    const R tt(tdist(rng) * (t % 2 == 0 ? 1 : -1));
    if (!(q_case2(tt * gl_action(g2, x2)).gram == pow(tt, 3) * det(g2) * (g2 * q_case2(x2).gram * g2.transpose())))
      ++bad_q;

    const int n = 1 + t % 3;
    const F x3 = random_form(rng, 2 * n, 2);
    const M g3 = random_invertible(rng, static_cast<std::size_t>(2 * n));
    if (!(pfaffian(gl_action(g3, x3)) == det(g3) * pfaffian(x3))) ++bad_pf;
  }
  o.require(bad_delta == 0, "Delta(gx) failures: " + std::to_string(bad_delta));
  o.require(bad_q == 0, "gram(Q) failures: " + std::to_string(bad_q));
  o.require(bad_pf == 0, "pf(gx) failures: " + std::to_string(bad_pf));
  if (o.pass) o.detail << "50 group elements per law, all exact";
}

// --- 4 ----------------------------------------------------------------------

void lie_dimensions(Outcome& o) {
  const auto t0 = Clock::now();
  const auto s1 = stab_lie_algebra(rep(RepKind::case1_w));
  const auto s2 = stab_lie_algebra(rep(RepKind::case2_w));
  const auto s3 = stab_lie_algebra(rep(RepKind::case3_w, 2));
  o.require(s1.dim() == 16, "stab case1 = " + std::to_string(s1.dim()));
  o.require(s2.dim() == 14, "stab case2 = " + std::to_string(s2.dim()));
  o.require(s3.dim() == 10, "stab case3 = " + std::to_string(s3.dim()));
  const auto f1 = fixed_space(s1, 3).size(), f2 = fixed_space(s2, 3).size(), f3 = fixed_space(s3, 2).size();
  o.require(f1 == 2 && f2 == 1 && f3 == 1,
            "fixed dims " + std::to_string(f1) + "/" + std::to_string(f2) + "/" + std::to_string(f3));
  const auto h1 = block_subalgebra<R>("h1"), u1 = block_subalgebra<R>("u1"), u2 = block_subalgebra<R>("u2"),
             t = block_subalgebra<R>("t");
  o.require(h1.dim() == 16 && u1.dim() == 9 && u2.dim() == 9 && t.dim() == 1, "summand dimensions");
  o.require(span_rank(direct_sum<R>({h1, u1, u2, t}).basis, ExactZero{}) == 35, "direct sum rank != 35");
  o.require(subalgebra_closed(block_subalgebra<R>("h3")).closed, "h3 not closed");
  o.require(subalgebra_closed(block_subalgebra<R>("h4")).closed, "h4 not closed");
  o.require(!subalgebra_closed(direct_sum<R>({h1, u1, u2})).closed, "h1 + u1 + u2 closed");
  const double s = seconds_since(t0);
  o.require(s < 60.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << "16/14/10, fixed 2/1/1, 16+9+9+1 = 35, closure verdicts as expected";
}

// --- 5 ----------------------------------------------------------------------

std::vector<R> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  std::vector<R> v(n);
  for (auto& x : v) x = R(num(rng), den(rng));
  return v;
}

void normed_algebras(Outcome& o) {
  using A = AlgebraStructure<R>;
  std::mt19937_64 rng(5001);
  const std::vector<A> algebras{quaternions<R>(), octonions<R>(), split_octonions<R>(),
                                octonion_from_form(rep(RepKind::case2_w)), octonion_from_form(rep(RepKind::case2_w1))};
  for (const A& a : algebras) {
    int bad_norm = 0, bad_lemma = 0, bad_assoc = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim()), z = random_vec(rng, a.dim());
      const auto xy = a.mul(x, y);
      if (!(a.norm(xy) == a.norm(x) * a.norm(y))) ++bad_norm;
      if (!(a.conj(xy) == a.mul(a.conj(y), a.conj(x))) || !(a.inner(x, y) == a.re(a.mul(x, a.conj(y)))) ||
          !(a.mul(x, a.conj(x)) == vec_scale(a.one(), a.norm(x))))
        ++bad_lemma;
      if (t < 200) {
        auto assoc = [&](const auto& p, const auto& q, const auto& r) {
          return vec_sub(a.mul(a.mul(p, q), r), a.mul(p, a.mul(q, r)));
        };
        const auto axyz = assoc(x, y, z);
        if (a.dim() == 4) {
          if (!(axyz == std::vector<R>(4, R(0)))) ++bad_assoc;
        } else if (!(assoc(y, x, z) == vec_scale(axyz, R(-1))) || !(assoc(x, z, y) == vec_scale(axyz, R(-1)))) {
          ++bad_assoc;
        }
      }
    }
    o.require(bad_norm == 0, a.name() + " norm failures " + std::to_string(bad_norm));
    o.require(bad_lemma == 0, a.name() + " Lemma failures " + std::to_string(bad_lemma));
    o.require(bad_assoc == 0, a.name() + " associator failures " + std::to_string(bad_assoc));
  }
  std::vector<std::vector<R>> basis{split_octonions<R>().one()};
  for (const auto& f : split_octonion_f_basis<R>()) basis.push_back(f);
  const A target = change_basis(split_octonions<R>(), basis, "O~ in f-basis");
  o.require(algebras[3].table() == target.table(), "O_w table differs from the split octonion table");
  o.require(definiteness(algebras[4].norm_form().gram) == Definiteness::positive, "O_w1 norm not positive definite");
  if (o.pass) o.detail << "H, O, O~, O_w, O_w1: 1000 pairs each, all identities exact";
}

// --- 6 ----------------------------------------------------------------------

void stabilizer_rationality(Outcome& o) {
  using Q = QuadExt;
  std::mt19937_64 rng(6001);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 2);
  std::uniform_int_distribution<std::size_t> idx(0, 2);
  const F w = rep(RepKind::case1_walpha, 2);
  const Matrix<Q> g = g_alpha(2), gi = inverse(g);
  int bad = 0;
  for (int t = 0; t < 20; ++t) {
    Matrix<Q> a = Matrix<Q>::identity(3);
    for (int s = 0; s < 6; ++s) {
      const std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      Matrix<Q> e = Matrix<Q>::identity(3);
      e(i, j) = Q(R(num(rng), den(rng)), R(num(rng), den(rng)), 2);
      a = a * e;
    }
    const Matrix<Q> m = g * block_diag(a, galois_conj(a)) * gi;
    bool rational = true;
    M mr(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        rational = rational && m(i, j).is_rational();
        mr(i, j) = m(i, j).a();
      }
    if (!rational || !(gl_action(mr, w) == w)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + "/20 conjugates irrational or not fixing w_sqrt2");
  if (o.pass) o.detail << "20/20 conjugates rational and fix w_sqrt2";
}

// --- 7 ----------------------------------------------------------------------

void perturbation(Outcome& o) {
  const auto t0 = Clock::now();
  int total = 0, bad = 0, max_doublings = 0;
  auto check = [&](const PerturbationCertificate& c, RealOrbit want) {
    ++total;
    const bool orbit_ok = classify_real(c.z).real_orbit == want && classify_real(c.z_exact).real_orbit == want;
    if (!(c.deviation < c.epsilon) || !orbit_ok || !c.ok()) ++bad;
    max_doublings = std::max(max_doublings, c.doublings);
  };
  for (double eps : {0.1, 0.01}) {
    std::mt19937_64 rng(eps < 0.05 ? 7001 : 7002);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    auto target = [&](FormCase c, int n) {
      PartialTarget y = zero_target(c, n);
      for (auto& [b, v] : y.values) v = dist(rng);
      return y;
    };
    for (int t = 0; t < 100; ++t) {
      const auto y1 = target(FormCase::case1, 0);
      check(extend_case1(y1, eps, OrbitSign::positive), RealOrbit::case1_positive);
      check(extend_case1(y1, eps, OrbitSign::negative), RealOrbit::case1_negative);
      check(extend_case2(target(FormCase::case2, 0), eps), RealOrbit::case2_split);
      check(extend_case3(target(FormCase::case3, 3), eps), RealOrbit::case3_nondegenerate);
    }
  }
  const double s = seconds_since(t0);
  o.require(bad == 0, std::to_string(bad) + "/" + std::to_string(total) + " certificates fail");
  o.require(max_doublings < 64, "doubling cap reached");
  o.require(s < 60.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << total << " certificates verified by re-classification, max doublings " << max_doublings;
}

// --- 8 ----------------------------------------------------------------------

FD random_real_form(std::mt19937_64& rng, int dim, int degree) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FD x(dim, degree);
  for (Blade b : all_blades(dim, degree)) x.set(b, dist(rng));
  return x;
}

Matrix<double> expm(const Matrix<double>& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::MatrixXd r = e.exp();
  Matrix<double> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
  return out;
}

void search(Outcome& o) {
  // (a) plant and recover
  {
    std::mt19937_64 rng(4);
    int recovered = 0, total = 0;
    double slowest = 0.0;
    for (auto [dim, degree] : {std::pair{6, 3}, std::pair{4, 2}}) {
      const auto gens = generators(dim, false);
      std::uniform_int_distribution<int> len(1, 4), g(0, static_cast<int>(gens.size()) - 1);
      for (int t = 0; t < 20; ++t) {
        const FD x = random_real_form(rng, dim, degree);
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        for (auto& v : word) v = g(rng);
        PartialTarget y = zero_target(detect_case(x), degree == 2 ? dim / 2 : 0);
        for (const auto& [b, v] : deviations(x, y, word_matrix(dim, word, gens))) y.values[b] = v;
        SearchConfig cfg;
        cfg.beam_width = 64;
        cfg.max_depth = 6;
        cfg.epsilon = 1e-9;
        const auto t0 = Clock::now();
        const auto res = approximate(x, y, cfg);
        slowest = std::max(slowest, seconds_since(t0));
        ++total;
        if (res.best.objective < 1e-9) ++recovered;
      }
    }
    o.require(recovered == total && slowest < 60.0,
              "(a) recovered " + std::to_string(recovered) + "/" + std::to_string(total));
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  // (b) monotone trace, (e) serial vs parallel
  {
    const FD x = random_real_form(rng, 6, 3);
    PartialTarget y = zero_target(FormCase::case1);
    for (auto& [b, v] : y.values) v = dist(rng);
    SearchConfig cfg;
    cfg.beam_width = 32;
    cfg.max_depth = 5;
    cfg.epsilon = 1e-12;
    cfg.threads = 1;
    const auto serial = approximate(x, y, cfg);
    bool monotone = true;
    for (std::size_t k = 1; k < serial.trace.size(); ++k) monotone = monotone && serial.trace[k] <= serial.trace[k - 1];
    o.require(monotone, "(b) trace not monotone");
    cfg.threads = 4;
    const auto parallel = approximate(x, y, cfg);
    o.require(serial.best.word == parallel.best.word && serial.trace == parallel.trace &&
                  serial.level_best == parallel.level_best,
              "(e) serial and parallel differ");
  }
  // (c) stabilizer-direction flatness at the incumbent
  {
    const FD x = form_cast<double>(rep(RepKind::case1_w));
    PartialTarget y = zero_target(FormCase::case1);
    for (auto& [b, v] : y.values) v = dist(rng);
    SearchConfig cfg;
    cfg.beam_width = 8;
    cfg.max_depth = 3;
    const Matrix<double> h = approximate(x, y, cfg).best.h.to_double();
    double worst = 0.0;
    const double t = 1e-4;
    for (const auto& X : stab_lie_algebra(x, NearZero{1e-12}).basis) {
      const Matrix<double> Y = X.transpose() * -1.0;
      worst = std::max(worst, std::abs(objective_real(x, y, expm(Y * t) * h) - objective_real(x, y, expm(Y * -t) * h)) /
                                  (2 * t));
    }
    o.require(worst < 1e-6, "(c) derivative " + std::to_string(worst));
  }
  // (d) case 3 improvement
  {
    std::mt19937_64 r8(8);
    const FD x = random_real_form(r8, 4, 2);
    const auto irr = irrationality_report(x);
    SearchConfig cfg;
    cfg.beam_width = 256;
    cfg.max_depth = 8;
    cfg.epsilon = 1e-12;
    int improved = 0;
    for (int k = 0; k < 50; ++k) {
      PartialTarget y = zero_target(FormCase::case3, 2);
      for (auto& [b, v] : y.values) v = dist(r8);
      const auto res = approximate(x, y, cfg);
      if (res.trace.back() < res.trace.front()) ++improved;
    }
    o.require(!irr.x.rational, "(d) instance not heuristic-irrational");
    o.require(improved >= 45, "(d) improved " + std::to_string(improved) + "/50");
    if (improved >= 45) o.detail << (o.detail.str().empty() ? "" : "; ") << "(d) improved " << improved << "/50";
  }
}

// --- 9 ----------------------------------------------------------------------

void verify_command(Outcome& o) {
  const std::string cmd = std::string(PVS_CLI) + " verify > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  int failing = 0;
  for (const auto& row : run_verify())
    if (!row.pass) ++failing;
  o.require(code == 0, "verify exit " + std::to_string(code) + ", " + std::to_string(failing) + " rows fail");
  if (o.pass) o.detail << "verify exits 0";
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"golden invariants, exact", golden_invariants},
      {"S_x^2 = Delta(x) I on 100 random forms", defining_identity},
      {"covariance laws on 50 group elements", covariance},
      {"Lie-theoretic dimensions", lie_dimensions},
      {"normed-algebra suite", normed_algebras},
      {"stabilizer rationality", stabilizer_rationality},
      {"perturbation certificates", perturbation},
      {"search properties", search},
      {"verify exits 0", verify_command},
  };
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
  bool all = true;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[static_cast<std::size_t>(k - 1)].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << " (" << criteria[static_cast<std::size_t>(k - 1)].title
              << "): " << (o.pass ? "PASS" : "FAIL") << " [" << o.detail.str() << "] " << seconds_since(t0) << " s"
              << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
