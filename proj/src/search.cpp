#include "pvs/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace pvs {

std::vector<Generator> generators(int n, bool left_moves) {
  std::vector<Generator> out;
  for (int side = 0; side < (left_moves ? 2 : 1); ++side)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        out.push_back({i, j, 1, side == 1});
        out.push_back({i, j, -1, side == 1});
      }
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

IntMatrix IntMatrix::apply(const Generator& g) const {
  IntMatrix m = *this;
  for (int k = 0; k < n; ++k) {
    // left: row i += s row j; right: column j += s column i
    const std::size_t dst = g.left ? static_cast<std::size_t>(g.i * n + k) : static_cast<std::size_t>(k * n + g.j);
    const std::size_t src = g.left ? static_cast<std::size_t>(g.j * n + k) : static_cast<std::size_t>(k * n + g.i);
    if (__builtin_add_overflow(m.a[dst], g.sign * m.a[src], &m.a[dst])) throw std::overflow_error("basis entry overflows int64");
  }
  return m;
}

Matrix<Rational> IntMatrix::to_rational() const {
  Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Rational(static_cast<long>((*this)(r, c)));
  return m;
}

Matrix<double> IntMatrix::to_double() const {
  Matrix<double> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<double>((*this)(r, c));
  return m;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : m.a) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntMatrix word_matrix(int n, const std::vector<int>& word, const std::vector<Generator>& gens) {
  IntMatrix h = IntMatrix::identity(n);
  for (int g : word) h = h.apply(gens.at(static_cast<std::size_t>(g)));
  return h;
}

// ---------------------------------------------------------------------------

namespace {

struct Term {
  std::vector<int> rows;  // 0-based
  double coeff;
};

/// x(h e_I) for every constrained I, with h accessed through get(r, c).
class Evaluator {
 public:
  Evaluator(const AlternatingForm<double>& x, const PartialTarget& y) {
    y.validate();
    if (x.dim() != y.dim() || x.degree() != y.degree()) throw std::invalid_argument("form and target shapes differ");
    for (const auto& [b, c] : x.coeffs()) {
      Term t{{}, c};
      for (int i : blade_indices(b)) t.rows.push_back(i - 1);
      terms_.push_back(std::move(t));
    }
    for (const auto& [b, v] : y.values) {
      std::vector<int> cols;
      for (int i : blade_indices(b)) cols.push_back(i - 1);
      targets_.emplace_back(std::move(cols), v);
      blades_.push_back(b);
    }
  }

  template <class Get>
  [[nodiscard]] std::vector<double> values(Get get) const {
    std::vector<double> out;
    out.reserve(targets_.size());
    for (const auto& [cols, v] : targets_) {
      double acc = 0.0;
      for (const auto& t : terms_) acc += t.coeff * minor(t.rows, cols, get);
      out.push_back(acc);
    }
    return out;
  }

  template <class Get>
  [[nodiscard]] double objective(Get get) const {
    const auto vals = values(get);
    double worst = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) worst = std::max(worst, std::abs(targets_[k].second - vals[k]));
    return worst;
  }

  [[nodiscard]] const std::vector<Blade>& blades() const { return blades_; }
  [[nodiscard]] double target(std::size_t k) const { return targets_[k].second; }

 private:
  template <class Get>
  static double minor(const std::vector<int>& r, const std::vector<int>& c, Get get) {
    if (r.size() == 2) return get(r[0], c[0]) * get(r[1], c[1]) - get(r[0], c[1]) * get(r[1], c[0]);
    return get(r[0], c[0]) * (get(r[1], c[1]) * get(r[2], c[2]) - get(r[1], c[2]) * get(r[2], c[1])) -
           get(r[0], c[1]) * (get(r[1], c[0]) * get(r[2], c[2]) - get(r[1], c[2]) * get(r[2], c[0])) +
           get(r[0], c[2]) * (get(r[1], c[0]) * get(r[2], c[1]) - get(r[1], c[1]) * get(r[2], c[0]));
  }

  std::vector<Term> terms_;
  std::vector<std::pair<std::vector<int>, double>> targets_;
  std::vector<Blade> blades_;
};

auto int_getter(const IntMatrix& h) {
  return [&h](int r, int c) { return static_cast<double>(h(r, c)); };
}

void check_unimodular(const IntMatrix& h) {
  if (det(h.to_rational()) != Rational(1)) throw DomainError("basis matrix does not have determinant 1");
}

bool word_less(const BasisCandidate& a, const BasisCandidate& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  return a.word < b.word;
}

}  // namespace

double objective(const AlternatingForm<double>& x, const PartialTarget& y, const IntMatrix& h) {
  check_unimodular(h);
  return Evaluator(x, y).objective(int_getter(h));
}

double objective_real(const AlternatingForm<double>& x, const PartialTarget& y, const Matrix<double>& h) {
  return Evaluator(x, y).objective(
      [&h](int r, int c) { return h(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); });
}

std::vector<std::pair<Blade, double>> deviations(const AlternatingForm<double>& x, const PartialTarget& y,
                                                 const IntMatrix& h) {
  check_unimodular(h);
  const Evaluator ev(x, y);
  const auto vals = ev.values(int_getter(h));
  std::vector<std::pair<Blade, double>> out;
  for (std::size_t k = 0; k < vals.size(); ++k) out.emplace_back(ev.blades()[k], vals[k] - ev.target(k));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

HypothesisReport combine(OrbitReport orbit, IrrationalityReport irr) {
  HypothesisReport r{true, {}, orbit, std::move(irr)};
  auto warn = [&](const std::string& w) {
    r.pass = false;
    r.warnings.push_back(w);
  };
  if (orbit.real_orbit == RealOrbit::degenerate) warn("not semistable");
  if (!orbit.real_rank_positive) warn("real rank zero");
  const auto& i = r.irrationality;
  auto rational = [](const std::optional<PointVerdict>& v) { return v && v->applicable && v->rational; };
  switch (orbit.form_case) {
    case FormCase::case1:
      if (orbit.real_orbit == RealOrbit::case1_positive) {
        if (rational(i.e1)) warn("[E_x1] rational");
        if (rational(i.e2)) warn("[E_x2] rational");
      }
      if (rational(i.gr)) warn("Gr(x) rational");
      break;
    case FormCase::case2:
      if (rational(i.q)) warn("[Q_x] rational");
      break;
    case FormCase::case3:
      if (i.x.rational) warn("[x] rational");
      break;
  }
  return r;
}

}  // namespace

HypothesisReport hypothesis_check(const AlternatingForm<double>& x, long max_den, double tol) {
  const OrbitReport orbit = classify_real(x, tol);
  if (orbit.real_orbit == RealOrbit::degenerate) {
    HypothesisReport r{false, {"not semistable"}, orbit, {orbit.form_case, "float", {}, {}, {}, {}, {}}};
    if (!orbit.real_rank_positive) r.warnings.push_back("real rank zero");
    return r;
  }
  return combine(orbit, irrationality_report(x, max_den, tol));
}

HypothesisReport hypothesis_check(const AlternatingForm<Rational>& x) {
  const OrbitReport orbit = classify_real(x);
  if (orbit.real_orbit == RealOrbit::degenerate) {
    HypothesisReport r{false, {"not semistable"}, orbit, {orbit.form_case, "exact", {}, {}, {}, {}, {}}};
    if (!orbit.real_rank_positive) r.warnings.push_back("real rank zero");
    return r;
  }
  return combine(orbit, irrationality_report(x));
}

int default_threads() {
  if (const char* env = std::getenv("PVS_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

SearchResult approximate(const AlternatingForm<double>& x, const PartialTarget& y, const SearchConfig& config) {
  if (config.beam_width < 1) throw std::invalid_argument("beam_width must be at least 1");
  if (config.max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");
  const Evaluator ev(x, y);
  const int n = x.dim();
  const auto gens = generators(n, config.left_moves);
  const int threads = config.threads > 0 ? config.threads : default_threads();

  SearchResult res;
  res.target = y;
  res.hypothesis = hypothesis_check(x);

  BasisCandidate start{IntMatrix::identity(n), {}, 0.0};
  start.objective = ev.objective(int_getter(start.h));
  res.best = start;
  res.trace.push_back(start.objective);
  res.level_best.push_back(start.objective);
  res.evaluated = 1;

  std::unordered_set<IntMatrix, IntMatrixHash> seen{start.h};
  std::vector<BasisCandidate> beam{start};
  for (int depth = 1; depth <= config.max_depth; ++depth) {
    if (config.stop_on_success && res.best.objective < config.epsilon) break;
    std::vector<BasisCandidate> next;
    next.reserve(beam.size() * gens.size());
    for (const auto& c : beam)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        BasisCandidate e{c.h.apply(gens[g]), c.word, 0.0};
        e.word.push_back(static_cast<int>(g));
        next.push_back(std::move(e));
      }
    // objectives are pure; any partition gives the same values
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t k = lo; k < hi; ++k) next[k].objective = ev.objective(int_getter(next[k].h));
    };
    if (threads <= 1 || next.size() < 256) {
      work(0, next.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (next.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
      for (std::size_t lo = 0; lo < next.size(); lo += chunk) pool.emplace_back(work, lo, std::min(next.size(), lo + chunk));
      for (auto& t : pool) t.join();
    }
    res.evaluated += next.size();
    std::sort(next.begin(), next.end(), word_less);
    beam.clear();
    for (auto& c : next) {
      if (static_cast<int>(beam.size()) >= config.beam_width) break;
      if (!seen.insert(c.h).second) continue;
      beam.push_back(std::move(c));
    }
    if (beam.empty()) break;
    res.depth_reached = depth;
    res.level_best.push_back(beam.front().objective);
    if (word_less(beam.front(), res.best)) res.best = beam.front();
    res.trace.push_back(res.best.objective);
  }
  res.success = res.best.objective < config.epsilon;
  return res;
}

SearchResult approximate_via_orbit(const AlternatingForm<double>& x, const PartialTarget& y,
                                   const SearchConfig& config) {
  const OrbitReport orbit = classify_real(x);
  OrbitSign sign = OrbitSign::positive;
  switch (orbit.real_orbit) {
    case RealOrbit::case1_positive:
    case RealOrbit::case2_split:
    case RealOrbit::case3_nondegenerate:
      break;
    case RealOrbit::case1_negative:
      sign = OrbitSign::negative;
      break;
    case RealOrbit::case2_nonsplit:
      throw DomainError("the perturbation only reaches the split orbit in case 2");
    case RealOrbit::degenerate:
      throw DomainError("x is not semistable");
  }
  PerturbationCertificate cert = extend(y, config.epsilon / 2, sign);
  PartialTarget moved = restrict_target(cert.z);
  SearchConfig inner = config;
  inner.epsilon = config.epsilon / 2;
  SearchResult res = approximate(x, moved, inner);
  res.via_orbit = std::move(cert);
  // success is judged against the original target
  res.success = objective(x, y, res.best.h) < config.epsilon;
  return res;
}

}  // namespace pvs
