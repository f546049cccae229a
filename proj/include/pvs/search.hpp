#pragma once

// Beam search over words in the elementary generators E_ij(+-1) of SL(n, Z)
// for an integral basis u_1..u_n (the columns of h) with x(u_i, u_j, u_k)
// close to a partial target y.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvs/matrix.hpp"
#include "pvs/multilinear.hpp"
#include "pvs/orbit_class.hpp"
#include "pvs/perturb.hpp"

namespace pvs {

/// E_ij(sign) = I + sign e_ij. Right moves replace h by h E (column j += sign
/// column i); left moves by E h (row i += sign row j).
struct Generator {
  int i;
  int j;
  int sign;
  bool left;
};

/// Right moves first, ordered by (i, j, +1 before -1); then the left moves in
/// the same order when requested.
std::vector<Generator> generators(int n, bool left_moves);

/// Square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix identity(int n);
  [[nodiscard]] std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
  /// Throws std::overflow_error if an entry leaves int64.
  [[nodiscard]] IntMatrix apply(const Generator& g) const;
  [[nodiscard]] Matrix<Rational> to_rational() const;
  [[nodiscard]] Matrix<double> to_double() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

IntMatrix word_matrix(int n, const std::vector<int>& word, const std::vector<Generator>& gens);

struct SearchConfig {
  int beam_width = 64;
  int max_depth = 6;
  std::uint64_t seed = 0;
  double epsilon = 1e-3;
  bool left_moves = false;
  bool stop_on_success = true;
  int threads = 0;  // 0: PVS_THREADS, else 1
};

struct BasisCandidate {
  IntMatrix h;
  std::vector<int> word;
  double objective = 0.0;
};

/// max over the constrained index set of |y_I - x(h e_i, h e_j, ...)|.
/// Throws DomainError unless det h = 1.
double objective(const AlternatingForm<double>& x, const PartialTarget& y, const IntMatrix& h);
/// Same for any real matrix h (no determinant check); used for directional derivatives.
double objective_real(const AlternatingForm<double>& x, const PartialTarget& y, const Matrix<double>& h);
/// Per-index values x(h e_I) - y_I, in the order of constrained_blades.
std::vector<std::pair<Blade, double>> deviations(const AlternatingForm<double>& x, const PartialTarget& y,
                                                 const IntMatrix& h);

struct HypothesisReport {
  bool pass = false;
  std::vector<std::string> warnings;
  OrbitReport orbit;
  IrrationalityReport irrationality;
};

/// Semistable, positive real rank, and the Def. 5.1 irrationality flags for the case.
HypothesisReport hypothesis_check(const AlternatingForm<double>& x, long max_den = 1000, double tol = 1e-9);
HypothesisReport hypothesis_check(const AlternatingForm<Rational>& x);

struct SearchResult {
  BasisCandidate best;
  bool success = false;
  int depth_reached = 0;
  std::vector<double> trace;       // best-so-far objective after each depth (index 0: identity)
  std::vector<double> level_best;  // best objective within each level
  std::size_t evaluated = 0;
  HypothesisReport hypothesis;
  PartialTarget target;  // the target actually searched (differs from y with via_orbit)
  std::optional<PerturbationCertificate> via_orbit;
};

SearchResult approximate(const AlternatingForm<double>& x, const PartialTarget& y, const SearchConfig& config);

/// Theorem mode: first move y onto the real orbit of x within epsilon / 2 with
/// the perturb module, then search for the perturbed target.
SearchResult approximate_via_orbit(const AlternatingForm<double>& x, const PartialTarget& y,
                                   const SearchConfig& config);

/// Threads used when config.threads == 0.
int default_threads();

}  // namespace pvs
