#pragma once

// Constructive approximation of partial real targets by semistable points on a
// prescribed real orbit. The construction runs in exact rational arithmetic
// (targets are read exactly from their binary64 values); the result is
// rounded to doubles and re-classified in float mode.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pvs/invariants.hpp"
#include "pvs/multilinear.hpp"
#include "pvs/orbit_class.hpp"
#include "pvs/scalars.hpp"

namespace pvs {

/// Constrained coordinates:
///   case 1: i<j<k <= 5, case 2: i<j<k <= 6, case 3 (dim 2n): i<j <= 2n-1.
std::vector<Blade> constrained_blades(FormCase c, int n = 0);

struct PartialTarget {
  FormCase form_case;
  int n = 0;  // case 3 only
  std::map<Blade, double> values;

  [[nodiscard]] int dim() const;
  [[nodiscard]] int degree() const;
  /// Throws std::invalid_argument unless exactly the constrained set is present
  /// and every value is finite.
  void validate() const;
};

/// Restriction of a full form to the constrained coordinates.
PartialTarget restrict_target(const AlternatingForm<double>& y);
PartialTarget zero_target(FormCase c, int n = 0);

enum class OrbitSign { positive, negative };

struct PerturbationCertificate {
  AlternatingForm<Rational> z_exact;
  AlternatingForm<double> z;
  double epsilon = 0.0;
  double deviation = 0.0;  // max over constrained coordinates of |y - z|
  std::vector<std::pair<std::string, double>> aux;
  RealOrbit requested = RealOrbit::degenerate;
  OrbitReport orbit{};
  int nudges = 0;
  int doublings = 0;

  [[nodiscard]] bool ok() const { return deviation < epsilon && orbit.real_orbit == requested; }
  [[nodiscard]] double aux_value(const std::string& name) const;
};

PerturbationCertificate extend_case1(const PartialTarget& y, double epsilon, OrbitSign sign);
PerturbationCertificate extend_case2(const PartialTarget& y, double epsilon);
PerturbationCertificate extend_case3(const PartialTarget& y, double epsilon);
PerturbationCertificate extend(const PartialTarget& y, double epsilon, OrbitSign sign = OrbitSign::positive);

// Auxiliary polynomials, exposed for verification.

/// Delta(z) = a t^2 + b t + c as a polynomial in t = z456.
struct Quadratic {
  Rational a, b, c;
  [[nodiscard]] Rational discriminant() const { return b * b - Rational(4) * a * c; }
};
Quadratic delta_in_z456(const AlternatingForm<Rational>& z);

/// Discriminant of delta_in_z456 as f1 z156 z246 + f2 z156 + f3 z246 + f4,
/// fitted at the four probe points (z156, z246) in {0, 1}^2.
struct BilinearFit {
  Rational f1, f2, f3, f4;
  [[nodiscard]] Rational operator()(const Rational& s, const Rational& t) const { return f1 * s * t + f2 * s + f3 * t + f4; }
};
BilinearFit case1_discriminant_fit(const AlternatingForm<Rational>& z);

/// 16 z123^2 (z123 z345 - z134 z235 + z135 z234).
Rational case1_f1(const AlternatingForm<Rational>& z);

/// 2 (z134 z156 - z135 z146 + z136 z145).
Rational case2_f3(const AlternatingForm<Rational>& z);

}  // namespace pvs
