#pragma once

// Scalar realizations used throughout the library:
//   Rational  - arbitrary precision rationals (GMP backed), always reduced
//   QuadExt   - elements a + b*sqrt(d) of a quadratic field Q(sqrt d)
//   double    - IEEE binary64; every float comparison takes an explicit tolerance
//
// Generic algorithms are written against the ScalarField concept and use
// ScalarTraits<T> for the few operations that differ between realizations.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace pvs {

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p". Throws DomainError on a zero denominator and
  /// std::invalid_argument on malformed text.
  static Rational parse(const std::string& text);
  /// Exact value of a finite double.
  static Rational from_double(double v);

  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& q);
Rational pow(const Rational& q, unsigned e);

/// Writes q = r^2 * d with d a squarefree integer. d == 1 iff q is a rational square.
struct SquarefreeSplit {
  long d;
  Rational r;
};
SquarefreeSplit squarefree_part(const Rational& q);

/// Exact rational square root, if q is a square.
std::optional<Rational> exact_sqrt(const Rational& q);
/// Exact rational cube root, if q is a cube.
std::optional<Rational> exact_cbrt(const Rational& q);

/// Best continued-fraction convergent p/q with q <= max_denominator and
/// |x - p/q| <= tol, or nullopt if none exists.
std::optional<Rational> rational_reconstruct(double x, long max_denominator, double tol);

bool is_squarefree(long d);

/// a + b*sqrt(d). d == 0 marks a value that is known to be rational (b == 0)
/// and is compatible with every field; arithmetic between two values whose
/// d are both set and different is rejected.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError unless d is squarefree and d != 0, 1.
  QuadExt(Rational a, Rational b, long d);

  /// sqrt(d) itself.
  static QuadExt root(long d) { return {Rational(0), Rational(1), d}; }

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] long d() const { return d_; }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// sigma: sqrt(d) -> -sqrt(d).
  [[nodiscard]] QuadExt conj() const;
  /// x * sigma(x) = a^2 - d b^2.
  [[nodiscard]] Rational field_norm() const;
  /// Real value; throws DomainError for d < 0 with b != 0.
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::complex<double> to_complex() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x);
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  static long merge_d(long d1, long d2);
  void normalize();

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

/// Square root inside Q(sqrt d), if it exists there.
std::optional<QuadExt> exact_sqrt(const QuadExt& x);
/// Cube root inside Q(sqrt d), if it exists there (real fields only).
std::optional<QuadExt> exact_cbrt(const QuadExt& x);

std::string to_string(const QuadExt& x);

/// Exact sign of a + b sqrt(d) as a real number; DomainError if d < 0 and b != 0.
int real_sign(const QuadExt& x);
inline int real_sign(const Rational& x) { return x.sign(); }
inline int real_sign(double x) { return (x > 0.0) - (x < 0.0); }

// ---------------------------------------------------------------------------

template <class T>
concept ScalarField = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

template <class T>
inline constexpr bool is_complex_v = false;
template <class R>
inline constexpr bool is_complex_v<std::complex<R>> = true;

template <class T>
concept FloatScalar = std::floating_point<T> || is_complex_v<T>;

template <class T>
concept ExactScalar = ScalarField<T> && !FloatScalar<T>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr const char* name = "rational";
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational conj(const Rational& x) { return x; }
};

template <>
struct ScalarTraits<QuadExt> {
  static constexpr const char* name = "quadext";
  static double to_double(const QuadExt& x) { return x.to_double(); }
  static QuadExt from_rational(const Rational& q) { return QuadExt(q); }
  static QuadExt conj(const QuadExt& x) { return x.conj(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr const char* name = "float";
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.to_double(); }
  static double conj(double x) { return x; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr const char* name = "complex";
  static double to_double(const std::complex<double>& x) { return x.real(); }
  static std::complex<double> from_rational(const Rational& q) { return {q.to_double(), 0.0}; }
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
};

/// Zero test for exact scalars.
struct ExactZero {
  template <ExactScalar T>
  bool operator()(const T& x) const {
    return x == T(0);
  }
};

/// Zero test for floats: |x| <= tol.
struct NearZero {
  double tol;
  bool operator()(double x) const { return std::abs(x) <= tol; }
  bool operator()(const std::complex<double>& x) const { return std::abs(x) <= tol; }
};

/// Pivot magnitude used to pick pivots in float elimination; exact types
/// only need "nonzero".
template <class T>
double magnitude(const T& x) {
  if constexpr (FloatScalar<T>) {
    return std::abs(x);
  } else {
    return x == T(0) ? 0.0 : 1.0;
  }
}

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return ScalarTraits<From>::to_double(x);
  } else if constexpr (std::is_same_v<To, std::complex<double>>) {
    if constexpr (std::is_same_v<From, QuadExt>) {
      return x.to_complex();
    } else {
      return std::complex<double>(ScalarTraits<From>::to_double(x), 0.0);
    }
  } else if constexpr (std::is_same_v<To, QuadExt> && std::is_same_v<From, Rational>) {
    return QuadExt(x);
  } else {
    static_assert(sizeof(To) == 0, "unsupported scalar conversion");
  }
}

template <class T>
std::string scalar_to_string(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x.to_string();
  } else if constexpr (std::is_same_v<T, QuadExt>) {
    return to_string(x);
  } else if constexpr (is_complex_v<T>) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  } else {
    return std::to_string(x);
  }
}

}  // namespace pvs
