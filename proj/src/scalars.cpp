#include "pvs/scalars.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <limits>

namespace pvs {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer does not fit in 64 bits");
  return z.get_si();
}

// Squarefree kernel of a positive integer: n = s^2 * k with k squarefree.
// Trial division up to kBound; any cofactor below kBound^3 is then either
// prime, a product of two distinct primes, or a prime square.
std::pair<mpz_class, mpz_class> squarefree_kernel(mpz_class n) {
  constexpr unsigned long kBound = 1UL << 20;
  mpz_class square_root = 1;
  mpz_class kernel = 1;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) square_root *= p;
    if (e % 2 == 1) kernel *= p;
  };
  strip(2);
  for (unsigned long p = 3; p < kBound && n > 1; p += 2) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    strip(p);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      square_root *= r;
    } else {
      mpz_class bound3 = mpz_class(kBound) * kBound * kBound;
      if (n >= bound3) {
        throw DomainError("squarefree_part: cofactor too large to factor");
      }
      kernel *= n;
    }
  }
  return {square_root, kernel};
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DomainError("zero denominator");
  return Rational(n, d);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double");
  return Rational(mpq_class(v));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? static_cast<unsigned long>(-(d + 1)) + 1 : static_cast<unsigned long>(d);
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

SquarefreeSplit squarefree_part(const Rational& q) {
  if (q.is_zero()) throw DomainError("squarefree_part of zero");
  // q = n/m = (n*m)/m^2
  mpz_class n = q.numerator();
  mpz_class m = q.denominator();
  mpz_class prod = n * m;
  const bool negative = prod < 0;
  if (negative) prod = -prod;
  auto [root, kernel] = squarefree_kernel(prod);
  const long d = negative ? -to_long_checked(kernel) : to_long_checked(kernel);
  return {d, Rational(root, m)};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class n = q.numerator();
  mpz_class m = q.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(m.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rm;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rm.get_mpz_t(), m.get_mpz_t());
  return Rational(rn, rm);
}

std::optional<Rational> exact_cbrt(const Rational& q) {
  mpz_class n = q.numerator();
  mpz_class m = q.denominator();
  mpz_class rn, rm;
  const bool neg = n < 0;
  if (neg) n = -n;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(rm.get_mpz_t(), m.get_mpz_t(), 3) == 0) return std::nullopt;
  if (neg) rn = -rn;
  return Rational(rn, rm);
}

std::optional<Rational> rational_reconstruct(double x, long max_denominator, double tol) {
  if (!std::isfinite(x) || max_denominator < 1 || !(tol > 0.0)) return std::nullopt;
  // Convergents h_k / k_k of the continued fraction of x.
  long double rest = x;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(rest));
  mpz_class k_prev = 0, k = 1;
  rest -= std::floor(rest);
  for (int step = 0; step < 64; ++step) {
    if (k > max_denominator) break;
    const double approx = mpq_class(h, k).get_d();
    if (std::abs(x - approx) <= tol) return Rational(h, k);
    if (rest == 0.0L) break;
    rest = 1.0L / rest;
    const long double a = std::floor(rest);
    if (a > static_cast<long double>(LONG_MAX)) break;
    rest -= a;
    const mpz_class ai = static_cast<long>(a);
    mpz_class h_next = ai * h + h_prev;
    mpz_class k_next = ai * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 1 || !is_squarefree(d)) {
    throw DomainError("quadratic extension needs squarefree d != 0, 1 (got " + std::to_string(d) + ")");
  }
}

long QuadExt::merge_d(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw DomainError("mixing Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " + std::to_string(d2) + ")");
}

void QuadExt::normalize() {
  if (d_ == 0 && !b_.is_zero()) throw std::logic_error("QuadExt with irrational part but no d");
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::field_norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

double QuadExt::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  if (d_ < 0) throw DomainError("non-real element of an imaginary quadratic field");
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

int real_sign(const QuadExt& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (x.d() < 0) throw DomainError("non-real element of an imaginary quadratic field");
  if (sa == 0 || sa == sb) return sb;
  // a and b sqrt(d) have opposite signs; compare a^2 with b^2 d
  const Rational diff = x.a() * x.a() - x.b() * x.b() * Rational(x.d());
  return diff.sign() * sa;
}

std::complex<double> QuadExt::to_complex() const {
  if (b_.is_zero()) return {a_.to_double(), 0.0};
  if (d_ > 0) return {to_double(), 0.0};
  return {a_.to_double(), b_.to_double() * std::sqrt(static_cast<double>(-d_))};
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = merge_d(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = merge_d(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = merge_d(d_, o.d_);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  d_ = merge_d(d_, o.d_);
  const Rational n = o.field_norm();
  if (n.is_zero()) throw DomainError("division by zero");
  QuadExt inv = o.conj();
  inv.a_ /= n;
  inv.b_ /= n;
  return *this *= inv;
}

QuadExt operator-(const QuadExt& x) {
  QuadExt r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  QuadExt::merge_d(x.d_, y.d_);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::optional<QuadExt> exact_sqrt(const QuadExt& x) {
  if (x.is_rational()) {
    if (auto r = exact_sqrt(x.a())) {
      return x.d() == 0 ? QuadExt(*r) : QuadExt(*r, Rational(0), x.d());
    }
    if (x.d() == 0) return std::nullopt;
    // c = d s^2  ->  sqrt(c) = s sqrt(d)
    if (auto s = exact_sqrt(x.a() / Rational(x.d()))) return QuadExt(Rational(0), *s, x.d());
    return std::nullopt;
  }
  const Rational& c = x.a();
  const Rational& e = x.b();
  const Rational d(x.d());
  auto n = exact_sqrt(c * c - d * e * e);
  if (!n) return std::nullopt;
  for (const Rational& nn : {*n, -*n}) {
    auto a = exact_sqrt((c + nn) / Rational(2));
    if (!a || a->is_zero()) continue;
    QuadExt cand(*a, e / (Rational(2) * *a), x.d());
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

std::optional<QuadExt> exact_cbrt(const QuadExt& x) {
  if (x.is_rational()) {
    if (auto r = exact_cbrt(x.a())) {
      return x.d() == 0 ? QuadExt(*r) : QuadExt(*r, Rational(0), x.d());
    }
    return std::nullopt;
  }
  if (x.d() < 0) return std::nullopt;
  // Real embedding: r1 = cbrt(x), r2 = cbrt(sigma x); a = (r1+r2)/2, b = (r1-r2)/(2 sqrt d).
  const double r1 = std::cbrt(x.to_double());
  const double r2 = std::cbrt(x.conj().to_double());
  const double sd = std::sqrt(static_cast<double>(x.d()));
  auto a = rational_reconstruct((r1 + r2) / 2.0, 1L << 30, 1e-9 * (1.0 + std::abs(r1)));
  auto b = rational_reconstruct((r1 - r2) / (2.0 * sd), 1L << 30, 1e-9 * (1.0 + std::abs(r1)));
  if (!a || !b) return std::nullopt;
  QuadExt cand(*a, *b, x.d());
  if (cand * cand * cand == x) return cand;
  return std::nullopt;
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return x.a().to_string();
  return x.a().to_string() + " + " + x.b().to_string() + "*sqrt(" + std::to_string(x.d()) + ")";
}

}  // namespace pvs
