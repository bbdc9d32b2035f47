#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include "okd/errors.hpp"
#include "okd/polynomial.hpp"

namespace okd {

// ---------------------------------------------------------------------------
// Rational: exact rationals (GMP).
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" (arbitrary size integers). Throws ParseError.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  int sign() const noexcept { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.sign() == 0; }
inline Rational conj(const Rational& r) { return r; }
inline bool is_real(const Rational&) { return true; }
inline std::string to_string(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------
// RationalFunction: elements of Q(d), kept reduced with monic denominator.
// ---------------------------------------------------------------------------

using RationalPolynomial = Polynomial<Rational>;

class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  template <std::integral I>
  RationalFunction(I n)  // NOLINT(google-explicit-constructor)
      : num_(Rational(n)), den_(Rational(1)) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(c), den_(Rational(1)) {}
  /// num/den, reduced. Throws DomainError on a zero denominator.
  RationalFunction(RationalPolynomial num, RationalPolynomial den);

  /// The indeterminate d.
  static RationalFunction indeterminate();

  const RationalPolynomial& numerator() const noexcept { return num_; }
  const RationalPolynomial& denominator() const noexcept { return den_; }
  bool is_zero_value() const noexcept { return num_.is_zero_poly(); }
  /// Value at a point; throws DomainError if the denominator vanishes there.
  Rational evaluate(const Rational& at) const;
  std::string str() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(RationalPolynomial num, RationalPolynomial den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  RationalPolynomial num_;
  RationalPolynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero_value(); }
inline RationalFunction conj(const RationalFunction& f) { return f; }
inline bool is_real(const RationalFunction&) { return true; }
inline std::string to_string(const RationalFunction& f) { return f.str(); }

// ---------------------------------------------------------------------------
// Complex: double-precision complex numbers with tolerance-based equality.
// ---------------------------------------------------------------------------

class Complex {
 public:
  Complex() = default;
  template <std::integral I>
  Complex(I n) : v_(static_cast<double>(n), 0.0) {}  // NOLINT(google-explicit-constructor)
  Complex(double re, double im = 0.0) : v_(re, im) {}  // NOLINT(google-explicit-constructor)
  Complex(std::complex<double> v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Complex(const Rational& r) : v_(r.to_double(), 0.0) {}  // NOLINT(google-explicit-constructor)

  /// Absolute tolerance used by == and is_zero. Default 1e-9. Process-wide;
  /// set it before any concurrent use.
  static double tolerance() noexcept { return tolerance_; }
  static void set_tolerance(double tol) noexcept { tolerance_ = tol; }

  const std::complex<double>& value() const noexcept { return v_; }
  double real() const noexcept { return v_.real(); }
  double imag() const noexcept { return v_.imag(); }
  std::string str() const;

  Complex operator-() const { return Complex(-v_); }
  friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.v_ + b.v_); }
  friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.v_ - b.v_); }
  friend Complex operator*(const Complex& a, const Complex& b) { return Complex(a.v_ * b.v_); }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& o) { v_ += o.v_; return *this; }
  Complex& operator-=(const Complex& o) { v_ -= o.v_; return *this; }
  Complex& operator*=(const Complex& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return std::abs(a.v_ - b.v_) <= tolerance_;
  }

 private:
  std::complex<double> v_{};
  static inline double tolerance_ = 1e-9;
};

inline bool is_zero(const Complex& z) { return std::abs(z.value()) <= Complex::tolerance(); }
inline Complex conj(const Complex& z) { return Complex(std::conj(z.value())); }
inline bool is_real(const Complex& z) { return std::abs(z.imag()) <= Complex::tolerance(); }
inline std::string to_string(const Complex& z) { return z.str(); }

// ---------------------------------------------------------------------------
// Field concept and helpers.
// ---------------------------------------------------------------------------

template <class F>
concept Field = std::regular<F> && requires(const F& a, const F& b) {
  F(0);
  F(1);
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { is_zero(a) } -> std::same_as<bool>;
  { conj(a) } -> std::same_as<F>;
  { is_real(a) } -> std::same_as<bool>;
  { to_string(a) } -> std::same_as<std::string>;
};

/// Integer power; negative exponents invert (DomainError on 0^-k).
template <Field F>
F power(const F& base, int exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw DomainError("zero raised to a negative power");
    return power(F(1) / base, -exponent);
  }
  F result(1);
  F b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    b = b * b;
    exponent >>= 1;
  }
  return result;
}

/// d/|d| for a real nonzero scalar (its sign), or the phase of a complex one.
/// Throws DomainError where no absolute value exists (rational functions).
Rational phase(const Rational& d);
Complex phase(const Complex& d);
RationalFunction phase(const RationalFunction& d);

/// |d| as a field element, with the same support as phase().
Rational magnitude(const Rational& d);
Complex magnitude(const Complex& d);
RationalFunction magnitude(const RationalFunction& d);

// ---------------------------------------------------------------------------
// FieldContext: the loop parameters d_L (anticlockwise) and d_R (clockwise).
// ---------------------------------------------------------------------------

template <Field F>
class FieldContext {
 public:
  using scalar_type = F;

  /// One-parameter category O_d.
  explicit FieldContext(F d) : FieldContext(d, d) {}
  /// Two-parameter category O_{d_L, d_R}.
  FieldContext(F d_left, F d_right)
      : d_left_(std::move(d_left)), d_right_(std::move(d_right)) {
    if (is_zero(d_left_) || is_zero(d_right_)) {
      throw DomainError("loop parameters must be nonzero");
    }
  }

  const F& d_left() const noexcept { return d_left_; }
  const F& d_right() const noexcept { return d_right_; }
  bool one_parameter() const { return d_left_ == d_right_; }

  /// The loop value d of O_d; DomainError in two-parameter mode.
  const F& d() const {
    if (!one_parameter()) {
      throw DomainError("operation requires d_L = d_R (one-parameter category)");
    }
    return d_left_;
  }

 private:
  F d_left_;
  F d_right_;
};

/// Generic mode: d is the indeterminate of Q(d).
FieldContext<RationalFunction> generic_context();

/// Quantum integer [n]: [1] = 1, [2] = d, [n+1] = d[n] - [n-1].
template <Field F>
F quantum_integer(int n, const FieldContext<F>& ctx) {
  if (n < 1) throw DomainError("quantum integer [n] needs n >= 1, got " + std::to_string(n));
  const F& d = ctx.d();
  F prev(1);
  F cur = d;
  if (n == 1) return prev;
  for (int k = 2; k < n; ++k) {
    F next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Quantum integer as a polynomial in d.
RationalPolynomial quantum_integer_polynomial(int n);

/// Whether [k] != 0 for every 2 <= k <= level.
template <Field F>
bool is_generic(const FieldContext<F>& ctx, int level) {
  for (int k = 2; k <= level; ++k) {
    if (is_zero(quantum_integer(k, ctx))) return false;
  }
  return true;
}

/// Throws GenericityError naming the first vanishing [k], 2 <= k <= level.
template <Field F>
void require_generic(const FieldContext<F>& ctx, int level) {
  for (int k = 2; k <= level; ++k) {
    if (is_zero(quantum_integer(k, ctx))) {
      throw GenericityError(k, "quantum integer [" + std::to_string(k) + "] vanishes at d = " +
                                   to_string(ctx.d()));
    }
  }
}

}  // namespace okd
