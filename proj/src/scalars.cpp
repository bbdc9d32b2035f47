#include "okd/scalars.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace okd {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto strip = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  strip(s);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  const auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DomainError("rational with zero denominator: \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw DomainError("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

RationalFunction::RationalFunction(RationalPolynomial num, RationalPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero_poly()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero_poly()) {
    den_ = RationalPolynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    const auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Rational lead = den_.leading();
  if (!(lead == Rational(1))) {
    const Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RationalFunction RationalFunction::indeterminate() {
  return RationalFunction(RationalPolynomial::x(), RationalPolynomial(Rational(1)), Reduced{});
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational den = den_(at);
  if (is_zero(den)) {
    throw DomainError("rational function " + str() + " has a pole at d = " + at.str());
  }
  return num_(at) / den;
}

namespace {

std::string poly_str(const RationalPolynomial& p) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "d";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Reduced{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero_value()) return b;
  if (b.is_zero_value()) return a;
  if (a.den_ == b.den_) {
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  const auto g = gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    // Coprime monic denominators: the sum is already reduced.
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                            RationalFunction::Reduced{});
  }
  const auto a_cof = a.den_ / g;
  const auto b_cof = b.den_ / g;
  return RationalFunction(a.num_ * b_cof + b.num_ * a_cof, a.den_ * b_cof);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero_value() || b.is_zero_value()) return {};
  // Cross-cancel so that only the (smaller) cofactors are multiplied.
  const auto g1 = gcd(a.num_, b.den_);
  const auto g2 = gcd(b.num_, a.den_);
  auto num = (a.num_ / g1) * (b.num_ / g2);
  auto den = (a.den_ / g2) * (b.den_ / g1);
  const Rational lead = den.leading();
  if (!(lead == Rational(1))) {
    const Rational inv = Rational(1) / lead;
    num = inv * num;
    den = inv * den;
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero_value()) throw DomainError("division by zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

std::string Complex::str() const {
  std::ostringstream os;
  os << std::setprecision(17) << "[" << v_.real() << ", " << v_.imag() << "]";
  return os.str();
}

Complex operator/(const Complex& a, const Complex& b) {
  if (is_zero(b)) throw DomainError("division by zero");
  return Complex(a.v_ / b.v_);
}

Rational phase(const Rational& d) {
  if (d.sign() == 0) throw DomainError("phase of zero");
  return Rational(d.sign());
}

Complex phase(const Complex& d) {
  if (is_zero(d)) throw DomainError("phase of zero");
  return Complex(d.value() / std::abs(d.value()));
}

RationalFunction phase(const RationalFunction&) {
  throw DomainError("absolute values are not defined over Q(d); use a numeric backend");
}

Rational magnitude(const Rational& d) { return d.abs(); }
Complex magnitude(const Complex& d) { return Complex(std::abs(d.value())); }
RationalFunction magnitude(const RationalFunction&) {
  throw DomainError("absolute values are not defined over Q(d); use a numeric backend");
}

FieldContext<RationalFunction> generic_context() {
  return FieldContext<RationalFunction>(RationalFunction::indeterminate());
}

RationalPolynomial quantum_integer_polynomial(int n) {
  return quantum_integer(n, generic_context()).numerator();
}

}  // namespace okd
