#include <random>

#include "doctest.h"
#include "okd/scalars.hpp"

using namespace okd;

namespace {

RationalFunction poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalFunction(RationalPolynomial(c), RationalPolynomial(Rational(1)));
}

template <class Gen>
Rational random_rational(Gen& gen) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(gen), den(gen));
}

template <class Gen>
RationalFunction random_rational_function(Gen& gen) {
  std::uniform_int_distribution<int> deg(0, 3);
  const auto make = [&](bool nonzero) {
    while (true) {
      std::vector<Rational> c;
      const int k = deg(gen);
      for (int i = 0; i <= k; ++i) c.push_back(random_rational(gen));
      RationalPolynomial p(c);
      if (!nonzero || !p.is_zero_poly()) return p;
    }
  };
  return RationalFunction(make(false), make(true));
}

template <class F, class Make>
void check_field_laws(Make make) {
  for (int trial = 0; trial < 200; ++trial) {
    const F a = make(), b = make(), c = make();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == F(0));
    if (!is_zero(a)) REQUIRE(a * (F(1) / a) == F(1));
  }
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse(" 10/3 ").str() == "10/3");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("field laws: Rational") {
  std::mt19937 gen(7);
  check_field_laws<Rational>([&] { return random_rational(gen); });
}

TEST_CASE("field laws: RationalFunction") {
  std::mt19937 gen(11);
  check_field_laws<RationalFunction>([&] { return random_rational_function(gen); });
}

TEST_CASE("field laws: Complex") {
  std::mt19937 gen(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  check_field_laws<Complex>([&] { return Complex(u(gen), u(gen)); });
}

TEST_CASE("rational functions stay reduced with monic denominators") {
  const RationalFunction d = RationalFunction::indeterminate();
  const RationalFunction f = (d * d - RationalFunction(1)) / (Rational(2) * (d - RationalFunction(1)));
  CHECK(f.denominator() == RationalPolynomial(Rational(1)));
  CHECK(f == (d + RationalFunction(1)) / RationalFunction(2));
  const RationalFunction g = RationalFunction(1) / (Rational(3) * d);
  CHECK(g.denominator().leading() == Rational(1));
  CHECK(g.numerator() == RationalPolynomial(Rational(1, 3)));
  CHECK_THROWS_AS(d / RationalFunction(0), DomainError);
}

TEST_CASE("quantum integers") {
  const auto gen_ctx = generic_context();
  CHECK(quantum_integer(1, gen_ctx) == RationalFunction(1));
  CHECK(quantum_integer(3, gen_ctx) == poly({-1, 0, 1}));
  CHECK(quantum_integer(5, FieldContext<Rational>(Rational(2))) == Rational(5));
  CHECK_THROWS_AS(quantum_integer(0, gen_ctx), DomainError);
  CHECK_THROWS_AS(quantum_integer(-2, gen_ctx), DomainError);
}

TEST_CASE("quantum integers at d = 2 equal n") {
  const FieldContext<Rational> ctx(Rational(2));
  for (int n = 1; n <= 30; ++n) CHECK(quantum_integer(n, ctx) == Rational(n));
}

TEST_CASE("[n](q + 1/q)(q - 1/q) = q^n - q^-n") {
  for (const Rational q : {Rational(2), Rational(3), Rational(1, 2), Rational(-5, 3), Rational(7, 4)}) {
    const Rational qi = Rational(1) / q;
    const FieldContext<Rational> ctx(q + qi);
    for (int n = 1; n <= 12; ++n) {
      CHECK(quantum_integer(n, ctx) * (q - qi) == power(q, n) - power(q, -n));
    }
  }
}

TEST_CASE("genericity") {
  CHECK(is_generic(generic_context(), 10));
  CHECK_FALSE(is_generic(FieldContext<Rational>(Rational(1)), 3));
  CHECK(is_generic(FieldContext<Rational>(Rational(1)), 2));
  CHECK(is_generic(FieldContext<Rational>(Rational(2)), 20));
  CHECK_THROWS_AS(require_generic(FieldContext<Rational>(Rational(0, 1) + Rational(1)), 3),
                  GenericityError);
}

TEST_CASE("field contexts reject zero loop values") {
  CHECK_THROWS_AS(FieldContext<Rational>(Rational(0)), DomainError);
  CHECK_THROWS_AS(FieldContext<Rational>(Rational(1), Rational(0)), DomainError);
  const FieldContext<Rational> two(Rational(3), Rational(5));
  CHECK_FALSE(two.one_parameter());
  CHECK_THROWS_AS(two.d(), DomainError);
}

TEST_CASE("conjugation and phase") {
  CHECK(conj(Complex(1, 2)) == Complex(1, -2));
  CHECK(conj(Rational(3, 4)) == Rational(3, 4));
  CHECK(phase(Rational(-3)) == Rational(-1));
  CHECK(phase(Complex(0, 5)) == Complex(0, 1));
  CHECK_THROWS_AS(phase(RationalFunction::indeterminate()), DomainError);
}
