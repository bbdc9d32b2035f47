#include <random>

#include "doctest.h"
#include "okd/morphisms.hpp"

using namespace okd;

namespace {

Word W(const char* s) { return Word::parse(s); }
using RF = RationalFunction;
using M = Morphism<RF>;
using MQ = Morphism<Rational>;

const RF d = RF::indeterminate();

template <Field F>
void check_jones_wenzl(int n, Letter first, const FieldContext<F>& ctx) {
  const Morphism<F> f = jones_wenzl(n, first, ctx);
  const Word w = Word::alternating(static_cast<std::size_t>(n), first);
  REQUIRE(f.domain() == w);
  REQUIRE(f.coefficient(Diagram::identity(w)) == F(1));
  REQUIRE(compose(f, f, ctx) == f);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    REQUIRE(compose(cap_at<F>(w, i), f, ctx).is_zero_morphism());
    REQUIRE(compose(f, cup_at<F>(w, i), ctx).is_zero_morphism());
  }
}

// Random two-term morphism of the given type with small rational coefficients.
template <class Gen>
MQ random_morphism(const Word& a, const Word& b, Gen& gen) {
  const auto basis = enumerate(a, b);
  MQ m(a, b);
  if (basis.empty()) return m;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int i = 0; i < 2; ++i) m.add_term(basis[pick(gen)], Rational(coeff(gen), 3));
  return m;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(MQ::identity(W("")).coefficient(Diagram::empty()) == Rational(1));
  CHECK(epsilon_x<Rational>().size() == 1);
  CHECK(epsilon_x<Rational>().domain() == W("x x*"));
  CHECK(epsilon_xstar<Rational>().domain() == W("x* x"));
  CHECK(delta_x<Rational>().codomain() == W("x* x"));
  CHECK(delta_xstar<Rational>().codomain() == W("x x*"));
}

TEST_CASE("loop values in two-parameter mode") {
  const FieldContext<Rational> ctx(Rational(3), Rational(5));
  CHECK(compose(epsilon_x<Rational>(), delta_xstar<Rational>(), ctx) == MQ::scalar(Rational(3)));
  CHECK(compose(epsilon_xstar<Rational>(), delta_x<Rational>(), ctx) == MQ::scalar(Rational(5)));
}

TEST_CASE("composition with identities and signature errors") {
  const FieldContext<Rational> ctx(Rational(2));
  std::mt19937 gen(3);
  const MQ f = random_morphism(W("x x* x"), W("x"), gen);
  CHECK(compose(MQ::identity(W("x")), f, ctx) == f);
  CHECK(compose(f, MQ::identity(W("x x* x")), ctx) == f);
  CHECK_THROWS_AS(compose(f, f, ctx), SignatureError);
  CHECK_THROWS_AS(f + MQ::identity(W("x")), SignatureError);
}

TEST_CASE("Temperley-Lieb relations of e1, e2") {
  const auto ctx = generic_context();
  const M one = M::identity(W("x"));
  const M e1 = (RF(1) / d) * tensor(compose(delta_xstar<RF>(), epsilon_x<RF>(), ctx), one);
  const M e2 = (RF(1) / d) * tensor(one, compose(delta_x<RF>(), epsilon_xstar<RF>(), ctx));
  CHECK(compose(e1, e1, ctx) == e1);
  CHECK(compose(e2, e2, ctx) == e2);
  CHECK(compose(e1, compose(e2, e1, ctx), ctx) == (RF(1) / (d * d)) * e1);
  CHECK(compose(e2, compose(e1, e2, ctx), ctx) == (RF(1) / (d * d)) * e2);
}

TEST_CASE("bilinearity and interchange on random morphisms") {
  const FieldContext<Rational> ctx(Rational(7, 2));
  std::mt19937 gen(17);
  const auto words = Word::all_up_to(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    const Word a = words[pick(gen)], b = words[pick(gen)], c = words[pick(gen)];
    const MQ f1 = random_morphism(b, c, gen), f2 = random_morphism(b, c, gen);
    const MQ g1 = random_morphism(a, b, gen), g2 = random_morphism(a, b, gen);
    REQUIRE(compose(f1 + f2, g1, ctx) == compose(f1, g1, ctx) + compose(f2, g1, ctx));
    REQUIRE(compose(f1, g1 + g2, ctx) == compose(f1, g1, ctx) + compose(f1, g2, ctx));
    REQUIRE(tensor(f1 + f2, g1) == tensor(f1, g1) + tensor(f2, g1));
    REQUIRE(tensor(f1, g1 + g2) == tensor(f1, g1) + tensor(f1, g2));
    const Word e = words[pick(gen)], e2 = words[pick(gen)], e3 = words[pick(gen)];
    const MQ h1 = random_morphism(e, e2, gen), h2 = random_morphism(e2, e3, gen);
    REQUIRE(tensor(compose(f1, g1, ctx), compose(h2, h1, ctx)) ==
            compose(tensor(f1, h2), tensor(g1, h1), ctx));
  }
}

TEST_CASE("transpose") {
  const FieldContext<Rational> ctx(Rational(5, 3));
  for (const auto& w : Word::all_up_to(4)) {
    CHECK(transpose(MQ::identity(w)) == MQ::identity(star(w)));
  }
  std::mt19937 gen(5);
  const auto words = Word::all_up_to(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = words[pick(gen)], b = words[pick(gen)], c = words[pick(gen)];
    const MQ f = random_morphism(b, c, gen), g = random_morphism(a, b, gen);
    REQUIRE(transpose(transpose(f)) == f);
    REQUIRE(transpose(compose(f, g, ctx)) == compose(transpose(g), transpose(f), ctx));
  }
  CHECK(transpose(epsilon_x<Rational>()) == delta_xstar<Rational>());
}

TEST_CASE("f_2 agrees with the idempotent solved in End(X X*)") {
  const auto ctx = generic_context();
  const Word w = W("x x*");
  const M id = M::identity(w);
  const M e = compose(delta_xstar<RF>(), epsilon_x<RF>(), ctx);
  // Solve cap o (id + a e) = 0 for a: both terms are multiples of the cap.
  const RF cap_id = compose(epsilon_x<RF>(), id, ctx).coefficient(Diagram::cap(Letter::X));
  const RF cap_e = compose(epsilon_x<RF>(), e, ctx).coefficient(Diagram::cap(Letter::X));
  const RF a = -cap_id / cap_e;
  CHECK(a == -RF(1) / d);
  const M f2 = jones_wenzl(2, Letter::X, ctx);
  CHECK(f2 == id + a * e);
  CHECK(f2 == id - (RF(1) / d) * e);
}

TEST_CASE("Jones-Wenzl idempotents: generic mode") {
  const auto ctx = generic_context();
  for (int n = 1; n <= 5; ++n) {
    check_jones_wenzl(n, Letter::X, ctx);
    check_jones_wenzl(n, Letter::Xstar, ctx);
  }
  CHECK(jones_wenzl(1, Letter::X, ctx) == M::identity(W("x")));
}

TEST_CASE("Jones-Wenzl idempotents at d = 2 and d = 3") {
  for (const Rational dv : {Rational(2), Rational(3)}) {
    const FieldContext<Rational> ctx(dv);
    for (int n = 1; n <= 6; ++n) {
      check_jones_wenzl(n, Letter::X, ctx);
      check_jones_wenzl(n, Letter::Xstar, ctx);
    }
  }
}

TEST_CASE("Jones-Wenzl refuses degenerate loop values") {
  const FieldContext<Rational> ctx(Rational(1));  // [3](1) = 0
  CHECK_NOTHROW(jones_wenzl(2, Letter::X, ctx));
  try {
    (void)jones_wenzl(4, Letter::X, ctx);
    FAIL("expected a genericity error");
  } catch (const GenericityError& e) {
    CHECK(e.level() == 3);
  }
  CHECK_THROWS_AS(jones_wenzl(2, Letter::X, FieldContext<Rational>(Rational(2), Rational(3))),
                  DomainError);
}

TEST_CASE("transposed Jones-Wenzl idempotents are Jones-Wenzl idempotents") {
  const auto ctx = generic_context();
  for (int n = 1; n <= 4; ++n) {
    const M f = jones_wenzl(n, Letter::X, ctx);
    const M t = transpose(f);
    CHECK(compose(t, t, ctx) == t);
    const Word w = t.domain();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      CHECK(compose(cap_at<RF>(w, i), t, ctx).is_zero_morphism());
    }
    CHECK(t == jones_wenzl(n, w[0], ctx));
  }
}

TEST_CASE("simple projectors") {
  const auto ctx = generic_context();
  JonesWenzlTower<RF> tower(ctx);
  CHECK(tower.simple_projector(W("x")) == M::identity(W("x")));
  CHECK(tower.simple_projector(W("")) == M::identity(W("")));

  const Word example = W("x, x,x*,x,x*, x*,x,x*,x,x*, x*, x*");
  const M p = tower.simple_projector(example);
  const M expected = tensor(tensor(tensor(tensor(tower.get(1, Letter::X), tower.get(4, Letter::X)),
                                          tower.get(5, Letter::Xstar)),
                                   tower.get(1, Letter::Xstar)),
                            tower.get(1, Letter::Xstar));
  CHECK(p == expected);
  CHECK(p.domain() == example);

  const Word w = W("x x* x x*");
  const M pw = tower.simple_projector(w);
  CHECK(compose(pw, pw, ctx) == pw);
  for (const auto& dgm : enumerate(w, W(""))) {
    CHECK(compose(M::from_diagram(dgm), pw, ctx).is_zero_morphism());
  }
}

TEST_CASE("no nonzero maps from a simple to the unit (|w| <= 5)") {
  const auto ctx = generic_context();
  JonesWenzlTower<RF> tower(ctx);
  for (const auto& w : Word::all_up_to(5)) {
    if (w.empty()) continue;
    const M p = tower.simple_projector(w);
    for (const auto& dgm : enumerate(w, W(""))) {
      REQUIRE(compose(M::from_diagram(dgm), p, ctx).is_zero_morphism());
    }
  }
}

TEST_CASE("compressed hom dimensions") {
  const auto ctx = generic_context();
  JonesWenzlTower<RF> tower(ctx);
  CHECK(compressed_hom_dimension(W("x x*"), W("x x*"), tower) == 1);
  CHECK(compressed_hom_dimension(W("x"), W("x*"), tower) == 0);
  CHECK(compressed_hom_dimension(W(""), W(""), tower) == 1);
  for (const auto& w : Word::all_up_to(3))
    for (const auto& v : Word::all_up_to(3)) {
      REQUIRE(compressed_hom_dimension(w, v, tower) == (w == v ? 1u : 0u));
    }
}

TEST_CASE("hom dimensions") {
  CHECK(hom_dimension(W("x x*"), W("x x*")) == 2);
  CHECK(hom_dimension(W("x"), W("x")) == 1);
  CHECK(hom_dimension(W("x x"), W("x x")) == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(hom_dimension(Word::alternating(n, Letter::X).flipped().flipped(),
                        Word::alternating(n, Letter::X)) >= 1);
    const Word xs(std::vector<Letter>(n, Letter::X));
    CHECK(hom_dimension(xs, xs) == 1);
    CHECK(hom_dimension(xs.flipped(), xs.flipped()) == 1);
  }
}

TEST_CASE("rescaling functors") {
  std::mt19937 gen(23);
  const MQ f = random_morphism(W("x x* x"), W("x"), gen);
  CHECK(rescale_functor(f, Rational(1), Rational(1), false) == f);
  CHECK_THROWS_AS(rescale_functor(f, Rational(0), Rational(1), false), DomainError);

  CHECK(rescale_functor(epsilon_x<Rational>(), Rational(2), Rational(3), false) ==
        Rational(2) * epsilon_x<Rational>());
  CHECK(rescale_functor(delta_x<Rational>(), Rational(2), Rational(3), false) ==
        Rational(1, 2) * delta_x<Rational>());
  CHECK(rescale_functor(epsilon_x<Rational>(), Rational(2), Rational(3), true) ==
        Rational(2) * epsilon_xstar<Rational>());
  CHECK(rescale_functor(delta_xstar<Rational>(), Rational(2), Rational(3), true) ==
        Rational(1, 3) * delta_x<Rational>());

  for (const auto& dgm : enumerate(W("x x* x* x x x*"), W(""))) {
    const MQ swapped = rescale_functor(MQ::from_diagram(dgm), Rational(1), Rational(1), true);
    const ArcCensus before = arc_census(dgm);
    const ArcCensus after = arc_census(swapped.terms().begin()->first);
    CHECK(after.eps_x == before.eps_xstar);
    CHECK(after.eps_xstar == before.eps_x);
  }
}

TEST_CASE("rescaling intertwines composition exactly for the matching loop values") {
  const Rational lambda(2), mu(3), dl(3), dr(5);
  const FieldContext<Rational> source(dl, dr);
  const FieldContext<Rational> target(mu / lambda * dl, lambda / mu * dr);
  const FieldContext<Rational> swapped_target(lambda / mu * dr, mu / lambda * dl);
  const FieldContext<Rational> wrong(dl, dr);
  const auto words = Word::all_up_to(3);
  bool wrong_fails = false;
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words)
        for (const auto& g : enumerate(a, b))
          for (const auto& f : enumerate(b, c)) {
            const MQ fm = MQ::from_diagram(f), gm = MQ::from_diagram(g);
            const MQ lhs = rescale_functor(compose(fm, gm, source), lambda, mu, false);
            const MQ fl = rescale_functor(fm, lambda, mu, false);
            const MQ gl = rescale_functor(gm, lambda, mu, false);
            REQUIRE(lhs == compose(fl, gl, target));
            if (!(lhs == compose(fl, gl, wrong))) wrong_fails = true;
            const MQ lhs_s = rescale_functor(compose(fm, gm, source), lambda, mu, true);
            REQUIRE(lhs_s == compose(rescale_functor(fm, lambda, mu, true),
                                     rescale_functor(gm, lambda, mu, true), swapped_target));
          }
  CHECK(wrong_fails);
}
