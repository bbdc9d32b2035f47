#include "okd/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "okd/fiber.hpp"
#include "okd/fusion.hpp"
#include "okd/hopf.hpp"
#include "okd/json_io.hpp"
#include "okd/morphisms.hpp"
#include "okd/star.hpp"

namespace okd {

namespace {

using MQ = Matrix<Rational>;
using Mor = Morphism<Rational>;
using RF = RationalFunction;

// Collects failed checks; the first few are kept for the report.
class Ledger {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) failed_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!extra.empty()) s << ", " << extra;
    if (failures_ > 0) {
      s << "; " << failures_ << " failed";
      for (const auto& f : failed_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> failed_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome finish(const Ledger& l, const std::string& extra = "") { return {l.ok(), l.summary(extra)}; }

std::vector<Diagram> diagrams_up_to(std::size_t max_points) {
  std::vector<Diagram> out;
  for (const auto& w : Word::all_up_to(max_points))
    for (const auto& v : Word::all_up_to(max_points - w.size()))
      for (const auto& d : enumerate(w, v)) out.push_back(d);
  return out;
}

std::size_t catalan(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

Word repeat(const Word& w, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

template <class Gen>
MQ random_invertible(std::size_t n, Gen& gen) {
  std::uniform_int_distribution<long> u(-3, 3);
  while (true) {
    MQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(u(gen), 1 + (u(gen) & 1));
    if (inverse(m)) return m;
  }
}

FiberData<Rational> identity_data() {
  return validate_fiber(MQ::identity(2), MQ::identity(2), FieldContext<Rational>(Rational(2)));
}

FiberData<Rational> q_data() {
  return validate_fiber(MQ::identity(2), MQ::diagonal({Rational(3), Rational(1, 3)}),
                        FieldContext<Rational>(Rational(10, 3)));
}

Outcome loop_values() {
  Ledger l;
  const FieldContext<Rational> ctx(Rational(3), Rational(5));
  l.check(compose(epsilon_x<Rational>(), delta_xstar<Rational>(), ctx) == Mor::scalar(Rational(3)),
          "eps_X o delta_X* != 3");
  l.check(compose(epsilon_xstar<Rational>(), delta_x<Rational>(), ctx) == Mor::scalar(Rational(5)),
          "eps_X* o delta_X != 5");
  return finish(l, "(d_L, d_R) = (3, 5)");
}

Outcome hom_dimensions() {
  Ledger l;
  const Word x{Letter::X};
  l.check(hom_dimension(Word::parse("x x*"), Word::parse("x x*")) == 2, "dim End(X X*)");
  l.check(hom_dimension(Word::parse("x* x"), Word::parse("x* x")) == 2, "dim End(X* X)");
  for (std::size_t n = 1; n <= 5; ++n) {
    const Word xs = repeat(x, n);
    l.check(hom_dimension(xs, xs) == 1, "dim End(X^" + std::to_string(n) + ")");
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    l.check(enumerate(repeat(Word::parse("x x*"), n), Word{}).size() == catalan(n),
            "Catalan(" + std::to_string(n) + ")");
  }
  return finish(l, "Catalan checked to n = 8");
}

Outcome rescaling() {
  Ledger l;
  const Rational lambda(2), mu(3), dl(3), dr(5);
  const FieldContext<Rational> source(dl, dr);
  const FieldContext<Rational> target(mu / lambda * dl, lambda / mu * dr);
  const FieldContext<Rational> swapped(lambda / mu * dr, mu / lambda * dl);
  const auto words = Word::all_up_to(4);
  long pairs = 0;
  bool wrong_detected = false;
  for (const auto& a : words)
    for (const auto& b : words) {
      const auto gs = enumerate(a, b);
      if (gs.empty()) continue;
      for (const auto& c : words)
        for (const auto& f : enumerate(b, c))
          for (const auto& g : gs) {
            const Mor fm = Mor::from_diagram(f), gm = Mor::from_diagram(g);
            const Mor fg = compose(fm, gm, source);
            const Mor lhs = rescale_functor(fg, lambda, mu, false);
            const Mor rhs = compose(rescale_functor(fm, lambda, mu, false),
                                    rescale_functor(gm, lambda, mu, false), target);
            l.check(lhs == rhs, "plain functor on [" + a.str() + "]->[" + b.str() + "]->[" + c.str() + "]");
            if (!(lhs == compose(rescale_functor(fm, lambda, mu, false),
                                 rescale_functor(gm, lambda, mu, false), source))) {
              wrong_detected = true;
            }
            const Mor slhs = rescale_functor(fg, lambda, mu, true);
            const Mor srhs = compose(rescale_functor(fm, lambda, mu, true),
                                     rescale_functor(gm, lambda, mu, true), swapped);
            l.check(slhs == srhs, "swapped functor on [" + a.str() + "]->[" + b.str() + "]->[" + c.str() + "]");
            ++pairs;
          }
    }
  l.check(wrong_detected, "unrescaled loop values were not rejected");
  return finish(l, std::to_string(pairs) + " composable pairs");
}

Outcome jones_wenzl_idempotents() {
  Ledger l;
  JonesWenzlTower<RF> tower(generic_context());
  const auto& ctx = tower.context();
  for (const Letter first : {Letter::X, Letter::Xstar}) {
    for (int n = 1; n <= 6; ++n) {
      const Morphism<RF>& f = tower.get(n, first);
      const Word w = Word::alternating(static_cast<std::size_t>(n), first);
      const std::string tag = "f_" + std::to_string(n) + " from " + to_string(first);
      l.check(compose(f, f, ctx) == f, tag + " not idempotent");
      l.check(f.coefficient(Diagram::identity(w)) == RF(1), tag + " identity coefficient");
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        l.check(compose(cap_at<RF>(w, i), f, ctx).is_zero_morphism(), tag + " cap " + std::to_string(i));
        l.check(compose(f, cup_at<RF>(w, i), ctx).is_zero_morphism(), tag + " cup " + std::to_string(i));
      }
    }
  }
  return finish(l, "generic Q(d), n <= 6");
}

Outcome simple_objects() {
  Ledger l;
  JonesWenzlTower<RF> tower(generic_context());
  const auto& ctx = tower.context();
  long annihilations = 0;
  for (const auto& w : Word::all_up_to(6)) {
    if (w.empty()) continue;
    const Morphism<RF> p = tower.simple_projector(w);
    for (const auto& d : enumerate(w, Word{})) {
      l.check(compose(Morphism<RF>::from_diagram(d), p, ctx).is_zero_morphism(), "D o P_[" + w.str() + "]");
      ++annihilations;
    }
  }
  long pairs = 0;
  for (const auto& w : Word::all_up_to(4))
    for (const auto& v : Word::all_up_to(4)) {
      l.check(compressed_hom_dimension(w, v, tower) == (w == v ? 1u : 0u),
              "compressed dim [" + w.str() + "], [" + v.str() + "]");
      ++pairs;
    }
  return finish(l, std::to_string(annihilations) + " caps on projectors, " + std::to_string(pairs) +
                       " compressed hom-spaces");
}

Outcome fusion_oracle() {
  Ledger l;
  const auto words = Word::all_up_to(5);
  long pairs = 0;
  for (const auto& w : words)
    for (const auto& v : words) {
      l.check(dimension_oracle_check(w, v), "oracle [" + w.str() + "], [" + v.str() + "]");
      ++pairs;
    }
  const Word example = Word::parse("x, x,x*,x,x*, x*,x,x*,x,x*, x*, x*");
  const auto parts = alternating_decomposition(example);
  const std::vector<std::pair<std::size_t, Letter>> expected{
      {1, Letter::X}, {4, Letter::X}, {5, Letter::Xstar}, {1, Letter::Xstar}, {1, Letter::Xstar}};
  l.check(parts.size() == expected.size(), "worked example has five parts");
  for (std::size_t i = 0; i < std::min(parts.size(), expected.size()); ++i) {
    l.check(parts[i].size() == expected[i].first && parts[i][0] == expected[i].second,
            "worked example part " + std::to_string(i + 1));
  }
  return finish(l, std::to_string(pairs) + " word pairs, parts X1 X4 Y5 Y1 Y1");
}

Outcome star_laws() {
  Ledger l;
  const auto diagrams = diagrams_up_to(6);
  const auto words = Word::all_up_to(6);
  for (const Rational& dv : {Rational(2), Rational(-3)}) {
    for (const Rational& c : {Rational(1), Rational(-1), Rational(2)}) {
      const StarParams<Rational> p(c, FieldContext<Rational>(dv));
      const std::string tag = "c=" + c.str() + " d=" + dv.str();
      l.check(star(epsilon_x<Rational>(), p) == c * delta_xstar<Rational>(), tag + " (eps_X)*");
      for (const auto& d : diagrams) {
        const Mor f = Mor::from_diagram(d);
        l.check(star(star(f, p), p) == f, tag + " involution");
      }
      for (const auto& a : words)
        for (const auto& b : words) {
          if (a.size() + b.size() > 6) continue;
          const auto gs = enumerate(a, b);
          if (gs.empty()) continue;
          for (const auto& c2 : words) {
            if (b.size() + c2.size() > 6) continue;
            for (const auto& f : enumerate(b, c2))
              for (const auto& g : gs) {
                const Mor fm = Mor::from_diagram(f), gm = Mor::from_diagram(g);
                l.check(star(compose(fm, gm, p.ctx), p) == compose(star(gm, p), star(fm, p), p.ctx),
                        tag + " antimultiplicative");
              }
          }
        }
      for (const auto& f : diagrams)
        for (const auto& g : diagrams) {
          if (f.num_points() + g.num_points() > 6) continue;
          const Mor fm = Mor::from_diagram(f), gm = Mor::from_diagram(g);
          l.check(star(tensor(fm, gm), p) == tensor(star(fm, p), star(gm, p)), tag + " monoidal");
        }
    }
  }
  const std::vector<std::tuple<Complex, Complex, bool>> table{
      {Complex(1), Complex(7), true},           {Complex(1), Complex(-1), false},
      {Complex(0, 1), Complex(0, -1), true},    {Complex(-2), Complex(-1.0 / 3), true},
      {Complex(0, 1), Complex(0, 3), true},     {Complex(1, 1), Complex(-1, 1), false}};
  for (const auto& [c, c2, expect] : table) {
    l.check(star_equivalent(c, c2) == expect, "star_equivalent(" + to_string(c) + ", " + to_string(c2) + ")");
  }
  return finish(l, std::to_string(diagrams.size()) + " diagrams, 6 parameter pairs");
}

Outcome cstar_positivity() {
  Ledger l;
  long matrices = 0;
  for (const Rational& dv : {Rational(2), Rational(5, 2), Rational(3)}) {
    const FieldContext<Rational> ctx(dv);
    for (const auto& w : Word::all_up_to(8)) {
      const MQ g = gram_matrix(w, ctx);
      if (g.rows() == 0) continue;
      l.check(psd_test(g).psd, "d=" + dv.str() + " w=[" + w.str() + "]");
      ++matrices;
    }
  }
  const FieldContext<Rational> bad(Rational(3, 2));
  std::size_t first_failure = 0;
  for (std::size_t n = 0; n <= 10 && first_failure == 0; ++n) {
    for (const auto& w : Word::all_of_length(n)) {
      const MQ g = gram_matrix(w, bad);
      if (g.rows() > 0 && !psd_test(g).psd) {
        first_failure = n;
        break;
      }
    }
  }
  l.check(first_failure == 8, "first non-PSD level at d = 3/2 is " + std::to_string(first_failure));
  const MQ alternating = gram_matrix(repeat(Word::parse("x x*"), 4), bad);
  const PsdVerdict v = psd_test(alternating);
  bool negative_pivot = false;
  for (const auto& piv : v.pivots) negative_pivot = negative_pivot || piv.sign() < 0;
  l.check(negative_pivot, "no negative pivot for (x x*)^4 at d = 3/2");
  return finish(l, std::to_string(matrices) + " PSD Gram matrices; d = 3/2 fails first at |w| = " +
                       std::to_string(first_failure));
}

Outcome fiber_functor() {
  Ledger l;
  // Validate, serialize, re-read and re-evaluate.
  for (const auto& [a, b, dv] : {std::tuple{MQ::identity(2), MQ::identity(2), Rational(2)},
                                 std::tuple{MQ::identity(2), MQ::diagonal({Rational(3), Rational(1, 3)}),
                                            Rational(10, 3)}}) {
    const FieldContext<Rational> ctx(dv);
    const auto fd = validate_fiber(a, b, ctx);
    const auto again = validate_fiber(matrix_from_json<Rational>(to_json(fd.a())),
                                      matrix_from_json<Rational>(to_json(fd.b())), ctx);
    const Mor loop = compose(epsilon_x<Rational>(), delta_xstar<Rational>(), ctx);
    l.check(evaluate(loop, again).entries.front() == dv, "loop value at d=" + dv.str());
    l.check(evaluate(Mor::identity(Word::parse("x")), again).as_matrix() == MQ::identity(2), "identity");
    for (const auto& d : diagrams_up_to(4)) l.check(evaluate(d, fd) == evaluate(d, again), "round trip");
  }

  std::mt19937 gen(2024);
  const auto moved = gauge_transform(q_data(), random_invertible(2, gen), random_invertible(2, gen));
  const auto words = Word::all_up_to(4);
  long pairs = 0;
  for (const auto& fd : {identity_data(), moved}) {
    const auto& ctx = fd.context();
    for (const auto& a : words)
      for (const auto& b : words) {
        const auto gs = enumerate(a, b);
        if (gs.empty()) continue;
        for (const auto& c : words)
          for (const auto& f : enumerate(b, c))
            for (const auto& g : gs) {
              const Mor fm = Mor::from_diagram(f), gm = Mor::from_diagram(g);
              l.check(evaluate(compose(fm, gm, ctx), fd).as_matrix() ==
                          evaluate(gm, fd).as_matrix() * evaluate(fm, fd).as_matrix(),
                      "functoriality");
              ++pairs;
            }
      }
  }

  for (int trial = 0; trial < 20; ++trial) {
    const auto x = gauge_transform(q_data(), random_invertible(2, gen), random_invertible(2, gen));
    const auto y = gauge_transform(x, random_invertible(2, gen), random_invertible(2, gen));
    l.check(fiber_equivalent(x, y), "gauge pair " + std::to_string(trial));
  }
  const auto jordan = validate_fiber(MQ::identity(2), MQ{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
                                     FieldContext<Rational>(Rational(2)));
  l.check(!fiber_equivalent(jordan, identity_data()), "Jordan block vs its diagonal part");
  const MQ companion{{Rational(0), Rational(-1)}, {Rational(1), Rational(10, 3)}};
  l.check(fiber_equivalent(q_data(), validate_fiber(MQ::identity(2), companion, q_data().context())),
          "diag(3, 1/3) vs companion matrix");
  return finish(l, std::to_string(pairs) + " composable pairs, 20 gauge pairs");
}

Outcome unitary_case() {
  Ledger l;
  std::vector<FiberData<Rational>> valid;
  for (const auto& [mu, dv] : {std::pair{std::vector<Rational>{Rational(1), Rational(1)}, Rational(2)},
                               std::pair{std::vector<Rational>{Rational(2), Rational(1, 2)}, Rational(17, 4)}}) {
    try {
      valid.push_back(unitary_from_eigenvalues(mu, dv));
    } catch (const FiberError& e) {
      l.check(false, e.what());
    }
  }
  bool rejected = false;
  try {
    (void)unitary_from_eigenvalues({Rational(1), Rational(2)}, Rational(5));
  } catch (const FiberError&) {
    rejected = true;
  }
  l.check(rejected, "mu = (1, 2) at d = 5 accepted");
  const auto diagrams = diagrams_up_to(6);
  for (const auto& fd : valid)
    for (const auto& d : diagrams) {
      const Mor f = Mor::from_diagram(d);
      l.check(evaluate(cstar_adjoint(f, fd.context()), fd).as_matrix() == evaluate(f, fd).as_matrix().adjoint(),
              "adjoint compatibility");
    }
  return finish(l, std::to_string(diagrams.size()) + " diagrams per instance");
}

Outcome faithfulness() {
  Ledger l;
  for (const auto& fd : {identity_data(), q_data()})
    for (const auto& w : Word::all_up_to(6)) {
      const auto [r, expected] = faithfulness_rank(w, fd);
      l.check(r == expected, "n=2 rank at [" + w.str() + "]");
    }
  const auto one = validate_fiber(MQ{{Rational(1)}}, MQ{{Rational(1)}}, FieldContext<Rational>(Rational(1)));
  std::size_t first_defect = 0;
  for (std::size_t n = 0; n <= 4 && first_defect == 0; ++n)
    for (const auto& w : Word::all_of_length(n)) {
      const auto [r, expected] = faithfulness_rank(w, one);
      if (r != expected) {
        first_defect = n;
        break;
      }
    }
  l.check(first_defect == 4, "first n = 1 defect at |w| = " + std::to_string(first_defect));
  return finish(l, "n = 1 defect first at |w| = " + std::to_string(first_defect));
}

Outcome hopf_emission() {
  Ledger l;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fd = validate_fiber(MQ::identity(n), MQ::identity(n),
                                   FieldContext<Rational>(Rational(static_cast<long>(n))));
    const auto rs = emit_relations(fd);
    l.check(rs.relations.size() == 4 * n * n, "relation count n=" + std::to_string(n));
    l.check(coassociative(rs), "coassociativity n=" + std::to_string(n));
  }
  const auto rs = emit_relations(identity_data());
  l.check(classical_point_check(rs, MQ{{Rational(3, 5), Rational(4, 5)}, {Rational(-4, 5), Rational(3, 5)}}),
          "orthogonal classical point");
  return finish(l);
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"loop-values", loop_values},
      {"hom-dimensions", hom_dimensions},
      {"rescaling-functors", rescaling},
      {"jones-wenzl", jones_wenzl_idempotents},
      {"simple-objects", simple_objects},
      {"fusion-oracle", fusion_oracle},
      {"star-laws", star_laws},
      {"cstar-positivity", cstar_positivity},
      {"fiber-functor", fiber_functor},
      {"unitary-fiber", unitary_case},
      {"faithfulness", faithfulness},
      {"hopf-emission", hopf_emission}};
  std::vector<CriterionResult> out;
  int id = 0;
  for (const auto& [name, run] : criteria) {
    CriterionResult r{++id, name, false, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = run();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.detail += " (" + std::to_string(ms.count()) + " ms)";
    out.push_back(std::move(r));
  }
  return out;
}

int print_acceptance(std::ostream& out) {
  int failures = 0;
  for (const auto& r : run_acceptance()) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
    failures += r.pass ? 0 : 1;
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}

}  // namespace okd
