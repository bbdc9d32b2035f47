#include <numeric>
#include <set>

#include "doctest.h"
#include "okd/diagrams.hpp"
#include "okd/errors.hpp"

using namespace okd;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::size_t catalan_recursive(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

Word power_word(const Word& w, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

// Closed components of the glued picture, counted with a union-find over all
// points of both diagrams; independent of the string-walking implementation.
int count_loops(const Diagram& upper, const Diagram& lower) {
  const int m = static_cast<int>(upper.top().size());
  const int k = static_cast<int>(upper.bottom().size());
  const int n = static_cast<int>(lower.bottom().size());
  // Nodes: upper points 0..m+k-1, lower points offset by m+k.
  const int off = m + k;
  std::vector<int> parent(static_cast<std::size_t>(off + k + n));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int g = 0; g < off; ++g) unite(g, upper.partner()[g]);
  for (int g = 0; g < k + n; ++g) unite(off + g, off + lower.partner()[g]);
  for (int t = 0; t < k; ++t) unite(m + t, off + t);
  std::set<int> open, all;
  for (int g = 0; g < off + k + n; ++g) all.insert(find(g));
  for (int g = 0; g < m; ++g) open.insert(find(g));
  for (int g = 0; g < n; ++g) open.insert(find(off + k + g));
  return static_cast<int>(all.size() - open.size());
}

}  // namespace

TEST_CASE("validate") {
  CHECK(Diagram::identity(W("x")).validate());
  CHECK(Diagram(W("x x"), W(""), {1, 0}).validate() == false);
  CHECK(Diagram(W("x x* x x*"), W(""), {2, 3, 0, 1}).validate() == false);
  CHECK(Diagram(W("x x* x x*"), W(""), {3, 2, 1, 0}).validate());
  CHECK(Diagram(W("x"), W("x*"), {1, 0}).validate() == false);
  CHECK(Diagram(W("x"), W("x"), {0, 1}).validate() == false);
  CHECK_THROWS_AS(Diagram::from_arcs(W("x x"), W(""), {{{Side::Top, 0}, {Side::Top, 1}}}),
                  DomainError);
}

TEST_CASE("enumerate small hom-sets") {
  CHECK(enumerate(W("x x*"), W("x x*")).size() == 2);
  CHECK(enumerate(W("x* x"), W("x* x")).size() == 2);
  CHECK(enumerate(W(""), W("")).size() == 1);
  CHECK(enumerate(W("x x* x x* x x*"), W("")).size() == 5);
  CHECK(enumerate(W("x x"), W("")).empty());
  CHECK(enumerate(W("x x*"), W("")).size() == 1);
}

TEST_CASE("alternating cap diagrams are counted by the Catalan numbers") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(enumerate(power_word(W("x x*"), n), W("")).size() == catalan_recursive(n));
  }
}

TEST_CASE("enumeration is canonical, valid and duplicate-free") {
  for (const auto& w : Word::all_up_to(4))
    for (const auto& v : Word::all_up_to(4)) {
      const auto ds = enumerate(w, v);
      for (std::size_t i = 0; i < ds.size(); ++i) {
        REQUIRE(ds[i].validate());
        if (i > 0) REQUIRE(ds[i - 1] < ds[i]);
      }
    }
}

TEST_CASE("canonical order equals lexicographic order of sorted arc lists") {
  const auto ds = enumerate(W("x x* x x* x x* x x*"), W(""));
  for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1].arcs() < ds[i].arcs());
}

TEST_CASE("loop values of the basic arcs") {
  const Composite left = compose(Diagram::cup(Letter::X), Diagram::cap(Letter::X));
  CHECK(left.loops_left == 1);
  CHECK(left.loops_right == 0);
  CHECK(left.result == Diagram::empty());
  const Composite right = compose(Diagram::cup(Letter::Xstar), Diagram::cap(Letter::Xstar));
  CHECK(right.loops_left == 0);
  CHECK(right.loops_right == 1);
  CHECK(right.result == Diagram::empty());
}

TEST_CASE("zig-zag straightens to the identity") {
  const Diagram upper = tensor(Diagram::cup(Letter::X), Diagram::identity(W("x")));
  const Diagram lower = tensor(Diagram::identity(W("x")), Diagram::cap(Letter::Xstar));
  const Composite c = compose(upper, lower);
  CHECK(c.loops_left == 0);
  CHECK(c.loops_right == 0);
  CHECK(c.result == Diagram::identity(W("x")));
}

TEST_CASE("compose rejects mismatched boundaries") {
  CHECK_THROWS_AS(compose(Diagram::identity(W("x")), Diagram::identity(W("x*"))), SignatureError);
}

TEST_CASE("composition is associative, valid and conserves strands") {
  const auto words = Word::all_up_to(3);
  std::size_t checked = 0;
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words) {
        const auto ab = enumerate(a, b);
        const auto bc = enumerate(b, c);
        if (ab.empty() || bc.empty()) continue;
        for (const auto& x : ab)
          for (const auto& y : bc) {
            const Composite xy = compose(x, y);
            REQUIRE(xy.result.validate());
            REQUIRE(xy.loops_left + xy.loops_right == count_loops(x, y));
            REQUIRE(x.num_strings() + y.num_strings() == xy.result.num_strings() + b.size());
          }
        for (const auto& d : Word::all_up_to(3)) {
          const auto cd = enumerate(c, d);
          for (const auto& x : ab)
            for (const auto& y : bc)
              for (const auto& z : cd) {
                const Composite xy = compose(x, y);
                const Composite left = compose(xy.result, z);
                const Composite yz = compose(y, z);
                const Composite right = compose(x, yz.result);
                REQUIRE(left.result == right.result);
                REQUIRE(xy.loops_left + left.loops_left == yz.loops_left + right.loops_left);
                REQUIRE(xy.loops_right + left.loops_right == yz.loops_right + right.loops_right);
                ++checked;
              }
        }
      }
  CHECK(checked > 1000);
}

TEST_CASE("tensor: unit, associativity and interchange") {
  const Diagram id = tensor(Diagram::identity(W("x")), Diagram::identity(W("x*")));
  CHECK(id == Diagram::identity(W("x x*")));
  const Diagram caps = tensor(Diagram::cap(Letter::X), Diagram::cap(Letter::Xstar));
  CHECK(caps.top() == W("x x* x* x"));
  CHECK(caps.partner() == std::vector<int>{1, 0, 3, 2});
  CHECK(caps.validate());

  const auto words = Word::all_up_to(2);
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& d1 : enumerate(a, b)) {
        REQUIRE(tensor(d1, Diagram::empty()) == d1);
        REQUIRE(tensor(Diagram::empty(), d1) == d1);
        for (const auto& c : words)
          for (const auto& d2 : enumerate(b, c))
            for (const auto& e : words)
              for (const auto& f : words)
                for (const auto& d3 : enumerate(e, f)) {
                  REQUIRE(tensor(tensor(d1, d2), d3) == tensor(d1, tensor(d2, d3)));
                  // (d1 ; d2) (x) d3 = (d1 (x) d3) ; (d2 (x) id)
                  const Composite lhs = compose(d1, d2);
                  const Composite rhs = compose(tensor(d1, d3), tensor(d2, Diagram::identity(f)));
                  REQUIRE(tensor(lhs.result, d3) == rhs.result);
                  REQUIRE(lhs.loops_left == rhs.loops_left);
                  REQUIRE(lhs.loops_right == rhs.loops_right);
                }
      }
}

TEST_CASE("reflect_reverse") {
  CHECK(reflect_reverse(Diagram::cap(Letter::X)) == Diagram::cup(Letter::X));
  CHECK(reflect_reverse(Diagram::identity(W("x"))) == Diagram::identity(W("x")));
  for (const auto& w : Word::all_up_to(4))
    for (const auto& v : Word::all_up_to(4)) {
      if (w.size() + v.size() > 8) continue;
      for (const auto& d : enumerate(w, v)) {
        const Diagram r = reflect_reverse(d);
        REQUIRE(r.validate());
        REQUIRE(r.top() == v);
        REQUIRE(r.bottom() == w);
        REQUIRE(reflect_reverse(r) == d);
        const ArcCensus a = arc_census(d), b = arc_census(r);
        REQUIRE(a.eps_x == b.delta_xstar);
        REQUIRE(a.eps_xstar == b.delta_x);
        REQUIRE(a.delta_x == b.eps_xstar);
        REQUIRE(a.delta_xstar == b.eps_x);
      }
    }
}

TEST_CASE("rotation is an involution onto the dual type") {
  for (const auto& w : Word::all_up_to(4))
    for (const auto& v : Word::all_up_to(4))
      for (const auto& d : enumerate(w, v)) {
        const Diagram r = rotate(d);
        REQUIRE(r.validate());
        REQUIRE(r.top() == star(v));
        REQUIRE(r.bottom() == star(w));
        REQUIRE(rotate(r) == d);
      }
}

TEST_CASE("arc census") {
  const ArcCensus eps = arc_census(Diagram::cap(Letter::X));
  CHECK(eps == ArcCensus{1, 0, 0, 0});
  CHECK(eps.sharp() == 1);
  CHECK(eps.ell() == 0);
  const ArcCensus del = arc_census(Diagram::cup(Letter::X));
  CHECK(del == ArcCensus{0, 0, 0, 1});
  CHECK(del.sharp() == -1);
  CHECK(del.ell() == -1);
  CHECK(arc_census(Diagram::identity(W("x x*"))) == ArcCensus{});
  CHECK(arc_census(Diagram::cup(Letter::Xstar)) == ArcCensus{0, 0, 1, 0});
  CHECK(arc_census(Diagram::cap(Letter::Xstar)) == ArcCensus{0, 1, 0, 0});
}
