#include <random>

#include "doctest.h"
#include "okd/hopf.hpp"

using namespace okd;

namespace {

using MQ = Matrix<Rational>;
using FD = FiberData<Rational>;
using RS = RelationSet<Rational>;

FD identity_data(std::size_t n) {
  return validate_fiber(MQ::identity(n), MQ::identity(n), FieldContext<Rational>(Rational(static_cast<long>(n))));
}

FD q_data() {
  return validate_fiber(MQ::identity(2), MQ::diagonal({Rational(3), Rational(1, 3)}),
                        FieldContext<Rational>(Rational(10, 3)));
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

// Rational orthogonal matrix (1 - K)(1 + K)^{-1} from a random skew K.
template <class Gen>
MQ random_orthogonal(std::size_t n, Gen& gen) {
  std::uniform_int_distribution<long> u(-4, 4);
  MQ k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k(i, j) = Rational(u(gen), 3);
      k(j, i) = -k(i, j);
    }
  const MQ one = MQ::identity(n);
  return (one - k) * *inverse(one + k);
}

std::map<std::string, Rational> point_values(const MQ& v, const MQ& w) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) {
      out[symbol("v", i, j)] = v(i, j);
      out[symbol("w", i, j)] = w(i, j);
    }
  return out;
}

}  // namespace

TEST_CASE("relation counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const RS rs = emit_relations(identity_data(n));
    CHECK(rs.relations.size() == 4 * n * n);
    CHECK(rs.generators.size() == 2 * n * n);
    CHECK(rs.coproduct.size() == 2 * n * n);
  }
  const RS u = emit_unitary_relations(unitary_from_eigenvalues({Rational(1), Rational(1)}, Rational(2)));
  CHECK(u.relations.size() == 16);
  CHECK(u.generators.size() == 8);
}

TEST_CASE("n = 1 presentation") {
  const RS rs = emit_relations(identity_data(1));
  REQUIRE(rs.relations.size() == 4);
  const std::vector<std::vector<std::string>> products{{"v_1_1", "w_1_1"}, {"w_1_1", "v_1_1"},
                                                       {"w_1_1", "v_1_1"}, {"v_1_1", "w_1_1"}};
  for (std::size_t r = 0; r < 4; ++r) {
    REQUIRE(rs.relations[r].lhs.size() == 1);
    CHECK(rs.relations[r].lhs[0].coeff == Rational(1));
    CHECK(rs.relations[r].lhs[0].symbols == products[r]);
    CHECK(rs.relations[r].rhs == Rational(1));
  }
}

TEST_CASE("first family at A = B = 1") {
  const RS rs = emit_relations(identity_data(2));
  // (j, l) = (1, 2): v_1_1 w_1_2 + v_2_1 w_2_2 = 0.
  const Relation<Rational>& rel = rs.relations[1];
  REQUIRE(rel.lhs.size() == 2);
  CHECK(rel.lhs[0].symbols == std::vector<std::string>{"v_1_1", "w_1_2"});
  CHECK(rel.lhs[1].symbols == std::vector<std::string>{"v_2_1", "w_2_2"});
  CHECK(rel.rhs == Rational(0));
  CHECK(rs.relations[0].rhs == Rational(1));
}

TEST_CASE("classical points") {
  const RS rs = emit_relations(identity_data(2));
  CHECK(classical_point_check(rs, MQ{{Rational(3, 5), Rational(4, 5)}, {Rational(-4, 5), Rational(3, 5)}}));
  CHECK(classical_point_check(rs, MQ::diagonal({Rational(2), Rational(1)})));
  CHECK_THROWS_AS(classical_point_check(rs, MQ::diagonal({Rational(1), Rational(0)})), DomainError);
  CHECK_THROWS_AS(classical_point_check(rs, MQ::identity(3)), DomainError);
}

TEST_CASE("classical points are the matrices commuting with the normalized B") {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const FD fd = gauge_transform(q_data(), random_invertible(2, gen), random_invertible(2, gen));
    const RS rs = emit_relations(fd);
    const MQ b_prime = gauge_normalize(fd).b();
    const MQ s = random_invertible(2, gen);
    REQUIRE(classical_point_check(rs, s) == (s * b_prime == b_prime * s));
    const MQ commuting = Rational(2) * MQ::identity(2) + Rational(trial + 1, 3) * b_prime;
    if (inverse(commuting)) REQUIRE(classical_point_check(rs, commuting));
  }
}

TEST_CASE("gauge covariance at classical points") {
  std::mt19937 gen(41);
  const FD base = q_data();
  const RS base_rs = emit_relations(base);
  const MQ s0 = MQ::diagonal({Rational(2), Rational(-5, 3)});
  REQUIRE(classical_point_check(base_rs, s0));
  const MQ w0 = *inverse(base.a()) * inverse(s0)->transpose() * base.a();
  for (int trial = 0; trial < 20; ++trial) {
    const MQ s = random_invertible(2, gen), t = random_invertible(2, gen);
    const RS moved = emit_relations(gauge_transform(base, s, t));
    const MQ v1 = *inverse(t) * s0 * t;
    const MQ w1 = *inverse(s) * w0 * s;
    REQUIRE(relations_hold(moved, point_values(v1, w1)));
    REQUIRE(classical_point_check(moved, v1));
    REQUIRE_FALSE(relations_hold(moved, point_values(s0, w0 + MQ::identity(2))));
  }
}

TEST_CASE("coproduct is coassociative") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(coassociative(emit_relations(identity_data(n))));
  }
  CHECK(coassociative(emit_unitary_relations(unitary_from_eigenvalues({Rational(1), Rational(1)}, Rational(2)))));
  RS broken = emit_relations(identity_data(2));
  broken.coproduct["v_1_1"][0].second = "v_2_1";
  CHECK_FALSE(coassociative(broken));
}

TEST_CASE("unitary presentation") {
  const RS plain = emit_unitary_relations(unitary_from_eigenvalues({Rational(1), Rational(1)}, Rational(2)));
  for (const auto& rel : plain.relations)
    for (const auto& term : rel.lhs) CHECK(term.coeff == Rational(1));

  const RS twisted =
      emit_unitary_relations(unitary_from_eigenvalues({Rational(2), Rational(1, 2)}, Rational(17, 4)));
  // conj(u) Q tu = Q with Q = diag(4, 1/4): the (1,1) relation.
  const Relation<Rational>& rel = twisted.relations[8];
  REQUIRE(rel.lhs.size() == 2);
  CHECK(rel.lhs[0].coeff == Rational(4));
  CHECK(rel.lhs[0].symbols == std::vector<std::string>{"us_1_1", "u_1_1"});
  CHECK(rel.lhs[1].coeff == Rational(1, 4));
  CHECK(rel.rhs == Rational(4));

  CHECK_THROWS_AS(emit_unitary_relations(q_data()), FiberError);
}

TEST_CASE("fiber and unitary presentations share their orthogonal classical points") {
  std::mt19937 gen(51);
  const std::vector<FD> data{
      unitary_from_eigenvalues({Rational(1), Rational(1)}, Rational(2)),
      unitary_from_eigenvalues({Rational(2), Rational(1, 2)}, Rational(17, 4)),
      unitary_from_eigenvalues({Rational(2), Rational(1, 2)}, Rational(-17, 4)),
      unitary_from_eigenvalues({Rational(2), Rational(1, 2), Rational(1)}, Rational(21, 4)),
      unitary_from_eigenvalues({Rational(1), Rational(1), Rational(1)}, Rational(3))};
  for (const FD& fd : data) {
    const RS fiber = emit_relations(fd);
    const RS unitary = emit_unitary_relations(fd);
    bool some_true = false, some_false = false;
    for (int trial = 0; trial < 30; ++trial) {
      MQ s = random_orthogonal(fd.n(), gen);
      if (trial % 3 == 0) {
        s = MQ::identity(fd.n());
        s(0, 0) = Rational(-1);
      }
      REQUIRE(s * s.transpose() == MQ::identity(fd.n()));
      const bool f = classical_point_check(fiber, s);
      REQUIRE(f == classical_point_check(unitary, s));
      (f ? some_true : some_false) = true;
    }
    CHECK(some_true);
  }
}
