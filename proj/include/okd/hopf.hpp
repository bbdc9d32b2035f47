#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "okd/errors.hpp"
#include "okd/fiber.hpp"
#include "okd/matrix.hpp"
#include "okd/scalars.hpp"

namespace okd {

/// coeff times a noncommutative product of generator symbols.
template <Field F>
struct Term {
  F coeff;
  std::vector<std::string> symbols;
};

/// sum of lhs terms = rhs times 1.
template <Field F>
struct Relation {
  std::vector<Term<F>> lhs;
  F rhs;
};

enum class PresentationKind { Fiber, Unitary };

template <Field F>
struct RelationSet {
  std::size_t n = 0;
  PresentationKind kind = PresentationKind::Fiber;
  /// The matrix A of the fiber data; fixes the w-part of classical points.
  Matrix<F> pairing;
  std::vector<std::string> generators;
  std::vector<Relation<F>> relations;
  /// Delta(x) = sum of left (x) right over the listed pairs.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> coproduct;
};

/// "v_1_2" for generator v at 0-based (0, 1).
inline std::string symbol(const std::string& base, std::size_t i, std::size_t j) {
  return base + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

namespace detail {

// For each (r, s): sum over (p, q) of coeff(p, q, r, s) x_{..} y_{..} = rhs(r, s).
template <Field F, class Coeff, class Left, class Right>
void emit_family(std::vector<Relation<F>>& out, std::size_t n, const Matrix<F>& rhs,
                 Coeff coeff, Left left, Right right) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      Relation<F> rel{{}, rhs(r, s)};
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const F c = coeff(p, q);
          if (is_zero(c)) continue;
          rel.lhs.push_back({c, {left(p, q, r, s), right(p, q, r, s)}});
        }
      out.push_back(std::move(rel));
    }
}

template <Field F>
void add_matrix_coproduct(RelationSet<F>& rs, const std::string& base) {
  for (std::size_t i = 0; i < rs.n; ++i)
    for (std::size_t j = 0; j < rs.n; ++j) {
      auto& entry = rs.coproduct[symbol(base, i, j)];
      for (std::size_t k = 0; k < rs.n; ++k) entry.emplace_back(symbol(base, i, k), symbol(base, k, j));
    }
}

}  // namespace detail

/// The four families
///   sum a_ik v_ij w_kl = a_jl,  sum c_ji w_kj v_li = c_kl,
///   sum b_ik w_ij v_kl = b_jl,  sum d_ji v_kj w_li = d_kl,
/// with Delta(v_ij) = sum v_ik (x) v_kj and Delta(w_kl) = sum w_ki (x) w_il.
template <Field F>
RelationSet<F> emit_relations(const FiberData<F>& fd) {
  RelationSet<F> rs;
  rs.n = fd.n();
  rs.kind = PresentationKind::Fiber;
  rs.pairing = fd.a();
  const std::size_t n = rs.n;
  for (const char* base : {"v", "w"})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rs.generators.push_back(symbol(base, i, j));

  const Matrix<F>& a = fd.a();
  const Matrix<F>& b = fd.b();
  const Matrix<F>& c = fd.c();
  const Matrix<F>& d = fd.d();
  // (p, q) = (i, k), (r, s) = (j, l).
  detail::emit_family<F>(rs.relations, n, a, [&](auto i, auto k) { return a(i, k); },
                         [](auto i, auto, auto j, auto) { return symbol("v", i, j); },
                         [](auto, auto k, auto, auto l) { return symbol("w", k, l); });
  // (p, q) = (j, i), (r, s) = (k, l).
  detail::emit_family<F>(rs.relations, n, c, [&](auto j, auto i) { return c(j, i); },
                         [](auto j, auto, auto k, auto) { return symbol("w", k, j); },
                         [](auto, auto i, auto, auto l) { return symbol("v", l, i); });
  detail::emit_family<F>(rs.relations, n, b, [&](auto i, auto k) { return b(i, k); },
                         [](auto i, auto, auto j, auto) { return symbol("w", i, j); },
                         [](auto, auto k, auto, auto l) { return symbol("v", k, l); });
  detail::emit_family<F>(rs.relations, n, d, [&](auto j, auto i) { return d(j, i); },
                         [](auto j, auto, auto k, auto) { return symbol("v", k, j); },
                         [](auto, auto i, auto, auto l) { return symbol("w", l, i); });

  detail::add_matrix_coproduct(rs, "v");
  detail::add_matrix_coproduct(rs, "w");
  return rs;
}

/// uu* = 1 = u*u, conj(u) Q tu = Q with Q = (AA*)^{-1}, tu P conj(u) = P with
/// P = AA*, on generators u_ij and us_ij = (u_ij)^*.
template <Field F>
RelationSet<F> emit_unitary_relations(const FiberData<F>& fd) {
  const F& dv = fd.context().d();
  if (!is_real(dv)) throw FiberError("unitary data needs a real loop value");
  if (!(fd.b().conjugate() == phase(dv) * fd.c())) {
    throw FiberError("fiber data is not unitary: conj(B) != (d/|d|) A^{-1}");
  }
  RelationSet<F> rs;
  rs.n = fd.n();
  rs.kind = PresentationKind::Unitary;
  rs.pairing = fd.a();
  const std::size_t n = rs.n;
  for (const char* base : {"u", "us"})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rs.generators.push_back(symbol(base, i, j));

  const Matrix<F> p = fd.a() * fd.a().adjoint();
  const Matrix<F> q = *inverse(p);
  const Matrix<F> one = Matrix<F>::identity(n);
  const auto diag_only = [](auto k, auto l) { return k == l ? F(1) : F(0); };

  // sum_k u_ik us_jk = delta_ij.
  detail::emit_family<F>(rs.relations, n, one, diag_only,
                         [](auto k, auto, auto i, auto) { return symbol("u", i, k); },
                         [](auto k, auto, auto, auto j) { return symbol("us", j, k); });
  // sum_k us_ki u_kj = delta_ij.
  detail::emit_family<F>(rs.relations, n, one, diag_only,
                         [](auto k, auto, auto i, auto) { return symbol("us", k, i); },
                         [](auto k, auto, auto, auto j) { return symbol("u", k, j); });
  // sum_{k,l} us_ik Q_kl u_jl = Q_ij.
  detail::emit_family<F>(rs.relations, n, q, [&](auto k, auto l) { return q(k, l); },
                         [](auto k, auto, auto i, auto) { return symbol("us", i, k); },
                         [](auto, auto l, auto, auto j) { return symbol("u", j, l); });
  // sum_{k,l} u_ki P_kl us_lj = P_ij.
  detail::emit_family<F>(rs.relations, n, p, [&](auto k, auto l) { return p(k, l); },
                         [](auto k, auto, auto i, auto) { return symbol("u", k, i); },
                         [](auto, auto l, auto, auto j) { return symbol("us", l, j); });

  detail::add_matrix_coproduct(rs, "u");
  detail::add_matrix_coproduct(rs, "us");
  return rs;
}

/// Whether every relation holds when each symbol takes the given value.
template <Field F>
bool relations_hold(const RelationSet<F>& rs, const std::map<std::string, F>& values) {
  for (const auto& rel : rs.relations) {
    F total(0);
    for (const auto& term : rel.lhs) {
      F prod = term.coeff;
      for (const auto& s : term.symbols) prod = prod * values.at(s);
      total = total + prod;
    }
    if (!(total == rel.rhs)) return false;
  }
  return true;
}

/// Symbol values for v := S, w := A^{-1} tS^{-1} A (fiber presentations) or
/// u := S, us := conj(S) (unitary presentations).
template <Field F>
std::map<std::string, F> classical_point(const RelationSet<F>& rs, const Matrix<F>& s) {
  if (!s.square() || s.rows() != rs.n) throw DomainError("classical point has the wrong size");
  const auto s_inv = inverse(s);
  if (!s_inv) throw DomainError("classical point matrix is singular");
  std::map<std::string, F> values;
  const auto put = [&](const std::string& base, const Matrix<F>& m) {
    for (std::size_t i = 0; i < rs.n; ++i)
      for (std::size_t j = 0; j < rs.n; ++j) values[symbol(base, i, j)] = m(i, j);
  };
  if (rs.kind == PresentationKind::Fiber) {
    put("v", s);
    put("w", *inverse(rs.pairing) * s_inv->transpose() * rs.pairing);
  } else {
    put("u", s);
    put("us", s.conjugate());
  }
  return values;
}

template <Field F>
bool classical_point_check(const RelationSet<F>& rs, const Matrix<F>& s) {
  return relations_hold(rs, classical_point(rs, s));
}

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every generator, compared
/// as multisets of symbol triples.
template <Field F>
bool coassociative(const RelationSet<F>& rs) {
  using Triple = std::vector<std::string>;
  for (const auto& g : rs.generators) {
    const auto it = rs.coproduct.find(g);
    if (it == rs.coproduct.end()) return false;
    std::vector<Triple> left, right;
    for (const auto& [x, y] : it->second) {
      for (const auto& [x1, x2] : rs.coproduct.at(x)) left.push_back({x1, x2, y});
      for (const auto& [y1, y2] : rs.coproduct.at(y)) right.push_back({x, y1, y2});
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return false;
  }
  return true;
}

}  // namespace okd
