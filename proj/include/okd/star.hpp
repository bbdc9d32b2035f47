#pragma once

#include <cstddef>
#include <utility>

#include "okd/diagrams.hpp"
#include "okd/errors.hpp"
#include "okd/matrix.hpp"
#include "okd/morphisms.hpp"
#include "okd/scalars.hpp"

namespace okd {

inline bool is_positive_real(const Rational& r) { return r.sign() > 0; }
inline bool is_positive_real(const Complex& z) { return is_real(z) && z.real() > Complex::tolerance(); }
inline bool is_positive_real(const RationalFunction&) {
  throw DomainError("positivity is not defined over Q(d)");
}

/// conj(c d) = c d and d = +-conj(d).
template <Field F>
bool star_params_valid(const F& c, const FieldContext<F>& ctx) {
  if (is_zero(c)) return false;
  const F& d = ctx.d();
  const F cd = c * d;
  return conj(cd) == cd && (conj(d) == d || conj(d) == -d);
}

template <Field F>
struct StarParams {
  F c;
  FieldContext<F> ctx;

  StarParams(F c_value, FieldContext<F> context) : c(std::move(c_value)), ctx(std::move(context)) {
    if (!star_params_valid(c, ctx)) {
      throw DomainError("invalid *-structure parameters: c = " + to_string(c) +
                        ", d = " + to_string(ctx.d()));
    }
  }
};

/// Conjugate-linear extension of D* = c^#(D) (conj(d)/d)^l(D) D'.
template <Field F>
Morphism<F> star(const Morphism<F>& f, const StarParams<F>& p) {
  const F& d = p.ctx.d();
  const F ratio = conj(d) / d;
  Morphism<F> out(f.codomain(), f.domain());
  for (const auto& [dgm, coeff] : f.terms()) {
    const ArcCensus census = arc_census(dgm);
    out.add_term(reflect_reverse(dgm),
                 conj(coeff) * power(p.c, census.sharp()) * power(ratio, census.ell()));
  }
  return out;
}

/// The C*-normalized structure, c = d/|d|.
template <Field F>
Morphism<F> cstar_adjoint(const Morphism<F>& f, const FieldContext<F>& ctx) {
  const F& d = ctx.d();
  if (!is_real(d)) throw DomainError("the C*-structure needs a real loop value, got " + to_string(d));
  return star(f, StarParams<F>(phase(d), ctx));
}

/// c = lambda c' or conj(c) = lambda c' for some lambda > 0.
template <Field F>
bool star_equivalent(const F& c, const F& c_prime) {
  if (is_zero(c) || is_zero(c_prime)) throw DomainError("star parameters must be nonzero");
  return is_positive_real(c / c_prime) || is_positive_real(conj(c) / c_prime);
}

/// G[i][j] = cstar_adjoint(D_j) o D_i over the canonical basis of K_{I,w}.
template <Field F>
Matrix<F> gram_matrix(const Word& w, const FieldContext<F>& ctx) {
  const auto basis = enumerate(Word{}, w);
  std::vector<Morphism<F>> adjoints;
  adjoints.reserve(basis.size());
  for (const auto& d : basis) adjoints.push_back(cstar_adjoint(Morphism<F>::from_diagram(d), ctx));
  Matrix<F> g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Morphism<F> di = Morphism<F>::from_diagram(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      g(i, j) = compose(adjoints[j], di, ctx).scalar_value();
    }
  }
  return g;
}

}  // namespace okd
