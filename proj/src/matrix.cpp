#include "okd/matrix.hpp"

#include <algorithm>

namespace okd {

PsdVerdict psd_test(const Matrix<Rational>& g) {
  if (!g.square()) throw DomainError("PSD test needs a square matrix");
  if (!(g == g.transpose())) throw DomainError("PSD test needs a symmetric matrix");
  PsdVerdict verdict;
  Matrix<Rational> m = g;
  std::vector<std::size_t> active(g.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  while (!active.empty()) {
    const auto it = std::find_if(active.begin(), active.end(),
                                 [&](std::size_t i) { return !is_zero(m(i, i)); });
    if (it == active.end()) {
      // Every remaining diagonal entry is zero: PSD only if the block is zero.
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (!is_zero(m(i, j))) {
            verdict.psd = false;
            verdict.witness = i;
            return verdict;
          }
      return verdict;
    }
    const std::size_t p = *it;
    const Rational pivot = m(p, p);
    verdict.pivots.push_back(pivot);
    if (pivot.sign() < 0) {
      verdict.psd = false;
      verdict.witness = p;
      return verdict;
    }
    active.erase(it);
    for (std::size_t i : active) {
      if (is_zero(m(i, p))) continue;
      const Rational factor = m(i, p) / pivot;
      for (std::size_t j : active) m(i, j) = m(i, j) - factor * m(p, j);
    }
  }
  return verdict;
}

std::vector<RationalPolynomial> invariant_factors(const Matrix<Rational>& a) {
  if (!a.square()) throw DomainError("invariant factors need a square matrix");
  using P = RationalPolynomial;
  const std::size_t n = a.rows();
  std::vector<std::vector<P>> m(n, std::vector<P>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = P(-a(i, j));
      if (i == j) m[i][j] = m[i][j] + P::x();
    }

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero_poly() &&
              (pi == n || m[i][j].degree() < m[pi][pj].degree())) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      std::swap(m[k], m[pi]);
      for (auto& row : m) std::swap(row[k], row[pj]);

      bool dirty = false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero_poly()) continue;
        const auto [q, r] = m[i][k].divmod(m[k][k]);
        for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - q * m[k][j];
        if (!r.is_zero_poly()) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero_poly()) continue;
        const auto [q, r] = m[k][j].divmod(m[k][k]);
        for (std::size_t i = k; i < n; ++i) m[i][j] = m[i][j] - q * m[i][k];
        if (!r.is_zero_poly()) dirty = true;
      }
      if (dirty) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(m[i][j] % m[k][k]).is_zero_poly()) {
            for (std::size_t c = k; c < n; ++c) m[k][c] = m[k][c] + m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  std::vector<P> factors;
  for (std::size_t k = 0; k < n; ++k) {
    const P f = m[k][k].monic();
    if (f.degree() > 0) factors.push_back(f);
  }
  return factors;
}

RationalPolynomial characteristic_polynomial(const Matrix<Rational>& m) {
  RationalPolynomial p(Rational(1));
  for (const auto& f : invariant_factors(m)) p = p * f;
  return p;
}

bool similar(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) return false;
  return invariant_factors(a) == invariant_factors(b);
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      small.push_back(i);
      if (i * i != v) large.push_back(v / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPolynomial& p) {
  if (p.is_zero_poly()) throw DomainError("rational roots of the zero polynomial");
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) ints.push_back(mpz_class(c.value() * lcm));

  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < ints.size() && ints[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  if (shift + 1 >= ints.size()) return roots;

  const RationalPolynomial reduced(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
  for (const auto& num : positive_divisors(ints[shift])) {
    for (const auto& den : positive_divisors(ints.back())) {
      for (int s : {1, -1}) {
        const Rational cand(mpq_class(s * num, den));
        if (is_zero(reduced(cand)) &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace okd
