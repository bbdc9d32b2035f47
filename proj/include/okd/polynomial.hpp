#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "okd/errors.hpp"

namespace okd {

/// Dense univariate polynomial over a field K, coefficients in ascending
/// powers. Always trimmed: the zero polynomial has no coefficients.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const K& constant) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(constant)) coeffs_.push_back(constant);
  }
  explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// The monomial c·x^k.
  static Polynomial monomial(const K& c, std::size_t k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(K(1), 1); }

  bool is_zero_poly() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<K>& coeffs() const noexcept { return coeffs_; }
  K coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : K(0); }
  const K& leading() const { return coeffs_.back(); }

  K operator()(const K& at) const {
    K acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial monic() const {
    if (coeffs_.empty()) return *this;
    const K inv = K(1) / leading();
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = c * inv;
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const K& s, const Polynomial& p) {
    return Polynomial(s) * p;
  }

  /// Euclidean division: *this = q·divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero_poly()) throw DomainError("polynomial division by zero");
    if (degree() < divisor.degree()) return {Polynomial{}, *this};
    std::vector<K> rem = coeffs_;
    std::vector<K> quot(coeffs_.size() - divisor.coeffs_.size() + 1, K(0));
    const K lead_inv = K(1) / divisor.leading();
    const std::size_t dn = divisor.coeffs_.size();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const K q = rem[k + dn - 1] * lead_inv;
      quot[k] = q;
      if (is_zero(q)) continue;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] = rem[k + j] - q * divisor.coeffs_[j];
    }
    rem.resize(dn - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).first;
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return a.divmod(b).second;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero_poly()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace okd
