#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okd/diagrams.hpp"
#include "okd/errors.hpp"
#include "okd/matrix.hpp"
#include "okd/morphisms.hpp"
#include "okd/scalars.hpp"

namespace okd {

/// Matrices (A, B) of a fiber functor with dim V = dim W = n, plus the cached
/// inverses C = A^{-1} and D = B^{-1}.
template <Field F>
class FiberData {
 public:
  std::size_t n() const noexcept { return a_.rows(); }
  const Matrix<F>& a() const noexcept { return a_; }
  const Matrix<F>& b() const noexcept { return b_; }
  const Matrix<F>& c() const noexcept { return c_; }
  const Matrix<F>& d() const noexcept { return d_; }
  const FieldContext<F>& context() const noexcept { return ctx_; }

  template <Field G>
  friend FiberData<G> validate_fiber(const Matrix<G>& a, const Matrix<G>& b,
                                     const FieldContext<G>& ctx);

 private:
  FiberData(Matrix<F> a, Matrix<F> b, Matrix<F> c, Matrix<F> d, FieldContext<F> ctx)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), ctx_(std::move(ctx)) {}

  Matrix<F> a_, b_, c_, d_;
  FieldContext<F> ctx_;
};

/// Checks invertibility and trace(tA B^{-1}) = d_L, trace(tB A^{-1}) = d_R.
template <Field F>
FiberData<F> validate_fiber(const Matrix<F>& a, const Matrix<F>& b, const FieldContext<F>& ctx) {
  if (!a.square() || !b.square() || a.rows() != b.rows() || a.rows() == 0) {
    throw FiberError("A and B must be nonempty square matrices of equal size");
  }
  auto c = inverse(a);
  if (!c) throw FiberError("A is singular");
  auto d = inverse(b);
  if (!d) throw FiberError("B is singular");
  const F left = (a.transpose() * *d).trace();
  const F right = (b.transpose() * *c).trace();
  if (!(left == ctx.d_left()) || !(right == ctx.d_right())) {
    throw FiberError("trace conditions fail: trace(tA B^-1) = " + to_string(left) +
                     " (want " + to_string(ctx.d_left()) + "), trace(tB A^-1) = " +
                     to_string(right) + " (want " + to_string(ctx.d_right()) + ")");
  }
  return FiberData<F>(a, b, std::move(*c), std::move(*d), ctx);
}

/// A multilinear map with one axis of size n per boundary point: top points
/// left to right, then bottom points left to right. Row-major entries.
template <Field F>
struct Tensor {
  std::size_t n = 1;
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::vector<F> entries{F(0)};

  Tensor() = default;
  Tensor(std::size_t dim, std::size_t top_axes, std::size_t bottom_axes)
      : n(dim), top(top_axes), bottom(bottom_axes) {
    std::size_t size = 1;
    for (std::size_t k = 0; k < top + bottom; ++k) size *= n;
    entries.assign(size, F(0));
  }

  std::size_t axes() const noexcept { return top + bottom; }

  /// Rows indexed by the top axes, columns by the bottom axes.
  Matrix<F> as_matrix() const {
    std::size_t rows = 1;
    for (std::size_t k = 0; k < top; ++k) rows *= n;
    const std::size_t cols = entries.size() / rows;
    Matrix<F> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[r * cols + c];
    return m;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) {
    if (x.n != y.n || x.top != y.top || x.bottom != y.bottom) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i)
      if (!(x.entries[i] == y.entries[i])) return false;
    return true;
  }
};

/// Phi(D): product over arcs of a, b, c, d entries (caps and cups) and
/// Kronecker deltas (through-strands).
template <Field F>
Tensor<F> evaluate(const Diagram& dgm, const FiberData<F>& fd) {
  const std::size_t n = fd.n();
  const std::size_t m = dgm.top().size();
  Tensor<F> out(n, m, dgm.bottom().size());
  const std::size_t points = dgm.num_points();

  struct Factor {
    int left, right;
    const Matrix<F>* matrix;  // nullptr for a through-strand
  };
  std::vector<Factor> factors;
  for (int g = 0; g < static_cast<int>(points); ++g) {
    const int h = dgm.partner()[static_cast<std::size_t>(g)];
    if (h < g) continue;
    const bool g_top = static_cast<std::size_t>(g) < m;
    const bool h_top = static_cast<std::size_t>(h) < m;
    const Matrix<F>* mat = nullptr;
    if (g_top && h_top) {
      mat = dgm.label(g) == Letter::X ? &fd.a() : &fd.b();
    } else if (!g_top && !h_top) {
      mat = dgm.label(g) == Letter::X ? &fd.d() : &fd.c();
    }
    factors.push_back({g, h, mat});
  }

  std::vector<std::size_t> stride(points, 1);
  for (std::size_t k = points; k-- > 1;) stride[k - 1] = stride[k] * n;

  // Depth-first over arcs, skipping zero factors.
  const auto recurse = [&](auto&& self, std::size_t arc, std::size_t offset, const F& value) -> void {
    if (arc == factors.size()) {
      out.entries[offset] = value;
      return;
    }
    const Factor& f = factors[arc];
    const std::size_t sl = stride[static_cast<std::size_t>(f.left)];
    const std::size_t sr = stride[static_cast<std::size_t>(f.right)];
    for (std::size_t i = 0; i < n; ++i) {
      if (f.matrix == nullptr) {
        self(self, arc + 1, offset + i * (sl + sr), value);
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const F& entry = (*f.matrix)(i, j);
        if (is_zero(entry)) continue;
        self(self, arc + 1, offset + i * sl + j * sr, value * entry);
      }
    }
  };
  recurse(recurse, 0, 0, F(1));
  return out;
}

template <Field F>
Tensor<F> evaluate(const Morphism<F>& f, const FiberData<F>& fd) {
  Tensor<F> out(fd.n(), f.domain().size(), f.codomain().size());
  for (const auto& [dgm, coeff] : f.terms()) {
    const Tensor<F> t = evaluate(dgm, fd);
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
      if (!is_zero(t.entries[i])) out.entries[i] = out.entries[i] + coeff * t.entries[i];
    }
  }
  return out;
}

/// Gauge S = A^{-1}, T = 1: returns data with A = 1 and B' = t(A^{-1}) B.
template <Field F>
FiberData<F> gauge_normalize(const FiberData<F>& fd) {
  return validate_fiber(Matrix<F>::identity(fd.n()), fd.c().transpose() * fd.b(), fd.context());
}

/// The gauge move A -> tT A S, B -> tS B T (S acts on V, T on W).
template <Field F>
FiberData<F> gauge_transform(const FiberData<F>& fd, const Matrix<F>& s, const Matrix<F>& t) {
  return validate_fiber(t.transpose() * fd.a() * s, s.transpose() * fd.b() * t, fd.context());
}

/// Equivalent iff the normalized B' matrices are similar.
inline bool fiber_equivalent(const FiberData<Rational>& x, const FiberData<Rational>& y) {
  if (x.n() != y.n()) return false;
  if (!(x.context().d_left() == y.context().d_left()) ||
      !(x.context().d_right() == y.context().d_right())) {
    throw DomainError("fiber_equivalent needs data over the same loop values");
  }
  return similar(gauge_normalize(x).b(), gauge_normalize(y).b());
}

/// B = diag(mu), A = (d/|d|) diag(mu)^{-1}; needs sum mu^2 = |d| = sum mu^-2.
inline FiberData<Rational> unitary_from_eigenvalues(const std::vector<Rational>& mu, const Rational& d) {
  if (mu.empty()) throw FiberError("eigenvalue list is empty");
  Rational squares(0), inverse_squares(0);
  std::vector<Rational> inv;
  for (const Rational& m : mu) {
    if (m.sign() <= 0) throw FiberError("eigenvalues must be positive, got " + m.str());
    squares += m * m;
    inverse_squares += Rational(1) / (m * m);
    inv.push_back(Rational(1) / m);
  }
  const Rational abs_d = d.abs();
  if (abs_d < Rational(2)) throw FiberError("unitary data needs |d| >= 2, got d = " + d.str());
  if (squares != abs_d || inverse_squares != abs_d) {
    throw FiberError("sum mu^2 = " + squares.str() + " and sum mu^-2 = " + inverse_squares.str() +
                     " must both equal |d| = " + abs_d.str());
  }
  const Rational sign = phase(d);
  const Matrix<Rational> b = Matrix<Rational>::diagonal(mu);
  const Matrix<Rational> a = sign * Matrix<Rational>::diagonal(inv);
  FiberData<Rational> fd = validate_fiber(a, b, FieldContext<Rational>(d));
  if (!(b.conjugate() == sign * fd.c())) throw FiberError("conj(B) != (d/|d|) A^{-1}");
  const Matrix<Rational> bb = b * b.adjoint();
  if (bb.trace() != abs_d || (*inverse(bb)).trace() != abs_d) {
    throw FiberError("trace(BB*) or trace((BB*)^{-1}) differs from |d|");
  }
  return fd;
}

/// Rank of the flattened family Phi(D), D in K_{w,I}, and the family size.
template <Field F>
std::pair<std::size_t, std::size_t> faithfulness_rank(const Word& w, const FiberData<F>& fd) {
  const auto basis = enumerate(w, Word{});
  if (basis.empty()) return {0, 0};
  std::vector<Tensor<F>> rows;
  for (const auto& dgm : basis) rows.push_back(evaluate(dgm, fd));
  Matrix<F> m(rows.size(), rows.front().entries.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r].entries[c];
  return {rank(m), basis.size()};
}

/// Gauge-equivalent data with A = 1 and B upper triangular, when the
/// eigenvalues of the normalized B' are rational; std::nullopt otherwise.
inline std::optional<FiberData<Rational>> upper_triangular_gauge(const FiberData<Rational>& fd) {
  using MQ = Matrix<Rational>;
  const FiberData<Rational> norm = gauge_normalize(fd);
  const std::size_t n = norm.n();
  MQ p = MQ::identity(n);
  MQ current = norm.b();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t size = n - k;
    MQ block(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) block(i, j) = current(k + i, k + j);
    const auto roots = rational_roots(characteristic_polynomial(block));
    if (roots.empty()) return std::nullopt;
    const auto v = kernel_vector(block - roots.front() * MQ::identity(size));
    if (!v) return std::nullopt;
    // Basis of the block: v first, then the standard vectors except one it covers.
    std::size_t drop = 0;
    while (is_zero((*v)[drop])) ++drop;
    MQ q = MQ::identity(n);
    for (std::size_t i = 0; i < size; ++i) q(k + i, k) = (*v)[i];
    if (drop != 0)
      for (std::size_t i = 0; i < size; ++i) q(k + i, k + drop) = i == 0 ? Rational(1) : Rational(0);
    current = *inverse(q) * current * q;
    p = p * q;
  }
  // B' -> P^{-1} B' P is the gauge S = tP^{-1}, T = P with A = 1 preserved.
  return gauge_transform(norm, *inverse(p.transpose()), p);
}

}  // namespace okd
