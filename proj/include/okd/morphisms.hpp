#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "okd/diagrams.hpp"
#include "okd/errors.hpp"
#include "okd/matrix.hpp"
#include "okd/scalars.hpp"
#include "okd/words.hpp"

namespace okd {

/// A formal linear combination of diagrams of one type (domain, codomain).
/// Zero coefficients are never stored.
template <Field F>
class Morphism {
 public:
  using Terms = std::map<Diagram, F>;

  Morphism() = default;
  Morphism(Word domain, Word codomain)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  static Morphism from_diagram(const Diagram& d, const F& coeff = F(1)) {
    Morphism m(d.top(), d.bottom());
    m.add_term(d, coeff);
    return m;
  }
  static Morphism identity(const Word& w) { return from_diagram(Diagram::identity(w)); }
  /// Scalar multiple of 1_I.
  static Morphism scalar(const F& value) { return from_diagram(Diagram::empty(), value); }

  const Word& domain() const noexcept { return domain_; }
  const Word& codomain() const noexcept { return codomain_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero_morphism() const noexcept { return terms_.empty(); }

  F coefficient(const Diagram& d) const {
    const auto it = terms_.find(d);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Adds coeff·d, dropping the entry if it cancels. SignatureError if d has
  /// the wrong type.
  void add_term(const Diagram& d, const F& coeff) {
    if (d.top() != domain_ || d.bottom() != codomain_) {
      throw SignatureError("diagram of type ([" + d.top().str() + "], [" + d.bottom().str() +
                           "]) added to morphism [" + domain_.str() + "] -> [" +
                           codomain_.str() + "]");
    }
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// The value of an endomorphism of the unit object.
  F scalar_value() const {
    if (!domain_.empty() || !codomain_.empty()) {
      throw SignatureError("scalar_value needs a morphism I -> I");
    }
    return coefficient(Diagram::empty());
  }

  Morphism operator-() const {
    Morphism out = *this;
    for (auto& [d, c] : out.terms_) c = -c;
    return out;
  }
  friend Morphism operator+(const Morphism& a, const Morphism& b) {
    a.require_same_type(b);
    Morphism out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, c);
    return out;
  }
  friend Morphism operator-(const Morphism& a, const Morphism& b) { return a + (-b); }
  friend Morphism operator*(const F& s, const Morphism& a) {
    Morphism out(a.domain_, a.codomain_);
    if (is_zero(s)) return out;
    for (const auto& [d, c] : a.terms_) out.add_term(d, s * c);
    return out;
  }

  /// Coefficient-wise equality (tolerance-based for Complex).
  friend bool operator==(const Morphism& a, const Morphism& b) {
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_) return false;
    for (const auto& [d, c] : a.terms_)
      if (!(c == b.coefficient(d))) return false;
    for (const auto& [d, c] : b.terms_)
      if (!(c == a.coefficient(d))) return false;
    return true;
  }

 private:
  void require_same_type(const Morphism& b) const {
    if (domain_ != b.domain_ || codomain_ != b.codomain_) {
      throw SignatureError("cannot add morphisms of different types");
    }
  }

  Word domain_;
  Word codomain_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Named generators.
// ---------------------------------------------------------------------------

/// epsilon_X : X X* -> I.
template <Field F>
Morphism<F> epsilon_x() { return Morphism<F>::from_diagram(Diagram::cap(Letter::X)); }
/// epsilon_X* : X* X -> I.
template <Field F>
Morphism<F> epsilon_xstar() { return Morphism<F>::from_diagram(Diagram::cap(Letter::Xstar)); }
/// delta_X : I -> X* X.
template <Field F>
Morphism<F> delta_x() { return Morphism<F>::from_diagram(Diagram::cup(Letter::Xstar)); }
/// delta_X* : I -> X X*.
template <Field F>
Morphism<F> delta_xstar() { return Morphism<F>::from_diagram(Diagram::cup(Letter::X)); }

// ---------------------------------------------------------------------------
// Composition, tensor, transpose.
// ---------------------------------------------------------------------------

/// f after g. Each diagram pair contributes its coefficients times
/// d_L^(anticlockwise loops) d_R^(clockwise loops).
template <Field F>
Morphism<F> compose(const Morphism<F>& f, const Morphism<F>& g, const FieldContext<F>& ctx) {
  if (f.domain() != g.codomain()) {
    throw SignatureError("cannot compose [" + f.domain().str() + "] -> [" + f.codomain().str() +
                         "] after [" + g.domain().str() + "] -> [" + g.codomain().str() + "]");
  }
  std::vector<F> left_powers{F(1)};
  std::vector<F> right_powers{F(1)};
  const auto loop_factor = [&](std::vector<F>& cache, const F& base, int k) -> const F& {
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k)];
  };

  Morphism<F> out(g.domain(), f.codomain());
  for (const auto& [dg, cg] : g.terms()) {
    for (const auto& [df, cf] : f.terms()) {
      const Composite c = compose(dg, df);
      F coeff = cg * cf;
      if (c.loops_left > 0) coeff = coeff * loop_factor(left_powers, ctx.d_left(), c.loops_left);
      if (c.loops_right > 0) coeff = coeff * loop_factor(right_powers, ctx.d_right(), c.loops_right);
      out.add_term(c.result, coeff);
    }
  }
  return out;
}

/// Bilinear juxtaposition, f to the left of g.
template <Field F>
Morphism<F> tensor(const Morphism<F>& f, const Morphism<F>& g) {
  Morphism<F> out(f.domain() + g.domain(), f.codomain() + g.codomain());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add_term(tensor(df, dg), cf * cg);
  return out;
}

/// Rotation of every diagram by pi: X^w -> X^w' becomes X^{w'*} -> X^{w*}.
template <Field F>
Morphism<F> transpose(const Morphism<F>& f) {
  Morphism<F> out(star(f.codomain()), star(f.domain()));
  for (const auto& [d, c] : f.terms()) out.add_term(rotate(d), c);
  return out;
}

/// Cap on strands (pos, pos+1) of w, identity elsewhere: X^w -> X^(w minus two letters).
template <Field F>
Morphism<F> cap_at(const Word& w, std::size_t pos) {
  if (pos + 1 >= w.size() || w[pos] == w[pos + 1]) {
    throw DomainError("no cap on strands " + std::to_string(pos) + "," + std::to_string(pos + 1) +
                      " of [" + w.str() + "]");
  }
  const Diagram d = tensor(tensor(Diagram::identity(w.substr(0, pos)), Diagram::cap(w[pos])),
                           Diagram::identity(w.substr(pos + 2, w.size() - pos - 2)));
  return Morphism<F>::from_diagram(d);
}

/// Cup producing strands (pos, pos+1) of w: X^(w minus two letters) -> X^w.
template <Field F>
Morphism<F> cup_at(const Word& w, std::size_t pos) {
  if (pos + 1 >= w.size() || w[pos] == w[pos + 1]) {
    throw DomainError("no cup on strands " + std::to_string(pos) + "," + std::to_string(pos + 1) +
                      " of [" + w.str() + "]");
  }
  const Diagram d = tensor(tensor(Diagram::identity(w.substr(0, pos)), Diagram::cup(w[pos])),
                           Diagram::identity(w.substr(pos + 2, w.size() - pos - 2)));
  return Morphism<F>::from_diagram(d);
}

// ---------------------------------------------------------------------------
// Jones-Wenzl idempotents and simple projectors.
// ---------------------------------------------------------------------------

/// Builds Jones-Wenzl idempotents on alternating words level by level and
/// caches them. Not thread-safe; use one tower per thread.
template <Field F>
class JonesWenzlTower {
 public:
  explicit JonesWenzlTower(FieldContext<F> ctx) : ctx_(std::move(ctx)) { (void)ctx_.d(); }

  const FieldContext<F>& context() const noexcept { return ctx_; }

  /// f_n on the alternating word of length n starting with `first`.
  /// Throws GenericityError when some [k], k <= n, vanishes.
  const Morphism<F>& get(int n, Letter first) {
    if (n < 1) throw DomainError("Jones-Wenzl index must be >= 1");
    auto& levels = levels_[static_cast<std::size_t>(first)];
    if (levels.empty()) levels.push_back(Morphism<F>::identity(Word{first}));
    while (static_cast<int>(levels.size()) < n) {
      const int k = static_cast<int>(levels.size());
      const F next_q = quantum_integer(k + 1, ctx_);
      if (is_zero(next_q)) {
        throw GenericityError(k + 1, "cannot build f_" + std::to_string(k + 1) + ": [" +
                                         std::to_string(k + 1) + "] vanishes at d = " +
                                         to_string(ctx_.d()));
      }
      const Word w = Word::alternating(static_cast<std::size_t>(k + 1), first);
      const Morphism<F> extended = tensor(levels.back(), Morphism<F>::identity(Word{w[k]}));
      // e_k: cup-cap on the last two strands.
      const Morphism<F> cap = cap_at<F>(w, static_cast<std::size_t>(k - 1));
      const Morphism<F> cup = cup_at<F>(w, static_cast<std::size_t>(k - 1));
      const Morphism<F> e = compose(cup, cap, ctx_);
      const Morphism<F> sandwich = compose(extended, compose(e, extended, ctx_), ctx_);
      const F ratio = quantum_integer(k, ctx_) / next_q;
      levels.push_back(extended - ratio * sandwich);
    }
    return levels[static_cast<std::size_t>(n - 1)];
  }

  /// P_w: tensor product of Jones-Wenzl idempotents over the maximal
  /// alternating parts of w. Identity of I for the empty word.
  Morphism<F> simple_projector(const Word& w) {
    Morphism<F> p = Morphism<F>::identity(Word{});
    for (const Word& part : alternating_decomposition(w)) {
      p = tensor(p, get(static_cast<int>(part.size()), part[0]));
    }
    return p;
  }

 private:
  FieldContext<F> ctx_;
  std::vector<Morphism<F>> levels_[2];
};

template <Field F>
Morphism<F> jones_wenzl(int n, Letter first, const FieldContext<F>& ctx) {
  JonesWenzlTower<F> tower(ctx);
  return tower.get(n, first);
}

template <Field F>
Morphism<F> simple_projector(const Word& w, const FieldContext<F>& ctx) {
  JonesWenzlTower<F> tower(ctx);
  return tower.simple_projector(w);
}

/// |K_{w,w'}|.
inline std::size_t hom_dimension(const Word& w, const Word& w_prime) {
  return enumerate(w, w_prime).size();
}

/// Coefficient vectors of a family of morphisms on the canonical basis of
/// K_{w,w'}: one row per morphism.
template <Field F>
Matrix<F> coefficient_matrix(const std::vector<Morphism<F>>& family,
                             const std::vector<Diagram>& basis) {
  std::map<Diagram, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix<F> m(family.size(), basis.size());
  for (std::size_t r = 0; r < family.size(); ++r)
    for (const auto& [d, c] : family[r].terms()) m(r, index.at(d)) = c;
  return m;
}

/// dim P_{w'} Hom(X^w, X^{w'}) P_w, as the rank of M -> P_{w'} M P_w.
template <Field F>
std::size_t compressed_hom_dimension(const Word& w, const Word& w_prime, JonesWenzlTower<F>& tower) {
  const auto basis = enumerate(w, w_prime);
  if (basis.empty()) return 0;
  const auto& ctx = tower.context();
  const Morphism<F> p_in = tower.simple_projector(w);
  const Morphism<F> p_out = tower.simple_projector(w_prime);
  std::vector<Morphism<F>> images;
  images.reserve(basis.size());
  for (const auto& d : basis) {
    images.push_back(compose(p_out, compose(Morphism<F>::from_diagram(d), p_in, ctx), ctx));
  }
  return rank(coefficient_matrix(images, basis));
}

template <Field F>
std::size_t compressed_hom_dimension(const Word& w, const Word& w_prime, const FieldContext<F>& ctx) {
  JonesWenzlTower<F> tower(ctx);
  return compressed_hom_dimension(w, w_prime, tower);
}

/// The monoidal functor with F(epsilon_X) = lambda·epsilon_X and
/// F(epsilon_X*) = mu·epsilon_X* (swap = false), or F(epsilon_X) =
/// lambda·epsilon_X*, F(epsilon_X*) = mu·epsilon_X (swap = true). Each
/// diagram is scaled by lambda^(eps_X - delta_X) mu^(eps_X* - delta_X*) of
/// its own census; swapping then reverses every string.
template <Field F>
Morphism<F> rescale_functor(const Morphism<F>& f, const F& lambda, const F& mu, bool swap) {
  if (is_zero(lambda) || is_zero(mu)) throw DomainError("rescale_functor needs nonzero scalars");
  Morphism<F> out = swap ? Morphism<F>(f.domain().flipped(), f.codomain().flipped())
                         : Morphism<F>(f.domain(), f.codomain());
  for (const auto& [d, c] : f.terms()) {
    const ArcCensus census = arc_census(d);
    const F factor = power(lambda, census.eps_x - census.delta_x) *
                     power(mu, census.eps_xstar - census.delta_xstar);
    out.add_term(swap ? flip_orientation(d) : d, factor * c);
  }
  return out;
}

}  // namespace okd
