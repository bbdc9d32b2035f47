#pragma once

#include <cstddef>
#include <map>

#include "okd/scalars.hpp"
#include "okd/words.hpp"

namespace okd {

/// Simple labels X_w with multiplicities, ordered lexicographically by word.
/// The empty word is the unit I.
using FusionResult = std::map<Word, long>;

/// X_u (x) X_v for alternating u, v whose junction alternates.
FusionResult clebsch_gordan(const Word& u, const Word& v);

/// X_w (x) X_w' by the recursive recipe on alternating parts.
FusionResult fuse(const Word& w, const Word& w_prime);

/// Multiplicities of the simples in X^w.
FusionResult decompose_word(const Word& w);

/// sum_u m_u(w) m_u(w') == |K_{w,w'}|.
bool dimension_oracle_check(const Word& w, const Word& w_prime);

/// sum_u m_u(w) m_u(w').
std::size_t fusion_pairing(const FusionResult& a, const FusionResult& b);

/// The fusion ring needs f_n for n up to max_length.
template <Field F>
void require_fusion_context(const FieldContext<F>& ctx, std::size_t max_length) {
  require_generic(ctx, static_cast<int>(max_length));
}

}  // namespace okd
