#include "okd/fusion.hpp"

#include <algorithm>

#include "okd/diagrams.hpp"
#include "okd/errors.hpp"

namespace okd {

namespace {

Word join(const std::vector<Word>& parts, std::size_t from, std::size_t to) {
  Word out;
  for (std::size_t i = from; i < to; ++i) out += parts[i];
  return out;
}

void accumulate(FusionResult& into, const FusionResult& from, long times) {
  for (const auto& [w, m] : from) into[w] += m * times;
}

}  // namespace

FusionResult clebsch_gordan(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || !u.is_alternating() || !v.is_alternating()) {
    throw DomainError("clebsch_gordan needs nonempty alternating words, got [" + u.str() +
                      "] and [" + v.str() + "]");
  }
  if (u[u.size() - 1] == v[0]) {
    throw DomainError("junction of [" + u.str() + "] and [" + v.str() + "] does not alternate");
  }
  FusionResult out;
  const std::size_t total = u.size() + v.size();
  for (std::size_t k = 0; k <= std::min(u.size(), v.size()); ++k) {
    out[Word::alternating(total - 2 * k, u[0])] += 1;
  }
  return out;
}

FusionResult fuse(const Word& w, const Word& w_prime) {
  if (w.empty()) return {{w_prime, 1}};
  if (w_prime.empty()) return {{w, 1}};
  if (w[w.size() - 1] == w_prime[0]) return {{w + w_prime, 1}};

  const auto left = alternating_decomposition(w);
  const auto right = alternating_decomposition(w_prime);
  const Word head = join(left, 0, left.size() - 1);
  const Word tail = join(right, 1, right.size());

  FusionResult out;
  for (const auto& [u, m] : clebsch_gordan(left.back(), right.front())) {
    if (u.empty()) {
      accumulate(out, fuse(head, tail), m);
    } else {
      out[head + u + tail] += m;
    }
  }
  return out;
}

FusionResult decompose_word(const Word& w) {
  FusionResult current{{Word{}, 1}};
  for (const Letter a : w) {
    FusionResult next;
    for (const auto& [u, m] : current) accumulate(next, fuse(u, Word{a}), m);
    current = std::move(next);
  }
  return current;
}

std::size_t fusion_pairing(const FusionResult& a, const FusionResult& b) {
  std::size_t total = 0;
  for (const auto& [u, m] : a) {
    const auto it = b.find(u);
    if (it != b.end()) total += static_cast<std::size_t>(m * it->second);
  }
  return total;
}

bool dimension_oracle_check(const Word& w, const Word& w_prime) {
  return fusion_pairing(decompose_word(w), decompose_word(w_prime)) ==
         enumerate(w, w_prime).size();
}

}  // namespace okd
