#include "okd/diagrams.hpp"

#include <algorithm>
#include <string>

#include "okd/errors.hpp"

namespace okd {

Diagram::Diagram(Word top, Word bottom, std::vector<int> partner)
    : top_(std::move(top)), bottom_(std::move(bottom)), partner_(std::move(partner)) {}

Diagram Diagram::from_arcs(Word top, Word bottom, const std::vector<Arc>& arcs) {
  const std::size_t m = top.size();
  const std::size_t total = m + bottom.size();
  std::vector<int> partner(total, -1);
  const auto to_global = [&](BoundaryPoint p) -> int {
    const std::size_t limit = p.side == Side::Top ? m : total - m;
    if (p.index >= limit) throw DomainError("arc endpoint index out of range");
    return static_cast<int>(p.side == Side::Top ? p.index : m + p.index);
  };
  for (const auto& [p, q] : arcs) {
    const int a = to_global(p);
    const int b = to_global(q);
    if (a == b || partner[a] != -1 || partner[b] != -1) {
      throw DomainError("arcs do not form a perfect matching");
    }
    partner[a] = b;
    partner[b] = a;
  }
  Diagram d(std::move(top), std::move(bottom), std::move(partner));
  if (!d.validate()) throw DomainError("invalid oriented diagram");
  return d;
}

Diagram Diagram::identity(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> partner(2 * w.size());
  for (int i = 0; i < n; ++i) {
    partner[i] = n + i;
    partner[n + i] = i;
  }
  return Diagram(w, w, std::move(partner));
}

Diagram Diagram::cap(Letter left) { return Diagram(Word{left, flip(left)}, Word{}, {1, 0}); }

Diagram Diagram::cup(Letter left) { return Diagram(Word{}, Word{left, flip(left)}, {1, 0}); }

BoundaryPoint Diagram::point(int g) const {
  const auto m = static_cast<int>(top_.size());
  if (g < m) return {Side::Top, static_cast<std::size_t>(g)};
  return {Side::Bottom, static_cast<std::size_t>(g - m)};
}

int Diagram::global(BoundaryPoint p) const {
  return static_cast<int>(p.side == Side::Top ? p.index : top_.size() + p.index);
}

Letter Diagram::label(int g) const {
  const auto m = static_cast<int>(top_.size());
  return g < m ? top_[static_cast<std::size_t>(g)] : bottom_[static_cast<std::size_t>(g - m)];
}

bool Diagram::is_start(int g) const {
  const bool on_top = g < static_cast<int>(top_.size());
  return (label(g) == Letter::X) == on_top;
}

std::vector<Arc> Diagram::arcs() const {
  std::vector<Arc> out;
  for (int g = 0; g < static_cast<int>(partner_.size()); ++g) {
    if (partner_[g] > g) out.emplace_back(point(g), point(partner_[g]));
  }
  return out;
}

namespace {

// Position of a boundary point in the circular order: top left to right,
// then bottom right to left.
int circular_position(int g, int m, int n) { return g < m ? g : m + (n - 1 - (g - m)); }

}  // namespace

bool Diagram::validate() const {
  const int m = static_cast<int>(top_.size());
  const int n = static_cast<int>(bottom_.size());
  const int total = m + n;
  if (static_cast<int>(partner_.size()) != total) return false;
  for (int g = 0; g < total; ++g) {
    const int p = partner_[g];
    if (p < 0 || p >= total || p == g || partner_[p] != g) return false;
    if (is_start(g) == is_start(p)) return false;
  }
  std::vector<std::pair<int, int>> chords;
  for (int g = 0; g < total; ++g) {
    if (partner_[g] > g) {
      int a = circular_position(g, m, n);
      int b = circular_position(partner_[g], m, n);
      if (a > b) std::swap(a, b);
      chords.emplace_back(a, b);
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto [a, b] = chords[i];
      const auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

namespace {

using Matching = std::vector<std::pair<int, int>>;

// All non-crossing, orientation-consistent matchings of circular positions
// [lo, hi), matching position lo first.
void match_interval(const std::vector<bool>& starts, int lo, int hi,
                    std::vector<Matching>& out) {
  if (lo >= hi) {
    out.emplace_back();
    return;
  }
  if ((hi - lo) % 2 != 0) return;
  for (int j = lo + 1; j < hi; j += 2) {
    if (starts[lo] == starts[j]) continue;
    std::vector<Matching> inner;
    match_interval(starts, lo + 1, j, inner);
    if (inner.empty()) continue;
    std::vector<Matching> outer;
    match_interval(starts, j + 1, hi, outer);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        Matching mm;
        mm.reserve(1 + a.size() + b.size());
        mm.emplace_back(lo, j);
        mm.insert(mm.end(), a.begin(), a.end());
        mm.insert(mm.end(), b.begin(), b.end());
        out.push_back(std::move(mm));
      }
    }
  }
}

}  // namespace

std::vector<Diagram> enumerate(const Word& top, const Word& bottom) {
  const int m = static_cast<int>(top.size());
  const int n = static_cast<int>(bottom.size());
  const int total = m + n;
  if (total % 2 != 0 || !homset_nonempty(top, bottom)) return {};

  std::vector<int> global_at(static_cast<std::size_t>(total));
  for (int g = 0; g < total; ++g) global_at[circular_position(g, m, n)] = g;
  const Diagram shape(top, bottom, std::vector<int>(static_cast<std::size_t>(total), 0));
  std::vector<bool> starts(static_cast<std::size_t>(total));
  for (int pos = 0; pos < total; ++pos) starts[pos] = shape.is_start(global_at[pos]);

  std::vector<Matching> matchings;
  match_interval(starts, 0, total, matchings);

  std::vector<Diagram> out;
  out.reserve(matchings.size());
  for (const auto& mm : matchings) {
    std::vector<int> partner(static_cast<std::size_t>(total));
    for (const auto& [a, b] : mm) {
      partner[global_at[a]] = global_at[b];
      partner[global_at[b]] = global_at[a];
    }
    out.emplace_back(top, bottom, std::move(partner));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composite compose(const Diagram& upper, const Diagram& lower) {
  if (upper.bottom() != lower.top()) {
    throw SignatureError("cannot compose: upper diagram ends in [" + upper.bottom().str() +
                         "] but lower diagram starts at [" + lower.top().str() + "]");
  }
  const int m = static_cast<int>(upper.top().size());
  const int k = static_cast<int>(upper.bottom().size());
  const int n = static_cast<int>(lower.bottom().size());
  const auto& up = upper.partner();
  const auto& lo = lower.partner();
  std::vector<bool> interface_seen(static_cast<std::size_t>(k), false);

  // Follows a string entering the upper diagram at global point g (or the
  // lower one), returning the result-global endpoint where it leaves.
  const auto walk = [&](bool in_upper, int g) {
    while (true) {
      if (in_upper) {
        const int p = up[g];
        if (p < m) return p;
        const int t = p - m;
        interface_seen[t] = true;
        in_upper = false;
        g = t;
      } else {
        const int q = lo[g];
        if (q >= k) return m + (q - k);
        interface_seen[q] = true;
        in_upper = true;
        g = m + q;
      }
    }
  };

  std::vector<int> partner(static_cast<std::size_t>(m + n), -1);
  for (int g = 0; g < m + n; ++g) {
    if (partner[g] != -1) continue;
    const int end = g < m ? walk(true, g) : walk(false, k + (g - m));
    partner[g] = end;
    partner[end] = g;
  }

  Composite out;
  for (int t = 0; t < k; ++t) {
    if (interface_seen[t]) continue;
    // t is the leftmost interface point of a new closed loop.
    if (upper.bottom()[static_cast<std::size_t>(t)] == Letter::X) {
      ++out.loops_left;
    } else {
      ++out.loops_right;
    }
    int g = t;
    do {
      interface_seen[g] = true;
      const int q = lo[g];
      interface_seen[q] = true;
      g = up[m + q] - m;
    } while (g != t);
  }
  out.result = Diagram(upper.top(), lower.bottom(), std::move(partner));
  return out;
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  const int m1 = static_cast<int>(left.top().size());
  const int n1 = static_cast<int>(left.bottom().size());
  const int m2 = static_cast<int>(right.top().size());
  const int n2 = static_cast<int>(right.bottom().size());
  const int m = m1 + m2;
  const auto remap_left = [&](int g) { return g < m1 ? g : m + (g - m1); };
  const auto remap_right = [&](int g) { return g < m2 ? m1 + g : m + n1 + (g - m2); };
  std::vector<int> partner(static_cast<std::size_t>(m + n1 + n2));
  for (int g = 0; g < m1 + n1; ++g) partner[remap_left(g)] = remap_left(left.partner()[g]);
  for (int g = 0; g < m2 + n2; ++g) partner[remap_right(g)] = remap_right(right.partner()[g]);
  return Diagram(left.top() + right.top(), left.bottom() + right.bottom(), std::move(partner));
}

Diagram reflect_reverse(const Diagram& d) {
  const int m = static_cast<int>(d.top().size());
  const int n = static_cast<int>(d.bottom().size());
  // Old top i becomes new bottom i; old bottom j becomes new top j.
  const auto remap = [&](int g) { return g < m ? n + g : g - m; };
  std::vector<int> partner(static_cast<std::size_t>(m + n));
  for (int g = 0; g < m + n; ++g) partner[remap(g)] = remap(d.partner()[g]);
  return Diagram(d.bottom(), d.top(), std::move(partner));
}

Diagram rotate(const Diagram& d) {
  const int m = static_cast<int>(d.top().size());
  const int n = static_cast<int>(d.bottom().size());
  // Old top i becomes new bottom m-1-i; old bottom j becomes new top n-1-j.
  const auto remap = [&](int g) { return g < m ? n + (m - 1 - g) : n - 1 - (g - m); };
  std::vector<int> partner(static_cast<std::size_t>(m + n));
  for (int g = 0; g < m + n; ++g) partner[remap(g)] = remap(d.partner()[g]);
  return Diagram(star(d.bottom()), star(d.top()), std::move(partner));
}

Diagram flip_orientation(const Diagram& d) {
  return Diagram(d.top().flipped(), d.bottom().flipped(), d.partner());
}

ArcCensus arc_census(const Diagram& d) {
  ArcCensus c;
  const int m = static_cast<int>(d.top().size());
  const auto& partner = d.partner();
  for (int g = 0; g < static_cast<int>(partner.size()); ++g) {
    const int p = partner[g];
    if (p <= g) continue;
    const bool x_left = d.label(g) == Letter::X;
    if (p < m) {
      ++(x_left ? c.eps_x : c.eps_xstar);
    } else if (g >= m) {
      ++(x_left ? c.delta_xstar : c.delta_x);
    }
  }
  return c;
}

}  // namespace okd
