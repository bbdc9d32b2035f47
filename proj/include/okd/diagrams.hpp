#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "okd/words.hpp"

namespace okd {

enum class Side : unsigned char { Top = 0, Bottom = 1 };

struct BoundaryPoint {
  Side side;
  std::size_t index;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

using Arc = std::pair<BoundaryPoint, BoundaryPoint>;

/// Counts of the four arc kinds in a reduced diagram. Top-top arcs are caps
/// (epsilon_X when the left end is X, epsilon_X* otherwise); bottom-bottom
/// arcs are cups (delta_X* when the left end is X, delta_X otherwise).
struct ArcCensus {
  int eps_x = 0;
  int eps_xstar = 0;
  int delta_x = 0;
  int delta_xstar = 0;

  /// #(D): caps minus cups.
  int sharp() const noexcept { return eps_x + eps_xstar - delta_x - delta_xstar; }
  /// l(D): epsilon_X* caps minus delta_X* cups.
  int ell() const noexcept { return eps_xstar - delta_xstar; }

  friend bool operator==(const ArcCensus&, const ArcCensus&) = default;
};

/// A reduced oriented Kauffman diagram of type (top, bottom).
///
/// Boundary points are numbered globally: top points 0..m-1 from the left,
/// then bottom points m..m+n-1 from the left. `partner` is the perfect
/// matching as an involution on those numbers. A top point labelled X and a
/// bottom point labelled X* are string starts; the rest are string ends.
class Diagram {
 public:
  Diagram() = default;
  /// Does not validate; call validate() or use the checked factory.
  Diagram(Word top, Word bottom, std::vector<int> partner);
  /// Builds from an arc list and throws DomainError if the result is invalid.
  static Diagram from_arcs(Word top, Word bottom, const std::vector<Arc>& arcs);

  static Diagram identity(const Word& w);
  static Diagram empty() { return {}; }
  /// Single cap on X X* (epsilon_X) or X* X (epsilon_X*), selected by the left letter.
  static Diagram cap(Letter left);
  /// Single cup on X* X (delta_X) when left = X*, or X X* (delta_X*) when left = X.
  static Diagram cup(Letter left);

  const Word& top() const noexcept { return top_; }
  const Word& bottom() const noexcept { return bottom_; }
  const std::vector<int>& partner() const noexcept { return partner_; }
  std::size_t num_points() const noexcept { return partner_.size(); }
  std::size_t num_strings() const noexcept { return partner_.size() / 2; }

  BoundaryPoint point(int global) const;
  int global(BoundaryPoint p) const;
  Letter label(int global) const;
  bool is_start(int global) const;

  /// Arcs sorted by their smaller endpoint in (side, index) order.
  std::vector<Arc> arcs() const;

  /// All type invariants: perfect matching, planarity, orientation.
  bool validate() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  /// Canonical order: by type, then lexicographic on sorted arc lists (which
  /// coincides with lexicographic order of the partner vectors).
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  Word top_;
  Word bottom_;
  std::vector<int> partner_;
};

/// Every valid diagram of type (w, w'), in canonical order.
std::vector<Diagram> enumerate(const Word& top, const Word& bottom);

struct Composite {
  int loops_left = 0;   // anticlockwise loops, value d_L
  int loops_right = 0;  // clockwise loops, value d_R
  Diagram result;
};

/// Stacks `upper` (w -> w') above `lower` (w' -> w''). A closed loop is
/// anticlockwise exactly when its leftmost interface point is labelled X.
/// Throws SignatureError unless upper.bottom() == lower.top().
Composite compose(const Diagram& upper, const Diagram& lower);

/// Horizontal juxtaposition, `left` then `right`.
Diagram tensor(const Diagram& left, const Diagram& right);

/// Reflection in the horizontal axis followed by reversal of every string.
/// Type (w, w') becomes (w', w) with the same letters.
Diagram reflect_reverse(const Diagram& d);

/// Rotation by pi: type (w, w') becomes (star(w'), star(w)).
Diagram rotate(const Diagram& d);

/// Reverses the orientation of every string: all labels flipped, arcs kept.
Diagram flip_orientation(const Diagram& d);

ArcCensus arc_census(const Diagram& d);

}  // namespace okd
