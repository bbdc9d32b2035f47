#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace okd {

/// One of the two generating objects. Ordered X < X*.
enum class Letter : unsigned char { X = 0, Xstar = 1 };

constexpr Letter flip(Letter l) noexcept {
  return l == Letter::X ? Letter::Xstar : Letter::X;
}

std::string to_string(Letter l);

/// An object X^w of the category: a finite string over {X, X*}. The empty
/// word is the unit object.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses "x", "x*" tokens separated by commas and/or whitespace,
  /// case-insensitively. Throws ParseError.
  static Word parse(std::string_view text);

  /// Alternating word of the given length beginning with `first`.
  static Word alternating(std::size_t length, Letter first);

  /// Every word of exactly `length` letters, in lexicographic order.
  static std::vector<Word> all_of_length(std::size_t length);
  /// Every word of length at most `max_length`, shortest first.
  static std::vector<Word> all_up_to(std::size_t max_length);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word substr(std::size_t pos, std::size_t count) const;
  /// Every letter flipped, order kept.
  Word flipped() const;
  bool is_alternating() const;

  /// Canonical text form: "x,x*,x"; empty word prints as "".
  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);
  Word& operator+=(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Reversal with every letter flipped; the duality on objects.
Word star(const Word& w);

/// (|w|_+, |w|_-): the number of X and X* letters.
std::pair<std::size_t, std::size_t> plus_minus_counts(const Word& w);

/// Maximal alternating factors of w, in order. Empty word gives no parts.
std::vector<Word> alternating_decomposition(const Word& w);

/// Whether an oriented diagram of type (w, w') exists: the number of string
/// starts equals the number of string ends.
bool homset_nonempty(const Word& w, const Word& w_prime);

}  // namespace okd
