#include "okd/words.hpp"

#include <algorithm>
#include <cctype>

#include "okd/errors.hpp"

namespace okd {

std::string to_string(Letter l) { return l == Letter::X ? "x" : "x*"; }

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X') {
      throw ParseError("unexpected character '" + std::string(1, c) +
                       "' in word \"" + std::string(text) + "\"");
    }
    ++i;
    if (i < text.size() && text[i] == '*') {
      letters.push_back(Letter::Xstar);
      ++i;
    } else {
      letters.push_back(Letter::X);
    }
    if (i < text.size() && text[i] != ',' &&
        !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("letters must be separated by ',' or whitespace in \"" +
                       std::string(text) + "\"");
    }
  }
  return Word(std::move(letters));
}

Word Word::alternating(std::size_t length, Letter first) {
  std::vector<Letter> letters;
  letters.reserve(length);
  Letter l = first;
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back(l);
    l = flip(l);
  }
  return Word(std::move(letters));
}

std::vector<Word> Word::all_of_length(std::size_t length) {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << length;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i) {
      const bool star_bit = (mask >> (length - 1 - i)) & 1U;
      letters[i] = star_bit ? Letter::Xstar : Letter::X;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

std::vector<Word> Word::all_up_to(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto level = all_of_length(len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Word Word::substr(std::size_t pos, std::size_t count) const {
  const auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

Word Word::flipped() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(), flip);
  return Word(std::move(out));
}

bool Word::is_alternating() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1]) return false;
  }
  return true;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += to_string(letters_[i]);
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out += b;
  return out;
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word star(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  std::transform(out.begin(), out.end(), out.begin(), flip);
  return Word(std::move(out));
}

std::pair<std::size_t, std::size_t> plus_minus_counts(const Word& w) {
  const auto plus = static_cast<std::size_t>(
      std::count(w.begin(), w.end(), Letter::X));
  return {plus, w.size() - plus};
}

std::vector<Word> alternating_decomposition(const Word& w) {
  std::vector<Word> parts;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] == w[i - 1]) {
      parts.push_back(w.substr(start, i - start));
      start = i;
    }
  }
  return parts;
}

bool homset_nonempty(const Word& w, const Word& w_prime) {
  // Top X and bottom X* points start a string; the others end one.
  const auto [top_plus, top_minus] = plus_minus_counts(w);
  const auto [bot_plus, bot_minus] = plus_minus_counts(w_prime);
  return top_plus + bot_minus == top_minus + bot_plus;
}

}  // namespace okd
