#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "ufc/error.hpp"

namespace ufc {

using Letter = char;

/// A word over some alphabet; the empty string is epsilon.
using Word = std::string;

/// Finite alphabet stored as a strictly increasing sequence of character
/// codes. All iteration over letters follows this order.
class Alphabet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Alphabet() = default;

  /// Letters must already be strictly increasing; throws alphabet_error
  /// otherwise.
  explicit Alphabet(std::string_view letters) : letters_(letters) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!is_letter(letters_[i])) {
        throw alphabet_error("alphabet: letter with code " +
                             std::to_string(static_cast<unsigned char>(letters_[i])) +
                             " is not a printable character");
      }
      if (i > 0 && static_cast<unsigned char>(letters_[i - 1]) >=
                       static_cast<unsigned char>(letters_[i])) {
        throw alphabet_error("alphabet: letters must be distinct and in increasing order, got \"" +
                             letters_ + "\"");
      }
    }
  }

  /// Sorts and deduplicates an arbitrary letter sequence.
  static Alphabet from_letters(std::string_view letters) {
    std::string sorted(letters);
    std::sort(sorted.begin(), sorted.end(), [](char x, char y) {
      return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return Alphabet(sorted);
  }

  static bool is_letter(char c) {
    auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string_view letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::size_t index_of(Letter c) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), c, [](char x, char y) {
      return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
    if (it == letters_.end() || *it != c) return npos;
    return static_cast<std::size_t>(it - letters_.begin());
  }

  bool contains(Letter c) const { return index_of(c) != npos; }

  bool includes(const Alphabet& other) const {
    return std::all_of(other.begin(), other.end(), [this](char c) { return contains(c); });
  }

  friend Alphabet merge(const Alphabet& x, const Alphabet& y) {
    return from_letters(x.letters_ + y.letters_);
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

}  // namespace ufc
