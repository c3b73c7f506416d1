#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace ufc {

/// Subset of {0,...,63}, used for subset-construction states and atom indices.
class StateSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet full(std::size_t n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t q) const { return (bits_ >> q) & 1U; }
  constexpr void insert(std::size_t q) { bits_ |= std::uint64_t{1} << q; }

  constexpr StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  constexpr StateSet& operator|=(StateSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  /// Sorted state list, e.g. "{0,2}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](std::size_t q) {
      if (!first) out += ',';
      out += std::to_string(q);
      first = false;
    });
    return out + "}";
  }

  friend constexpr bool operator==(StateSet, StateSet) = default;
  friend constexpr auto operator<=>(StateSet, StateSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ufc
