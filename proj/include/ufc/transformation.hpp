#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"

namespace ufc {

/// A self-map of Q_n = {0,...,n-1}, stored as its image sequence.
class Transformation {
 public:
  Transformation() = default;

  explicit Transformation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    for (auto x : images_) {
      if (x >= images_.size())
        throw precondition_error("transformation: image " + std::to_string(x) + " out of range for degree " +
                                 std::to_string(images_.size()));
    }
  }

  static Transformation identity(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0U);
    return Transformation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t q) const { return images_[q]; }
  std::span<const std::uint32_t> images() const { return images_; }
  bool is_identity() const {
    for (std::size_t q = 0; q < images_.size(); ++q)
      if (images_[q] != q) return false;
    return true;
  }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// The composition st, acting left to right: q(st) = (qs)t.
inline Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree())
    throw degree_mismatch("compose: degrees " + std::to_string(s.degree()) + " and " + std::to_string(t.degree()));
  std::vector<std::uint32_t> images(s.degree());
  for (std::size_t q = 0; q < images.size(); ++q) images[q] = t(s(q));
  return Transformation(std::move(images));
}

inline Transformation operator*(const Transformation& s, const Transformation& t) { return compose(s, t); }

/// Number of distinct images.
inline std::size_t rank(const Transformation& t) {
  std::vector<char> hit(t.degree(), 0);
  std::size_t r = 0;
  for (auto x : t.images())
    if (!hit[x]++) ++r;
  return r;
}

/// Parses a product of cycles "(q0,q1,...)" and sends "(p->q)", applied
/// left to right. States not mentioned are fixed; "" is the identity.
inline Transformation parse_cycles(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw parse_error("cycles: " + what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::uint32_t {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a state");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
      if (value >= degree) fail("state out of range for degree " + std::to_string(degree));
    }
    skip_space();
    return static_cast<std::uint32_t>(value);
  };

  Transformation result = Transformation::identity(degree);
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0U);
    const std::uint32_t head = number();
    if (text.substr(pos, 2) == "->") {
      pos += 2;
      images[head] = number();
    } else {
      std::vector<std::uint32_t> cycle{head};
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        const std::uint32_t q = number();
        if (std::find(cycle.begin(), cycle.end(), q) != cycle.end())
          fail("state " + std::to_string(q) + " repeated in cycle");
        cycle.push_back(q);
      }
      if (cycle.size() < 2) fail("a cycle needs at least two states");
      for (std::size_t j = 0; j < cycle.size(); ++j) images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    result = compose(result, Transformation(std::move(images)));
    skip_space();
  }
  return result;
}

/// Inverse of parse_cycles: the permutation part as cycles sorted by least
/// element, then one "(p->q)" per non-cyclic point, nearest to the cycles
/// first. Fixed points are omitted.
inline std::string format_cycles(const Transformation& t) {
  const std::size_t n = t.degree();
  // A point is cyclic iff it is reached again after at most n steps.
  std::vector<char> cyclic(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t p = q;
    for (std::size_t j = 0; j < n; ++j) p = t(p);
    cyclic[p] = 1;
    for (std::size_t c = t(p); c != p; c = t(c)) cyclic[c] = 1;
  }

  std::string out;
  std::vector<char> done(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (!cyclic[q] || done[q] || t(q) == q) continue;
    out += '(';
    for (std::size_t c = q;;) {
      done[c] = 1;
      out += std::to_string(c);
      c = t(c);
      if (c == q) break;
      out += ',';
    }
    out += ')';
  }

  std::vector<std::pair<std::size_t, std::size_t>> sends;  // (height, point)
  for (std::size_t q = 0; q < n; ++q) {
    if (cyclic[q]) continue;
    std::size_t height = 1;
    for (std::size_t p = t(q); !cyclic[p]; p = t(p)) ++height;
    sends.emplace_back(height, q);
  }
  std::sort(sends.begin(), sends.end());
  for (auto [height, q] : sends) out += "(" + std::to_string(q) + "->" + std::to_string(t(q)) + ")";
  return out;
}

/// The transformation delta_w induced by w on a complete DFA.
inline Transformation word_transformation(const Dfa& d, std::string_view w) {
  if (!d.is_complete()) throw precondition_error("word_transformation: DFA must be complete");
  std::vector<std::uint32_t> images(d.state_count());
  std::vector<std::size_t> letters;
  for (char c : w) {
    auto i = d.alphabet().index_of(c);
    if (i == Alphabet::npos) throw alphabet_error(std::string("word_transformation: letter '") + c + "' not in alphabet");
    letters.push_back(i);
  }
  for (std::size_t q = 0; q < images.size(); ++q) {
    auto s = static_cast<State>(q);
    for (auto i : letters) s = d.next(s, i);
    images[q] = static_cast<std::uint32_t>(s);
  }
  return Transformation(std::move(images));
}

/// Transformations of the letters, in alphabet order.
inline std::vector<Transformation> letter_transformations(const Dfa& d) {
  std::vector<Transformation> out;
  for (char c : d.alphabet()) out.push_back(word_transformation(d, std::string_view(&c, 1)));
  return out;
}

}  // namespace ufc

template <>
struct std::hash<ufc::Transformation> {
  std::size_t operator()(const ufc::Transformation& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : t.images()) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};
