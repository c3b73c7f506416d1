#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/formulas.hpp"
#include "ufc/minimize.hpp"
#include "ufc/nfa.hpp"

namespace ufc {

/// Binary boolean operation given by its truth table over
/// (word in first language, word in second language).
class BoolOp {
 public:
  /// table bit (2*x + y) holds op(x, y).
  constexpr BoolOp(std::uint8_t table, std::string_view name) : table_(table & 0xF), name_(name) {}

  static constexpr BoolOp union_op() { return {0b1110, "union"}; }
  static constexpr BoolOp intersection() { return {0b1000, "intersect"}; }
  static constexpr BoolOp difference() { return {0b0100, "diff"}; }
  static constexpr BoolOp symmetric_difference() { return {0b0110, "symdiff"}; }

  static constexpr std::array<BoolOp, 4> proper_named() {
    return {union_op(), intersection(), difference(), symmetric_difference()};
  }

  static std::optional<BoolOp> from_name(std::string_view name) {
    for (auto op : proper_named())
      if (op.name() == name) return op;
    return std::nullopt;
  }

  constexpr bool operator()(bool x, bool y) const { return (table_ >> (2 * int(x) + int(y))) & 1U; }

  /// Depends on both arguments.
  constexpr bool is_proper() const {
    bool first = false, second = false;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        first |= (*this)(x, y) != (*this)(!x, y);
        second |= (*this)(x, y) != (*this)(x, !y);
      }
    }
    return first && second;
  }

  constexpr std::uint8_t table() const { return table_; }
  constexpr std::string_view name() const { return name_; }

 private:
  std::uint8_t table_;
  std::string_view name_;
};

enum class AlphabetMode { restricted, unrestricted };

inline std::string_view to_string(AlphabetMode m) {
  return m == AlphabetMode::restricted ? "restricted" : "unrestricted";
}

/// Minimal result of a language operation together with the size of the
/// automaton it was minimized from and the regular-language upper bound
/// on its complexity.
struct OpResult {
  Dfa result;
  std::size_t raw_states = 0;
  std::string construction;
  std::uint64_t upper_bound = 0;
  bool within_bound = true;

  std::size_t complexity() const { return result.state_count(); }
};

namespace detail {

inline OpResult finish(const Dfa& raw, std::string construction, std::uint64_t bound) {
  OpResult r{minimize(raw), raw.state_count(), std::move(construction), bound, true};
  r.within_bound = r.complexity() <= bound;
  return r;
}

inline std::uint64_t saturating(auto&& f) {
  try {
    return f();
  } catch (const precondition_error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

}  // namespace detail

/// Reversed transitions; initials are d's finals, the only final is d's
/// initial state. Partial input is completed first.
inline Nfa reverse_nfa(const Dfa& input) {
  const Dfa d = complete(input);
  Nfa out(d.state_count(), d.alphabet());
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    const auto s = static_cast<State>(q);
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) out.add_transition(d.next(s, i), i, s);
    if (d.is_final(s)) out.set_initial(s);
  }
  out.set_final(d.initial());
  return out;
}

inline OpResult reverse(const Dfa& d) {
  const std::size_t n = complexity(d);
  return detail::finish(determinize(reverse_nfa(d)), "reverse: subset construction on reversed DFA",
                        detail::saturating([&] { return formulas::max_reversal(n); }));
}

/// Star via the epsilon-free NFA: a new initial and final state s copying
/// the moves of the old initial state, and every move into a final state
/// also leading to the old initial state.
inline Nfa star_nfa(const Dfa& input) {
  const Dfa d = complete(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  const auto s = static_cast<State>(n);
  Nfa out(n + 1, d.alphabet());
  for (std::size_t q = 0; q < n; ++q) {
    const auto p = static_cast<State>(q);
    for (std::size_t i = 0; i < k; ++i) {
      const State t = d.next(p, i);
      out.add_transition(p, i, t);
      if (d.is_final(t)) out.add_transition(p, i, d.initial());
    }
    if (d.is_final(p)) out.set_final(p);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const State t = d.next(d.initial(), i);
    out.add_transition(s, i, t);
    if (d.is_final(t)) out.add_transition(s, i, d.initial());
  }
  out.set_initial(s);
  out.set_final(s);
  return out;
}

inline OpResult star(const Dfa& d) {
  const std::size_t n = complexity(d);
  return detail::finish(determinize(star_nfa(d)), "star: new initial final state plus feedback to initial",
                        detail::saturating([&] { return formulas::max_star(n); }));
}

/// Epsilon-free product NFA. States 0..m-1 are the first automaton, m..m+n-1
/// the second. In unrestricted mode each operand keeps only its own
/// letters, so a letter foreign to the first operand drops that component.
inline Nfa concat_nfa(const Dfa& first, const Dfa& second, AlphabetMode mode) {
  if (mode == AlphabetMode::restricted && first.alphabet() != second.alphabet()) {
    throw alphabet_error("concat: restricted mode needs identical alphabets, got \"" +
                         std::string(first.alphabet().letters()) + "\" and \"" +
                         std::string(second.alphabet().letters()) + "\"");
  }
  const Dfa d1 = complete(first);
  const Dfa d2 = complete(second);
  const Alphabet sigma = merge(d1.alphabet(), d2.alphabet());
  const std::size_t m = d1.state_count();
  const std::size_t n = d2.state_count();
  const auto offset = static_cast<State>(m);
  const State second_start = d2.initial() + offset;

  Nfa out(m + n, sigma);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::size_t i1 = d1.alphabet().index_of(sigma[i]);
    const std::size_t i2 = d2.alphabet().index_of(sigma[i]);
    if (i1 != Alphabet::npos) {
      for (std::size_t q = 0; q < m; ++q) {
        const auto p = static_cast<State>(q);
        const State t = d1.next(p, i1);
        out.add_transition(p, i, t);
        if (d1.is_final(t)) out.add_transition(p, i, second_start);
      }
    }
    if (i2 != Alphabet::npos) {
      for (std::size_t q = 0; q < n; ++q)
        out.add_transition(static_cast<State>(q) + offset, i, d2.next(static_cast<State>(q), i2) + offset);
    }
  }
  out.set_initial(d1.initial());
  if (d1.is_final(d1.initial())) out.set_initial(second_start);
  for (std::size_t q = 0; q < n; ++q)
    if (d2.is_final(static_cast<State>(q))) out.set_final(static_cast<State>(q) + offset);
  return out;
}

inline OpResult concat(const Dfa& first, const Dfa& second, AlphabetMode mode) {
  const std::size_t m = complexity(first);
  const std::size_t n = complexity(second);
  const auto bound = detail::saturating([&] {
    return mode == AlphabetMode::restricted ? formulas::max_product(m, n) : formulas::max_product_unrestricted(m, n);
  });
  return detail::finish(determinize(concat_nfa(first, second, mode)),
                        std::string("concat (") + std::string(to_string(mode)) + "): epsilon-free product NFA", bound);
}

/// Reachable part of the direct product, final where op holds. In
/// unrestricted mode both operands are first completed over the union
/// alphabet with empty states.
inline Dfa product_dfa(const Dfa& first, const Dfa& second, BoolOp op, AlphabetMode mode) {
  if (mode == AlphabetMode::restricted && first.alphabet() != second.alphabet()) {
    throw alphabet_error("boolean: restricted mode needs identical alphabets, got \"" +
                         std::string(first.alphabet().letters()) + "\" and \"" +
                         std::string(second.alphabet().letters()) + "\"");
  }
  const Alphabet sigma = merge(first.alphabet(), second.alphabet());
  const Dfa d1 = complete(first, sigma);
  const Dfa d2 = complete(second, sigma);
  const std::size_t k = sigma.size();
  const std::size_t n2 = d2.state_count();

  std::vector<std::pair<State, State>> pairs{{d1.initial(), d2.initial()}};
  std::unordered_map<std::size_t, State> index{
      {static_cast<std::size_t>(d1.initial()) * n2 + static_cast<std::size_t>(d2.initial()), 0}};
  std::vector<State> table;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [p, q] = pairs[j];
    for (std::size_t i = 0; i < k; ++i) {
      const State p2 = d1.next(p, i);
      const State q2 = d2.next(q, i);
      const std::size_t key = static_cast<std::size_t>(p2) * n2 + static_cast<std::size_t>(q2);
      auto [it, inserted] = index.try_emplace(key, static_cast<State>(pairs.size()));
      if (inserted) pairs.emplace_back(p2, q2);
      table.push_back(it->second);
    }
  }
  std::vector<State> finals;
  for (std::size_t j = 0; j < pairs.size(); ++j)
    if (op(d1.is_final(pairs[j].first), d2.is_final(pairs[j].second))) finals.push_back(static_cast<State>(j));
  return Dfa(pairs.size(), sigma, std::move(table), 0, finals);
}

inline OpResult boolean(const Dfa& first, const Dfa& second, BoolOp op, AlphabetMode mode) {
  const std::size_t m = complexity(first);
  const std::size_t n = complexity(second);
  const auto bound = detail::saturating([&] {
    return mode == AlphabetMode::restricted ? formulas::max_boolean(m, n) : formulas::max_boolean_unrestricted(m, n);
  });
  return detail::finish(product_dfa(first, second, op, mode),
                        std::string(op.name()) + " (" + std::string(to_string(mode)) + "): direct product", bound);
}

}  // namespace ufc
