#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ufc/alphabet.hpp"
#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/state_set.hpp"

namespace ufc {

/// Epsilon-free nondeterministic automaton with a set of initial states.
class Nfa {
 public:
  Nfa(std::size_t state_count, Alphabet alphabet)
      : n_(state_count),
        alphabet_(std::move(alphabet)),
        table_(state_count * alphabet_.size()),
        initial_(state_count, 0),
        final_(state_count, 0) {
    if (n_ == 0) throw precondition_error("nfa: state count must be positive");
  }

  /// The NFA with the same transitions as d (partial moves stay absent).
  static Nfa from_dfa(const Dfa& d) {
    Nfa out(d.state_count(), d.alphabet());
    for (std::size_t q = 0; q < d.state_count(); ++q) {
      const auto s = static_cast<State>(q);
      for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
        if (State t = d.next(s, i); t != no_state) out.add_transition(s, i, t);
      }
      if (d.is_final(s)) out.set_final(s);
    }
    out.set_initial(d.initial());
    return out;
  }

  std::size_t state_count() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }

  /// Sorted successor list.
  const std::vector<State>& next(State q, std::size_t letter_index) const {
    return table_[static_cast<std::size_t>(q) * alphabet_.size() + letter_index];
  }

  bool is_initial(State q) const { return initial_[static_cast<std::size_t>(q)] != 0; }
  bool is_final(State q) const { return final_[static_cast<std::size_t>(q)] != 0; }

  std::vector<State> initials() const { return collect(initial_); }
  std::vector<State> finals() const { return collect(final_); }

  void add_transition(State from, std::size_t letter_index, State to) {
    check_state(from);
    check_state(to);
    if (letter_index >= alphabet_.size()) throw alphabet_error("nfa: letter index out of range");
    auto& cell = table_[static_cast<std::size_t>(from) * alphabet_.size() + letter_index];
    auto it = std::lower_bound(cell.begin(), cell.end(), to);
    if (it == cell.end() || *it != to) cell.insert(it, to);
  }

  void add_transition(State from, Letter c, State to) {
    auto i = alphabet_.index_of(c);
    if (i == Alphabet::npos) throw alphabet_error(std::string("nfa: letter '") + c + "' not in alphabet");
    add_transition(from, i, to);
  }

  void set_initial(State q, bool value = true) {
    check_state(q);
    initial_[static_cast<std::size_t>(q)] = value ? 1 : 0;
  }

  void set_final(State q, bool value = true) {
    check_state(q);
    final_[static_cast<std::size_t>(q)] = value ? 1 : 0;
  }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  void check_state(State q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= n_) {
      throw precondition_error("nfa: state " + std::to_string(q) + " out of range for " +
                               std::to_string(n_) + " states");
    }
  }

  static std::vector<State> collect(const std::vector<char>& flags) {
    std::vector<State> out;
    for (std::size_t q = 0; q < flags.size(); ++q)
      if (flags[q]) out.push_back(static_cast<State>(q));
    return out;
  }

  std::size_t n_;
  Alphabet alphabet_;
  std::vector<std::vector<State>> table_;
  std::vector<char> initial_;
  std::vector<char> final_;
};

/// Foreign letters yield the empty successor set.
inline bool accepts(const Nfa& a, std::string_view w) {
  std::vector<char> current(a.state_count(), 0), next(a.state_count(), 0);
  for (State q : a.initials()) current[static_cast<std::size_t>(q)] = 1;
  for (char c : w) {
    std::fill(next.begin(), next.end(), 0);
    auto i = a.alphabet().index_of(c);
    if (i == Alphabet::npos) return false;
    for (std::size_t q = 0; q < current.size(); ++q) {
      if (!current[q]) continue;
      for (State t : a.next(static_cast<State>(q), i)) next[static_cast<std::size_t>(t)] = 1;
    }
    current.swap(next);
  }
  for (std::size_t q = 0; q < current.size(); ++q)
    if (current[q] && a.is_final(static_cast<State>(q))) return true;
  return false;
}

/// Default bound on the number of subsets a determinization may produce.
inline constexpr std::size_t default_subset_limit = std::size_t{1} << 24;

/// Accessible subset construction. The result is complete over the NFA's
/// alphabet; state 0 is the initial subset and the rest are numbered in
/// breadth-first discovery order with letters in alphabet order.
inline Dfa determinize(const Nfa& a, std::size_t subset_limit = default_subset_limit) {
  const auto n = a.state_count();
  const auto k = a.alphabet().size();
  if (n > StateSet::capacity) {
    throw capacity_error("determinize: " + std::to_string(n) + " states exceed the subset capacity of " +
                         std::to_string(StateSet::capacity));
  }

  std::vector<std::uint64_t> step(n * k, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < k; ++i)
      for (State t : a.next(static_cast<State>(q), i)) step[q * k + i] |= std::uint64_t{1} << t;
  std::uint64_t final_mask = 0;
  StateSet start;
  for (std::size_t q = 0; q < n; ++q) {
    if (a.is_final(static_cast<State>(q))) final_mask |= std::uint64_t{1} << q;
    if (a.is_initial(static_cast<State>(q))) start.insert(q);
  }

  std::vector<std::uint64_t> subsets{start.bits()};
  std::unordered_map<std::uint64_t, State> index{{start.bits(), 0}};
  std::vector<State> table;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    const StateSet current(subsets[j]);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t target = 0;
      current.for_each([&](std::size_t q) { target |= step[q * k + i]; });
      auto [it, inserted] = index.try_emplace(target, static_cast<State>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= subset_limit) {
          throw capacity_error("determinize: more than " + std::to_string(subset_limit) + " subsets");
        }
        subsets.push_back(target);
      }
      table.push_back(it->second);
    }
  }

  std::vector<State> finals;
  for (std::size_t j = 0; j < subsets.size(); ++j)
    if (subsets[j] & final_mask) finals.push_back(static_cast<State>(j));
  return Dfa(subsets.size(), a.alphabet(), std::move(table), 0, finals);
}

}  // namespace ufc
