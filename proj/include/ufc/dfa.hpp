#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/alphabet.hpp"
#include "ufc/error.hpp"

namespace ufc {

using State = std::int32_t;

/// Marks an undefined transition of a partial DFA.
inline constexpr State no_state = -1;

/// Deterministic automaton, possibly partial, over an ordered alphabet.
///
/// States are 0..state_count()-1. The transition table is row-major:
/// one row per state, one column per letter index of the alphabet.
class Dfa {
 public:
  Dfa(std::size_t state_count, Alphabet alphabet, State initial = 0)
      : n_(state_count),
        alphabet_(std::move(alphabet)),
        table_(state_count * alphabet_.size(), no_state),
        final_(state_count, 0),
        initial_(initial) {
    if (n_ == 0) throw precondition_error("dfa: state count must be positive");
    check_state(initial, "initial state");
  }

  Dfa(std::size_t state_count, Alphabet alphabet, std::vector<State> table, State initial,
      const std::vector<State>& finals)
      : Dfa(state_count, std::move(alphabet), initial) {
    if (table.size() != table_.size()) {
      throw precondition_error("dfa: transition table has " + std::to_string(table.size()) +
                               " entries, expected " + std::to_string(table_.size()));
    }
    for (State t : table) {
      if (t != no_state) check_state(t, "transition target");
    }
    table_ = std::move(table);
    for (State f : finals) set_final(f);
  }

  std::size_t state_count() const { return n_; }
  const Alphabet& alphabet() const { return alphabet_; }
  State initial() const { return initial_; }

  State next(State q, std::size_t letter_index) const {
    return table_[static_cast<std::size_t>(q) * alphabet_.size() + letter_index];
  }

  /// Target on letter c, or no_state if c is foreign or undefined.
  State next_on(State q, Letter c) const {
    auto i = alphabet_.index_of(c);
    return i == Alphabet::npos ? no_state : next(q, i);
  }

  bool is_final(State q) const { return final_[static_cast<std::size_t>(q)] != 0; }

  std::vector<State> finals() const {
    std::vector<State> out;
    for (std::size_t q = 0; q < n_; ++q)
      if (final_[q]) out.push_back(static_cast<State>(q));
    return out;
  }

  bool is_complete() const {
    for (State t : table_)
      if (t == no_state) return false;
    return true;
  }

  void set_transition(State from, std::size_t letter_index, State to) {
    check_state(from, "transition source");
    if (to != no_state) check_state(to, "transition target");
    if (letter_index >= alphabet_.size()) throw alphabet_error("dfa: letter index out of range");
    table_[static_cast<std::size_t>(from) * alphabet_.size() + letter_index] = to;
  }

  void set_transition(State from, Letter c, State to) {
    auto i = alphabet_.index_of(c);
    if (i == Alphabet::npos) throw alphabet_error(std::string("dfa: letter '") + c + "' not in alphabet");
    set_transition(from, i, to);
  }

  void set_final(State q, bool value = true) {
    check_state(q, "final state");
    final_[static_cast<std::size_t>(q)] = value ? 1 : 0;
  }

  void set_initial(State q) {
    check_state(q, "initial state");
    initial_ = q;
  }

  const std::vector<State>& table() const { return table_; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  void check_state(State q, const char* what) const {
    if (q < 0 || static_cast<std::size_t>(q) >= n_) {
      throw precondition_error(std::string("dfa: ") + what + " " + std::to_string(q) +
                               " out of range for " + std::to_string(n_) + " states");
    }
  }

  std::size_t n_;
  Alphabet alphabet_;
  std::vector<State> table_;
  std::vector<char> final_;
  State initial_;
};

/// Runs w from state q; foreign letters and undefined moves give no_state.
inline State run(const Dfa& d, State q, std::string_view w) {
  for (char c : w) {
    if (q == no_state) break;
    q = d.next_on(q, c);
  }
  return q;
}

inline bool accepts(const Dfa& d, std::string_view w) {
  State q = run(d, d.initial(), w);
  return q != no_state && d.is_final(q);
}

/// Completes d over `over`, which must contain d's alphabet. Returns d
/// unchanged when nothing is missing; otherwise appends one non-final sink.
inline Dfa complete(const Dfa& d, const Alphabet& over) {
  if (!over.includes(d.alphabet())) {
    throw alphabet_error("complete: target alphabet \"" + std::string(over.letters()) +
                         "\" does not contain \"" + std::string(d.alphabet().letters()) + "\"");
  }
  if (over == d.alphabet() && d.is_complete()) return d;

  const auto n = d.state_count();
  const auto sink = static_cast<State>(n);
  Dfa out(n + 1, over, d.initial());
  for (std::size_t q = 0; q <= n; ++q) {
    const auto s = static_cast<State>(q);
    for (std::size_t i = 0; i < over.size(); ++i) {
      State t = q < n ? d.next_on(s, over[i]) : sink;
      out.set_transition(s, i, t == no_state ? sink : t);
    }
    if (q < n && d.is_final(s)) out.set_final(s);
  }
  return out;
}

inline Dfa complete(const Dfa& d) { return complete(d, d.alphabet()); }

/// Renumbers the states reachable from the initial state in breadth-first
/// order, exploring letters in alphabet order. Unreachable states are dropped.
inline Dfa canonicalize(const Dfa& d) {
  const auto k = d.alphabet().size();
  std::vector<State> number(d.state_count(), no_state);
  std::vector<State> order;
  std::deque<State> queue{d.initial()};
  number[static_cast<std::size_t>(d.initial())] = 0;
  order.push_back(d.initial());
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      State t = d.next(q, i);
      if (t == no_state || number[static_cast<std::size_t>(t)] != no_state) continue;
      number[static_cast<std::size_t>(t)] = static_cast<State>(order.size());
      order.push_back(t);
      queue.push_back(t);
    }
  }
  Dfa out(order.size(), d.alphabet(), 0);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto s = static_cast<State>(j);
    for (std::size_t i = 0; i < k; ++i) {
      State t = d.next(order[j], i);
      out.set_transition(s, i, t == no_state ? no_state : number[static_cast<std::size_t>(t)]);
    }
    if (d.is_final(order[j])) out.set_final(s);
  }
  return out;
}

inline std::size_t reachable_count(const Dfa& d) { return canonicalize(d).state_count(); }

}  // namespace ufc
