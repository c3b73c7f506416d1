#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/minimize.hpp"

namespace ufc {

/// Shortest word in the symmetric difference of the two languages, ties
/// broken by alphabet order; nullopt when the languages are equal. Both
/// automata are completed over the union of their alphabets first.
inline std::optional<Word> equivalent(const Dfa& x, const Dfa& y) {
  const Alphabet sigma = merge(x.alphabet(), y.alphabet());
  const Dfa a = complete(x, sigma);
  const Dfa b = complete(y, sigma);
  const std::size_t k = sigma.size();
  const std::size_t nb = b.state_count();

  struct Visit {
    std::size_t parent;
    std::size_t letter;
  };
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::vector<std::size_t> seen(a.state_count() * nb, root);
  std::vector<std::pair<State, State>> pairs;
  std::vector<Visit> visits;

  auto word_of = [&](std::size_t j) {
    Word w;
    for (; visits[j].parent != root; j = visits[j].parent) w.push_back(sigma[visits[j].letter]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto discover = [&](State p, State q, std::size_t parent, std::size_t letter) -> std::optional<Word> {
    auto& slot = seen[static_cast<std::size_t>(p) * nb + static_cast<std::size_t>(q)];
    if (slot != root) return std::nullopt;
    slot = pairs.size();
    pairs.emplace_back(p, q);
    visits.push_back({parent, letter});
    if (a.is_final(p) != b.is_final(q)) return word_of(pairs.size() - 1);
    return std::nullopt;
  };

  if (auto w = discover(a.initial(), b.initial(), root, 0)) return w;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [p, q] = pairs[j];
    for (std::size_t i = 0; i < k; ++i) {
      if (auto w = discover(a.next(p, i), b.next(q, i), j, i)) return w;
    }
  }
  return std::nullopt;
}

/// The DFA for w^{-1}L(d): d with its initial state moved along w.
inline Dfa quotient(const Dfa& d, std::string_view w) {
  if (!d.is_complete()) throw precondition_error("quotient: DFA must be complete");
  for (char c : w) {
    if (!d.alphabet().contains(c)) throw alphabet_error(std::string("quotient: letter '") + c + "' not in alphabet");
  }
  Dfa out = d;
  out.set_initial(run(d, d.initial(), w));
  return out;
}

/// Complexity of the language of every reachable state, listed in
/// increasing state order.
inline std::vector<std::size_t> quotient_complexities(const Dfa& d) {
  if (!d.is_complete()) throw precondition_error("quotient_complexities: DFA must be complete");
  std::vector<char> reachable(d.state_count(), 0);
  std::deque<State> queue{d.initial()};
  reachable[static_cast<std::size_t>(d.initial())] = 1;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
      State t = d.next(q, i);
      if (!reachable[static_cast<std::size_t>(t)]) {
        reachable[static_cast<std::size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  std::vector<std::size_t> out;
  Dfa moved = d;
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    if (!reachable[q]) continue;
    moved.set_initial(static_cast<State>(q));
    out.push_back(complexity(moved));
  }
  return out;
}

/// Letters occurring in some word of L(d): letters on a move from a
/// reachable state into a state that can still reach a final state.
inline Alphabet language_alphabet(const Dfa& d) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  std::vector<char> reachable(n, 0), live(n, 0);
  std::deque<State> queue{d.initial()};
  reachable[static_cast<std::size_t>(d.initial())] = 1;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      const State t = d.next(q, i);
      if (t != no_state && !reachable[static_cast<std::size_t>(t)]) {
        reachable[static_cast<std::size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  for (State f : d.finals()) live[static_cast<std::size_t>(f)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (live[q]) continue;
      for (std::size_t i = 0; i < k && !live[q]; ++i) {
        const State t = d.next(static_cast<State>(q), i);
        if (t != no_state && live[static_cast<std::size_t>(t)]) live[q] = grew = true;
      }
    }
  }
  std::string letters;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      const State t = d.next(static_cast<State>(q), i);
      if (reachable[q] && t != no_state && live[static_cast<std::size_t>(t)]) {
        letters += d.alphabet()[i];
        break;
      }
    }
  }
  return Alphabet(letters);
}

/// d with every letter outside `sub` removed; `sub` must be a subset of the
/// alphabet of d.
inline Dfa restrict_alphabet(const Dfa& d, const Alphabet& sub) {
  if (!d.alphabet().includes(sub)) throw alphabet_error("restrict_alphabet: letters outside the alphabet");
  Dfa out(d.state_count(), sub, d.initial());
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    const auto p = static_cast<State>(q);
    for (std::size_t i = 0; i < sub.size(); ++i) out.set_transition(p, i, d.next_on(p, sub[i]));
    out.set_final(p, d.is_final(p));
  }
  return out;
}

/// Complexity of L(d) taken over the alphabet of the language itself, so
/// letters that occur in no accepted word do not cost an empty state.
inline std::size_t language_complexity(const Dfa& d) {
  return complexity(restrict_alphabet(d, language_alphabet(d)));
}

}  // namespace ufc
