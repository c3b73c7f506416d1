#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"

namespace ufc {

namespace detail {

// Hopcroft partition refinement over a complete DFA whose states are all
// reachable. Returns the block index of every state.
inline std::vector<std::size_t> coarsest_partition(const Dfa& d, std::size_t& block_count) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();

  // Inverse transitions in CSR form, one segment per (letter, target).
  std::vector<std::size_t> inv_start(k * (n + 1) + 1, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < k; ++i)
      ++inv_start[i * (n + 1) + static_cast<std::size_t>(d.next(static_cast<State>(q), i)) + 1];
  for (std::size_t j = 1; j < inv_start.size(); ++j) inv_start[j] += inv_start[j - 1];
  std::vector<State> inv_src(n * k);
  {
    std::vector<std::size_t> fill(inv_start.begin(), inv_start.end() - 1);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < k; ++i)
        inv_src[fill[i * (n + 1) + static_cast<std::size_t>(d.next(static_cast<State>(q), i))]++] =
            static_cast<State>(q);
  }

  std::vector<State> elems;
  elems.reserve(n);
  for (std::size_t q = 0; q < n; ++q)
    if (d.is_final(static_cast<State>(q))) elems.push_back(static_cast<State>(q));
  const std::size_t final_count = elems.size();
  for (std::size_t q = 0; q < n; ++q)
    if (!d.is_final(static_cast<State>(q))) elems.push_back(static_cast<State>(q));

  std::vector<std::size_t> loc(n), block(n);
  std::vector<std::size_t> first, last, marked;
  auto open_block = [&](std::size_t from, std::size_t to) {
    first.push_back(from);
    last.push_back(to);
    marked.push_back(0);
    for (std::size_t j = from; j < to; ++j) block[static_cast<std::size_t>(elems[j])] = first.size() - 1;
  };
  for (std::size_t j = 0; j < n; ++j) loc[static_cast<std::size_t>(elems[j])] = j;
  if (final_count > 0) open_block(0, final_count);
  if (final_count < n) open_block(final_count, n);

  std::vector<std::size_t> waiting;
  std::vector<char> in_waiting(first.size(), 0);
  if (first.size() == 2) {
    std::size_t smaller = (last[0] - first[0] <= last[1] - first[1]) ? 0 : 1;
    waiting.push_back(smaller);
    in_waiting[smaller] = 1;
  }

  std::vector<State> splitter;
  std::vector<std::size_t> touched;
  while (!waiting.empty()) {
    const std::size_t b = waiting.back();
    waiting.pop_back();
    in_waiting[b] = 0;
    splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(first[b]),
                    elems.begin() + static_cast<std::ptrdiff_t>(last[b]));

    for (std::size_t i = 0; i < k; ++i) {
      touched.clear();
      for (State s : splitter) {
        const std::size_t seg = i * (n + 1) + static_cast<std::size_t>(s);
        for (std::size_t j = inv_start[seg]; j < inv_start[seg + 1]; ++j) {
          const auto p = static_cast<std::size_t>(inv_src[j]);
          const std::size_t y = block[p];
          const std::size_t boundary = first[y] + marked[y];
          if (loc[p] < boundary) continue;
          const State other = elems[boundary];
          std::swap(elems[boundary], elems[loc[p]]);
          loc[static_cast<std::size_t>(other)] = loc[p];
          loc[p] = boundary;
          if (marked[y]++ == 0) touched.push_back(y);
        }
      }
      for (std::size_t y : touched) {
        const std::size_t m = marked[y];
        marked[y] = 0;
        if (m == last[y] - first[y]) continue;
        const std::size_t z = first.size();
        const std::size_t split_at = first[y] + m;
        open_block(first[y], split_at);
        first[y] = split_at;
        in_waiting.push_back(0);
        if (in_waiting[y]) {
          waiting.push_back(z);
          in_waiting[z] = 1;
        } else {
          const std::size_t pick = (m <= last[y] - first[y]) ? z : y;
          waiting.push_back(pick);
          in_waiting[pick] = 1;
        }
      }
    }
  }
  block_count = first.size();
  return block;
}

}  // namespace detail

/// Minimal complete DFA for L(d), canonically numbered (breadth-first from
/// the initial state, letters in alphabet order). Partial input is
/// completed over its own alphabet first.
inline Dfa minimize(const Dfa& input) {
  const Dfa d = canonicalize(complete(input));
  std::size_t blocks = 0;
  const auto block = detail::coarsest_partition(d, blocks);
  const std::size_t k = d.alphabet().size();
  Dfa quotient(blocks, d.alphabet(), static_cast<State>(block[static_cast<std::size_t>(d.initial())]));
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    const auto s = static_cast<State>(block[q]);
    for (std::size_t i = 0; i < k; ++i)
      quotient.set_transition(s, i, static_cast<State>(block[static_cast<std::size_t>(d.next(static_cast<State>(q), i))]));
    if (d.is_final(static_cast<State>(q))) quotient.set_final(s);
  }
  return canonicalize(quotient);
}

/// State complexity: the number of states of the minimal complete DFA.
inline std::size_t complexity(const Dfa& d) { return minimize(d).state_count(); }

/// Complete, all states reachable, and no two states equivalent.
inline bool is_minimal(const Dfa& d) {
  return d.is_complete() && reachable_count(d) == d.state_count() &&
         complexity(d) == d.state_count();
}

/// Both inputs must be minimal and complete.
inline bool isomorphic(const Dfa& x, const Dfa& y) {
  if (!is_minimal(x) || !is_minimal(y)) throw precondition_error("isomorphic: inputs must be minimal complete DFAs");
  return canonicalize(x) == canonicalize(y);
}

}  // namespace ufc
