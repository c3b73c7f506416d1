#pragma once

// Slow reference implementations for the test suite. Nothing here calls
// into the library's algorithms; only the Dfa container is shared.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/nfa.hpp"
#include "ufc/regex.hpp"

namespace oracle {

using Lang = std::function<bool(std::string_view)>;

/// All words over sigma of length <= max_len, shortlex order.
inline std::vector<std::string> words_upto(std::string_view sigma, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 0; len < max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : sigma) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

/// Walks the table; undefined moves and foreign letters reject.
inline bool member(const ufc::Dfa& d, std::string_view w) {
  long q = d.initial();
  const std::string_view sigma = d.alphabet().letters();
  for (char c : w) {
    const auto pos = sigma.find(c);
    if (pos == std::string_view::npos) return false;
    q = d.next(static_cast<ufc::State>(q), pos);
    if (q < 0) return false;
  }
  return d.is_final(static_cast<ufc::State>(q));
}

/// Direct simulation of the witness: roles[c] is 'a'..'d' for the role
/// letter c plays.
struct Witness {
  int n;
  std::map<char, char> roles;

  static Witness of(int n, std::string_view dialect) {
    Witness w{n, {}};
    char role = 'a';
    for (std::size_t i = 0; i < dialect.size(); ++i) {
      if (dialect[i] == ',') {
        ++role;
      } else if (dialect[i] != '-') {
        w.roles[dialect[i]] = role;
      }
    }
    return w;
  }

  int step(int q, char c) const {
    switch (roles.at(c)) {
      case 'a':
        return q == 0 ? 0 : (q + 1 < n ? q + 1 : 1);
      case 'b':
        return q == 0 ? 1 : (q == 1 ? 0 : q);
      case 'c':
        return q == 1 ? 0 : q;
      default:
        return q;
    }
  }

  bool accepts(std::string_view w) const {
    int q = 0;
    for (char c : w) {
      if (!roles.count(c)) return false;
      q = step(q, c);
    }
    return q == n - 1;
  }
};

inline bool in_concat(const Lang& x, const Lang& y, std::string_view w) {
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (x(w.substr(0, k)) && y(w.substr(k))) return true;
  return false;
}

inline bool in_star(const Lang& x, std::string_view w) {
  std::vector<char> ok(w.size() + 1, 0);
  ok[0] = 1;
  for (std::size_t j = 1; j <= w.size(); ++j)
    for (std::size_t i = 0; i < j && !ok[j]; ++i)
      if (ok[i] && x(w.substr(i, j - i))) ok[j] = 1;
  return ok[w.size()];
}

/// Number of states of the minimal complete DFA of a language given by a
/// deterministic state machine over sigma: explores the reachable states
/// and runs Moore's refinement.
template <class S, class Step, class Final>
std::size_t machine_complexity(S start, std::string_view sigma, Step step, Final is_final) {
  std::map<S, std::size_t> index{{start, 0}};
  std::vector<S> states{start};
  std::vector<std::vector<std::size_t>> delta;
  for (std::size_t j = 0; j < states.size(); ++j) {
    std::vector<std::size_t> row;
    for (char c : sigma) {
      S t = step(states[j], c);
      auto [it, fresh] = index.try_emplace(t, states.size());
      if (fresh) states.push_back(t);
      row.push_back(it->second);
    }
    delta.push_back(row);
  }
  std::vector<std::size_t> cls(states.size());
  for (std::size_t j = 0; j < states.size(); ++j) cls[j] = is_final(states[j]) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
      std::vector<std::size_t> key{cls[j]};
      for (auto t : delta[j]) key.push_back(cls[t]);
      next[j] = sig.try_emplace(key, sig.size()).first->second;
    }
    if (sig.size() == count) break;
    count = sig.size();
    cls = next;
  }
  return count;
}

/// Complexity of a DFA's language over the given alphabet (a superset of
/// the DFA's own); foreign letters and undefined moves go to a sink.
inline std::size_t complexity(const ufc::Dfa& d, std::string_view sigma) {
  const std::string_view own = d.alphabet().letters();
  return machine_complexity(
      long{d.initial()}, sigma,
      [&](long q, char c) -> long {
        if (q < 0) return -1;
        const auto pos = own.find(c);
        return pos == std::string_view::npos ? -1 : d.next(static_cast<ufc::State>(q), pos);
      },
      [&](long q) { return q >= 0 && d.is_final(static_cast<ufc::State>(q)); });
}

inline std::size_t complexity(const ufc::Dfa& d) { return complexity(d, d.alphabet().letters()); }

/// Myhill-Nerode classes of a membership predicate, separating prefixes
/// up to prefix_len by suffixes up to suffix_len. A lower bound on the
/// complexity that is exact once the lengths are large enough.
inline std::size_t nerode_classes(const Lang& lang, std::string_view sigma, std::size_t prefix_len,
                                  std::size_t suffix_len) {
  const auto prefixes = words_upto(sigma, prefix_len);
  const auto suffixes = words_upto(sigma, suffix_len);
  std::set<std::vector<bool>> rows;
  for (const auto& p : prefixes) {
    std::vector<bool> row;
    row.reserve(suffixes.size());
    for (const auto& s : suffixes) row.push_back(lang(p + s));
    rows.insert(std::move(row));
  }
  return rows.size();
}

/// Subset construction on reversed transitions, starting from `starts`;
/// returns a complete DFA over d's alphabet whose finals are the subsets
/// containing `accept`.
inline ufc::Dfa reverse_determinize(const ufc::Dfa& d, const std::set<int>& starts, int accept) {
  const std::size_t k = d.alphabet().size();
  std::map<std::set<int>, int> index{{starts, 0}};
  std::vector<std::set<int>> subsets{starts};
  std::vector<ufc::State> table;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      std::set<int> pre;
      for (std::size_t p = 0; p < d.state_count(); ++p) {
        const auto t = d.next(static_cast<ufc::State>(p), i);
        if (t >= 0 && subsets[j].count(t)) pre.insert(static_cast<int>(p));
      }
      auto [it, fresh] = index.try_emplace(pre, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(pre);
      table.push_back(it->second);
    }
  }
  std::vector<ufc::State> finals;
  for (std::size_t j = 0; j < subsets.size(); ++j)
    if (subsets[j].count(accept)) finals.push_back(static_cast<ufc::State>(j));
  return ufc::Dfa(subsets.size(), d.alphabet(), std::move(table), 0, finals);
}

/// Brzozowski minimization: determinize the reverse twice.
inline ufc::Dfa brzozowski(const ufc::Dfa& d) {
  std::set<int> finals;
  for (std::size_t q = 0; q < d.state_count(); ++q)
    if (d.is_final(static_cast<ufc::State>(q))) finals.insert(static_cast<int>(q));
  const ufc::Dfa once = reverse_determinize(d, finals, d.initial());
  std::set<int> once_finals;
  for (std::size_t q = 0; q < once.state_count(); ++q)
    if (once.is_final(static_cast<ufc::State>(q))) once_finals.insert(static_cast<int>(q));
  return reverse_determinize(once, once_finals, once.initial());
}

/// Subset construction over std::set, with no bound on the NFA size.
inline ufc::Dfa determinize(const ufc::Nfa& a) {
  const std::size_t k = a.alphabet().size();
  std::set<int> start;
  for (std::size_t q = 0; q < a.state_count(); ++q)
    if (a.is_initial(static_cast<ufc::State>(q))) start.insert(static_cast<int>(q));
  std::map<std::set<int>, int> index{{start, 0}};
  std::vector<std::set<int>> subsets{start};
  std::vector<ufc::State> table;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      std::set<int> next;
      for (int q : subsets[j])
        for (auto t : a.next(static_cast<ufc::State>(q), i)) next.insert(static_cast<int>(t));
      auto [it, fresh] = index.try_emplace(next, static_cast<int>(subsets.size()));
      if (fresh) subsets.push_back(next);
      table.push_back(it->second);
    }
  }
  std::vector<ufc::State> finals;
  for (std::size_t j = 0; j < subsets.size(); ++j)
    for (int q : subsets[j])
      if (a.is_final(static_cast<ufc::State>(q))) {
        finals.push_back(static_cast<ufc::State>(j));
        break;
      }
  return ufc::Dfa(subsets.size(), a.alphabet(), std::move(table), 0, finals);
}

/// Isomorphism of complete, fully reachable DFAs by walking both in step.
inline bool isomorphic(const ufc::Dfa& x, const ufc::Dfa& y) {
  if (x.state_count() != y.state_count() || x.alphabet() != y.alphabet()) return false;
  std::vector<long> map(x.state_count(), -1), back(y.state_count(), -1);
  std::deque<std::pair<long, long>> queue{{x.initial(), y.initial()}};
  map[static_cast<std::size_t>(x.initial())] = y.initial();
  back[static_cast<std::size_t>(y.initial())] = x.initial();
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    if (x.is_final(static_cast<ufc::State>(p)) != y.is_final(static_cast<ufc::State>(q))) return false;
    for (std::size_t i = 0; i < x.alphabet().size(); ++i) {
      const long s = x.next(static_cast<ufc::State>(p), i), t = y.next(static_cast<ufc::State>(q), i);
      if (s < 0 || t < 0) return false;
      if (map[static_cast<std::size_t>(s)] == -1 && back[static_cast<std::size_t>(t)] == -1) {
        map[static_cast<std::size_t>(s)] = t;
        back[static_cast<std::size_t>(t)] = s;
        queue.emplace_back(s, t);
      } else if (map[static_cast<std::size_t>(s)] != t || back[static_cast<std::size_t>(t)] != s) {
        return false;
      }
    }
  }
  return true;
}

/// Random complete DFA with 1..max_states states over the first 1..max_letters
/// letters of "abc...".
inline ufc::Dfa random_dfa(std::mt19937& rng, std::size_t max_states = 6, std::size_t max_letters = 3) {
  std::uniform_int_distribution<std::size_t> ns(1, max_states), ks(1, max_letters);
  const std::size_t n = ns(rng), k = ks(rng);
  std::uniform_int_distribution<int> target(0, static_cast<int>(n) - 1), coin(0, 1);
  std::vector<ufc::State> table(n * k);
  for (auto& t : table) t = target(rng);
  std::vector<ufc::State> finals;
  for (std::size_t q = 0; q < n; ++q)
    if (coin(rng)) finals.push_back(static_cast<ufc::State>(q));
  return ufc::Dfa(n, ufc::Alphabet(std::string("abcdef").substr(0, k)), std::move(table), 0, finals);
}

using Images = std::vector<std::uint32_t>;

template <class Range>
Images vec(const Range& r) {
  return Images(r.begin(), r.end());
}

/// Semigroup generated by the given transformations (right action, q(st) = (qs)t).
inline std::set<Images> closure(const std::vector<Images>& gens) {
  std::set<Images> seen(gens.begin(), gens.end());
  std::deque<Images> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Images s = queue.front();
    queue.pop_front();
    for (const auto& t : gens) {
      Images st(s.size());
      for (std::size_t q = 0; q < s.size(); ++q) st[q] = t[s[q]];
      if (seen.insert(st).second) queue.push_back(st);
    }
  }
  return seen;
}

/// Random binary expression over {a,b,c} in which every union sits below a star.
inline ufc::Regex random_starred(std::mt19937& rng, int depth, bool starred) {
  using ufc::Regex;
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 3), letter(0, 2);
  auto parts = [&](int sub_depth, bool sub_starred) {
    std::vector<Regex> out;
    for (int k = 0; k < 2; ++k) out.push_back(random_starred(rng, sub_depth, sub_starred));
    return out;
  };
  switch (kind(rng)) {
    case 0:
      return Regex::letter(static_cast<char>('a' + letter(rng)));
    case 1:
      return Regex::cat(parts(depth - 1, starred));
    case 2:
      if (starred) return Regex::alt(parts(depth - 1, true));
      [[fallthrough]];
    default:
      return Regex::star(Regex::alt(parts(depth - 1, true)));
  }
}

}  // namespace oracle
