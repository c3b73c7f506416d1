#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/nfa.hpp"

// Automaton interchange format, one JSON object per automaton:
//
//   {"kind":"dfa","states":N,"alphabet":["a","b"],"initial":0,"finals":[..],
//    "transitions":{"a":[t0,...,tN-1],...}}          (-1 = undefined move)
//   {"kind":"nfa","states":N,"alphabet":[..],"initials":[..],"finals":[..],
//    "transitions":{"a":[[..],...],...}}
//
// Writers emit exactly this field order with no whitespace.

namespace ufc {

using Automaton = std::variant<Dfa, Nfa>;

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json alphabet_json(const Alphabet& sigma) {
  auto arr = ordered_json::array();
  for (char c : sigma) arr.push_back(std::string(1, c));
  return arr;
}

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  throw parse_error("interchange: field \"" + field + "\": " + what);
}

inline const ordered_json& require(const ordered_json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) field_error(field, "missing");
  return *it;
}

inline long long as_int(const ordered_json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer, got " + v.dump());
  return v.get<long long>();
}

inline State as_state(const ordered_json& v, const std::string& field, std::size_t n, bool allow_none = false) {
  long long x = as_int(v, field);
  if (allow_none && x == -1) return no_state;
  if (x < 0 || static_cast<std::size_t>(x) >= n)
    field_error(field, "state " + std::to_string(x) + " out of range for " + std::to_string(n) + " states");
  return static_cast<State>(x);
}

inline std::vector<State> as_states(const ordered_json& v, const std::string& field, std::size_t n) {
  if (!v.is_array()) field_error(field, "expected an array");
  std::vector<State> out;
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(as_state(v[j], field + "[" + std::to_string(j) + "]", n));
  return out;
}

inline Alphabet as_alphabet(const ordered_json& v) {
  if (!v.is_array()) field_error("alphabet", "expected an array of one-character strings");
  std::string letters;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& e = v[j];
    if (!e.is_string() || e.get<std::string>().size() != 1)
      field_error("alphabet[" + std::to_string(j) + "]", "expected a one-character string, got " + e.dump());
    letters += e.get<std::string>()[0];
  }
  try {
    return Alphabet(letters);
  } catch (const alphabet_error& e) {
    field_error("alphabet", e.what());
  }
}

inline const ordered_json& row_for(const ordered_json& transitions, char c, std::size_t n) {
  const std::string key(1, c);
  auto it = transitions.find(key);
  if (it == transitions.end()) field_error("transitions." + key, "missing");
  if (!it->is_array() || it->size() != n)
    field_error("transitions." + key, "expected an array of " + std::to_string(n) + " entries");
  return *it;
}

inline void check_transition_keys(const ordered_json& transitions, const Alphabet& sigma) {
  if (!transitions.is_object()) field_error("transitions", "expected an object");
  for (auto it = transitions.begin(); it != transitions.end(); ++it) {
    if (it.key().size() != 1 || !sigma.contains(it.key()[0]))
      field_error("transitions." + it.key(), "letter not in alphabet");
  }
}

}  // namespace detail

inline std::string to_json(const Dfa& d) {
  detail::ordered_json j;
  j["kind"] = "dfa";
  j["states"] = d.state_count();
  j["alphabet"] = detail::alphabet_json(d.alphabet());
  j["initial"] = d.initial();
  j["finals"] = d.finals();
  auto transitions = detail::ordered_json::object();
  for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
    auto row = detail::ordered_json::array();
    for (std::size_t q = 0; q < d.state_count(); ++q) row.push_back(d.next(static_cast<State>(q), i));
    transitions[std::string(1, d.alphabet()[i])] = std::move(row);
  }
  j["transitions"] = std::move(transitions);
  return j.dump();
}

inline std::string to_json(const Nfa& a) {
  detail::ordered_json j;
  j["kind"] = "nfa";
  j["states"] = a.state_count();
  j["alphabet"] = detail::alphabet_json(a.alphabet());
  j["initials"] = a.initials();
  j["finals"] = a.finals();
  auto transitions = detail::ordered_json::object();
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    auto row = detail::ordered_json::array();
    for (std::size_t q = 0; q < a.state_count(); ++q) row.push_back(a.next(static_cast<State>(q), i));
    transitions[std::string(1, a.alphabet()[i])] = std::move(row);
  }
  j["transitions"] = std::move(transitions);
  return j.dump();
}

inline std::string to_json(const Automaton& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

/// Parses either kind; throws parse_error with line/column or field details.
inline Automaton parse_automaton(std::string_view text) {
  detail::ordered_json j;
  try {
    j = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("interchange: malformed JSON at " + detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0) +
                      ": " + e.what());
  }
  if (!j.is_object()) throw parse_error("interchange: top level must be an object");

  const auto& kind = detail::require(j, "kind");
  if (!kind.is_string() || (kind != "dfa" && kind != "nfa"))
    detail::field_error("kind", "expected \"dfa\" or \"nfa\", got " + kind.dump());
  const long long states = detail::as_int(detail::require(j, "states"), "states");
  if (states <= 0) detail::field_error("states", "must be positive");
  const auto n = static_cast<std::size_t>(states);
  const Alphabet sigma = detail::as_alphabet(detail::require(j, "alphabet"));
  const auto& transitions = detail::require(j, "transitions");
  detail::check_transition_keys(transitions, sigma);
  const auto finals = detail::as_states(detail::require(j, "finals"), "finals", n);

  if (kind == "dfa") {
    const State initial = detail::as_state(detail::require(j, "initial"), "initial", n);
    Dfa d(n, sigma, initial);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const std::string key(1, sigma[i]);
      const auto& row = detail::row_for(transitions, sigma[i], n);
      for (std::size_t q = 0; q < n; ++q)
        d.set_transition(static_cast<State>(q), i,
                         detail::as_state(row[q], "transitions." + key + "[" + std::to_string(q) + "]", n, true));
    }
    for (State f : finals) d.set_final(f);
    return d;
  }
  Nfa a(n, sigma);
  for (State q : detail::as_states(detail::require(j, "initials"), "initials", n)) a.set_initial(q);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::string key(1, sigma[i]);
    const auto& row = detail::row_for(transitions, sigma[i], n);
    for (std::size_t q = 0; q < n; ++q)
      for (State t : detail::as_states(row[q], "transitions." + key + "[" + std::to_string(q) + "]", n))
        a.add_transition(static_cast<State>(q), i, t);
  }
  for (State f : finals) a.set_final(f);
  return a;
}

inline Dfa parse_dfa(std::string_view text) {
  auto a = parse_automaton(text);
  if (auto* d = std::get_if<Dfa>(&a)) return std::move(*d);
  throw parse_error("interchange: expected a DFA, got an NFA");
}

}  // namespace ufc
