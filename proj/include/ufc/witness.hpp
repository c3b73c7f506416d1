#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/transformation.hpp"

namespace ufc {

/// Which letter plays each of the four roles a, b, c, d of the witness
/// DFA, written "a,b,-,c": slot i names the letter for role i, "-" deletes
/// the role. Trailing slots may be omitted and count as deleted.
class DialectSpec {
 public:
  static constexpr std::size_t role_count = 4;

  DialectSpec() = default;

  explicit DialectSpec(std::array<std::optional<Letter>, role_count> roles) : roles_(roles) { validate(); }

  static DialectSpec parse(std::string_view text) {
    std::array<std::optional<Letter>, role_count> roles{};
    std::size_t slot = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (slot >= role_count) throw parse_error("dialect: more than four slots in \"" + std::string(text) + "\"");
      if (field.size() != 1) throw parse_error("dialect: slot " + std::to_string(slot + 1) + " of \"" + std::string(text) + "\" must be one letter or '-'");
      if (field[0] != '-') {
        if (!Alphabet::is_letter(field[0])) throw parse_error("dialect: invalid letter in \"" + std::string(text) + "\"");
        roles[slot] = field[0];
      }
      ++slot;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    try {
      return DialectSpec(roles);
    } catch (const precondition_error& e) {
      throw parse_error(e.what());
    }
  }

  const std::optional<Letter>& role(std::size_t i) const { return roles_[i]; }

  /// Shortest form: trailing deleted slots are dropped ("a,b" not "a,b,-,-").
  std::string to_string() const {
    std::size_t last = role_count;
    while (last > 0 && !roles_[last - 1]) --last;
    std::string out;
    for (std::size_t i = 0; i < last; ++i) {
      if (i) out += ',';
      out += roles_[i] ? *roles_[i] : '-';
    }
    return out;
  }

  friend bool operator==(const DialectSpec&, const DialectSpec&) = default;

 private:
  void validate() const {
    bool any = false;
    for (std::size_t i = 0; i < role_count; ++i) {
      if (!roles_[i]) continue;
      any = true;
      for (std::size_t j = i + 1; j < role_count; ++j)
        if (roles_[j] == roles_[i]) throw precondition_error(std::string("dialect: letter '") + *roles_[i] + "' assigned twice");
    }
    if (!any) throw precondition_error("dialect: at least one role must be assigned");
  }

  std::array<std::optional<Letter>, role_count> roles_{};
};

/// Role transformations of the witness on Q_n: a is the cycle (1,...,n-1),
/// b the transposition (0,1), c the send (1->0), d the identity.
inline std::array<Transformation, 4> witness_roles(std::size_t n) {
  std::vector<std::uint32_t> a(n), b(n), c(n), d(n);
  for (std::size_t q = 0; q < n; ++q) a[q] = b[q] = c[q] = d[q] = static_cast<std::uint32_t>(q);
  for (std::size_t q = 1; q < n; ++q) a[q] = static_cast<std::uint32_t>(q + 1 < n ? q + 1 : 1);
  b[0] = 1;
  b[1] = 0;
  c[1] = 0;
  return {Transformation(a), Transformation(b), Transformation(c), Transformation(d)};
}

/// The witness D_n in the given dialect: states Q_n, initial 0, final n-1.
inline Dfa make_witness(std::size_t n, const DialectSpec& dialect) {
  if (n < 3) throw precondition_error("make_witness: n must be at least 3, got " + std::to_string(n));
  std::string letters;
  for (std::size_t r = 0; r < DialectSpec::role_count; ++r)
    if (dialect.role(r)) letters += *dialect.role(r);
  Dfa d(n, Alphabet::from_letters(letters), 0);
  const auto roles = witness_roles(n);
  for (std::size_t r = 0; r < DialectSpec::role_count; ++r) {
    if (!dialect.role(r)) continue;
    for (std::size_t q = 0; q < n; ++q)
      d.set_transition(static_cast<State>(q), *dialect.role(r), static_cast<State>(roles[r](q)));
  }
  d.set_final(static_cast<State>(n - 1));
  return d;
}

inline Dfa make_witness(std::size_t n, std::string_view dialect) { return make_witness(n, DialectSpec::parse(dialect)); }

/// Operands for unrestricted boolean operations: D'_m(a,b,-,c) and D_n(b,a,-,d).
inline std::pair<Dfa, Dfa> boolean_witness_pair(std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) throw precondition_error("boolean_witness_pair: m and n must be at least 3");
  return {make_witness(m, "a,b,-,c"), make_witness(n, "b,a,-,d")};
}

struct OcfpResult {
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
  std::string describe() const {
    if (pass()) return "pass";
    std::string out;
    for (const auto& v : violations) out += (out.empty() ? "" : "; ") + v;
    return out;
  }
};

namespace detail {

// Simple paths from q to target, counting parallel transitions separately;
// stops once `limit` paths are found.
inline std::size_t count_simple_paths(const Dfa& d, State q, State target, std::vector<char>& on_path, std::size_t limit) {
  if (q == target) return 1;
  on_path[static_cast<std::size_t>(q)] = 1;
  std::size_t found = 0;
  for (std::size_t i = 0; i < d.alphabet().size() && found < limit; ++i) {
    const State t = d.next(q, i);
    if (t == no_state || on_path[static_cast<std::size_t>(t)]) continue;
    found += count_simple_paths(d, t, target, on_path, limit - found);
  }
  on_path[static_cast<std::size_t>(q)] = 0;
  return found;
}

}  // namespace detail

/// One-cycle-free-path check: exactly one final state, and exactly one
/// simple path (no repeated state) from every state to it.
inline OcfpResult ocfp_check(const Dfa& d) {
  OcfpResult result;
  const auto finals = d.finals();
  if (finals.size() != 1) {
    result.violations.push_back(finals.empty() ? "no final state" : "multiple finals");
    return result;
  }
  std::vector<char> on_path(d.state_count(), 0);
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    const std::size_t paths = detail::count_simple_paths(d, static_cast<State>(q), finals.front(), on_path, 2);
    if (paths == 0) result.violations.push_back("state " + std::to_string(q) + " cannot reach the final state");
    if (paths > 1) result.violations.push_back("two simple paths from " + std::to_string(q));
  }
  return result;
}

}  // namespace ufc
