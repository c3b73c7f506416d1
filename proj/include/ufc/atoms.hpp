#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/formulas.hpp"
#include "ufc/lang_ops.hpp"
#include "ufc/minimize.hpp"
#include "ufc/semigroup.hpp"
#include "ufc/state_set.hpp"

namespace ufc {

/// The atom A_S of L(d): words w with { i : w in L_i } = S, where L_i is
/// the language of state i of the minimal DFA d.
///
/// Every atom is recognized by one automaton over the transition monoid of
/// d: states are the transformations t induced by words (the identity for
/// epsilon), and t --a--> t*a. A_S accepts at exactly those t whose final
/// preimage { i : i t in F } equals S. This class builds the monoid once and
/// answers queries for every S.
class AtomBuilder {
 public:
  explicit AtomBuilder(const Dfa& d, std::size_t cap = default_closure_cap()) : alphabet_(d.alphabet()) {
    if (!is_minimal(d)) throw precondition_error("atoms: DFA must be minimal and complete");
    if (d.state_count() > StateSet::capacity)
      throw capacity_error("atoms: " + std::to_string(d.state_count()) + " states exceed the subset capacity");
    n_ = d.state_count();
    const auto gens = letter_transformations(d);
    monoid_ = std::make_unique<detail::CayleyClosure>(n_, gens, true, cap, true);
    if (monoid_->exceeded_cap())
      throw capacity_error("atoms: transition monoid exceeds the closure cap of " + std::to_string(cap));
    signature_.reserve(monoid_->size());
    for (std::size_t j = 0; j < monoid_->size(); ++j) {
      StateSet s;
      for (std::size_t q = 0; q < n_; ++q)
        if (d.is_final(static_cast<State>(monoid_->image(j, q)))) s.insert(q);
      signature_.push_back(s);
    }
  }

  std::size_t state_count() const { return n_; }
  std::size_t monoid_size() const { return monoid_->size(); }

  bool nonempty(StateSet s) const {
    for (auto x : signature_)
      if (x == s) return true;
    return false;
  }

  /// Number of distinct non-empty atoms.
  std::size_t count() const {
    std::vector<std::uint64_t> seen;
    for (auto x : signature_) seen.push_back(x.bits());
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }

  /// Transformation automaton accepting A_S (not minimized).
  Dfa raw_automaton(StateSet s) const {
    check(s);
    const std::size_t k = alphabet_.size();
    std::vector<State> table(monoid_->size() * k);
    std::vector<State> finals;
    for (std::size_t j = 0; j < monoid_->size(); ++j) {
      for (std::size_t i = 0; i < k; ++i) table[j * k + i] = static_cast<State>(monoid_->edge(j, i));
      if (signature_[j] == s) finals.push_back(static_cast<State>(j));
    }
    return Dfa(monoid_->size(), alphabet_, std::move(table), 0, finals);
  }

  /// Minimal DFA of A_S, or nullopt when the atom is empty.
  std::optional<Dfa> atom(StateSet s) const {
    if (!nonempty(s)) {
      check(s);
      return std::nullopt;
    }
    return minimize(raw_automaton(s));
  }

 private:
  void check(StateSet s) const {
    if ((s.bits() & ~StateSet::full(n_).bits()) != 0)
      throw precondition_error("atoms: " + s.to_string() + " is not a subset of Q_" + std::to_string(n_));
  }

  Alphabet alphabet_;
  std::size_t n_ = 0;
  std::unique_ptr<detail::CayleyClosure> monoid_;
  std::vector<StateSet> signature_;
};

inline std::optional<Dfa> atom(const Dfa& d, StateSet s, std::size_t cap = default_closure_cap()) {
  return AtomBuilder(d, cap).atom(s);
}

/// Number of non-empty atoms; cross-checked against the complexity of the
/// reverse, which must agree.
inline std::size_t atom_count(const Dfa& d, std::size_t cap = default_closure_cap()) {
  const std::size_t count = AtomBuilder(d, cap).count();
  const std::size_t reversed = reverse(d).complexity();
  if (count != reversed) {
    throw std::logic_error("atom_count: " + std::to_string(count) + " atoms but the reverse has complexity " +
                           std::to_string(reversed));
  }
  return count;
}

inline std::uint64_t atom_complexity_formula(std::size_t n, std::size_t s) { return formulas::atom_complexity(n, s); }

struct AtomRow {
  StateSet set;
  bool nonempty = false;
  std::size_t complexity = 0;  // 0 for an empty atom
  std::uint64_t formula = 0;
  bool matches_formula = false;
  bool within_formula = true;
};

struct AtomReport {
  std::size_t n = 0;
  std::size_t atom_count = 0;
  std::vector<AtomRow> rows;  // ordered by S as a bit set
};

inline constexpr std::size_t default_atom_sweep_limit = 6;

/// Every atom of L(d) compared with the maximal-complexity formula.
/// Refuses more than `max_n` states unless the limit is raised.
inline AtomReport atoms_report(const Dfa& d, std::size_t max_n = default_atom_sweep_limit,
                               std::size_t cap = default_closure_cap()) {
  if (d.state_count() > max_n) {
    throw capacity_error("atoms_report: " + std::to_string(d.state_count()) + " states exceed the sweep limit of " +
                         std::to_string(max_n));
  }
  if (d.state_count() >= 64) throw capacity_error("atoms_report: too many states to enumerate subsets");
  const AtomBuilder builder(d, cap);
  AtomReport report;
  report.n = builder.state_count();
  const std::uint64_t subsets = std::uint64_t{1} << report.n;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    AtomRow row;
    row.set = StateSet(bits);
    row.formula = atom_complexity_formula(report.n, row.set.size());
    if (auto a = builder.atom(row.set)) {
      row.nonempty = true;
      row.complexity = a->state_count();
      ++report.atom_count;
    }
    row.matches_formula = row.nonempty && row.complexity == row.formula;
    row.within_formula = row.complexity <= row.formula;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace ufc
