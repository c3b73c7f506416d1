#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ufc/alphabet.hpp"
#include "ufc/error.hpp"
#include "ufc/nfa.hpp"

namespace ufc {

/// Immutable regular-expression tree with shared subtrees. Alternation and
/// concatenation nodes always have at least two children; the factories
/// collapse shorter lists.
class Regex {
 public:
  enum class Kind { empty, epsilon, letter, alternation, concatenation, star };

  static Regex empty() { return Regex(Kind::empty, '\0', {}); }
  static Regex epsilon() { return Regex(Kind::epsilon, '\0', {}); }
  static Regex letter(Letter c) {
    if (!Alphabet::is_letter(c)) throw alphabet_error("regex: invalid letter");
    return Regex(Kind::letter, c, {});
  }
  static Regex alt(std::vector<Regex> children) {
    if (children.empty()) return empty();
    if (children.size() == 1) return std::move(children.front());
    return Regex(Kind::alternation, '\0', std::move(children));
  }
  static Regex cat(std::vector<Regex> children) {
    if (children.empty()) return epsilon();
    if (children.size() == 1) return std::move(children.front());
    return Regex(Kind::concatenation, '\0', std::move(children));
  }
  static Regex star(Regex child) { return Regex(Kind::star, '\0', {std::move(child)}); }

  Kind kind() const { return node_->kind; }
  Letter symbol() const { return node_->symbol; }
  const std::vector<Regex>& children() const { return node_->children; }

  friend bool operator==(const Regex& x, const Regex& y) {
    if (x.node_ == y.node_) return true;
    return x.kind() == y.kind() && x.symbol() == y.symbol() && x.children() == y.children();
  }

 private:
  struct Node {
    Kind kind;
    Letter symbol;
    std::vector<Regex> children;
  };

  Regex(Kind kind, Letter symbol, std::vector<Regex> children)
      : node_(std::make_shared<const Node>(Node{kind, symbol, std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

inline std::size_t count_unions(const Regex& r) {
  std::size_t total = r.kind() == Regex::Kind::alternation ? 1 : 0;
  for (const auto& c : r.children()) total += count_unions(c);
  return total;
}

inline bool nullable(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::empty:
    case Regex::Kind::letter:
      return false;
    case Regex::Kind::epsilon:
    case Regex::Kind::star:
      return true;
    case Regex::Kind::alternation:
      return std::any_of(r.children().begin(), r.children().end(), [](const Regex& c) { return nullable(c); });
    case Regex::Kind::concatenation:
      return std::all_of(r.children().begin(), r.children().end(), [](const Regex& c) { return nullable(c); });
  }
  return false;
}

/// Letters occurring in the expression.
inline Alphabet alphabet_of(const Regex& r) {
  std::string letters;
  auto walk = [&](auto&& self, const Regex& x) -> void {
    if (x.kind() == Regex::Kind::letter) letters += x.symbol();
    for (const auto& c : x.children()) self(self, c);
  };
  walk(walk, r);
  return Alphabet::from_letters(letters);
}

enum class UnionStyle { cup, bar };

/// Letters as-is, "*" for star, juxtaposition for concatenation, and
/// parentheses only where precedence needs them.
inline std::string render(const Regex& r, UnionStyle style = UnionStyle::cup, int context = 0) {
  switch (r.kind()) {
    case Regex::Kind::empty:
      return "∅";
    case Regex::Kind::epsilon:
      return "ε";
    case Regex::Kind::letter:
      return std::string(1, r.symbol());
    case Regex::Kind::star:
      return render(r.children().front(), style, 2) + "*";
    case Regex::Kind::concatenation: {
      std::string out;
      for (const auto& c : r.children()) out += render(c, style, 1);
      return context > 1 ? "(" + out + ")" : out;
    }
    case Regex::Kind::alternation: {
      std::string out;
      const char* sep = style == UnionStyle::cup ? " ∪ " : "|";
      for (std::size_t i = 0; i < r.children().size(); ++i) {
        if (i) out += sep;
        out += render(r.children()[i], style, 0);
      }
      return context > 0 ? "(" + out + ")" : out;
    }
  }
  return {};
}

namespace detail {

// A list of union-free expressions whose union is the input's language.
// Concatenation distributes over the alternatives of its factors; a star
// becomes star(E_1* E_2* ... E_k*) over the alternatives E_i of its body.
inline std::vector<Regex> union_free_terms(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::empty:
      return {};
    case Regex::Kind::epsilon:
    case Regex::Kind::letter:
      return {r};
    case Regex::Kind::alternation: {
      std::vector<Regex> out;
      for (const auto& c : r.children()) {
        auto part = union_free_terms(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Regex::Kind::concatenation: {
      std::vector<std::vector<Regex>> prefixes{{}};
      for (const auto& c : r.children()) {
        const auto options = union_free_terms(c);
        std::vector<std::vector<Regex>> next;
        for (const auto& p : prefixes) {
          for (const auto& o : options) {
            next.push_back(p);
            next.back().push_back(o);
          }
        }
        prefixes = std::move(next);
      }
      std::vector<Regex> out;
      for (auto& p : prefixes) out.push_back(Regex::cat(std::move(p)));
      return out;
    }
    case Regex::Kind::star: {
      const auto body = union_free_terms(r.children().front());
      if (body.empty()) return {Regex::epsilon()};
      if (body.size() == 1) return {Regex::star(body.front())};
      std::vector<Regex> factors;
      for (const auto& t : body) factors.push_back(Regex::star(t));
      return {Regex::star(Regex::cat(std::move(factors)))};
    }
  }
  return {};
}

}  // namespace detail

/// Removes every union using (E_1 | ... | E_k)* = (E_1* ... E_k*)*, after
/// flattening nested unions and distributing concatenation over union
/// inside starred bodies. Union-free input is returned unchanged. Throws
/// not_eliminable when a union is not below any star.
inline Regex eliminate_unions(const Regex& r) {
  if (count_unions(r) == 0) return r;
  auto terms = detail::union_free_terms(r);
  if (terms.empty()) return Regex::empty();
  if (terms.size() > 1) throw not_eliminable("eliminate_unions: a union is not dominated by any star in " + render(r));
  return terms.front();
}

/// Position (Glushkov) automaton: state 0 is initial, one state per letter
/// occurrence; epsilon-free, and state 0 is final iff r is nullable.
inline Nfa regex_to_nfa(const Regex& r) {
  struct Info {
    bool nullable;
    std::vector<std::size_t> first, last;
  };
  std::vector<Letter> position_letter{'\0'};
  std::vector<std::vector<std::size_t>> follow{{}};

  auto link = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
    for (auto x : from) follow[x].insert(follow[x].end(), to.begin(), to.end());
  };
  auto join = [](std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  auto walk = [&](auto&& self, const Regex& x) -> Info {
    switch (x.kind()) {
      case Regex::Kind::empty:
        return {false, {}, {}};
      case Regex::Kind::epsilon:
        return {true, {}, {}};
      case Regex::Kind::letter: {
        const std::size_t p = position_letter.size();
        position_letter.push_back(x.symbol());
        follow.emplace_back();
        return {false, {p}, {p}};
      }
      case Regex::Kind::alternation: {
        Info acc{false, {}, {}};
        for (const auto& c : x.children()) {
          Info i = self(self, c);
          acc.nullable = acc.nullable || i.nullable;
          acc.first = join(std::move(acc.first), i.first);
          acc.last = join(std::move(acc.last), i.last);
        }
        return acc;
      }
      case Regex::Kind::concatenation: {
        Info acc{true, {}, {}};
        for (const auto& c : x.children()) {
          Info i = self(self, c);
          link(acc.last, i.first);
          if (acc.nullable) acc.first = join(std::move(acc.first), i.first);
          acc.last = i.nullable ? join(std::move(i.last), acc.last) : std::move(i.last);
          acc.nullable = acc.nullable && i.nullable;
        }
        return acc;
      }
      case Regex::Kind::star: {
        Info i = self(self, x.children().front());
        link(i.last, i.first);
        i.nullable = true;
        return i;
      }
    }
    return {false, {}, {}};
  };
  const Info top = walk(walk, r);

  std::string letters(position_letter.begin() + 1, position_letter.end());
  const Alphabet sigma = Alphabet::from_letters(letters);
  Nfa out(position_letter.size(), sigma);
  for (auto p : top.first) out.add_transition(0, position_letter[p], static_cast<State>(p));
  for (std::size_t x = 1; x < follow.size(); ++x)
    for (auto y : follow[x]) out.add_transition(static_cast<State>(x), position_letter[y], static_cast<State>(y));
  out.set_initial(0);
  for (auto p : top.last) out.set_final(static_cast<State>(p));
  if (top.nullable) out.set_final(0);
  return out;
}

/// E = (a(b|c|d)*)^k a, the block that walks from state 1 of the witness
/// through k+1 a-transitions.
inline Regex witness_block(std::size_t k) {
  const Regex a = Regex::letter('a');
  const Regex bcd_star = Regex::star(Regex::alt({Regex::letter('b'), Regex::letter('c'), Regex::letter('d')}));
  std::vector<Regex> parts;
  for (std::size_t j = 0; j < k; ++j) parts.push_back(Regex::cat({a, bcd_star}));
  parts.push_back(a);
  return Regex::cat(std::move(parts));
}

/// [(a|c|d) | b(d | E(b|c|d)*a)*(b|c)]* b(d | E(b|c|d)*a)* E(b|c|d)*
/// with E = witness_block(block_count). The expression keeps its union
/// nodes.
inline Regex witness_expression_with_block(std::size_t block_count) {
  const Regex a = Regex::letter('a'), b = Regex::letter('b'), c = Regex::letter('c'), d = Regex::letter('d');
  const Regex e = witness_block(block_count);
  const Regex bcd_star = Regex::star(Regex::alt({b, c, d}));
  const Regex cycle_at_one = Regex::star(Regex::alt({d, Regex::cat({e, bcd_star, a})}));
  const Regex prefix = Regex::star(Regex::alt({Regex::alt({a, c, d}), Regex::cat({b, cycle_at_one, Regex::alt({b, c})})}));
  return Regex::cat({prefix, b, cycle_at_one, e, bcd_star});
}

/// Expression (with unions) for the language of the witness D_n(a,b,c,d).
/// Reaching the final state n-1 from state 1 takes n-2 letters a, so
/// the block E has n-3 repetitions of a(b|c|d)* before its last a.
inline Regex witness_expression(std::size_t n) {
  if (n < 3) throw precondition_error("witness_expression: n must be at least 3");
  return witness_expression_with_block(n - 3);
}

/// Union-free expression for the language of D_n(a,b,c,d).
inline Regex union_free_regex(std::size_t n) { return eliminate_unions(witness_expression(n)); }

}  // namespace ufc
