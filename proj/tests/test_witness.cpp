#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ufc/ufc.hpp"

using namespace ufc;

namespace {

Dfa of_regex(const Regex& r) { return minimize(determinize(regex_to_nfa(r))); }

// Distribution can push an expression past the library's subset capacity.
Dfa of_large_regex(const Regex& r) { return oracle::determinize(regex_to_nfa(r)); }

Regex a() { return Regex::letter('a'); }
Regex b() { return Regex::letter('b'); }
Regex c() { return Regex::letter('c'); }

}  // namespace

TEST_CASE("dialect grammar", "[witness]") {
  CHECK(DialectSpec::parse("a,b,-,c").to_string() == "a,b,-,c");
  CHECK(DialectSpec::parse("a,b,-,-").to_string() == "a,b");
  CHECK(DialectSpec::parse("b,a").role(1) == 'a');
  CHECK_FALSE(DialectSpec::parse("b,a").role(2));
  CHECK_THROWS_AS(DialectSpec::parse("a,a"), parse_error);
  CHECK_THROWS_AS(DialectSpec::parse("a,b,c,d,e"), parse_error);
  CHECK_THROWS_AS(DialectSpec::parse("ab"), parse_error);
  CHECK_THROWS_AS(DialectSpec::parse("a,,b"), parse_error);
  CHECK_THROWS_AS(DialectSpec::parse("-,-"), parse_error);
}

TEST_CASE("make_witness", "[witness]") {
  const Dfa d = make_witness(4, "b,a,-,d");
  CHECK(d.alphabet() == Alphabet("abd"));
  CHECK(d.finals() == std::vector<State>{3});
  CHECK(d.next_on(1, 'b') == 2);
  CHECK(d.next_on(0, 'a') == 1);
  CHECK_THROWS_AS(make_witness(2, "a,b"), precondition_error);
  const auto [x, y] = boolean_witness_pair(3, 4);
  CHECK(x.alphabet() == Alphabet("abc"));
  CHECK(y.alphabet() == Alphabet("abd"));
  CHECK_THROWS_AS(boolean_witness_pair(2, 4), precondition_error);
}

TEST_CASE("witnesses are minimal and one-cycle-free-path", "[witness]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const char* dialect : {"a,b,c,d", "a,b,c", "a,b", "a,b,-,c", "b,a,-,d"}) {
      const Dfa d = make_witness(n, dialect);
      CHECK(is_minimal(d));
      CHECK(ocfp_check(d).pass());
    }
    const Dfa d = make_witness(n, "a,b,c,d");
    const std::string w = "b" + std::string(n - 2, 'a');
    CHECK(accepts(d, w));
    for (State q = 1; q < static_cast<State>(n); ++q) CHECK_FALSE(d.is_final(run(d, q, w)));
  }
}

TEST_CASE("ocfp violations", "[witness]") {
  Dfa two(2, Alphabet("a"), {1, 0}, 0, {0, 1});
  CHECK(ocfp_check(two).describe() == "multiple finals");
  CHECK(ocfp_check(Dfa(2, Alphabet("a"), {1, 0}, 0, {})).describe() == "no final state");

  const Dfa d = make_witness(3, "a,b,c");
  Dfa extra(3, Alphabet("abce"), 0);
  for (State q = 0; q < 3; ++q)
    for (char l : std::string("abc")) extra.set_transition(q, l, d.next_on(q, l));
  extra.set_final(2);
  extra.set_transition(0, 'e', 2);
  const auto res = ocfp_check(extra);
  CHECK_FALSE(res.pass());
  CHECK_THAT(res.describe(), Catch::Matchers::ContainsSubstring("two simple paths from 0"));

  Dfa stuck(3, Alphabet("a"), {1, 1, 2}, 0, {2});
  CHECK_THAT(ocfp_check(stuck).describe(), Catch::Matchers::ContainsSubstring("state 0 cannot reach"));
}

TEST_CASE("regex rendering and helpers", "[witness][regex]") {
  const Regex r = Regex::star(Regex::alt({a(), b()}));
  CHECK(render(r) == "(a ∪ b)*");
  CHECK(render(r, UnionStyle::bar) == "(a|b)*");
  CHECK(render(Regex::cat({a(), Regex::star(Regex::cat({b(), c()}))})) == "a(bc)*");
  CHECK(render(Regex::empty()) == "∅");
  CHECK(render(Regex::epsilon()) == "ε");
  CHECK(count_unions(r) == 1);
  CHECK(nullable(r));
  CHECK_FALSE(nullable(a()));
  CHECK(alphabet_of(Regex::cat({c(), a()})) == Alphabet("ac"));
  CHECK_THROWS_AS(Regex::letter(' '), alphabet_error);
}

TEST_CASE("union elimination", "[witness][regex]") {
  const Regex r = Regex::star(Regex::alt({a(), b()}));
  CHECK(eliminate_unions(r) == Regex::star(Regex::cat({Regex::star(a()), Regex::star(b())})));
  const Regex plain = Regex::cat({a(), Regex::star(b())});
  CHECK(eliminate_unions(plain) == plain);
  CHECK_THROWS_AS(eliminate_unions(Regex::alt({a(), b()})), not_eliminable);
  CHECK_THROWS_AS(eliminate_unions(Regex::cat({Regex::alt({a(), b()}), Regex::star(c())})), not_eliminable);
  // A union distributed over a concatenation inside a star.
  const Regex nested = Regex::star(Regex::cat({a(), Regex::alt({b(), c()})}));
  const Regex out = eliminate_unions(nested);
  CHECK(count_unions(out) == 0);
  CHECK_FALSE(equivalent(of_regex(out), of_regex(nested)));
}

TEST_CASE("position automaton", "[witness][regex]") {
  CHECK(of_regex(Regex::empty()).finals().empty());
  const Nfa la = regex_to_nfa(a());
  CHECK(la.state_count() == 2);
  CHECK(accepts(la, "a"));
  CHECK_FALSE(accepts(la, ""));
  CHECK_FALSE(accepts(la, "aa"));
  CHECK(accepts(regex_to_nfa(Regex::epsilon()), ""));
  const Regex r = Regex::cat({Regex::star(Regex::alt({a(), b()})), a(), Regex::alt({a(), b()})});
  const Nfa n = regex_to_nfa(r);
  for (const auto& w : oracle::words_upto("ab", 7))
    REQUIRE(accepts(n, w) == (w.size() >= 2 && w[w.size() - 2] == 'a'));
}

TEST_CASE("the union-free expression for L_n", "[witness][regex]") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const Regex with_unions = witness_expression(n);
    CHECK(count_unions(with_unions) > 0);
    const Regex r = union_free_regex(n);
    CHECK(count_unions(r) == 0);
    CHECK_FALSE(equivalent(of_regex(with_unions), make_witness(n, "a,b,c,d")));
    CHECK_FALSE(equivalent(of_regex(r), make_witness(n, "a,b,c,d")));
    CHECK(alphabet_of(r) == Alphabet("abcd"));
  }
  // With n-2 repetitions in the block the expression misses ba^{n-2}.
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto w = equivalent(of_regex(witness_expression_with_block(n - 2)), make_witness(n, "a,b,c,d"));
    REQUIRE(w);
    CHECK(*w == "b" + std::string(n - 2, 'a'));
  }
}

TEST_CASE("union elimination preserves the language", "[witness][regex][property]") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Regex r = Regex::star(oracle::random_starred(rng, 4, true));
    const Regex out = eliminate_unions(r);
    REQUIRE(count_unions(out) == 0);
    REQUIRE(nullable(out) == nullable(r));
    REQUIRE(alphabet_of(out) == alphabet_of(r));
    REQUIRE_FALSE(equivalent(of_large_regex(out), of_large_regex(r)));
  }
}
