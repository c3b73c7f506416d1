#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ufc/ufc.hpp"

using namespace ufc;

namespace {

Transformation images(std::vector<std::uint32_t> v) { return Transformation(std::move(v)); }

std::vector<oracle::Images> raw(const std::vector<Transformation>& ts) {
  std::vector<oracle::Images> out;
  for (const auto& t : ts) out.push_back(oracle::vec(t.images()));
  return out;
}

}  // namespace

TEST_CASE("compose acts on the right", "[transforms]") {
  const auto s = parse_cycles("(0,1)", 4);
  const auto t = parse_cycles("(1,2,3)", 4);
  CHECK(compose(s, t) == images({2, 0, 3, 1}));
  // Second evaluator: apply s then t point by point.
  for (std::uint32_t q = 0; q < 4; ++q) CHECK((s * t)(q) == t(s(q)));
  CHECK_THROWS_AS(compose(Transformation::identity(3), Transformation::identity(4)), degree_mismatch);
}

TEST_CASE("cycle notation", "[transforms]") {
  CHECK(parse_cycles("(1,2,3)", 4) == images({0, 2, 3, 1}));
  CHECK(parse_cycles("(1->0)", 3) == images({0, 0, 2}));
  CHECK(parse_cycles("", 3) == Transformation::identity(3));
  CHECK(parse_cycles("(0,1)(2->1)", 4) == images({1, 0, 1, 3}));

  CHECK_THROWS_AS(parse_cycles("(1,2", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,2,1)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(x)", 4), parse_error);
  CHECK(parse_cycles("(0,1)(1,2)", 3) == images({2, 0, 1}));
  CHECK_THROWS_AS(parse_cycles("(1->)", 4), parse_error);

  CHECK(format_cycles(Transformation::identity(3)).empty());
  CHECK(format_cycles(images({0, 2, 3, 1})) == "(1,2,3)");
  CHECK(format_cycles(images({0, 0, 2})) == "(1->0)");
}

TEST_CASE("cycle notation round trip on every transformation of degree 4", "[transforms]") {
  std::vector<std::uint32_t> v(4, 0);
  std::size_t count = 0;
  while (true) {
    const Transformation t(v);
    REQUIRE(parse_cycles(format_cycles(t), 4) == t);
    ++count;
    std::size_t i = 0;
    while (i < 4 && ++v[i] == 4) v[i++] = 0;
    if (i == 4) break;
  }
  CHECK(count == 256);
}

TEST_CASE("rank", "[transforms]") {
  CHECK(rank(Transformation::identity(5)) == 5);
  CHECK(rank(parse_cycles("(1->0)", 3)) == 2);
  CHECK(rank(parse_cycles("(0,1,2,3)", 4)) == 4);
  CHECK(rank(images({1, 1, 1})) == 1);
}

TEST_CASE("word transformations of the witness", "[transforms]") {
  for (std::size_t n = 3; n <= 6; ++n) CHECK(word_transformation(make_witness(n, "a,b,c,d"), "d").is_identity());
  CHECK(word_transformation(make_witness(3, "a,b,c"), "ab") == parse_cycles("(0,1,2)", 3));
  CHECK(word_transformation(make_witness(4, "a,b,c"), "ba") == images({2, 0, 3, 1}));
  CHECK(word_transformation(make_witness(4, "a,b,c"), "").is_identity());
  CHECK_THROWS_AS(word_transformation(make_witness(4, "a,b"), "c"), alphabet_error);
  CHECK_THROWS_AS(word_transformation(Dfa(2, Alphabet("a"), 0), "a"), precondition_error);
}

TEST_CASE("witness roles", "[transforms][witness]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto gens = letter_transformations(make_witness(n, "a,b,c,d"));
    REQUIRE(gens.size() == 4);
    const auto& a = gens[0];
    CHECK(a(0) == 0);
    CHECK(rank(a) == n);
    // a is one cycle on 1..n-1
    std::uint32_t q = 1;
    for (std::size_t k = 1; k < n - 1; ++k) {
      q = a(q);
      CHECK(q != 1);
    }
    CHECK(a(q) == 1);
    CHECK(gens[1] == parse_cycles("(0,1)", n));
    CHECK(gens[2] == parse_cycles("(1->0)", n));
    CHECK(rank(gens[2]) == n - 1);
    CHECK(gens[3].is_identity());
  }
}

TEST_CASE("semigroup closure", "[transforms]") {
  const auto gens3 = letter_transformations(make_witness(3, "a,b,c"));
  CHECK(semigroup_closure(gens3).size == 27);
  CHECK(semigroup_closure(std::vector<Transformation>{Transformation::identity(4)}).size == 1);
  CHECK(semigroup_closure(std::vector<Transformation>{}).size == 0);
  const auto gens4ab = letter_transformations(make_witness(4, "a,b"));
  const auto r = semigroup_closure(gens4ab);
  CHECK(r.size < 256);
  CHECK(r.size == oracle::closure(raw(gens4ab)).size());
  CHECK_THROWS_AS(semigroup_closure(std::vector<Transformation>{Transformation::identity(3), Transformation::identity(4)}),
                  degree_mismatch);

  const auto capped = semigroup_closure(letter_transformations(make_witness(5, "a,b,c")), 100);
  CHECK(capped.exceeded_cap);
  CHECK(capped.size >= 100);
}

TEST_CASE("transition semigroup sizes", "[transforms]") {
  CHECK(transition_semigroup_size(make_witness(5, "a,b,c")).size == 3125);
  CHECK(transition_semigroup_size(make_witness(3, "a,b,c,d")).size == 27);
  Dfa one(1, Alphabet("a"), {0}, 0, {0});
  CHECK(transition_semigroup_size(one).size == 1);
  Dfa twins(4, Alphabet("a"), {1, 2, 3, 0}, 0, {1, 3});
  CHECK_THROWS_AS(transition_semigroup_size(twins), precondition_error);
}

TEST_CASE("closure elements are exactly the oracle closure", "[transforms][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Transformation> gens;
    const int k = 1 + trial % 3;
    for (int g = 0; g < k; ++g) gens.emplace_back(std::vector<std::uint32_t>{pick(rng), pick(rng), pick(rng), pick(rng)});
    const auto rep = semigroup_closure(gens, default_closure_cap(), true);
    const auto ref = oracle::closure(raw(gens));
    REQUIRE(rep.size == ref.size());
    std::set<oracle::Images> got;
    for (const auto& t : rep.elements) got.insert(oracle::vec(t.images()));
    REQUIRE(got == ref);

    // Reordering and duplicating generators does not change the size.
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens.front());
    REQUIRE(semigroup_closure(shuffled).size == rep.size);

    // Saturation: one more round of products adds nothing.
    for (const auto& s : rep.elements)
      for (const auto& g : gens) REQUIRE(got.count(oracle::vec((s * g).images())));
  }
}

TEST_CASE("the full transformation monoid for small witnesses", "[transforms][property]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto rep = transition_semigroup_size(make_witness(n, "a,b,c"), default_closure_cap(), true);
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& t : rep.elements) got.insert(oracle::vec(t.images()));
    std::vector<std::uint32_t> v(n, 0);
    while (true) {
      REQUIRE(got.count(v));
      std::size_t i = 0;
      while (i < n && ++v[i] == n) v[i++] = 0;
      if (i == n) break;
    }
  }
  CHECK(transition_semigroup_size(make_witness(6, "a,b,c")).size == 46656);
}

TEST_CASE("word transformations are a homomorphism", "[transforms][property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Dfa d = oracle::random_dfa(rng);
    const std::string sigma(d.alphabet().letters());
    std::uniform_int_distribution<std::size_t> len(0, 6), letter(0, sigma.size() - 1);
    std::string u, v;
    for (std::size_t j = len(rng); j > 0; --j) u += sigma[letter(rng)];
    for (std::size_t j = len(rng); j > 0; --j) v += sigma[letter(rng)];
    const auto tu = word_transformation(d, u), tv = word_transformation(d, v);
    REQUIRE(word_transformation(d, u + v) == compose(tu, tv));
    const auto end = word_transformation(d, u + v)(static_cast<std::uint32_t>(d.initial()));
    REQUIRE(accepts(d, u + v) == d.is_final(static_cast<State>(end)));
  }
}
