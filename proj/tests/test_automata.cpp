#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/numeration.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace autoseq;

namespace {

// powers of two: accepts 0^n 1 0^m
Automaton powers_of_two() {
  return Automaton(2, 1, {"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 2}}, 0,
                   {0, 1, 0});
}

// even binary digit sum
Automaton evil_numbers() {
  return Automaton(2, 1, {"a", "b"}, {{0, 1}, {1, 0}}, 0, {1, 0});
}

// even numbers, read in base 2: tracks the last digit
Automaton even_base2() {
  return Automaton(2, 1, {"a", "b"}, {{0, 1}, {0, 1}}, 0, {1, 0});
}

// even numbers, read in base 3: parity of the digit sum
Automaton even_base3() {
  return Automaton(3, 1, {"a", "b"}, {{0, 1, 0}, {1, 0, 1}}, 0, {1, 0});
}

std::vector<int> digits_of(long long x, long p) {
  std::vector<long> rep = greedy_rep(NumerationSystem::base(p), x);
  return std::vector<int>(rep.begin(), rep.end());
}

}  // namespace

TEST_CASE("acceptance of digit words") {
  Automaton e2 = powers_of_two();
  CHECK(e2.accepts({1, 0, 0}));
  CHECK(!e2.accepts({1, 0, 1}));
  CHECK(e2.accepts({0, 0, 1}));
  CHECK(!e2.accepts({}));
  CHECK(evil_numbers().accepts({}));
  CHECK_THROWS_AS(e2.accepts({2}), ValidationError);

  CHECK_THROWS_AS(Automaton(2, 1, {"a"}, {{0}}, 0, {1}), ValidationError);
  CHECK_THROWS_AS(Automaton(2, 1, {"a"}, {{0, 1}}, 0, {1}), ValidationError);
  CHECK_THROWS_AS(Automaton(2, 1, {"a", "a"}, {{0, 0}, {0, 0}}, 0, {1, 1}),
                  ValidationError);
}

TEST_CASE("membership via greedy representations") {
  RecognizableSet e3{evil_numbers()};
  CHECK(e3.member(6));
  CHECK(!e3.member(1));
  CHECK(e3.member(0));

  RecognizableSet e1b3{even_base3()};
  CHECK(e1b3.member(4));
  CHECK(!e1b3.member(7));
  for (long long x = 0; x < 200; ++x)
    CHECK(e1b3.member(x) == (x % 2 == 0));
}

TEST_CASE("enumeration") {
  auto flat = [](const std::vector<std::vector<long long>>& v) {
    std::vector<long long> out;
    for (const auto& t : v) out.push_back(t.at(0));
    return out;
  };
  CHECK(flat(RecognizableSet{powers_of_two()}.enumerate(10)) ==
        std::vector<long long>{1, 2, 4, 8});
  CHECK(flat(RecognizableSet{evil_numbers()}.enumerate(10)) ==
        std::vector<long long>{0, 3, 5, 6, 9});
  CHECK(flat(RecognizableSet{even_base2()}.enumerate(7)) ==
        std::vector<long long>{0, 2, 4, 6});
}

TEST_CASE("edge-list ingestion") {
  SUBCASE("deterministic complete lists are kept verbatim") {
    std::vector<LabeledEdge> edges{{"a", 0, "a"}, {"a", 1, "b"}, {"b", 0, "b"},
                                   {"b", 1, "c"}, {"c", 0, "c"}, {"c", 1, "c"}};
    Automaton a = from_edges(2, 1, {"a", "b", "c"}, edges, "a", {"b"});
    CHECK(a.state_names() == std::vector<std::string>{"a", "b", "c"});
    for (long long x = 0; x < 100; ++x)
      CHECK(RecognizableSet{a}.member(x) ==
            RecognizableSet{powers_of_two()}.member(x));
  }

  SUBCASE("missing transitions get a sink") {
    std::vector<LabeledEdge> edges{{"a", 1, "b"}, {"b", 0, "b"}, {"b", 1, "b"}};
    Automaton a = from_edges(2, 1, {"a", "b"}, edges, "a", {"b"});
    CHECK(a.n_states() == 3);
    CHECK(!a.accepts({}));
    CHECK(a.accepts({1}));
    CHECK(a.accepts({1, 0, 1}));
    CHECK(!a.accepts({0, 1}));
    auto members = RecognizableSet{a}.enumerate(8);
    CHECK(members.size() == 7);
  }

  SUBCASE("nondeterministic lists are determinized") {
    // second-to-last symbol is 1
    std::vector<LabeledEdge> edges{{"q0", 0, "q0"}, {"q0", 1, "q0"},
                                   {"q0", 1, "q1"}, {"q1", 0, "q2"},
                                   {"q1", 1, "q2"}};
    Automaton a = from_edges(2, 1, {"q0", "q1", "q2"}, edges, "q0", {"q2"});
    for (int len = 0; len <= 10; ++len) {
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::vector<int> w(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = (bits >> i) & 1;
        bool want = len >= 2 && w[static_cast<size_t>(len - 2)] == 1;
        CHECK(a.accepts(w) == want);
      }
    }
    CHECK_THROWS_AS(from_edges(2, 1, {"q0"}, {{"q0", 0, "zz"}}, "q0", {}),
                    ValidationError);
  }
}

TEST_CASE("zero normalization") {
  Automaton e2 = powers_of_two();
  CHECK(e2.zero_normalized());
  Automaton n2 = normalize_for_conversion(e2);
  CHECK(n2.n_states() == e2.n_states());

  Automaton one(2, 1, {"q"}, {{0, 0}}, 0, {1});
  CHECK(normalize_for_conversion(one).n_states() == 1);

  // initial moves away on 0: padding changes acceptance until normalized
  Automaton bad(2, 1, {"u", "v"}, {{1, 1}, {1, 0}}, 0, {0, 1});
  CHECK(!bad.zero_normalized());
  CHECK(!check_padding_invariance(bad, 8, 3));
  Automaton fixed = normalize_for_conversion(bad);
  CHECK(fixed.zero_normalized());
  CHECK(fixed.n_states() == bad.n_states() + 1);
  CHECK(check_padding_invariance(fixed, 1 << 12, 4));
  for (long long x = 0; x < (1 << 12); ++x)
    CHECK(RecognizableSet{fixed}.member(x) == RecognizableSet{bad}.member(x));

  CHECK(check_padding_invariance(e2, 1 << 10, 4));
  CHECK(check_padding_invariance(evil_numbers(), 1 << 10, 4));
}

TEST_CASE("automaton to substitution") {
  CodedSubstitution c2 = automaton_to_substitution(powers_of_two());
  CHECK(c2.sub.image("a").str() == "ab");
  CHECK(c2.sub.image("b").str() == "bc");
  CHECK(c2.sub.image("c").str() == "cc");
  CHECK(c2.sub.alphabet()->symbol(c2.sub.seed()) == "a");
  CHECK(c2.coding.image(1) == 1);

  CodedSubstitution c3 = automaton_to_substitution(evil_numbers());
  CHECK(c3.sub.image("a").str() == "ab");
  CHECK(c3.sub.image("b").str() == "ba");
  CHECK(c3.coding.apply(c3.sub.fixed_point_prefix(10)).str() == "1001011001");

  CodedSubstitution c1 = automaton_to_substitution(even_base3());
  CHECK(c1.sub.image("a").str() == "aba");
  CHECK(c1.sub.image("b").str() == "bab");

  CodedSubstitution cb2 = automaton_to_substitution(even_base2());
  CHECK(cb2.sub.image("a").str() == "ab");
  CHECK(cb2.sub.image("b").str() == "ab");

  Automaton not_norm(2, 1, {"u", "v"}, {{1, 1}, {1, 0}}, 0, {0, 1});
  CHECK_THROWS_AS(automaton_to_substitution(not_norm), ValidationError);
}

TEST_CASE("coded fixed point equals the indicator sequence") {
  for (const Automaton& a : {powers_of_two(), evil_numbers(), even_base2(),
                             even_base3()}) {
    CodedSubstitution cs = automaton_to_substitution(a);
    Word y = cs.coding.apply(cs.sub.fixed_point_prefix(1 << 16));
    RecognizableSet set{a};
    for (long long n = 0; n < (1 << 16); ++n)
      REQUIRE(y[n] == (set.member(n) ? 1 : 0));
  }
}

TEST_CASE("fixed point letters follow transition paths") {
  for (const Substitution& s : {testutil::tm(), testutil::chain()}) {
    Automaton a = substitution_to_automaton(s, {});
    Word x = s.fixed_point_prefix(4096);
    for (long long n = 0; n < 4096; ++n)
      REQUIRE(a.run(digits_of(n, a.p())) == x[n]);
  }
}

TEST_CASE("substitution to automaton and round trips") {
  Automaton a2 = substitution_to_automaton(testutil::chain(), {"b"});
  Automaton e2 = powers_of_two();
  CHECK(a2.state_names() == e2.state_names());
  CHECK(a2.terminal() == e2.terminal());
  for (int q = 0; q < 3; ++q)
    for (int s = 0; s < 2; ++s) CHECK(a2.step(q, s) == e2.step(q, s));

  Automaton a3 = substitution_to_automaton(testutil::tm(), {"a"});
  for (long long x = 0; x < 512; ++x)
    CHECK(RecognizableSet{a3}.member(x) ==
          RecognizableSet{evil_numbers()}.member(x));

  CodedSubstitution back = automaton_to_substitution(a3);
  CHECK(back.sub.image("a").str() == "ab");
  CHECK(back.sub.image("b").str() == "ba");

  Substitution fib = testutil::make_sub("ab", {"ab", "a"}, "a");
  CHECK_THROWS_AS(substitution_to_automaton(fib, {"a"}), ValidationError);
}

TEST_CASE("digit tuples") {
  CHECK(tuple_symbol_index(2, {1, 0}) == 1);
  CHECK(tuple_symbol_index(2, {0, 1}) == 2);
  CHECK(tuple_symbol_index(2, {1, 1}) == 3);
  CHECK(tuple_symbol_token(2, 2, 2) == "(0,1)");
  CHECK(tuple_symbol_token(2, 1, 1) == "1");
  for (int i = 0; i < 9; ++i)
    CHECK(tuple_symbol_index(3, tuple_symbol_digits(3, 2, i)) == i);

  // even total digit sum over pairs
  Automaton pair(2, 2, {"a", "b"}, {{0, 1, 1, 0}, {1, 0, 0, 1}}, 0, {1, 0});
  RecognizableSet set{pair};
  for (long long i = 0; i < 64; ++i)
    for (long long j = 0; j < 64; ++j)
      CHECK(set.member({i, j}) ==
            ((__builtin_popcountll(i) + __builtin_popcountll(j)) % 2 == 0));
  CHECK(check_padding_invariance(pair, 32, 3));

  auto members = set.enumerate(4);
  std::vector<std::vector<long long>> want{{0, 0}, {0, 3}, {1, 1}, {1, 2},
                                           {2, 1}, {2, 2}, {3, 0}, {3, 3}};
  CHECK(members == want);
}
