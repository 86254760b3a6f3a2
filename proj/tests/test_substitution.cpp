#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "autoseq/substitution.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace autoseq;
using testutil::make_sub;

namespace {

// Digit-sum parity of n in base 2: an independent description of the
// fixed point of a -> ab, b -> ba (letter a at even parity).
int tm_ref(long long n) { return __builtin_popcountll(n) & 1; }

}  // namespace

TEST_CASE("validation accepts the running examples") {
  CHECK_NOTHROW(testutil::tm());
  CHECK_NOTHROW(testutil::chain());
  CHECK_NOTHROW(testutil::period2());
}

TEST_CASE("validation rejects bad rules") {
  AlphabetPtr A = make_alphabet("ab");
  // seed does not start its own image
  CHECK_THROWS_WITH_AS(
      Substitution(A, {Word::parse(A, "ba"), Word::parse(A, "ab")}, 0),
      doctest::Contains("does not start its own image"), ValidationError);
  // b is not growing
  CHECK_THROWS_WITH_AS(
      Substitution(A, {Word::parse(A, "ab"), Word::parse(A, "b")}, 0),
      doctest::Contains("not growing"), ValidationError);
  // empty image
  CHECK_THROWS_WITH_AS(
      Substitution(A, {Word::parse(A, "ab"), Word::empty(A)}, 0),
      doctest::Contains("empty image"), ValidationError);
  // a maps to itself alone
  CHECK_THROWS_AS(
      Substitution(A, {Word::parse(A, "a"), Word::parse(A, "ab")}, 0),
      ValidationError);
}

TEST_CASE("fixed point prefixes") {
  CHECK(testutil::tm().fixed_point_prefix(10).str() == "abbabaabba");
  CHECK(testutil::chain().fixed_point_prefix(8).str() == "abbcbccc");
  CHECK(testutil::period2().fixed_point_prefix(6).str() == "ababab");
  CHECK(testutil::tm().fixed_point_prefix(0).empty());

  Word x = testutil::tm().fixed_point_prefix(4096);
  for (long n = 0; n < 4096; ++n) CHECK(x[n] == tm_ref(n));

  // prefixes are nested and invariant under the rule
  Substitution s = testutil::chain();
  Word w100 = s.fixed_point_prefix(100);
  CHECK(s.fixed_point_prefix(50) == w100.subword(0, 50));
  Word img = s.apply(w100);
  CHECK(img.subword(0, 100) == w100);
}

TEST_CASE("powers") {
  Substitution s = testutil::tm();
  Substitution s2 = s.power(2);
  CHECK(s2.image("a").str() == "abba");
  CHECK(s2.image("b").str() == "baab");
  CHECK(incidence_matrix(s2.rule()) == incidence_matrix(s.rule()).pow(2));
  CHECK(s2.fixed_point_prefix(64) == s.fixed_point_prefix(64));
}

TEST_CASE("block language agrees with a long prefix scan") {
  Substitution s = testutil::tm();
  Word prefix = s.fixed_point_prefix(1 << 14);
  for (long k = 1; k <= 8; ++k) {
    std::vector<Word> closure = block_language(s, k);
    std::set<Word> scanned = factors(prefix, k);
    std::set<Word> closed(closure.begin(), closure.end());
    CHECK(closed == scanned);
    CHECK(std::is_sorted(closure.begin(), closure.end()));
  }
  CHECK(block_language(s, 2).size() == 4);
  CHECK(block_language(s, 3).size() == 6);
}

TEST_CASE("k-block presentation") {
  Substitution s = testutil::tm();
  BlockPresentation bp = k_block_substitution(s, 2);

  REQUIRE(bp.blocks.size() == 4);
  CHECK(bp.blocks[0].str() == "aa");
  CHECK(bp.blocks[1].str() == "ab");
  CHECK(bp.blocks[2].str() == "ba");
  CHECK(bp.blocks[3].str() == "bb");

  // the block "ab" maps to the 2-windows of "abba" anchored at 0 and 1
  const Word& im = bp.sub.image(bp.sub.alphabet()->index("ab"));
  REQUIRE(im.size() == 2);
  CHECK(bp.sub.alphabet()->symbol(im[0]) == "ab");
  CHECK(bp.sub.alphabet()->symbol(im[1]) == "bb");

  // the coded fixed point of the block presentation lists the sliding
  // blocks of the original fixed point
  long n = 500;
  Word bx = bp.sub.fixed_point_prefix(n);
  Word x = s.fixed_point_prefix(n + 2);
  for (long i = 0; i < n; ++i)
    CHECK(bp.blocks[static_cast<size_t>(bx[i])] == x.subword(i, 2));
  CHECK(bp.first_letter.apply(bx) == x.subword(0, n));

  // 1-block presentation is the substitution itself up to naming
  BlockPresentation b1 = k_block_substitution(s, 1);
  CHECK(b1.sub.fixed_point_prefix(100).letters() ==
        s.fixed_point_prefix(100).letters());
}

TEST_CASE("primitive components") {
  PrimitiveComponent pc = primitive_component(testutil::chain());
  CHECK(pc.power == 1);
  CHECK(pc.letters == std::vector<int>{2});  // {c}
  CHECK(pc.restricted.image(0).size() == 2);

  PrimitiveComponent pb =
      primitive_component(make_sub("ab", {"ab", "bb"}, "a"));
  CHECK(pb.power == 1);
  CHECK(pb.letters == std::vector<int>{1});  // {b}

  PrimitiveComponent pt = primitive_component(testutil::tm());
  CHECK(pt.power == 1);
  CHECK(pt.letters == std::vector<int>{0, 1});  // whole alphabet
  CHECK(pt.restricted.fixed_point_prefix(32) ==
        testutil::tm().fixed_point_prefix(32));
}

TEST_CASE("eventually periodic sequences as coded fixed points") {
  AlphabetPtr B = make_alphabet("01");

  CodedSubstitution cs =
      periodic_to_substitution(Word::parse(B, "1"), Word::parse(B, "0"), 3);
  CHECK(cs.sub.length() == 3);
  Word y = cs.coding.apply(cs.sub.fixed_point_prefix(200));
  for (long i = 0; i < 200; ++i) CHECK(y[i] == (i == 0 ? 1 : 0));

  CodedSubstitution alt =
      periodic_to_substitution(Word::empty(B), Word::parse(B, "01"), 2);
  Word z = alt.coding.apply(alt.sub.fixed_point_prefix(100));
  for (long i = 0; i < 100; ++i) CHECK(z[i] == i % 2);

  AlphabetPtr A = make_alphabet("ab");
  CodedSubstitution ab =
      periodic_to_substitution(Word::parse(A, "ab"), Word::parse(A, "ba"), 2);
  Word w = ab.coding.apply(ab.sub.fixed_point_prefix(100));
  for (long i = 0; i < 100; ++i) {
    int32_t want = i < 2 ? (i == 0 ? 0 : 1) : (i % 2 == 0 ? 1 : 0);
    CHECK(w[i] == want);
  }

  CHECK_THROWS_AS(
      periodic_to_substitution(Word::empty(B), Word::empty(B), 2),
      ValidationError);
  CHECK_THROWS_AS(
      periodic_to_substitution(Word::empty(B), Word::parse(B, "0"), 1),
      ValidationError);
}

TEST_CASE("occurrence indicator coding") {
  Substitution s = testutil::tm();
  Word u = Word::parse(s.alphabet(), "ab");
  CodedSubstitution ind = indicator_coding(s, u);

  long n = 300;
  Word y = ind.coding.apply(ind.sub.fixed_point_prefix(n));
  Word x = s.fixed_point_prefix(n + u.size());
  std::vector<long> pos = occurrence_positions(u, x);
  std::set<long> hits(pos.begin(), pos.end());
  for (long i = 0; i < n; ++i)
    CHECK(y[i] == (hits.count(i) ? 1 : 0));

  CHECK_THROWS_AS(indicator_coding(s, Word::parse(s.alphabet(), "aaa")),
                  ValidationError);
}
