#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>

#include "autoseq/words.hpp"
#include "doctest.h"

using namespace autoseq;

namespace {

// Reference count via std::string::find, independent of the library scan.
long long count_str(const std::string& u, const std::string& w) {
  if (u.empty()) return static_cast<long long>(w.size()) + 1;
  long long n = 0;
  for (size_t pos = w.find(u); pos != std::string::npos;
       pos = w.find(u, pos + 1))
    ++n;
  return n;
}

Morphism sigma_ab_ba() {  // a -> ab, b -> ba
  AlphabetPtr A = make_alphabet("ab");
  return Morphism(A, A, {Word::parse(A, "ab"), Word::parse(A, "ba")});
}

Morphism sigma_chain() {  // a -> ab, b -> bc, c -> cc
  AlphabetPtr A = make_alphabet("abc");
  return Morphism(A, A,
                  {Word::parse(A, "ab"), Word::parse(A, "bc"),
                   Word::parse(A, "cc")});
}

}  // namespace

TEST_CASE("alphabet basics") {
  AlphabetPtr A = make_alphabet("ab");
  CHECK(A->size() == 2);
  CHECK(A->symbol(0) == "a");
  CHECK(A->index("b") == 1);
  CHECK(!A->find("c").has_value());
  CHECK_THROWS_AS(A->index("c"), ValidationError);
  CHECK_THROWS_AS(make_alphabet(std::vector<std::string>{"a", "a"}),
                  ValidationError);
  CHECK_THROWS_AS(make_alphabet(std::vector<std::string>{}), ValidationError);

  AlphabetPtr T = make_alphabet("(0,0) (0,1) (1,0) (1,1)");
  CHECK(T->size() == 4);
  CHECK(T->index("(1,0)") == 2);
  CHECK(!T->single_char());
}

TEST_CASE("word parse, str, subword") {
  AlphabetPtr A = make_alphabet("ab");
  Word w = Word::parse(A, "abba");
  CHECK(w.size() == 4);
  CHECK(w.str() == "abba");
  CHECK(w.subword(1, 2).str() == "bb");
  CHECK(w.subword(4, 0).empty());
  CHECK_THROWS_AS(w.subword(3, 2), ValidationError);
  CHECK_THROWS_AS(Word::parse(A, "abc"), ValidationError);

  AlphabetPtr T = make_alphabet("(0,0) (1,1)");
  Word t = Word::parse(T, "(1,1) (0,0)");
  CHECK(t.size() == 2);
  CHECK(t.str() == "(1,1) (0,0)");
}

TEST_CASE("counting occurrences") {
  AlphabetPtr A = make_alphabet("ab");
  Word w = Word::parse(A, "abbabaabba");

  CHECK(count_occurrences(Word::parse(A, "a"), w) == 5);
  CHECK(count_occurrences(Word::empty(A), w) == 11);

  AlphabetPtr Aa = make_alphabet("a");
  CHECK(count_occurrences(Word::parse(Aa, "aa"), Word::parse(Aa, "aaa")) == 2);

  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    std::string ws, us;
    int wl = static_cast<int>(rng() % 30);
    int ul = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < wl; ++i) ws += static_cast<char>('a' + rng() % 2);
    for (int i = 0; i < ul; ++i) us += static_cast<char>('a' + rng() % 2);
    Word ww = Word::parse(A, ws), uu = Word::parse(A, us);
    CHECK(count_occurrences(uu, ww) == count_str(us, ws));
    CHECK(static_cast<long long>(occurrence_positions(uu, ww).size()) ==
          count_str(us, ws));
  }

  AlphabetPtr B = make_alphabet("xy");
  CHECK_THROWS_AS(count_occurrences(Word::parse(B, "x"), w), ValidationError);
}

TEST_CASE("factors") {
  AlphabetPtr A = make_alphabet("ab");
  std::set<Word> f = factors(Word::parse(A, "abba"), 2);
  std::set<Word> want{Word::parse(A, "ab"), Word::parse(A, "bb"),
                      Word::parse(A, "ba")};
  CHECK(f == want);
  CHECK(factors(Word::parse(A, "abba"), 5).empty());
  CHECK(factors(Word::parse(A, "abba"), 0).size() == 1);
}

TEST_CASE("morphism application") {
  Morphism s = sigma_ab_ba();
  AlphabetPtr A = s.domain();
  CHECK(s.apply(Word::parse(A, "ab")).str() == "abba");
  CHECK(s.apply(Word::empty(A)).empty());
  CHECK(s.constant_length());
  CHECK(!s.erasing());

  AlphabetPtr B = make_alphabet("xy");
  CHECK_THROWS_AS(s.apply(Word::parse(B, "x")), ValidationError);
  CHECK_THROWS_AS(Morphism(A, A, {Word::parse(A, "a")}), ValidationError);
}

TEST_CASE("incidence matrices of the running examples") {
  IntMatrix m3 = incidence_matrix(sigma_ab_ba());
  CHECK(m3.at(0, 0) == 1);
  CHECK(m3.at(0, 1) == 1);
  CHECK(m3.at(1, 0) == 1);
  CHECK(m3.at(1, 1) == 1);

  IntMatrix m2 = incidence_matrix(sigma_chain());
  long long want[3][3] = {{1, 0, 0}, {1, 1, 0}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m2.at(i, j) == want[i][j]);

  std::vector<long long> cs = m2.column_sums();
  for (int j = 0; j < 3; ++j)
    CHECK(cs[static_cast<size_t>(j)] == sigma_chain().image(j).size());
}

TEST_CASE("composition matches matrix product") {
  std::mt19937 rng(99);
  std::vector<AlphabetPtr> alphas{make_alphabet("ab"), make_alphabet("xyz"),
                                  make_alphabet("pq")};
  for (int it = 0; it < 50; ++it) {
    AlphabetPtr A = alphas[rng() % 3], B = alphas[rng() % 3],
                C = alphas[rng() % 3];
    auto rand_morph = [&](AlphabetPtr dom, AlphabetPtr cod) {
      std::vector<Word> im;
      for (int a = 0; a < dom->size(); ++a) {
        std::vector<int32_t> v;
        int len = static_cast<int>(rng() % 4);  // may be erasing
        for (int i = 0; i < len; ++i)
          v.push_back(static_cast<int32_t>(rng() % cod->size()));
        im.emplace_back(cod, std::move(v));
      }
      return Morphism(dom, cod, std::move(im));
    };
    Morphism m2 = rand_morph(A, B), m1 = rand_morph(B, C);
    Morphism m = compose(m1, m2);
    CHECK(incidence_matrix(m) == incidence_matrix(m1) * incidence_matrix(m2));

    std::vector<int32_t> v;
    for (int i = 0; i < 6; ++i)
      v.push_back(static_cast<int32_t>(rng() % A->size()));
    Word w(A, v);
    CHECK(m.apply(w) == m1.apply(m2.apply(w)));
  }
}

TEST_CASE("matrix powers and arithmetic") {
  IntMatrix m = incidence_matrix(sigma_chain());
  IntMatrix p = IntMatrix::identity(3);
  for (int n = 0; n <= 10; ++n) {
    CHECK(m.pow(n) == p);
    p = p * m;
  }
  CHECK(!m.positive());
  CHECK(incidence_matrix(sigma_ab_ba()).positive());

  IntMatrix big(1, 1);
  big.at(0, 0) = 1LL << 62;
  CHECK_THROWS_AS(big * big, ValidationError);
}
