#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "autoseq/recurrence.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace autoseq;
using testutil::make_sub;

namespace {

Word parse_ab(const std::string& text) {
  return Word::parse(make_alphabet("ab"), text);
}

Word repeat_ab(const std::string& block, long times,
               const std::string& head = "") {
  std::string s = head;
  for (long i = 0; i < times; ++i) s += block;
  return parse_ab(s);
}

// independent return-word scan over a plain string
std::set<std::string> returns_ref(const std::string& x, const std::string& u) {
  std::set<std::string> out;
  size_t prev = std::string::npos;
  for (size_t i = x.find(u); i != std::string::npos; i = x.find(u, i + 1)) {
    if (prev != std::string::npos) out.insert(x.substr(prev, i - prev));
    prev = i;
  }
  return out;
}

}  // namespace

TEST_CASE("occurrence positions") {
  AlphabetPtr A = make_alphabet("ab");
  Word w = Word::parse(A, "abbabaabba");
  CHECK(occurrence_positions(Word::parse(A, "a"), w) ==
        std::vector<long>{0, 3, 5, 6, 9});
  CHECK(occurrence_positions(Word::parse(A, "aa"), parse_ab("aaa")) ==
        std::vector<long>{0, 1});
  CHECK(occurrence_positions(Word::parse(A, "aaaa"), parse_ab("aaa")).empty());
}

TEST_CASE("return words") {
  Word tm = testutil::tm().fixed_point_prefix(10000);
  AlphabetPtr A = tm.alphabet();
  Word a = Word::parse(A, "a");
  ReturnWordIndex idx = return_words(tm, a);

  std::vector<std::string> got;
  for (const Word& w : idx.returns) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"a", "ab", "abb"});

  std::string x;
  for (long i = 0; i < tm.size(); ++i) x += A->symbol(tm[i]);
  std::set<std::string> want = returns_ref(x, "a");
  CHECK(std::set<std::string>(got.begin(), got.end()) == want);

  // partition: the returns tile the prefix between first and last occurrence
  Word tiled = Word::parse(A, "");
  for (size_t i = 0; i + 1 < idx.positions.size(); ++i)
    tiled = tiled.concat(tm.subword(idx.positions[i],
                                     idx.positions[i + 1] - idx.positions[i]));
  CHECK(tiled == tm.subword(idx.positions.front(),
                            idx.positions.back() - idx.positions.front()));

  // gap duality and the two-occurrence characterization
  long max_len = 0;
  for (const Word& w : idx.returns) {
    max_len = std::max(max_len, w.size());
    Word wu = w.concat(a);
    CHECK(count_occurrences(wu, tm) > 0);
    CHECK(wu.subword(0, 1) == a);
    CHECK(count_occurrences(a, wu) == 2);
  }
  CHECK(idx.max_gap == max_len);

  ReturnWordIndex sq = return_words(parse_ab("aaaaaaa"), parse_ab("aa"));
  CHECK(sq.returns.size() == 1);
  CHECK(sq.returns[0].str() == "a");

  ReturnWordIndex per = return_words(repeat_ab("ab", 50), parse_ab("ab"));
  CHECK(per.returns.size() == 1);
  CHECK(per.returns[0].str() == "ab");

  CHECK_THROWS_AS(return_words(parse_ab("abba"), parse_ab("bb")),
                  ValidationError);
}

TEST_CASE("factor complexity") {
  Word tm = testutil::tm().fixed_point_prefix(1 << 15);
  CHECK(complexity(tm, 0) == 1);
  CHECK(complexity(tm, 1) == 2);
  CHECK(complexity(tm, 2) == 4);
  CHECK(complexity(tm, 3) == 6);
  CHECK(complexity(repeat_ab("ab", 100), 5) == 2);

  // stabilized, non-decreasing, and growth bounded by the alphabet
  Word tm2 = testutil::tm().fixed_point_prefix(1 << 16);
  long prev = 1;
  for (long n = 1; n <= 32; ++n) {
    long pn = complexity(tm, n);
    CHECK(pn == complexity(tm2, n));
    CHECK(pn >= prev);
    CHECK(pn <= prev * 2);
    prev = pn;
  }
}

TEST_CASE("linear recurrence constant") {
  EstimateReport tm = lr_constant_estimate(testutil::tm(), 16);
  CHECK(tm.stable);
  CHECK(tm.K == 8);

  // independent recomputation on a fresh prefix of unrelated length
  {
    std::string x = "a";
    std::map<char, std::string> rule{{'a', "ab"}, {'b', "ba"}};
    while (x.size() < 150000) {
      std::string next;
      for (char c : x) next += rule[c];
      x = next;
    }
    x.resize(150000);
    long K = 1;
    for (long l = 1; l <= 16; ++l) {
      std::unordered_map<std::string, size_t> last;
      for (size_t i = 0; i + l <= x.size(); ++i) {
        auto [it, fresh] = last.emplace(x.substr(i, l), i);
        if (!fresh) {
          long gap = static_cast<long>(i - it->second);
          K = std::max(K, (gap + l - 1) / l);
          it->second = i;
        }
      }
    }
    CHECK(K == tm.K);
  }

  Substitution cc = make_sub("c", {"cc"}, "c");
  CHECK(lr_constant_estimate(cc, 16).K == 1);

  EstimateReport s1 = lr_constant_estimate(make_sub("ab", {"aba", "bab"}, "a"), 16);
  CHECK(s1.stable);
  CHECK(s1.K == 2);

  CHECK_THROWS_AS(lr_constant_estimate(testutil::chain(), 8), ValidationError);
}

TEST_CASE("linear recurrence bound checks") {
  EstimateReport est = lr_constant_estimate(testutil::tm(), 16);
  LinrecReport rep = check_linrec_props(testutil::tm(), est.K, 16);
  CHECK(!rep.skipped_periodic);
  CHECK(rep.ok());
  CHECK(rep.witness.empty());

  LinrecReport tight = check_linrec_props(testutil::tm(), 1, 8);
  CHECK(!tight.ok());
  CHECK(!tight.complexity_ok);

  LinrecReport per = check_linrec_props(testutil::period2(), 4, 8);
  CHECK(per.skipped_periodic);
}

TEST_CASE("periodicity verdicts") {
  PeriodicityReport ab = is_ultimately_periodic(repeat_ab("ab", 64));
  CHECK(ab.verdict == Periodicity::PERIODIC);
  CHECK(ab.period == 2);
  CHECK(ab.preperiod == 0);

  PeriodicityReport pre = is_ultimately_periodic(repeat_ab("ba", 64, "aa"));
  CHECK(pre.verdict == Periodicity::PERIODIC);
  CHECK(pre.period == 2);
  CHECK(pre.preperiod == 1);

  PeriodicityReport one = is_ultimately_periodic(parse_ab("aaaaaaaaaaaaaaaaaa"));
  CHECK(one.verdict == Periodicity::PERIODIC);
  CHECK(one.period == 1);
  CHECK(one.preperiod == 0);

  PeriodicityReport tm =
      is_ultimately_periodic(testutil::tm().fixed_point_prefix(1 << 14));
  CHECK(tm.verdict == Periodicity::NON_PERIODIC);
  CHECK(tm.witness_n == 64);
  for (long n = 1; n <= tm.witness_n; ++n)
    CHECK(complexity(testutil::tm().fixed_point_prefix(1 << 14), n) >= n + 1);

  Substitution chain = testutil::chain();
  Coding mark = testutil::make_coding(chain.alphabet(), {"0", "1", "0"});
  Word powers = mark.apply(chain.fixed_point_prefix(1 << 14));
  PeriodicityReport pw = is_ultimately_periodic(powers);
  CHECK(pw.verdict == Periodicity::NON_PERIODIC);

  CHECK(is_ultimately_periodic(parse_ab("ab")).verdict ==
        Periodicity::INCONCLUSIVE);
}

TEST_CASE("multiplicative independence") {
  CHECK(multiplicatively_independent(2, 3).independent);
  CHECK(multiplicatively_independent(6, 12).independent);
  CHECK(multiplicatively_independent(10, 20).independent);

  IndependenceResult d48 = multiplicatively_independent(4, 8);
  CHECK(!d48.independent);
  CHECK(d48.k == 3);
  CHECK(d48.l == 2);

  IndependenceResult d927 = multiplicatively_independent(9, 27);
  CHECK(!d927.independent);
  CHECK(d927.k == 3);
  CHECK(d927.l == 2);

  IndependenceResult d264 = multiplicatively_independent(2, 64);
  CHECK(!d264.independent);
  CHECK(d264.k == 6);
  CHECK(d264.l == 1);

  CHECK(!multiplicatively_independent(5, 5).independent);
  CHECK_THROWS_AS(multiplicatively_independent(1, 2), ValidationError);

  // brute-force oracle over small exponents
  for (long long p = 2; p <= 40; ++p) {
    for (long long q = 2; q <= 40; ++q) {
      IndependenceResult r = multiplicatively_independent(p, q);
      bool found = false;
      long long wk = 0, wl = 0;
      mpz_class zp(std::to_string(p)), zq(std::to_string(q));
      for (long long k = 1; k <= 12 && !found; ++k)
        for (long long l = 1; l <= 12 && !found; ++l) {
          mpz_class pk, ql;
          mpz_pow_ui(pk.get_mpz_t(), zp.get_mpz_t(), static_cast<unsigned long>(k));
          mpz_pow_ui(ql.get_mpz_t(), zq.get_mpz_t(), static_cast<unsigned long>(l));
          if (pk == ql) {
            found = true;
            wk = k;
            wl = l;
          }
        }
      CHECK(r.independent == !found);
      if (found) {
        CHECK(r.k == wk);
        CHECK(r.l == wl);
      }
    }
  }
}

TEST_CASE("density of power quotients") {
  DensityWitness w = density_search(Rat(2), Rat(3), Rat(1), Rat(6, 100));
  CHECK(w.n == 8);
  CHECK(w.m == 5);
  CHECK(w.value == Rat(256, 243));

  // exhaustive minimality oracle in exact arithmetic
  for (long s = 1; s < 13; ++s)
    for (long n = 0; n <= s; ++n) {
      mpq_class an(1), bm(1);
      for (long i = 0; i < n; ++i) an *= 2;
      for (long i = 0; i < s - n; ++i) bm *= 3;
      mpq_class diff = an - bm;
      if (diff < 0) diff = -diff;
      CHECK(diff >= mpq_class(6, 100) * bm);
    }

  DensityWitness deg = density_search(Rat(2), Rat(2), Rat(1), Rat(1, 10));
  CHECK(deg.n == 0);
  CHECK(deg.m == 0);

  DensityWitness half = density_search(Rat(2), Rat(3), Rat(1, 2), Rat(5, 100));
  CHECK(half.n + half.m <= 64);
  Rat gap = half.value - Rat(1, 2);
  if (gap < 0) gap = -gap;
  CHECK(gap < Rat(5, 100));

  CHECK_THROWS_AS(density_search(Rat(4), Rat(8), Rat(3), Rat(1, 10)),
                  ValidationError);
  CHECK_THROWS_AS(density_search(Rat(2), Rat(3), Rat(1), Rat(1, 1000000), 20),
                  ValidationError);
  CHECK_THROWS_AS(density_search(Rat(1), Rat(3), Rat(1), Rat(1, 10)),
                  ValidationError);
}
