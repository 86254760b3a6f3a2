#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "autoseq/numeration.hpp"
#include "doctest.h"

using namespace autoseq;

namespace {

// Reference base-p digits, least significant first, then reversed.
std::vector<long> digits_ref(long p, long long x) {
  std::vector<long> d;
  while (x) {
    d.push_back(static_cast<long>(x % p));
    x /= p;
  }
  return {d.rbegin(), d.rend()};
}

}  // namespace

TEST_CASE("base-p greedy digits") {
  NumerationSystem b2 = NumerationSystem::base(2);
  CHECK(greedy_rep(b2, 5) == std::vector<long>{1, 0, 1});
  CHECK(greedy_rep(b2, 0).empty());
  CHECK(greedy_rep(b2, 1) == std::vector<long>{1});

  for (long p : {2L, 3L, 5L, 10L}) {
    NumerationSystem U = NumerationSystem::base(p);
    for (long long x = 0; x < 4096; ++x) {
      std::vector<long> r = greedy_rep(U, x);
      CHECK(r == digits_ref(p, x));
      CHECK(rep_value(U, r) == x);
      if (x > 0) {
        CHECK(r.front() != 0);
        // |rep(x)| = floor(log_p x) + 1
        long len = 1;
        long long pw = p;
        while (pw <= x) {
          pw *= p;
          ++len;
        }
        CHECK(static_cast<long>(r.size()) == len);
      }
    }
  }
}

TEST_CASE("genealogical monotonicity") {
  for (long p : {2L, 3L}) {
    NumerationSystem U = NumerationSystem::base(p);
    std::vector<long> prev;
    for (long long x = 1; x < 500; ++x) {
      std::vector<long> cur = greedy_rep(U, x);
      if (!prev.empty()) {
        bool less = prev.size() != cur.size() ? prev.size() < cur.size()
                                              : prev < cur;
        CHECK(less);
      }
      prev = cur;
    }
  }
}

TEST_CASE("general scale with recurrence") {
  // 1, 2, 3, 5, 8, 13, ... extended by U_n = U_{n-1} + U_{n-2}.
  NumerationSystem fib({1, 2}, {1, 1});
  CHECK(fib.term(2) == 3);
  CHECK(fib.term(4) == 8);
  CHECK(fib.digit_bound() == 2);
  CHECK(greedy_rep(fib, 4) == std::vector<long>{1, 0, 1});
  CHECK(rep_value(fib, {1, 0, 1}) == 4);

  for (long long x = 0; x < 1000; ++x) {
    std::vector<long> r = greedy_rep(fib, x);
    CHECK(rep_value(fib, r) == x);
    // Greedy Fibonacci digits never have two adjacent ones.
    for (size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i] * r[i + 1] == 0);
  }

  CHECK_THROWS_AS(rep_value(fib, {2}), ValidationError);
  CHECK_THROWS_AS(NumerationSystem({2, 3}, {}), ValidationError);
  CHECK_THROWS_AS(NumerationSystem({1, 1}, {}), ValidationError);

  NumerationSystem finite({1, 2, 4}, {});
  CHECK(greedy_rep(finite, 3) == std::vector<long>{1, 1});
  CHECK_THROWS_AS(greedy_rep(finite, 9), ValidationError);
}

TEST_CASE("padding") {
  CHECK(pad_rep({1, 0, 1}, 5) == std::vector<long>{0, 0, 1, 0, 1});
  CHECK(pad_rep({}, 2) == std::vector<long>{0, 0});
  CHECK_THROWS_AS(pad_rep({1, 1}, 1), ValidationError);
}

TEST_CASE("digit tuples") {
  TupleWord tw = encode_tuple(2, {1, 5});
  CHECK(tw.dim == 2);
  REQUIRE(tw.tuples.size() == 3);
  CHECK(tw.tuples[0] == std::vector<long>{0, 1});
  CHECK(tw.tuples[1] == std::vector<long>{0, 0});
  CHECK(tw.tuples[2] == std::vector<long>{1, 1});

  TupleWord t3 = encode_tuple(3, {4, 2});
  REQUIRE(t3.tuples.size() == 2);
  CHECK(t3.tuples[0] == std::vector<long>{1, 0});
  CHECK(t3.tuples[1] == std::vector<long>{1, 2});

  for (long long a = 0; a < 40; ++a)
    for (long long b = 0; b < 40; ++b) {
      std::vector<long long> back = decode_tuple(encode_tuple(2, {a, b}));
      CHECK(back == std::vector<long long>{a, b});
    }

  CHECK(encode_tuple(2, {0, 0}).tuples.empty());
}
