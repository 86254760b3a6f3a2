#include "autoseq/numeration.hpp"

#include <algorithm>

namespace autoseq {

NumerationSystem NumerationSystem::base(long p) {
  if (p < 2) throw ValidationError("base must be >= 2");
  NumerationSystem u({1}, {});
  u.p_ = p;
  return u;
}

NumerationSystem::NumerationSystem(std::vector<long long> terms,
                                   std::vector<long long> rec)
    : terms_(std::move(terms)), rec_(std::move(rec)) {
  if (terms_.empty() || terms_[0] != 1)
    throw ValidationError("numeration scale must start at U_0 = 1");
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i] <= terms_[i - 1])
      throw ValidationError("numeration scale must be strictly increasing");
  for (long long c : rec_)
    if (c < 0) throw ValidationError("recurrence coefficients must be >= 0");
}

long NumerationSystem::base_p() const {
  if (!is_base()) throw ValidationError("not a base-p system");
  return p_;
}

void NumerationSystem::extend_to(int i) const {
  while (static_cast<int>(terms_.size()) <= i) {
    long long next;
    if (p_) {
      if (__builtin_mul_overflow(terms_.back(), static_cast<long long>(p_),
                                 &next))
        throw ValidationError("numeration term overflow");
    } else {
      if (rec_.empty())
        throw ValidationError("finite numeration table exhausted");
      if (terms_.size() < rec_.size())
        throw ValidationError("numeration table shorter than its recurrence");
      next = 0;
      for (size_t j = 0; j < rec_.size(); ++j) {
        long long t;
        if (__builtin_mul_overflow(rec_[j], terms_[terms_.size() - 1 - j], &t) ||
            __builtin_add_overflow(next, t, &next))
          throw ValidationError("numeration term overflow");
      }
      if (next <= terms_.back())
        throw ValidationError("recurrence does not increase the scale");
    }
    terms_.push_back(next);
  }
}

long long NumerationSystem::term(int i) const {
  if (i < 0) throw ValidationError("negative scale index");
  extend_to(i);
  return terms_[static_cast<size_t>(i)];
}

int NumerationSystem::index_of_largest_leq(long long x) const {
  if (x < 1) throw ValidationError("index_of_largest_leq needs x >= 1");
  int i = 0;
  while (true) {
    long long next;
    try {
      next = term(i + 1);
    } catch (const ValidationError&) {
      break;  // scale cannot be extended; U_i is the last term available
    }
    if (next > x) break;
    ++i;
  }
  if (term(i) > x) throw ValidationError("scale does not reach down to x");
  return i;
}

long NumerationSystem::digit_bound() const {
  if (p_) return p_;
  long bound = 1;
  for (size_t i = 1; i < terms_.size(); ++i) {
    long long q = (terms_[i] + terms_[i - 1] - 1) / terms_[i - 1];
    bound = std::max(bound, static_cast<long>(q));
  }
  return bound;
}

std::vector<long> greedy_rep(const NumerationSystem& U, long long x) {
  if (x < 0) throw ValidationError("greedy_rep needs x >= 0");
  if (x == 0) return {};
  int top = U.index_of_largest_leq(x);
  long bound = U.digit_bound();
  std::vector<long> digits;
  digits.reserve(static_cast<size_t>(top) + 1);
  long long rem = x;
  for (int i = top; i >= 0; --i) {
    long long u = U.term(i);
    long long d = rem / u;
    if (d >= bound)
      throw ValidationError("scale too short to represent " +
                            std::to_string(x));
    digits.push_back(static_cast<long>(d));
    rem %= u;
  }
  return digits;
}

long long rep_value(const NumerationSystem& U, const std::vector<long>& digits) {
  long bound = U.digit_bound();
  long long x = 0;
  long n = static_cast<long>(digits.size());
  for (long t = 0; t < n; ++t) {
    long d = digits[static_cast<size_t>(t)];
    if (d < 0 || d >= bound)
      throw ValidationError("digit out of range [0, " + std::to_string(bound) +
                            ")");
    long long val;
    if (__builtin_mul_overflow(static_cast<long long>(d), U.term(n - 1 - t),
                               &val) ||
        __builtin_add_overflow(x, val, &x))
      throw ValidationError("value overflow");
  }
  return x;
}

std::vector<long> pad_rep(std::vector<long> digits, long len) {
  if (len < static_cast<long>(digits.size()))
    throw ValidationError("pad length shorter than the digit string");
  std::vector<long> out(static_cast<size_t>(len), 0);
  std::copy(digits.begin(), digits.end(),
            out.begin() + (len - static_cast<long>(digits.size())));
  return out;
}

TupleWord encode_tuple(long p, const std::vector<long long>& x) {
  if (x.empty()) throw ValidationError("empty tuple");
  NumerationSystem U = NumerationSystem::base(p);
  std::vector<std::vector<long>> reps;
  long len = 0;
  for (long long c : x) {
    reps.push_back(greedy_rep(U, c));
    len = std::max(len, static_cast<long>(reps.back().size()));
  }
  for (auto& r : reps) r = pad_rep(std::move(r), len);
  TupleWord tw;
  tw.p = p;
  tw.dim = static_cast<int>(x.size());
  tw.tuples.resize(static_cast<size_t>(len));
  for (long t = 0; t < len; ++t) {
    auto& tup = tw.tuples[static_cast<size_t>(t)];
    tup.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i)
      tup[i] = reps[i][static_cast<size_t>(t)];
  }
  return tw;
}

std::vector<long long> decode_tuple(const TupleWord& tw) {
  NumerationSystem U = NumerationSystem::base(tw.p);
  std::vector<long long> x(static_cast<size_t>(tw.dim), 0);
  for (int i = 0; i < tw.dim; ++i) {
    std::vector<long> digits;
    for (const auto& tup : tw.tuples) {
      if (static_cast<int>(tup.size()) != tw.dim)
        throw ValidationError("ragged digit tuple");
      digits.push_back(tup[static_cast<size_t>(i)]);
    }
    x[static_cast<size_t>(i)] = rep_value(U, digits);
  }
  return x;
}

}  // namespace autoseq
