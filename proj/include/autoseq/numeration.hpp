#pragma once

#include <vector>

#include "autoseq/errors.hpp"

namespace autoseq {

// Positional numeration system over a strictly increasing scale
// U_0 = 1 < U_1 < U_2 < ...
//
// Base-p systems use U_i = p^i. General systems are given as an explicit
// finite table which may be extended on demand by a linear recurrence
// U_n = c_1 U_{n-1} + ... + c_r U_{n-r}.
class NumerationSystem {
public:
  static NumerationSystem base(long p);
  NumerationSystem(std::vector<long long> terms, std::vector<long long> rec);

  bool is_base() const { return p_ != 0; }
  long base_p() const;

  // U_i, generated on demand.
  long long term(int i) const;

  // Largest i with U_i <= x; requires x >= 1.
  int index_of_largest_leq(long long x) const;

  // Greedy digits lie in [0, digit_bound). For a base-p system this is p;
  // otherwise it is the ceiling of the largest ratio U_{i+1}/U_i seen across
  // the generated portion of the scale.
  long digit_bound() const;

private:
  long p_ = 0;
  mutable std::vector<long long> terms_;
  std::vector<long long> rec_;
  void extend_to(int i) const;
};

// Most-significant-first greedy representation; x = 0 gives the empty
// digit string, and otherwise the leading digit is nonzero.
std::vector<long> greedy_rep(const NumerationSystem& U, long long x);

// Value of a digit string (leading zeros allowed); every digit must lie in
// [0, digit_bound).
long long rep_value(const NumerationSystem& U, const std::vector<long>& digits);

// Prepends zeros up to the requested length.
std::vector<long> pad_rep(std::vector<long> digits, long len);

// Componentwise base-p digit tuples, most significant position first, all
// components padded to a common length.
struct TupleWord {
  long p = 2;
  int dim = 1;
  std::vector<std::vector<long>> tuples;  // tuples[t][i]: digit of component i
};

TupleWord encode_tuple(long p, const std::vector<long long>& x);
std::vector<long long> decode_tuple(const TupleWord& tw);

}  // namespace autoseq
