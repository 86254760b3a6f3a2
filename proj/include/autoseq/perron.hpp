#pragma once

#include <map>
#include <set>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/substitution.hpp"
#include "autoseq/words.hpp"

namespace autoseq {

// Primitivity of a nonnegative square matrix: some power is positive.
// Decided on the support digraph: strong connectivity plus cycle-length
// gcd 1.
bool is_primitive(const IntMatrix& m);

// Dominant eigenvalue data of a primitive nonnegative matrix.
//
// When the matrix has constant column sums (constant-length substitutions)
// everything is exact: theta is the column sum, the right eigenvector is the
// rational kernel of (M - theta I) normalized to sum 1, and the left
// eigenvector is all ones. Otherwise theta and the eigenvectors are computed
// in floating point.
//
// The left vector is normalized so that <right, left> = 1.
struct EigenData {
  bool exact = false;
  Rat theta;                       // meaningful when exact
  std::vector<Rat> right, left;    // meaningful when exact
  double theta_d = 0;
  std::vector<double> right_d, left_d;
  double secondary_modulus = 0;    // modulus of the second largest eigenvalue
};
EigenData perron_data(const IntMatrix& m);

// Letter frequencies in the fixed point of a primitive substitution: the
// right Perron vector of the incidence matrix, indexed by the alphabet.
struct FrequencyTable {
  bool exact = false;
  std::vector<Word> items;         // sorted
  std::vector<Rat> freq;           // meaningful when exact
  std::vector<double> freq_d;
};
FrequencyTable letter_frequencies(const Substitution& s);

// Frequencies of the length-k factors, via the k-block presentation.
FrequencyTable word_frequencies(const Substitution& s, long k);

// Scaled frequency report: every factor frequency, multiplied by
// theta^{k(n)} where n is the factor length and k(n) is the smallest k with
// n <= min_a |s^k(a)|, falls in a finite set independent of n.
struct ThetaScalingReport {
  bool exact = false;
  std::set<Rat> scaled;        // over factor lengths 1..max_len
  std::set<Rat> scaled_half;   // over factor lengths 1..max_len/2
  bool stabilized = false;     // scaled == scaled_half
  std::vector<int> k_of_n;     // k(n) for n = 1..max_len
};
ThetaScalingReport verify_theta_scaling(const Substitution& s, long max_len);

}  // namespace autoseq
