#pragma once

#include <string>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/substitution.hpp"

namespace autoseq {

// Return words to u: the words between consecutive occurrences.
struct ReturnWordIndex {
  Word target;
  std::vector<long> positions;
  std::vector<Word> returns;  // distinct, sorted
  long max_gap = 0;
};

ReturnWordIndex return_words(const Word& prefix, const Word& u);

long complexity(const Word& prefix, long n);

// K estimated as max ceil(|w| / |u|) over factors u up to max_len and their
// return words w, on a prefix grown until a doubled prefix agrees.
struct EstimateReport {
  long K = 1;
  long prefix_len = 0;
  bool stable = false;
};

EstimateReport lr_constant_estimate(const Substitution& s, long max_len);

// The four bound checks attached to linear recurrence with constant K:
// factor counts, power-freeness, return word lengths, return word counts.
struct LinrecReport {
  bool skipped_periodic = false;
  bool complexity_ok = true;      // p(n) <= K n
  bool power_free_ok = true;      // no (K+1)-th power of a short word
  bool return_length_ok = true;   // |w| > |u| / K
  bool return_count_ok = true;    // #R_u <= K (K+1)^2
  std::string witness;
  bool ok() const {
    return complexity_ok && power_free_ok && return_length_ok &&
           return_count_ok;
  }
};

LinrecReport check_linrec_props(const Substitution& s, long K, long max_len);

enum class Periodicity { PERIODIC, NON_PERIODIC, INCONCLUSIVE };

struct PeriodicityReport {
  Periodicity verdict = Periodicity::INCONCLUSIVE;
  long period = 0;     // PERIODIC: least period of the tail
  long preperiod = 0;  // PERIODIC: least preperiod for that period
  long witness_n = 0;  // NON_PERIODIC: p(n) >= n + 1 for all n up to this
};

// PERIODIC requires a certified tail: every return word to the period word
// equals the period word itself. NON_PERIODIC requires factor counts above
// the periodicity threshold at every length up to the witness, stable under
// prefix halving. Everything else is INCONCLUSIVE.
PeriodicityReport is_ultimately_periodic(const Word& prefix);

struct IndependenceResult {
  bool independent = true;
  long long k = 0, l = 0;  // dependent: p^k = q^l, minimal positive
};

IndependenceResult multiplicatively_independent(long long p, long long q);

struct DensityWitness {
  long n = 0, m = 0;
  Rat value;  // alpha^n / beta^m
};

// Least n+m (ties: least n) with |alpha^n / beta^m - t| < eps, searched over
// n + m <= bound with exact rational arithmetic. Dependent integer bases are
// degenerate: (0,0) when t is within eps of 1, an error otherwise.
DensityWitness density_search(const Rat& alpha, const Rat& beta, const Rat& t,
                              const Rat& eps, long bound = 128);

}  // namespace autoseq
