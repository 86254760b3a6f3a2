#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "autoseq/ndsubst.hpp"
#include "autoseq/perron.hpp"
#include "autoseq/recurrence.hpp"
#include "autoseq/substitution.hpp"

namespace autoseq {

// Sliding block code, given extensionally: a total table from windows over
// the domain alphabet to letters of the codomain. In dimension one the
// window is a (2r+1)-word and output position i reads the input at
// [i, i+2r]; in higher dimensions the window is a side-R cube anchored at
// the output position.
struct BlockMap {
  AlphabetPtr domain, codomain;
  int dim = 1;
  long window = 1;  // cells per axis: 2r+1 in dimension one, else the side R
  std::map<std::vector<int32_t>, int32_t> table;

  BlockMap(AlphabetPtr domain, AlphabetPtr codomain, int dim, long window,
           std::map<std::vector<int32_t>, int32_t> table);

  long radius() const { return (window - 1) / 2; }  // dimension one
  long window_cells() const;
};

// Radius-zero block map of a letter-to-letter coding.
BlockMap block_map_of_coding(const Coding& c);

Word apply_block_map(const BlockMap& f, const Word& w);
ArrayWindow apply_block_map(const BlockMap& f, const ArrayWindow& w);

// All words of length |u| + 2r in the given language that map onto u.
std::set<Word> preimages(const BlockMap& f, const Word& u,
                         const std::set<Word>& language);

// Every block map factors through a sliding-block recoding: the coded
// fixed point of the (2r+1)-block substitution reproduces the image
// sequence letter for letter.
struct NormalizedBlockMap {
  BlockPresentation presentation;
  Coding coding;
};

NormalizedBlockMap normalize_block_map(const Substitution& s,
                                       const BlockMap& f);

// Frequency of u in the image of the fixed point under the block map:
// the sum of the source frequencies over the preimage words.
struct FactorFrequency {
  bool exact = false;
  Rat value;
  double value_d = 0;
};

FactorFrequency factor_frequencies(const Substitution& s, const BlockMap& f,
                                   const Word& u);

// Return word bounds for the coded sequence, given the recurrence constant
// K of the source: |u| / 2K <= |w| <= 2K |u|, at most 2K(2K+1)^2 return
// words, and occurrence counts bounded by 2K / |u| in proportion. n1 is
// the least length from which every longer length passes.
struct FactorLrReport {
  bool skipped_periodic = false;
  long n1 = 0;
  long checked_prefix = 0;
  bool bounds_ok = false;
  std::string witness;

  bool ok() const { return skipped_periodic || bounds_ok; }
};

FactorLrReport check_factor_lr(const Substitution& s, const BlockMap& f,
                               long max_len, long K);

// Joint consistency demonstration for two constant-length presentations
// of one sequence. Multiplicatively independent lengths force the coded
// sequence to be ultimately periodic, so the periodicity detector must
// come back positive; dependent lengths instead align the per-factor
// frequencies and both scaled frequency sets.
struct CobhamReport {
  long p = 0, q = 0;
  bool dependent = false;
  long witness_k = 0, witness_l = 0;  // p^witness_k == q^witness_l
  long prefix_checked = 0;

  PeriodicityReport periodicity;  // independent case
  bool theorem_consistent = false;
  std::string note;

  bool frequencies_match = false;  // dependent case
  std::set<Rat> scaled1, scaled2;
  bool scaled1_stable = false, scaled2_stable = false;
};

CobhamReport cobham_demo(const Substitution& s1, const Coding& c1,
                         const Substitution& s2, const Coding& c2,
                         long max_len);

}  // namespace autoseq
