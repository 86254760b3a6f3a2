#pragma once

#include <set>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/perron.hpp"
#include "autoseq/substitution.hpp"

namespace autoseq {

// Box of letters with axis-1-fastest linear indexing:
// index(x) = x_1 + shape_1 * (x_2 + shape_2 * (...)).
struct ArrayWindow {
  AlphabetPtr alphabet;
  std::vector<long> shape;
  std::vector<int32_t> cells;

  static ArrayWindow filled(AlphabetPtr alphabet, std::vector<long> shape,
                            int32_t letter);

  int dim() const { return static_cast<int>(shape.size()); }
  long cell_count() const;
  long index(const std::vector<long>& x) const;
  int32_t at(const std::vector<long>& x) const { return cells[static_cast<size_t>(index(x))]; }
  void set(const std::vector<long>& x, int32_t letter) {
    cells[static_cast<size_t>(index(x))] = letter;
  }
  bool is_cube(long side) const;
  ArrayWindow sub(const std::vector<long>& origin,
                  const std::vector<long>& sub_shape) const;
  bool operator==(const ArrayWindow& o) const;
  bool operator!=(const ArrayWindow& o) const { return !(*this == o); }
};

// Odometer over a box, axis 1 fastest; returns false after the last point.
bool next_point(std::vector<long>& x, const std::vector<long>& shape);

// Finite pattern: distinct support vectors containing 0, one letter each.
struct Pattern {
  AlphabetPtr alphabet;
  std::vector<std::vector<long>> support;
  std::vector<int32_t> values;
};

Pattern cube_pattern(const ArrayWindow& w);
long count_pattern(const ArrayWindow& w, const Pattern& p);

// Block substitution on N^dim: each letter maps to a side^dim window.
class NdSubstitution {
public:
  NdSubstitution(AlphabetPtr alphabet, int dim, long side,
                 std::vector<ArrayWindow> rules);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int dim() const { return dim_; }
  long side() const { return side_; }
  long theta() const;  // side^dim
  const ArrayWindow& rule(int letter) const {
    return rules_.at(static_cast<size_t>(letter));
  }

private:
  AlphabetPtr alphabet_;
  int dim_;
  long side_;
  std::vector<ArrayWindow> rules_;
};

// Shape grows by the factor side per axis; the cell at side*j + k is
// rule(w(j))(k).
ArrayWindow expand(const NdSubstitution& s, const ArrayWindow& w);

NdSubstitution nd_power(const NdSubstitution& s, int m);

// m(s)_{a,b} = number of cells of rule(b) holding a; columns sum to theta.
IntMatrix nd_incidence(const NdSubstitution& s);

// n-fold expansion of a seed cell fixed by the corner map a -> rule(a)(0),
// taking the least power of s for which such a seed exists.
struct NdFixedArray {
  ArrayWindow window;
  int power = 1;
  int32_t seed = 0;
};

NdFixedArray fixed_array(const NdSubstitution& s, int n);

// Induced substitution on the 2-cubes of the generated array: the image of
// a 2-cube b lists the 2-cubes of expand(b) anchored inside the image of
// b's corner cell.
struct NdBlockPresentation {
  NdSubstitution sub;
  std::vector<ArrayWindow> blocks;  // 2-cubes, in alphabet order of sub
};

NdBlockPresentation two_cube_substitution(const NdSubstitution& s);

// Exact frequency of a cubic pattern in the generated array, through the
// Perron vector of the induced 2-cube substitution: with k the unique
// integer such that side^{k-1} <= R < side^k, every occurrence anchors in
// the k-fold image of a unique 2-cube, so
// freq(p) = sum_b count_anchored(p, expand^k(b)) * freq2(b) / theta^k.
Rat pattern_frequency_exact(const NdSubstitution& s, const ArrayWindow& p);

struct EmpiricalFrequency {
  double value = 0;
  double prev = 0;  // value at the previous expansion step
  long side = 0;
};

EmpiricalFrequency pattern_frequency_empirical(const NdSubstitution& s,
                                               const ArrayWindow& p,
                                               long max_cells = 1 << 20);

// Scaled frequency set {freq(p) * theta^{k(R)}} over cubic patterns with
// side R <= max_r, compared against the same set for R <= max_r / 2.
struct NdFreqArrayReport {
  std::set<Rat> scaled, scaled_half;
  bool stabilized = false;
  bool periodic_flag = false;
  std::vector<int> k_of_r;  // k(R) for R = 1..max_r
  long pattern_count = 0;
};

NdFreqArrayReport verify_freq_array(const NdSubstitution& s, long max_r);

// K: least constant such that every (K R)-sided window of the generated
// array contains every R-cubic pattern, R <= max_r. K': least constant
// such that distinct occurrences of an R-cubic pattern are at Chebyshev
// distance >= R / K'. Both recomputed on a doubled window for stability.
struct SpacingReport {
  long K = 0, K_prev = 0;
  long Kprime = 0, Kprime_prev = 0;
  bool stable = false;
  bool periodic_flag = false;
  long side = 0;
};

SpacingReport spacing_and_repetitivity_check(const NdSubstitution& s,
                                             long max_r);

struct NdCodedSubstitution {
  NdSubstitution sub;
  Coding coding;
};

// States become letters; the rule window of a state lists its successors,
// the cell at digit tuple k being the state reached on symbol k. Terminal
// states code to "1"; the coded fixed array is the indicator of the
// recognized subset of N^dim.
NdCodedSubstitution automaton_to_ndsubstitution(const Automaton& a);

}  // namespace autoseq
