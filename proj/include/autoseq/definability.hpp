#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "autoseq/ndsubst.hpp"

namespace autoseq {

struct Box {
  std::vector<long> origin, shape;
};

// Binary window marking the cells holding the given letter.
ArrayWindow letter_indicator(const ArrayWindow& t, int32_t letter);

// Whether u in Z <=> u+v in Z for every u in the box with u+v in the box,
// membership read off the window (nonzero cell = member).
bool is_v_periodic_inside(const ArrayWindow& z, const std::vector<long>& v,
                          const Box& x);

// Witness for local periodicity: inside every side-K box anchored at a
// point of sup norm at least L, some vector of V acts as a period.
struct LocalPeriodicityWitness {
  std::vector<std::vector<long>> V;
  long K = 2;
  long L = 0;
};

struct LocalVerdict {
  bool pass = false;
  long bound = 0;  // anchors checked up to this sup norm
  bool has_counterexample = false;
  Box counterexample;
};

// Checks every anchor j with L <= |j| <= bound; the window must cover
// [0, bound+K)^d. A FAIL is a genuine counterexample; a PASS only speaks
// for the examined anchors.
LocalVerdict check_locally_periodic(const ArrayWindow& z,
                                    const LocalPeriodicityWitness& w,
                                    long bound);

// (d-1)-dimensional slice at coordinate `level` of the 1-based axis.
ArrayWindow section(const ArrayWindow& z, int axis, long level);

// Bounded convenience search: candidate vectors with sup norm below K,
// at most max_vectors of them, K up to max_k, L up to max_l. Returns the
// first witness in (|V|, K, candidate order) with the least workable L.
struct WitnessSearch {
  bool found = false;
  LocalPeriodicityWitness witness;
};

WitnessSearch search_local_periodicity(const ArrayWindow& z, long bound,
                                       long max_k = 8, long max_l = 16,
                                       int max_vectors = 2);

// Per-letter witness bundle for the recursive check: one local witness per
// dimension from d down to 2, and a period/preperiod pair for the
// one-dimensional base case.
struct PseudoWitness {
  std::map<int, LocalPeriodicityWitness> local;
  long period = 0;
  long preperiod = 0;
};

struct PseudoVerdict {
  bool pass = false;
  long bound = 0;
  std::string detail;  // first failure, empty on PASS
};

// Recursive conjunction: every letter window locally periodic, every
// section pseudo-periodic, down to ultimate periodicity on lines. Verdicts
// never claim anything beyond the examined window.
PseudoVerdict check_pseudo_periodic(const ArrayWindow& t,
                                    const std::vector<PseudoWitness>& per_letter,
                                    long bound);

// E = V0 union (union over i of { sum of c_v v : v in V_i, c_v in N }).
struct SemilinearSet {
  int dim = 1;
  std::vector<std::vector<long>> base;
  std::vector<std::vector<std::vector<long>>> generators;
};

// Members with every coordinate below the bound, by coefficient
// enumeration pruned at the box boundary.
std::set<std::vector<long>> semilinear_members(const SemilinearSet& sl,
                                               long bound);

struct MuchnikVerdict {
  bool equal = false;
  bool has_discrepancy = false;
  std::vector<long> discrepancy;  // first mismatch in scan order
  bool window_member = false;     // window membership at the mismatch
  long bound = 0;
};

// Compares the window against the semilinear members on [0, bound)^d.
MuchnikVerdict muchnik_equivalence(const ArrayWindow& z,
                                   const SemilinearSet& sl, long bound);

}  // namespace autoseq
