#pragma once

#include <string>
#include <vector>

#include "autoseq/errors.hpp"
#include "autoseq/substitution.hpp"

namespace autoseq {

// Index of a digit tuple (k_1,...,k_d), first component varying fastest:
// k_1 + p*k_2 + ... + p^{d-1}*k_d. For d = 1 this is the digit itself.
int tuple_symbol_index(long p, const std::vector<long>& digits);
std::vector<long> tuple_symbol_digits(long p, int dim, int index);
// "3" for d = 1, "(0,1)" for tuples.
std::string tuple_symbol_token(long p, int dim, int index);

// Deterministic complete automaton over the digit-tuple alphabet
// {0,...,p-1}^dim, reading most significant position first.
class Automaton {
public:
  Automaton(long p, int dim, std::vector<std::string> state_names,
            std::vector<std::vector<int>> delta, int initial,
            std::vector<char> terminal);

  long p() const { return p_; }
  int dim() const { return dim_; }
  int n_states() const { return static_cast<int>(names_.size()); }
  int n_symbols() const { return n_symbols_; }
  const std::vector<std::string>& state_names() const { return names_; }
  int initial() const { return initial_; }
  bool is_terminal(int state) const;
  const std::vector<char>& terminal() const { return terminal_; }

  int step(int state, int symbol) const;
  // From the initial state; empty input stays there.
  int run(const std::vector<int>& symbols) const;
  bool accepts(const std::vector<int>& symbols) const;

  // The all-zeros symbol loops at the initial state.
  bool zero_normalized() const;

private:
  long p_;
  int dim_;
  int n_symbols_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> delta_;
  int initial_;
  std::vector<char> terminal_;
};

struct LabeledEdge {
  std::string from;
  int symbol = 0;
  std::string to;
};

// Builds a deterministic complete automaton from an edge list that may be
// partial or nondeterministic. A deterministic complete edge list is kept
// as-is (state order and names preserved); otherwise the accessible subset
// automaton is built, with a sink for missing transitions.
Automaton from_edges(long p, int dim, const std::vector<std::string>& states,
                     const std::vector<LabeledEdge>& edges,
                     const std::string& initial,
                     const std::vector<std::string>& terminals);

// A subset of N^dim decided by reading padded digit-tuple representations.
struct RecognizableSet {
  Automaton aut;

  bool member(long long x) const;
  bool member(const std::vector<long long>& x) const;
  // All members with every component < bound; ascending (lexicographic
  // across components for dim > 1).
  std::vector<std::vector<long long>> enumerate(long long bound) const;
};

// Acceptance is unchanged under prepending zero symbols, for all inputs
// encoding some x with components < x_bound and paddings up to max_pad.
bool check_padding_invariance(const Automaton& a, long long x_bound,
                              int max_pad);

// Same language on padded representations, with the all-zeros loop at the
// initial state; adds one fresh initial state when needed.
Automaton normalize_for_conversion(const Automaton& a);

// States become letters, the image of a state is its row of successors in
// symbol order, the seed is the initial state, and the coding sends
// terminal states to "1". Requires dim 1 and zero normalization; the coded
// fixed point is then the indicator sequence of the recognized set.
CodedSubstitution automaton_to_substitution(const Automaton& a);

// Inverse construction: letters become states, delta(b, i) is the i-th
// letter of the image of b.
Automaton substitution_to_automaton(const Substitution& s,
                                    const std::vector<std::string>& output_letters);

}  // namespace autoseq
