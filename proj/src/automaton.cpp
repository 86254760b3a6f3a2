#include "autoseq/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "autoseq/numeration.hpp"

namespace autoseq {

int tuple_symbol_index(long p, const std::vector<long>& digits) {
  int idx = 0;
  long mult = 1;
  for (long d : digits) {
    if (d < 0 || d >= p) throw ValidationError("digit out of range");
    idx += static_cast<int>(d * mult);
    mult *= p;
  }
  return idx;
}

std::vector<long> tuple_symbol_digits(long p, int dim, int index) {
  std::vector<long> out(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    out[static_cast<size_t>(i)] = index % p;
    index = static_cast<int>(index / p);
  }
  return out;
}

std::string tuple_symbol_token(long p, int dim, int index) {
  std::vector<long> d = tuple_symbol_digits(p, dim, index);
  if (dim == 1) return std::to_string(d[0]);
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim; ++i) {
    if (i) os << ',';
    os << d[static_cast<size_t>(i)];
  }
  os << ')';
  return os.str();
}

static int symbol_count(long p, int dim) {
  if (p < 2) throw ValidationError("base must be at least 2");
  if (dim < 1) throw ValidationError("dimension must be positive");
  long n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= p;
    if (n > (1L << 20)) throw ValidationError("symbol alphabet too large");
  }
  return static_cast<int>(n);
}

Automaton::Automaton(long p, int dim, std::vector<std::string> state_names,
                     std::vector<std::vector<int>> delta, int initial,
                     std::vector<char> terminal)
    : p_(p),
      dim_(dim),
      n_symbols_(symbol_count(p, dim)),
      names_(std::move(state_names)),
      delta_(std::move(delta)),
      initial_(initial),
      terminal_(std::move(terminal)) {
  int n = n_states();
  if (n == 0) throw ValidationError("automaton needs at least one state");
  {
    std::set<std::string> seen;
    for (const std::string& s : names_)
      if (s.empty() || !seen.insert(s).second)
        throw ValidationError("state names must be distinct and nonempty");
  }
  if (static_cast<int>(delta_.size()) != n ||
      static_cast<int>(terminal_.size()) != n)
    throw ValidationError("state table sizes disagree");
  if (initial_ < 0 || initial_ >= n)
    throw ValidationError("initial state out of range");
  for (const auto& row : delta_) {
    if (static_cast<int>(row.size()) != n_symbols_)
      throw ValidationError("transition table is not complete");
    for (int t : row)
      if (t < 0 || t >= n) throw ValidationError("transition target out of range");
  }
}

bool Automaton::is_terminal(int state) const {
  return terminal_.at(static_cast<size_t>(state)) != 0;
}

int Automaton::step(int state, int symbol) const {
  if (symbol < 0 || symbol >= n_symbols_)
    throw ValidationError("symbol out of range");
  return delta_.at(static_cast<size_t>(state)).at(static_cast<size_t>(symbol));
}

int Automaton::run(const std::vector<int>& symbols) const {
  int q = initial_;
  for (int s : symbols) q = step(q, s);
  return q;
}

bool Automaton::accepts(const std::vector<int>& symbols) const {
  return is_terminal(run(symbols));
}

bool Automaton::zero_normalized() const {
  return delta_[static_cast<size_t>(initial_)][0] == initial_;
}

Automaton from_edges(long p, int dim, const std::vector<std::string>& states,
                     const std::vector<LabeledEdge>& edges,
                     const std::string& initial,
                     const std::vector<std::string>& terminals) {
  int n_sym = symbol_count(p, dim);
  std::map<std::string, int> id;
  for (size_t i = 0; i < states.size(); ++i) {
    if (!id.emplace(states[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate state " + states[i]);
  }
  auto lookup = [&](const std::string& s) {
    auto it = id.find(s);
    if (it == id.end()) throw ValidationError("unknown state " + s);
    return it->second;
  };

  int n = static_cast<int>(states.size());
  std::vector<std::vector<std::set<int>>> rel(
      static_cast<size_t>(n),
      std::vector<std::set<int>>(static_cast<size_t>(n_sym)));
  for (const LabeledEdge& e : edges) {
    if (e.symbol < 0 || e.symbol >= n_sym)
      throw ValidationError("edge symbol out of range");
    rel[static_cast<size_t>(lookup(e.from))][static_cast<size_t>(e.symbol)]
        .insert(lookup(e.to));
  }
  int init = lookup(initial);
  std::vector<char> term(static_cast<size_t>(n), 0);
  for (const std::string& t : terminals) term[static_cast<size_t>(lookup(t))] = 1;

  bool deterministic = true;
  for (const auto& row : rel)
    for (const auto& cell : row)
      if (cell.size() != 1) deterministic = false;
  if (deterministic) {
    std::vector<std::vector<int>> delta(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q)
      for (const auto& cell : rel[static_cast<size_t>(q)])
        delta[static_cast<size_t>(q)].push_back(*cell.begin());
    return Automaton(p, dim, states, std::move(delta), init, std::move(term));
  }

  // accessible subset construction; the empty subset acts as the sink
  std::map<std::set<int>, int> subset_id;
  std::vector<std::set<int>> subsets;
  std::vector<std::vector<int>> delta;
  auto intern = [&](const std::set<int>& s) {
    auto it = subset_id.find(s);
    if (it != subset_id.end()) return it->second;
    int sid = static_cast<int>(subsets.size());
    subset_id.emplace(s, sid);
    subsets.push_back(s);
    delta.emplace_back();
    return sid;
  };
  intern(std::set<int>{init});
  for (size_t cur = 0; cur < subsets.size(); ++cur) {
    for (int a = 0; a < n_sym; ++a) {
      std::set<int> next;
      for (int q : subsets[cur])
        for (int t : rel[static_cast<size_t>(q)][static_cast<size_t>(a)])
          next.insert(t);
      int sid = intern(next);
      delta[cur].push_back(sid);
    }
  }

  std::set<std::string> used;
  std::vector<std::string> names;
  std::vector<char> sterm;
  for (const std::set<int>& s : subsets) {
    std::string name;
    if (s.empty()) {
      name = "sink";
    } else if (s.size() == 1) {
      name = states[static_cast<size_t>(*s.begin())];
    } else {
      for (int q : s) {
        if (!name.empty()) name += '+';
        name += states[static_cast<size_t>(q)];
      }
    }
    while (!used.insert(name).second) name += '\'';
    names.push_back(name);
    char t = 0;
    for (int q : s) t |= term[static_cast<size_t>(q)];
    sterm.push_back(t);
  }
  return Automaton(p, dim, std::move(names), std::move(delta), 0,
                   std::move(sterm));
}

static std::vector<int> encode_input(const Automaton& a,
                                     const std::vector<long long>& x) {
  std::vector<int> symbols;
  if (a.dim() == 1) {
    for (long d : greedy_rep(NumerationSystem::base(a.p()), x[0]))
      symbols.push_back(static_cast<int>(d));
  } else {
    TupleWord tw = encode_tuple(a.p(), x);
    for (const std::vector<long>& t : tw.tuples)
      symbols.push_back(tuple_symbol_index(a.p(), t));
  }
  return symbols;
}

bool RecognizableSet::member(long long x) const {
  return member(std::vector<long long>{x});
}

bool RecognizableSet::member(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != aut.dim())
    throw ValidationError("component count does not match dimension");
  for (long long c : x)
    if (c < 0) throw ValidationError("components must be nonnegative");
  return aut.accepts(encode_input(aut, x));
}

std::vector<std::vector<long long>> RecognizableSet::enumerate(
    long long bound) const {
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(static_cast<size_t>(aut.dim()), 0);
  while (true) {
    bool all_in = true;
    for (long long c : x) all_in = all_in && c < bound;
    if (all_in && member(x)) out.push_back(x);
    int i = aut.dim() - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] + 1 >= bound) {
      x[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
  }
  return out;
}

bool check_padding_invariance(const Automaton& a, long long x_bound,
                              int max_pad) {
  std::vector<long long> x(static_cast<size_t>(a.dim()), 0);
  while (true) {
    std::vector<int> symbols = encode_input(a, x);
    bool base = a.accepts(symbols);
    std::vector<int> padded = symbols;
    for (int k = 1; k <= max_pad; ++k) {
      padded.insert(padded.begin(), 0);
      if (a.accepts(padded) != base) return false;
    }
    int i = a.dim() - 1;
    while (i >= 0 && x[static_cast<size_t>(i)] + 1 >= x_bound) {
      x[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
  }
  return true;
}

Automaton normalize_for_conversion(const Automaton& a) {
  if (a.zero_normalized()) return a;
  int n = a.n_states();
  std::vector<std::string> names = a.state_names();
  std::string fresh = names[static_cast<size_t>(a.initial())] + "0";
  std::set<std::string> used(names.begin(), names.end());
  while (used.count(fresh)) fresh += '\'';
  names.insert(names.begin(), fresh);

  std::vector<std::vector<int>> delta;
  std::vector<int> first_row(static_cast<size_t>(a.n_symbols()));
  first_row[0] = 0;
  for (int s = 1; s < a.n_symbols(); ++s)
    first_row[static_cast<size_t>(s)] = a.step(a.initial(), s) + 1;
  delta.push_back(std::move(first_row));
  for (int q = 0; q < n; ++q) {
    std::vector<int> row(static_cast<size_t>(a.n_symbols()));
    for (int s = 0; s < a.n_symbols(); ++s)
      row[static_cast<size_t>(s)] = a.step(q, s) + 1;
    delta.push_back(std::move(row));
  }
  std::vector<char> term(static_cast<size_t>(n) + 1);
  term[0] = a.is_terminal(a.initial()) ? 1 : 0;
  for (int q = 0; q < n; ++q)
    term[static_cast<size_t>(q) + 1] = a.is_terminal(q) ? 1 : 0;
  return Automaton(a.p(), a.dim(), std::move(names), std::move(delta), 0,
                   std::move(term));
}

CodedSubstitution automaton_to_substitution(const Automaton& a) {
  if (a.dim() != 1)
    throw ValidationError("conversion to a word substitution needs dimension 1");
  if (!a.zero_normalized())
    throw ValidationError(
        "initial state must loop on 0; normalize_for_conversion first");
  AlphabetPtr alpha = make_alphabet(a.state_names());
  std::vector<Word> images;
  for (int q = 0; q < a.n_states(); ++q) {
    std::vector<int32_t> img;
    for (int s = 0; s < a.n_symbols(); ++s)
      img.push_back(a.step(q, s));
    images.emplace_back(alpha, std::move(img));
  }
  Substitution sub(alpha, std::move(images), a.initial());
  AlphabetPtr bits = make_alphabet("01");
  std::vector<int32_t> map;
  for (int q = 0; q < a.n_states(); ++q)
    map.push_back(a.is_terminal(q) ? 1 : 0);
  return CodedSubstitution{std::move(sub), Coding(alpha, bits, std::move(map))};
}

Automaton substitution_to_automaton(
    const Substitution& s, const std::vector<std::string>& output_letters) {
  if (!s.constant_length())
    throw ValidationError("conversion to an automaton needs constant length");
  long p = s.length();
  const AlphabetPtr& alpha = s.alphabet();
  std::vector<std::vector<int>> delta;
  for (int32_t a = 0; a < alpha->size(); ++a) {
    const Word& img = s.image(a);
    std::vector<int> row;
    for (long i = 0; i < p; ++i) row.push_back(img[i]);
    delta.push_back(std::move(row));
  }
  std::vector<char> term(static_cast<size_t>(alpha->size()), 0);
  for (const std::string& t : output_letters)
    term[static_cast<size_t>(alpha->index(t))] = 1;
  return Automaton(p, 1, alpha->symbols(), std::move(delta), s.seed(),
                   std::move(term));
}

}  // namespace autoseq
