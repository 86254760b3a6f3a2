#include "autoseq/blockmap.hpp"

#include <algorithm>
#include <sstream>

namespace autoseq {

BlockMap::BlockMap(AlphabetPtr dom, AlphabetPtr cod, int d, long win,
                   std::map<std::vector<int32_t>, int32_t> tab)
    : domain(std::move(dom)),
      codomain(std::move(cod)),
      dim(d),
      window(win),
      table(std::move(tab)) {
  if (dim < 1) throw ValidationError("dimension must be positive");
  if (window < 1) throw ValidationError("window must be positive");
  if (dim == 1 && window % 2 == 0)
    throw ValidationError("one dimensional window must have odd length");
  long cells = window_cells();
  double total = 1;
  for (long i = 0; i < cells; ++i) {
    total *= domain->size();
    if (total > (1 << 20)) throw ValidationError("table domain too large");
  }
  for (const auto& [key, v] : table) {
    if (static_cast<long>(key.size()) != cells)
      throw ValidationError("table key has the wrong window size");
    for (int32_t c : key)
      if (c < 0 || c >= domain->size())
        throw ValidationError("table key letter out of range");
    if (v < 0 || v >= codomain->size())
      throw ValidationError("table value out of range");
  }
  if (static_cast<double>(table.size()) != total)
    throw ValidationError("table must be total on the domain alphabet");
}

long BlockMap::window_cells() const {
  long cells = 1;
  for (int i = 0; i < dim; ++i) {
    if (cells > (1L << 20) / window)
      throw ValidationError("window too large");
    cells *= window;
  }
  return cells;
}

BlockMap block_map_of_coding(const Coding& c) {
  std::map<std::vector<int32_t>, int32_t> table;
  for (int32_t a = 0; a < c.domain()->size(); ++a)
    table[{a}] = c.image(a);
  return BlockMap(c.domain(), c.codomain(), 1, 1, std::move(table));
}

Word apply_block_map(const BlockMap& f, const Word& w) {
  if (f.dim != 1) throw ValidationError("word input needs a one dimensional map");
  if (*w.alphabet() != *f.domain)
    throw ValidationError("input alphabet differs from the map's domain");
  if (w.size() < f.window) throw ValidationError("input shorter than the window");
  Word out = Word::empty(f.codomain);
  std::vector<int32_t> key(static_cast<size_t>(f.window));
  for (long i = 0; i + f.window <= w.size(); ++i) {
    for (long j = 0; j < f.window; ++j)
      key[static_cast<size_t>(j)] = w[i + j];
    out.push_back(f.table.at(key));
  }
  return out;
}

ArrayWindow apply_block_map(const BlockMap& f, const ArrayWindow& w) {
  if (w.dim() != f.dim) throw ValidationError("dimension mismatch");
  if (*w.alphabet != *f.domain)
    throw ValidationError("input alphabet differs from the map's domain");
  std::vector<long> out_shape(w.shape);
  for (long& e : out_shape) {
    e -= f.window - 1;
    if (e <= 0) throw ValidationError("input shorter than the window");
  }
  ArrayWindow out{f.codomain, out_shape, {}};
  out.cells.reserve(static_cast<size_t>(out.cell_count()));
  std::vector<long> cube(w.shape.size(), f.window);
  std::vector<long> v(w.shape.size(), 0);
  do {
    out.cells.push_back(f.table.at(w.sub(v, cube).cells));
  } while (next_point(v, out_shape));
  return out;
}

std::set<Word> preimages(const BlockMap& f, const Word& u,
                         const std::set<Word>& language) {
  if (*u.alphabet() != *f.codomain)
    throw ValidationError("word alphabet differs from the map's codomain");
  std::set<Word> out;
  for (const Word& v : language) {
    if (v.size() != u.size() + 2 * f.radius()) continue;
    if (apply_block_map(f, v) == u) out.insert(v);
  }
  return out;
}

NormalizedBlockMap normalize_block_map(const Substitution& s,
                                       const BlockMap& f) {
  if (f.dim != 1) throw ValidationError("one dimensional maps only");
  if (*s.alphabet() != *f.domain)
    throw ValidationError("map domain differs from the alphabet");
  BlockPresentation pres = k_block_substitution(s, f.window);
  std::vector<int32_t> map;
  for (const Word& b : pres.blocks) map.push_back(f.table.at(b.letters()));
  Coding coding(pres.sub.alphabet(), f.codomain, std::move(map));
  return {std::move(pres), std::move(coding)};
}

FactorFrequency factor_frequencies(const Substitution& s, const BlockMap& f,
                                   const Word& u) {
  if (u.empty()) throw ValidationError("factor must be nonempty");
  long n = u.size() + 2 * f.radius();
  std::vector<Word> lang = block_language(s, n);
  std::set<Word> langset(lang.begin(), lang.end());
  std::set<Word> pre = preimages(f, u, langset);

  FrequencyTable t = word_frequencies(s, n);
  FactorFrequency out;
  out.exact = t.exact;
  out.value = Rat(0);
  for (size_t i = 0; i < t.items.size(); ++i) {
    if (!pre.count(t.items[i])) continue;
    if (t.exact) out.value += t.freq[i];
    out.value_d += t.freq_d[i];
  }
  if (t.exact) out.value_d = rat_double(out.value);
  return out;
}

FactorLrReport check_factor_lr(const Substitution& s, const BlockMap& f,
                               long max_len, long K) {
  if (max_len < 1 || K < 1)
    throw ValidationError("max_len and K must be positive");
  FactorLrReport rep;
  long len = std::max(1L << 15, 32 * max_len * K);
  Word x = s.fixed_point_prefix(len + 2 * f.radius());
  Word y = apply_block_map(f, x);
  rep.checked_prefix = y.size();

  if (is_ultimately_periodic(y).verdict == Periodicity::PERIODIC) {
    rep.skipped_periodic = true;
    return rep;
  }

  long count_cap = 2 * K * (2 * K + 1) * (2 * K + 1);
  std::vector<char> pass(static_cast<size_t>(max_len) + 1, 1);
  std::ostringstream first_fail;
  for (long n = 1; n <= max_len; ++n) {
    bool ok = true;
    std::string why;
    for (const Word& u : factors(y.subword(0, y.size() / 2), n)) {
      ReturnWordIndex ri = return_words(y, u);
      if (static_cast<long>(ri.returns.size()) > count_cap) {
        ok = false;
        why = "too many return words for '" + u.str() + "'";
        break;
      }
      for (const Word& w : ri.returns) {
        if (2 * K * w.size() < n || w.size() > 2 * K * n) {
          ok = false;
          why = "return word '" + w.str() + "' of '" + u.str() +
                "' escapes the length bounds";
          break;
        }
      }
      if (!ok) break;
      long occ = static_cast<long>(ri.positions.size());
      if (occ * n > 2 * K * (y.size() - n + 1)) {
        ok = false;
        why = "'" + u.str() + "' occurs too often";
        break;
      }
    }
    pass[static_cast<size_t>(n)] = ok;
    if (!ok && rep.witness.empty()) rep.witness = why;
  }

  long n1 = max_len + 1;
  while (n1 > 1 && pass[static_cast<size_t>(n1 - 1)]) --n1;
  rep.n1 = n1;
  rep.bounds_ok = n1 <= max_len;
  return rep;
}

CobhamReport cobham_demo(const Substitution& s1, const Coding& c1,
                         const Substitution& s2, const Coding& c2,
                         long max_len) {
  if (!s1.constant_length() || !s2.constant_length())
    throw ValidationError("constant length substitutions required");
  CobhamReport rep;
  rep.p = s1.length();
  rep.q = s2.length();

  long n = 100000;
  Word y1 = c1.apply(s1.fixed_point_prefix(n));
  Word y2 = c2.apply(s2.fixed_point_prefix(n));
  if (y1 != y2)
    throw ValidationError("inputs generate different sequences");
  rep.prefix_checked = n;

  IndependenceResult ind = multiplicatively_independent(rep.p, rep.q);
  rep.dependent = !ind.independent;
  if (!rep.dependent) {
    rep.periodicity = is_ultimately_periodic(y1);
    rep.theorem_consistent =
        rep.periodicity.verdict == Periodicity::PERIODIC;
    if (!rep.theorem_consistent)
      rep.note =
          "a sequence recognizable in two multiplicatively independent "
          "bases must be ultimately periodic; a different verdict here "
          "means an implementation bug, not a counterexample";
    return rep;
  }

  rep.witness_k = ind.k;
  rep.witness_l = ind.l;
  BlockMap f1 = block_map_of_coding(c1);
  BlockMap f2 = block_map_of_coding(c2);
  rep.frequencies_match = true;
  for (long k = 1; k <= max_len && rep.frequencies_match; ++k) {
    for (const Word& u : factors(y1.subword(0, 4096), k)) {
      FactorFrequency a = factor_frequencies(s1, f1, u);
      FactorFrequency b = factor_frequencies(s2, f2, u);
      if (!a.exact || !b.exact || a.value != b.value) {
        rep.frequencies_match = false;
        rep.note = "frequency mismatch at '" + u.str() + "'";
        break;
      }
    }
  }
  ThetaScalingReport t1 = verify_theta_scaling(s1, max_len);
  ThetaScalingReport t2 = verify_theta_scaling(s2, max_len);
  rep.scaled1 = t1.scaled;
  rep.scaled2 = t2.scaled;
  rep.scaled1_stable = t1.stabilized;
  rep.scaled2_stable = t2.stabilized;
  return rep;
}

}  // namespace autoseq
