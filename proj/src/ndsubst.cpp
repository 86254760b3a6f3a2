#include "autoseq/ndsubst.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace autoseq {

ArrayWindow ArrayWindow::filled(AlphabetPtr alphabet, std::vector<long> shape,
                                int32_t letter) {
  ArrayWindow w{std::move(alphabet), std::move(shape), {}};
  long n = w.cell_count();
  w.cells.assign(static_cast<size_t>(n), letter);
  return w;
}

long ArrayWindow::cell_count() const {
  long n = 1;
  for (long e : shape) {
    if (e <= 0) throw ValidationError("window extents must be positive");
    if (n > (1L << 24) / e) throw ValidationError("window too large");
    n *= e;
  }
  return n;
}

long ArrayWindow::index(const std::vector<long>& x) const {
  if (x.size() != shape.size()) throw ValidationError("dimension mismatch");
  long idx = 0, mult = 1;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (x[i] < 0 || x[i] >= shape[i])
      throw ValidationError("cell outside window");
    idx += x[i] * mult;
    mult *= shape[i];
  }
  return idx;
}

bool ArrayWindow::is_cube(long side) const {
  for (long e : shape)
    if (e != side) return false;
  return true;
}

ArrayWindow ArrayWindow::sub(const std::vector<long>& origin,
                             const std::vector<long>& sub_shape) const {
  if (origin.size() != shape.size() || sub_shape.size() != shape.size())
    throw ValidationError("dimension mismatch");
  for (size_t i = 0; i < shape.size(); ++i)
    if (origin[i] < 0 || origin[i] + sub_shape[i] > shape[i])
      throw ValidationError("sub-window exceeds window");
  ArrayWindow out{alphabet, sub_shape, {}};
  out.cells.reserve(static_cast<size_t>(out.cell_count()));
  std::vector<long> x(shape.size(), 0);
  do {
    std::vector<long> y(x);
    for (size_t i = 0; i < y.size(); ++i) y[i] += origin[i];
    out.cells.push_back(at(y));
  } while (next_point(x, sub_shape));
  return out;
}

bool ArrayWindow::operator==(const ArrayWindow& o) const {
  return shape == o.shape && cells == o.cells &&
         (alphabet == o.alphabet || *alphabet == *o.alphabet);
}

bool next_point(std::vector<long>& x, const std::vector<long>& shape) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (++x[i] < shape[i]) return true;
    x[i] = 0;
  }
  return false;
}

Pattern cube_pattern(const ArrayWindow& w) {
  Pattern p{w.alphabet, {}, {}};
  std::vector<long> x(w.shape.size(), 0);
  do {
    p.support.push_back(x);
    p.values.push_back(w.at(x));
  } while (next_point(x, w.shape));
  return p;
}

long count_pattern(const ArrayWindow& w, const Pattern& p) {
  if (p.support.empty()) throw ValidationError("pattern has empty support");
  std::vector<long> extent(w.shape.size(), 0);
  for (const auto& v : p.support) {
    if (v.size() != w.shape.size())
      throw ValidationError("dimension mismatch");
    for (size_t i = 0; i < v.size(); ++i)
      extent[i] = std::max(extent[i], v[i]);
  }
  std::vector<long> range(w.shape.size());
  for (size_t i = 0; i < range.size(); ++i) {
    range[i] = w.shape[i] - extent[i];
    if (range[i] <= 0) return 0;
  }
  std::vector<long> strides(w.shape.size());
  long mult = 1;
  for (size_t i = 0; i < w.shape.size(); ++i) {
    strides[i] = mult;
    mult *= w.shape[i];
  }
  std::vector<long> deltas(p.support.size());
  for (size_t t = 0; t < p.support.size(); ++t) {
    long d = 0;
    for (size_t i = 0; i < strides.size(); ++i)
      d += p.support[t][i] * strides[i];
    deltas[t] = d;
  }
  long count = 0;
  std::vector<long> v(w.shape.size(), 0);
  do {
    long base = 0;
    for (size_t i = 0; i < v.size(); ++i) base += v[i] * strides[i];
    bool match = true;
    for (size_t t = 0; t < deltas.size() && match; ++t)
      match = w.cells[static_cast<size_t>(base + deltas[t])] == p.values[t];
    count += match;
  } while (next_point(v, range));
  return count;
}

NdSubstitution::NdSubstitution(AlphabetPtr alphabet, int dim, long side,
                               std::vector<ArrayWindow> rules)
    : alphabet_(std::move(alphabet)),
      dim_(dim),
      side_(side),
      rules_(std::move(rules)) {
  if (dim_ < 1) throw ValidationError("dimension must be positive");
  if (side_ < 2) throw ValidationError("side must be at least 2");
  if (static_cast<int>(rules_.size()) != alphabet_->size())
    throw ValidationError("one rule window per letter required");
  for (const ArrayWindow& r : rules_) {
    if (r.dim() != dim_ || !r.is_cube(side_))
      throw ValidationError("rule window has the wrong shape");
    for (int32_t c : r.cells)
      if (c < 0 || c >= alphabet_->size())
        throw ValidationError("rule letter out of range");
  }
  theta();
}

long NdSubstitution::theta() const {
  long t = 1;
  for (int i = 0; i < dim_; ++i) {
    if (t > (1L << 24) / side_) throw ValidationError("theta too large");
    t *= side_;
  }
  return t;
}

ArrayWindow expand(const NdSubstitution& s, const ArrayWindow& w) {
  if (*w.alphabet != *s.alphabet())
    throw ValidationError("window alphabet differs from the substitution's");
  std::vector<long> out_shape(w.shape);
  for (long& e : out_shape) e *= s.side();
  ArrayWindow out{s.alphabet(), out_shape, {}};
  out.cells.assign(static_cast<size_t>(out.cell_count()), 0);
  std::vector<long> m(out_shape.size(), 0), j(m), k(m);
  do {
    for (size_t i = 0; i < m.size(); ++i) {
      j[i] = m[i] / s.side();
      k[i] = m[i] % s.side();
    }
    out.set(m, s.rule(w.at(j)).at(k));
  } while (next_point(m, out_shape));
  return out;
}

NdSubstitution nd_power(const NdSubstitution& s, int m) {
  if (m < 1) throw ValidationError("power must be positive");
  std::vector<ArrayWindow> rules;
  long side = 1;
  for (int i = 0; i < m; ++i) side *= s.side();
  for (int32_t a = 0; a < s.alphabet()->size(); ++a) {
    ArrayWindow w = s.rule(a);
    for (int i = 1; i < m; ++i) w = expand(s, w);
    rules.push_back(std::move(w));
  }
  return NdSubstitution(s.alphabet(), s.dim(), side, std::move(rules));
}

IntMatrix nd_incidence(const NdSubstitution& s) {
  int n = s.alphabet()->size();
  IntMatrix m(n, n);
  for (int b = 0; b < n; ++b)
    for (int32_t c : s.rule(b).cells) m.at(c, b) += 1;
  return m;
}

NdFixedArray fixed_array(const NdSubstitution& s, int n) {
  if (n < 0) throw ValidationError("expansion count must be nonnegative");
  int na = s.alphabet()->size();
  auto corner = [&](int32_t a) {
    return s.rule(a).cells[0];
  };
  int power = 0;
  int32_t seed = -1;
  for (int m = 1; m <= na && seed < 0; ++m) {
    for (int32_t a = 0; a < na && seed < 0; ++a) {
      int32_t c = a;
      for (int i = 0; i < m; ++i) c = corner(c);
      if (c == a) {
        power = m;
        seed = a;
      }
    }
  }
  if (seed < 0) throw InternalError("corner map has no cycle");
  ArrayWindow w =
      ArrayWindow::filled(s.alphabet(), std::vector<long>(static_cast<size_t>(s.dim()), 1), seed);
  for (int i = 0; i < power * n; ++i) w = expand(s, w);
  return {std::move(w), power, seed};
}

namespace {

std::string cube_key(const ArrayWindow& w) {
  std::string k(w.cells.size(), 0);
  for (size_t i = 0; i < w.cells.size(); ++i)
    k[i] = static_cast<char>(w.cells[i] + 1);
  return k;
}

std::string cube_token(const ArrayWindow& w) {
  std::string t;
  for (size_t i = 0; i < w.cells.size(); ++i) {
    const std::string& s = w.alphabet->symbol(w.cells[i]);
    if (!w.alphabet->single_char() && i) t += ';';
    t += s;
  }
  return t;
}

// distinct side-r cubes of w, keyed for determinism
std::map<std::string, ArrayWindow> cubes_of(const ArrayWindow& w, long r) {
  std::map<std::string, ArrayWindow> out;
  std::vector<long> range(w.shape.size());
  for (size_t i = 0; i < range.size(); ++i) {
    range[i] = w.shape[i] - r + 1;
    if (range[i] <= 0) return out;
  }
  std::vector<long> sh(w.shape.size(), r);
  std::vector<long> v(w.shape.size(), 0);
  do {
    ArrayWindow c = w.sub(v, sh);
    out.emplace(cube_key(c), std::move(c));
  } while (next_point(v, range));
  return out;
}

// grows fixed arrays until the side-r cube inventory stops changing
std::map<std::string, ArrayWindow> stable_cubes(const NdSubstitution& s,
                                                long r) {
  NdFixedArray fa = fixed_array(s, 1);
  while (fa.window.shape[0] < 2 * r) fa.window = expand(s, fa.window);
  std::map<std::string, ArrayWindow> prev = cubes_of(fa.window, r);
  while (true) {
    if (fa.window.cell_count() > (1L << 22))
      throw InternalError("cube inventory failed to stabilize");
    fa.window = expand(s, fa.window);
    std::map<std::string, ArrayWindow> cur = cubes_of(fa.window, r);
    if (cur.size() == prev.size()) return cur;
    prev = std::move(cur);
  }
}

}  // namespace

NdBlockPresentation two_cube_substitution(const NdSubstitution& s) {
  std::map<std::string, ArrayWindow> inventory = stable_cubes(s, 2);
  // close under expansion: the 2-cubes of every image must be known
  while (true) {
    std::map<std::string, ArrayWindow> added;
    for (const auto& [key, b] : inventory)
      for (auto& [k2, c2] : cubes_of(expand(s, b), 2))
        if (!inventory.count(k2)) added.emplace(k2, c2);
    if (added.empty()) break;
    inventory.merge(added);
  }

  std::vector<ArrayWindow> blocks;
  std::vector<std::string> tokens;
  std::map<std::string, int32_t> id;
  for (const auto& [key, b] : inventory) {
    id[key] = static_cast<int32_t>(blocks.size());
    blocks.push_back(b);
    tokens.push_back(cube_token(b));
  }
  AlphabetPtr alpha = make_alphabet(tokens);

  std::vector<ArrayWindow> rules;
  std::vector<long> rule_shape(static_cast<size_t>(s.dim()), s.side());
  std::vector<long> two(static_cast<size_t>(s.dim()), 2);
  for (const ArrayWindow& b : blocks) {
    ArrayWindow e = expand(s, b);
    ArrayWindow r{alpha, rule_shape, {}};
    r.cells.assign(static_cast<size_t>(r.cell_count()), 0);
    std::vector<long> k(rule_shape.size(), 0);
    do {
      r.set(k, id.at(cube_key(e.sub(k, two))));
    } while (next_point(k, rule_shape));
    rules.push_back(std::move(r));
  }
  return {NdSubstitution(alpha, s.dim(), s.side(), std::move(rules)),
          std::move(blocks)};
}

namespace {

struct ExactContext {
  NdBlockPresentation bp;
  std::vector<Rat> freq2;
};

ExactContext make_exact_context(const NdSubstitution& s) {
  if (!is_primitive(nd_incidence(s)))
    throw ValidationError("substitution is not primitive");
  NdBlockPresentation bp = two_cube_substitution(s);
  EigenData ed = perron_data(nd_incidence(bp.sub));
  if (!ed.exact) throw InternalError("constant column sums expected");
  return {std::move(bp), ed.right};
}

int k_of_side(long r, long side) {
  int k = 1;
  long pow = side;
  while (pow <= r) {
    pow *= side;
    ++k;
  }
  return k;
}

Rat exact_frequency(const NdSubstitution& s, const ExactContext& ctx,
                    const ArrayWindow& p) {
  long r = p.shape[0];
  if (!p.is_cube(r) || r < 1) throw ValidationError("pattern must be a cube");
  if (p.dim() != s.dim()) throw ValidationError("dimension mismatch");
  for (int32_t c : p.cells)
    if (c < 0 || c >= s.alphabet()->size())
      throw ValidationError("pattern letter out of range");
  int k = k_of_side(r, s.side());
  long anchor = 1;
  for (int i = 0; i < k; ++i) anchor *= s.side();
  Pattern pat = cube_pattern(p);

  Rat total(0);
  std::vector<long> anchors(static_cast<size_t>(s.dim()), anchor);
  for (size_t bi = 0; bi < ctx.bp.blocks.size(); ++bi) {
    ArrayWindow e = ctx.bp.blocks[bi];
    for (int i = 0; i < k; ++i) e = expand(s, e);
    std::vector<long> strides(e.shape.size());
    long mult = 1;
    for (size_t i = 0; i < e.shape.size(); ++i) {
      strides[i] = mult;
      mult *= e.shape[i];
    }
    long cnt = 0;
    std::vector<long> v(static_cast<size_t>(s.dim()), 0);
    do {
      long base = 0;
      for (size_t i = 0; i < v.size(); ++i) base += v[i] * strides[i];
      bool match = true;
      for (size_t t = 0; t < pat.support.size() && match; ++t) {
        long off = 0;
        for (size_t i = 0; i < strides.size(); ++i)
          off += pat.support[t][i] * strides[i];
        match = e.cells[static_cast<size_t>(base + off)] == pat.values[t];
      }
      cnt += match;
    } while (next_point(v, anchors));
    if (cnt) total += rat_of(cnt) * ctx.freq2[bi];
  }
  Rat scale(1);
  for (int i = 0; i < k; ++i) scale *= rat_of(s.theta());
  return total / scale;
}

bool constant_rules(const NdSubstitution& s) {
  if (s.alphabet()->size() == 1) return true;
  for (int32_t a = 0; a < s.alphabet()->size(); ++a) {
    const auto& cells = s.rule(a).cells;
    for (int32_t c : cells)
      if (c != cells[0]) return false;
  }
  return true;
}

}  // namespace

Rat pattern_frequency_exact(const NdSubstitution& s, const ArrayWindow& p) {
  ExactContext ctx = make_exact_context(s);
  return exact_frequency(s, ctx, p);
}

EmpiricalFrequency pattern_frequency_empirical(const NdSubstitution& s,
                                               const ArrayWindow& p,
                                               long max_cells) {
  if (!is_primitive(nd_incidence(s)))
    throw ValidationError("substitution is not primitive");
  NdFixedArray fa = fixed_array(s, 1);
  Pattern pat = cube_pattern(p);
  double prev = 0, cur = 0;
  while (true) {
    cur = static_cast<double>(count_pattern(fa.window, pat)) /
          static_cast<double>(fa.window.cell_count());
    if (fa.window.cell_count() > max_cells / s.theta()) break;
    prev = cur;
    fa.window = expand(s, fa.window);
  }
  return {cur, prev, fa.window.shape[0]};
}

NdFreqArrayReport verify_freq_array(const NdSubstitution& s, long max_r) {
  if (max_r < 2) throw ValidationError("max_r must be at least 2");
  NdFreqArrayReport rep;
  rep.periodic_flag = constant_rules(s);
  for (long r = 1; r <= max_r; ++r) rep.k_of_r.push_back(k_of_side(r, s.side()));
  if (rep.periodic_flag) return rep;
  ExactContext ctx = make_exact_context(s);
  for (long r = 1; r <= max_r; ++r) {
    int k = rep.k_of_r[static_cast<size_t>(r - 1)];
    Rat scale(1);
    for (int i = 0; i < k; ++i) scale *= rat_of(s.theta());
    for (const auto& [key, p] : stable_cubes(s, r)) {
      Rat scaled = exact_frequency(s, ctx, p) * scale;
      rep.scaled.insert(scaled);
      if (r <= max_r / 2) rep.scaled_half.insert(scaled);
      ++rep.pattern_count;
    }
  }
  rep.stabilized = rep.scaled == rep.scaled_half;
  return rep;
}

namespace {

// largest empty hypercube in a boolean grid (true = occupied), by the
// corner-minimum dynamic program
long largest_empty_cube(const std::vector<char>& grid,
                        const std::vector<long>& shape) {
  size_t n = grid.size();
  std::vector<long> best(n, 0);
  std::vector<long> strides(shape.size());
  long mult = 1;
  for (size_t i = 0; i < shape.size(); ++i) {
    strides[i] = mult;
    mult *= shape[i];
  }
  long answer = 0;
  std::vector<long> x(shape.size(), 0);
  size_t li = 0;
  do {
    long b = 0;
    if (!grid[li]) {
      b = 1;
      long cap = (1L << 30);
      for (size_t i = 0; i < shape.size(); ++i) cap = std::min(cap, x[i]);
      if (cap > 0) {
        long m = (1L << 30);
        // all 2^d - 1 backward corner offsets
        for (long mask = 1; mask < (1L << shape.size()) && m > 0; ++mask) {
          long off = 0;
          for (size_t i = 0; i < shape.size(); ++i)
            if (mask & (1L << i)) off += strides[i];
          m = std::min(m, best[li - static_cast<size_t>(off)]);
        }
        b = m + 1;
      }
    }
    best[li] = b;
    answer = std::max(answer, b);
    ++li;
  } while (next_point(x, shape));
  return answer;
}

struct ScaleEstimates {
  long K = 1, Kprime = 1;
};

ScaleEstimates estimate_scales(const ArrayWindow& w, long max_r) {
  ScaleEstimates est;
  int d = w.dim();
  long side = w.shape[0];
  for (long r = 1; r <= max_r; ++r) {
    long g = side - r + 1;
    std::vector<long> gshape(static_cast<size_t>(d), g);
    std::vector<long> rshape(static_cast<size_t>(d), r);
    std::map<std::string, std::vector<long>> anchors;  // key -> linear anchors
    {
      std::vector<long> v(static_cast<size_t>(d), 0);
      long li = 0;
      do {
        anchors[cube_key(w.sub(v, rshape))].push_back(li);
        ++li;
      } while (next_point(v, gshape));
    }
    long cells = 1;
    for (int i = 0; i < d; ++i) cells *= g;

    // repetitivity: largest window missing some pattern
    for (const auto& [key, pos] : anchors) {
      std::vector<char> grid(static_cast<size_t>(cells), 0);
      for (long p : pos) grid[static_cast<size_t>(p)] = 1;
      long b = largest_empty_cube(grid, gshape);
      long w_max = b + r - 1;
      est.K = std::max(est.K, w_max / r + 1);
    }

    // spacing: minimal Chebyshev distance between equal cubes
    long min_dist = r;  // distances >= r already give K' = 1
    std::vector<long> strides(static_cast<size_t>(d));
    long mult = 1;
    for (int i = 0; i < d; ++i) {
      strides[static_cast<size_t>(i)] = mult;
      mult *= g;
    }
    for (const auto& [key, pos] : anchors) {
      if (min_dist == 1) break;
      std::unordered_set<long> set(pos.begin(), pos.end());
      for (long p : pos) {
        std::vector<long> c(static_cast<size_t>(d));
        long rem = p;
        for (int i = 0; i < d; ++i) {
          c[static_cast<size_t>(i)] = rem % g;
          rem /= g;
        }
        std::vector<long> off(static_cast<size_t>(d), -min_dist + 1);
        do {
          bool zero = true, in = true;
          long q = p;
          long cheb = 0;
          for (int i = 0; i < d; ++i) {
            long o = off[static_cast<size_t>(i)];
            zero = zero && o == 0;
            long ci = c[static_cast<size_t>(i)] + o;
            in = in && ci >= 0 && ci < g;
            q += o * strides[static_cast<size_t>(i)];
            cheb = std::max(cheb, std::abs(o));
          }
          if (!zero && in && cheb < min_dist && set.count(q))
            min_dist = cheb;
        } while ([&] {
          for (size_t i = 0; i < off.size(); ++i) {
            if (++off[i] <= min_dist - 1) return true;
            off[i] = -min_dist + 1;
          }
          return false;
        }());
        if (min_dist == 1) break;
      }
    }
    est.Kprime = std::max(est.Kprime, (r + min_dist - 1) / min_dist);
  }
  return est;
}

}  // namespace

SpacingReport spacing_and_repetitivity_check(const NdSubstitution& s,
                                             long max_r) {
  if (max_r < 1) throw ValidationError("max_r must be positive");
  SpacingReport rep;
  rep.periodic_flag = constant_rules(s);
  if (rep.periodic_flag) {
    rep.K = rep.K_prev = rep.Kprime = rep.Kprime_prev = 1;
    rep.stable = true;
    return rep;
  }
  if (!is_primitive(nd_incidence(s)))
    throw ValidationError("substitution is not primitive");

  long target = s.dim() == 1 ? (1L << 13) : (1L << 16);
  NdFixedArray fa = fixed_array(s, 1);
  while (fa.window.cell_count() < target || fa.window.shape[0] < 8 * max_r)
    fa.window = expand(s, fa.window);
  ScaleEstimates first = estimate_scales(fa.window, max_r);
  fa.window = expand(s, fa.window);
  ScaleEstimates second = estimate_scales(fa.window, max_r);

  rep.K_prev = first.K;
  rep.Kprime_prev = first.Kprime;
  rep.K = second.K;
  rep.Kprime = second.Kprime;
  rep.stable = first.K == second.K && first.Kprime == second.Kprime;
  rep.side = fa.window.shape[0];
  return rep;
}

NdCodedSubstitution automaton_to_ndsubstitution(const Automaton& a) {
  if (!a.zero_normalized())
    throw ValidationError(
        "initial state must loop on the zero symbol; normalize first");
  AlphabetPtr alpha = make_alphabet(a.state_names());
  std::vector<long> shape(static_cast<size_t>(a.dim()), a.p());
  std::vector<ArrayWindow> rules;
  for (int q = 0; q < a.n_states(); ++q) {
    ArrayWindow w{alpha, shape, {}};
    for (int sym = 0; sym < a.n_symbols(); ++sym)
      w.cells.push_back(a.step(q, sym));
    rules.push_back(std::move(w));
  }
  NdSubstitution sub(alpha, a.dim(), a.p(), std::move(rules));
  AlphabetPtr bits = make_alphabet("01");
  std::vector<int32_t> map;
  for (int q = 0; q < a.n_states(); ++q)
    map.push_back(a.is_terminal(q) ? 1 : 0);
  return {std::move(sub), Coding(alpha, bits, std::move(map))};
}

}  // namespace autoseq
