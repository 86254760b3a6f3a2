#include "autoseq/definability.hpp"

#include <algorithm>
#include <sstream>

namespace autoseq {

namespace {

long sup_norm(const std::vector<long>& v) {
  long m = 0;
  for (long c : v) m = std::max(m, std::abs(c));
  return m;
}

std::string point_str(const std::vector<long>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

void validate_witness(const LocalPeriodicityWitness& w, int dim) {
  if (w.V.empty()) throw ValidationError("witness vector set is empty");
  if (w.L < 0) throw ValidationError("threshold must be nonnegative");
  long maxv = 0;
  for (const auto& v : w.V) {
    if (static_cast<int>(v.size()) != dim)
      throw ValidationError("witness vector dimension mismatch");
    for (long c : v)
      if (c < 0) throw ValidationError("witness vectors live in N^d");
    long n = sup_norm(v);
    if (n == 0) throw ValidationError("witness vectors must be non-zero");
    maxv = std::max(maxv, n);
  }
  if (w.K <= maxv)
    throw ValidationError("box side must exceed the largest vector");
}

}  // namespace

ArrayWindow letter_indicator(const ArrayWindow& t, int32_t letter) {
  ArrayWindow out{make_alphabet("01"), t.shape, {}};
  out.cells.reserve(t.cells.size());
  for (int32_t c : t.cells) out.cells.push_back(c == letter ? 1 : 0);
  return out;
}

bool is_v_periodic_inside(const ArrayWindow& z, const std::vector<long>& v,
                          const Box& x) {
  if (v.size() != z.shape.size() || x.origin.size() != z.shape.size() ||
      x.shape.size() != z.shape.size())
    throw ValidationError("dimension mismatch");
  for (size_t i = 0; i < z.shape.size(); ++i)
    if (x.origin[i] < 0 || x.shape[i] < 0 ||
        x.origin[i] + x.shape[i] > z.shape[i])
      throw ValidationError("box exceeds the window");
  std::vector<long> inner(x.shape);
  for (size_t i = 0; i < inner.size(); ++i) {
    inner[i] -= v[i];
    if (inner[i] <= 0) return true;  // no u with u+v inside
  }
  std::vector<long> u(z.shape.size(), 0);
  do {
    std::vector<long> a(u), b(u);
    for (size_t i = 0; i < u.size(); ++i) {
      a[i] += x.origin[i];
      b[i] = a[i] + v[i];
    }
    if ((z.at(a) != 0) != (z.at(b) != 0)) return false;
  } while (next_point(u, inner));
  return true;
}

LocalVerdict check_locally_periodic(const ArrayWindow& z,
                                    const LocalPeriodicityWitness& w,
                                    long bound) {
  validate_witness(w, z.dim());
  if (bound < 0) throw ValidationError("bound must be nonnegative");
  for (long e : z.shape)
    if (e < bound + w.K)
      throw ValidationError("window too small for the requested bound");

  LocalVerdict out;
  out.bound = bound;
  std::vector<long> anchors(z.shape.size(), bound + 1);
  std::vector<long> box_shape(z.shape.size(), w.K);
  std::vector<long> j(z.shape.size(), 0);
  do {
    if (sup_norm(j) < w.L) continue;
    bool covered = false;
    for (const auto& v : w.V)
      if (is_v_periodic_inside(z, v, Box{j, box_shape})) {
        covered = true;
        break;
      }
    if (!covered) {
      out.pass = false;
      out.has_counterexample = true;
      out.counterexample = Box{j, box_shape};
      return out;
    }
  } while (next_point(j, anchors));
  out.pass = true;
  return out;
}

ArrayWindow section(const ArrayWindow& z, int axis, long level) {
  int d = z.dim();
  if (d < 2) throw ValidationError("sections need at least two dimensions");
  if (axis < 1 || axis > d) throw ValidationError("axis out of range");
  if (level < 0 || level >= z.shape[static_cast<size_t>(axis - 1)])
    throw ValidationError("level out of range");
  std::vector<long> shape;
  for (int i = 0; i < d; ++i)
    if (i != axis - 1) shape.push_back(z.shape[static_cast<size_t>(i)]);
  ArrayWindow out{z.alphabet, shape, {}};
  out.cells.reserve(static_cast<size_t>(out.cell_count()));
  std::vector<long> x(shape.size(), 0);
  std::vector<long> full(static_cast<size_t>(d));
  do {
    size_t k = 0;
    for (int i = 0; i < d; ++i)
      full[static_cast<size_t>(i)] =
          i == axis - 1 ? level : x[k++];
    out.cells.push_back(z.at(full));
  } while (next_point(x, shape));
  return out;
}

WitnessSearch search_local_periodicity(const ArrayWindow& z, long bound,
                                       long max_k, long max_l,
                                       int max_vectors) {
  if (max_vectors < 1 || max_k < 2)
    throw ValidationError("search bounds too small");
  int d = z.dim();
  for (long e : z.shape)
    if (e < bound + max_k)
      throw ValidationError("window too small for the requested bound");

  std::vector<long> anchors(static_cast<size_t>(d), bound + 1);
  long anchor_count = 1;
  for (int i = 0; i < d; ++i) anchor_count *= bound + 1;

  for (int nv = 1; nv <= max_vectors; ++nv) {
    for (long K = 2; K <= max_k; ++K) {
      std::vector<std::vector<long>> cand;
      {
        std::vector<long> v(static_cast<size_t>(d), 0);
        std::vector<long> lim(static_cast<size_t>(d), K);
        do {
          if (sup_norm(v) > 0) cand.push_back(v);
        } while (next_point(v, lim));
      }
      std::vector<long> box_shape(static_cast<size_t>(d), K);
      // which anchors each candidate covers
      std::vector<std::vector<char>> ok(cand.size());
      for (size_t c = 0; c < cand.size(); ++c) {
        ok[c].assign(static_cast<size_t>(anchor_count), 0);
        std::vector<long> j(static_cast<size_t>(d), 0);
        long li = 0;
        do {
          ok[c][static_cast<size_t>(li++)] =
              is_v_periodic_inside(z, cand[c], Box{j, box_shape});
        } while (next_point(j, anchors));
      }
      auto least_l = [&](const std::vector<size_t>& picks) -> long {
        long worst = -1;
        std::vector<long> j(static_cast<size_t>(d), 0);
        long li = 0;
        do {
          bool covered = false;
          for (size_t c : picks)
            if (ok[c][static_cast<size_t>(li)]) {
              covered = true;
              break;
            }
          if (!covered) worst = std::max(worst, sup_norm(j));
          ++li;
        } while (next_point(j, anchors));
        return worst + 1;
      };
      if (nv == 1) {
        for (size_t c = 0; c < cand.size(); ++c) {
          long l = least_l({c});
          if (l <= max_l)
            return {true, LocalPeriodicityWitness{{cand[c]}, K, l}};
        }
      } else {
        for (size_t c1 = 0; c1 + 1 < cand.size(); ++c1)
          for (size_t c2 = c1 + 1; c2 < cand.size(); ++c2) {
            long l = least_l({c1, c2});
            if (l <= max_l)
              return {true,
                      LocalPeriodicityWitness{{cand[c1], cand[c2]}, K, l}};
          }
      }
    }
  }
  return {};
}

namespace {

bool pseudo_rec(const ArrayWindow& z, const PseudoWitness& w, long bound,
                const std::string& path, std::string& detail) {
  int d = z.dim();
  if (d == 1) {
    if (w.period < 1)
      throw ValidationError("missing period witness for the base case");
    long len = z.shape[0];
    for (long i = w.preperiod; i + w.period < len; ++i)
      if ((z.cells[static_cast<size_t>(i)] != 0) !=
          (z.cells[static_cast<size_t>(i + w.period)] != 0)) {
        std::ostringstream out;
        out << path << ": line breaks period " << w.period << " at " << i;
        detail = out.str();
        return false;
      }
    return true;
  }

  auto it = w.local.find(d);
  if (it == w.local.end())
    throw ValidationError("missing local periodicity witness");
  long level_bound = bound;
  for (long e : z.shape) level_bound = std::min(level_bound, e - it->second.K);
  LocalVerdict lv = check_locally_periodic(z, it->second, level_bound);
  if (!lv.pass) {
    std::ostringstream out;
    out << path << ": not locally periodic, box at "
        << point_str(lv.counterexample.origin);
    detail = out.str();
    return false;
  }
  for (int axis = 1; axis <= d; ++axis) {
    long levels = std::min(bound + 1, z.shape[static_cast<size_t>(axis - 1)]);
    for (long n = 0; n < levels; ++n) {
      std::ostringstream sub;
      sub << path << " section(axis " << axis << ", level " << n << ")";
      if (!pseudo_rec(section(z, axis, n), w, bound, sub.str(), detail))
        return false;
    }
  }
  return true;
}

}  // namespace

PseudoVerdict check_pseudo_periodic(const ArrayWindow& t,
                                    const std::vector<PseudoWitness>& per_letter,
                                    long bound) {
  if (static_cast<int>(per_letter.size()) != t.alphabet->size())
    throw ValidationError("one witness bundle per letter required");
  PseudoVerdict out;
  out.bound = bound;
  for (int32_t a = 0; a < t.alphabet->size(); ++a) {
    ArrayWindow z = letter_indicator(t, a);
    std::string path = "letter '" + t.alphabet->symbol(a) + "'";
    if (!pseudo_rec(z, per_letter[static_cast<size_t>(a)], bound, path,
                    out.detail))
      return out;
  }
  out.pass = true;
  return out;
}

std::set<std::vector<long>> semilinear_members(const SemilinearSet& sl,
                                               long bound) {
  if (sl.dim < 1) throw ValidationError("dimension must be positive");
  if (bound < 0) throw ValidationError("bound must be nonnegative");
  auto check_vec = [&](const std::vector<long>& v) {
    if (static_cast<int>(v.size()) != sl.dim)
      throw ValidationError("vector dimension mismatch");
    for (long c : v)
      if (c < 0) throw ValidationError("vectors live in N^d");
  };
  std::set<std::vector<long>> out;
  for (const auto& v : sl.base) {
    check_vec(v);
    if (*std::max_element(v.begin(), v.end()) < bound) out.insert(v);
  }
  for (const auto& gens : sl.generators) {
    std::vector<std::vector<long>> vs;
    for (const auto& v : gens) {
      check_vec(v);
      if (sup_norm(v) > 0) vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    // depth-first over coefficients, pruned at the box boundary
    std::vector<long> cur(static_cast<size_t>(sl.dim), 0);
    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == vs.size()) {
        out.insert(cur);
        return;
      }
      std::vector<long> saved(cur);
      while (true) {
        bool inside = true;
        for (long c : cur) inside = inside && c < bound;
        if (!inside) break;
        self(self, idx + 1);
        for (size_t i = 0; i < cur.size(); ++i) cur[i] += vs[idx][i];
      }
      cur = saved;
    };
    if (bound > 0) rec(rec, 0);
  }
  return out;
}

MuchnikVerdict muchnik_equivalence(const ArrayWindow& z,
                                   const SemilinearSet& sl, long bound) {
  if (z.dim() != sl.dim) throw ValidationError("dimension mismatch");
  for (long e : z.shape)
    if (e < bound)
      throw ValidationError("window too small for the requested bound");
  std::set<std::vector<long>> members = semilinear_members(sl, bound);
  MuchnikVerdict out;
  out.bound = bound;
  std::vector<long> box(z.shape.size(), bound);
  std::vector<long> u(z.shape.size(), 0);
  if (bound > 0) do {
      bool in_window = z.at(u) != 0;
      bool in_set = members.count(u) != 0;
      if (in_window != in_set) {
        out.has_discrepancy = true;
        out.discrepancy = u;
        out.window_member = in_window;
        return out;
      }
    } while (next_point(u, box));
  out.equal = true;
  return out;
}

}  // namespace autoseq
