#include "autoseq/recurrence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "autoseq/perron.hpp"

namespace autoseq {

ReturnWordIndex return_words(const Word& prefix, const Word& u) {
  if (u.size() == 0) throw ValidationError("return words need a nonempty target");
  ReturnWordIndex idx{u, occurrence_positions(u, prefix), {}, 0};
  if (idx.positions.size() < 2)
    throw ValidationError("insufficient data: target occurs fewer than twice");
  std::set<Word> rw;
  for (size_t i = 0; i + 1 < idx.positions.size(); ++i) {
    long j = idx.positions[i], k = idx.positions[i + 1];
    rw.insert(prefix.subword(j, k - j));
    idx.max_gap = std::max(idx.max_gap, k - j);
  }
  idx.returns.assign(rw.begin(), rw.end());
  return idx;
}

long complexity(const Word& prefix, long n) {
  return static_cast<long>(factors(prefix, n).size());
}

namespace {

std::string byte_string(const Word& w) {
  std::string s(static_cast<size_t>(w.size()), 0);
  for (long i = 0; i < w.size(); ++i)
    s[static_cast<size_t>(i)] = static_cast<char>(w[i] + 1);
  return s;
}

long k_hat_on(const std::string& x, long max_len) {
  long K = 1;
  for (long l = 1; l <= max_len; ++l) {
    std::unordered_map<std::string, size_t> last;
    for (size_t i = 0; i + static_cast<size_t>(l) <= x.size(); ++i) {
      auto [it, fresh] = last.emplace(x.substr(i, static_cast<size_t>(l)), i);
      if (!fresh) {
        long gap = static_cast<long>(i - it->second);
        K = std::max(K, (gap + l - 1) / l);
        it->second = i;
      }
    }
  }
  return K;
}

void require_primitive(const Substitution& s) {
  if (!is_primitive(incidence_matrix(s.rule())))
    throw ValidationError("substitution is not primitive");
}

}  // namespace

EstimateReport lr_constant_estimate(const Substitution& s, long max_len) {
  require_primitive(s);
  if (max_len < 1) throw ValidationError("max_len must be positive");
  long len = std::max<long>(1 << 12, 64 * max_len);
  long prev = k_hat_on(byte_string(s.fixed_point_prefix(len)), max_len);
  while (len <= (1 << 20)) {
    len *= 2;
    long cur = k_hat_on(byte_string(s.fixed_point_prefix(len)), max_len);
    if (cur == prev) return {cur, len, true};
    prev = cur;
  }
  return {prev, len, false};
}

LinrecReport check_linrec_props(const Substitution& s, long K, long max_len) {
  require_primitive(s);
  if (K < 1) throw ValidationError("K must be positive");
  long len = std::max<long>(1 << 16, 64 * max_len * K);
  Word prefix = s.fixed_point_prefix(len);
  std::string x = byte_string(prefix);

  LinrecReport rep;
  PeriodicityReport per = is_ultimately_periodic(prefix);
  if (per.verdict == Periodicity::PERIODIC) {
    rep.skipped_periodic = true;
    return rep;
  }
  std::ostringstream w;

  for (long n = 1; n <= max_len && rep.complexity_ok; ++n) {
    long pn = complexity(prefix, n);
    if (pn > K * n) {
      rep.complexity_ok = false;
      w << "p(" << n << ") = " << pn << " > " << K * n;
    }
  }

  for (long l = 1; l <= max_len && rep.power_free_ok; ++l) {
    long run = 0;
    for (size_t j = 0; j + static_cast<size_t>(l) < x.size(); ++j) {
      run = (x[j] == x[j + static_cast<size_t>(l)]) ? run + 1 : 0;
      if (run >= K * l) {
        rep.power_free_ok = false;
        w << "; power exponent " << K + 1 << " of period " << l << " at "
          << static_cast<long>(j) - run + 1;
        break;
      }
    }
  }

  long count_bound = K * (K + 1) * (K + 1);
  for (long l = 1; l <= max_len; ++l) {
    std::unordered_map<std::string, size_t> last;
    std::unordered_map<std::string, std::set<std::string>> rets;
    for (size_t i = 0; i + static_cast<size_t>(l) <= x.size(); ++i) {
      std::string u = x.substr(i, static_cast<size_t>(l));
      auto [it, fresh] = last.emplace(u, i);
      if (!fresh) {
        size_t j = it->second;
        long wl = static_cast<long>(i - j);
        if (wl * K <= l && rep.return_length_ok) {
          rep.return_length_ok = false;
          w << "; return word of length " << wl << " to a factor of length "
            << l;
        }
        rets[u].insert(x.substr(j, static_cast<size_t>(wl)));
        it->second = i;
      }
    }
    if (rep.return_count_ok)
      for (const auto& [u, rs] : rets)
        if (static_cast<long>(rs.size()) > count_bound) {
          rep.return_count_ok = false;
          w << "; " << rs.size() << " return words to a factor of length "
            << l;
          break;
        }
  }
  rep.witness = w.str();
  return rep;
}

PeriodicityReport is_ultimately_periodic(const Word& prefix) {
  long len = prefix.size();
  PeriodicityReport rep;
  if (len < 16) return rep;

  for (long q = 1; q <= len / 4; ++q) {
    long r = 0;
    for (long i = len - q - 1; i >= 0; --i) {
      if (prefix[i] != prefix[i + q]) {
        r = i + 1;
        break;
      }
    }
    if (r > len / 4 || len - r < 3 * q) continue;
    Word u = prefix.subword(r, q);
    Word tail = prefix.subword(r, len - r);
    ReturnWordIndex idx = return_words(tail, u);
    if (idx.returns.size() == 1 && idx.returns[0] == u) {
      rep.verdict = Periodicity::PERIODIC;
      rep.period = q;
      rep.preperiod = r;
      return rep;
    }
    return rep;  // period scan succeeded but certification failed
  }

  long bound = std::min<long>(64, len / 32);
  if (bound < 4) return rep;
  Word half = prefix.subword(0, len / 2);
  for (long n = 1; n <= bound; ++n) {
    long pn = complexity(prefix, n);
    if (pn < n + 1 || complexity(half, n) != pn) return rep;
  }
  rep.verdict = Periodicity::NON_PERIODIC;
  rep.witness_n = bound;
  return rep;
}

namespace {

// p = r^e with e maximal; r is then not itself a proper power.
std::pair<long long, long> primitive_power_root(long long p) {
  mpz_class z(std::to_string(p));
  for (long e = 62; e >= 2; --e) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(e)))
      return {std::stoll(root.get_str()), e};
  }
  return {p, 1};
}

}  // namespace

IndependenceResult multiplicatively_independent(long long p, long long q) {
  if (p < 2 || q < 2) throw ValidationError("bases must be at least 2");
  auto [rp, a] = primitive_power_root(p);
  auto [rq, b] = primitive_power_root(q);
  if (rp != rq) return {true, 0, 0};
  long long g = std::gcd(static_cast<long long>(a), static_cast<long long>(b));
  return {false, b / g, a / g};
}

DensityWitness density_search(const Rat& alpha, const Rat& beta, const Rat& t,
                              const Rat& eps, long bound) {
  if (alpha <= 1 || beta <= 1) throw ValidationError("bases must exceed 1");
  if (t <= 0 || eps <= 0) throw ValidationError("target and eps must be positive");

  if (alpha.get_den() == 1 && beta.get_den() == 1) {
    IndependenceResult ind = multiplicatively_independent(
        alpha.get_num().get_si(), beta.get_num().get_si());
    if (!ind.independent) {
      Rat gap = t - 1;
      if (gap < 0) gap = -gap;
      if (gap < eps) return {0, 0, Rat(1)};
      throw ValidationError("bases are multiplicatively dependent");
    }
  }

  std::vector<Rat> ap(static_cast<size_t>(bound) + 1), bp = ap;
  ap[0] = 1;
  bp[0] = 1;
  for (long i = 1; i <= bound; ++i) {
    ap[static_cast<size_t>(i)] = ap[static_cast<size_t>(i - 1)] * alpha;
    bp[static_cast<size_t>(i)] = bp[static_cast<size_t>(i - 1)] * beta;
  }
  for (long s = 1; s <= bound; ++s) {
    for (long n = 0; n <= s; ++n) {
      long m = s - n;
      Rat diff = ap[static_cast<size_t>(n)] - t * bp[static_cast<size_t>(m)];
      if (diff < 0) diff = -diff;
      if (diff < eps * bp[static_cast<size_t>(m)])
        return {n, m, Rat(ap[static_cast<size_t>(n)] / bp[static_cast<size_t>(m)])};
    }
  }
  throw ValidationError("no witness within bound");
}

}  // namespace autoseq
