#include "autoseq/perron.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "autoseq/detail/digraph.hpp"

namespace autoseq {

bool is_primitive(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("primitivity needs a square matrix");
  int n = m.rows();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m.at(i, j) > 0) adj[static_cast<size_t>(j)].push_back(i);
  std::vector<int> id = detail::scc_ids(adj);
  if (*std::max_element(id.begin(), id.end()) != 0) return false;
  if (n == 1) return m.at(0, 0) > 0;
  return detail::digraph_period(adj) == 1;
}

namespace {

// Kernel of (m - theta I), which is one dimensional for a primitive matrix
// at its dominant eigenvalue; normalized to sum 1.
std::vector<Rat> perron_kernel(const IntMatrix& m, const Rat& theta) {
  int n = m.rows();
  std::vector<std::vector<Rat>> a(
      static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = rat_of(m.at(i, j));
  for (int i = 0; i < n; ++i) a[i][i] -= theta;

  std::vector<int> pivcols;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pr)]);
    Rat inv = a[row][col];
    for (int c = col; c < n; ++c) a[row][c] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivcols.push_back(col);
    ++row;
  }

  std::vector<char> is_piv(static_cast<size_t>(n), 0);
  for (int c : pivcols) is_piv[static_cast<size_t>(c)] = 1;
  int freec = -1;
  for (int c = 0; c < n; ++c)
    if (!is_piv[static_cast<size_t>(c)]) {
      freec = c;
      break;
    }
  if (freec < 0) throw InternalError("dominant eigenspace is trivial");

  std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
  x[static_cast<size_t>(freec)] = 1;
  for (size_t r = 0; r < pivcols.size(); ++r) {
    int pc = pivcols[r];
    Rat sum(0);
    for (int c = pc + 1; c < n; ++c)
      if (a[r][c] != 0) sum += a[r][c] * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(pc)] = -sum;
  }

  Rat total(0);
  for (const Rat& xi : x) total += xi;
  if (total == 0) throw InternalError("degenerate dominant eigenvector");
  for (Rat& xi : x) xi /= total;
  for (const Rat& xi : x)
    if (xi <= 0) throw InternalError("dominant eigenvector not positive");
  return x;
}

struct TopEigen {
  double value = 0;
  double secondary = 0;
  std::vector<double> vec;
};

TopEigen top_eigen(const Eigen::MatrixXd& A) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw InternalError("eigensolver failed");
  const auto& ev = es.eigenvalues();
  int n = static_cast<int>(ev.size());
  int top = 0;
  for (int i = 1; i < n; ++i) {
    double mi = std::abs(ev[i]), mt = std::abs(ev[top]);
    if (mi > mt + 1e-12 ||
        (std::abs(mi - mt) <= 1e-12 && ev[i].real() > ev[top].real()))
      top = i;
  }
  TopEigen out;
  out.value = ev[top].real();
  for (int i = 0; i < n; ++i)
    if (i != top) out.secondary = std::max(out.secondary, std::abs(ev[i]));
  Eigen::VectorXd v = es.eigenvectors().col(top).real();
  double sum = v.sum();
  if (std::abs(sum) < 1e-12) throw InternalError("bad dominant eigenvector");
  v /= sum;
  out.vec.assign(v.data(), v.data() + n);
  return out;
}

}  // namespace

EigenData perron_data(const IntMatrix& m) {
  if (!is_primitive(m)) throw ValidationError("matrix is not primitive");
  int n = m.rows();

  EigenData out;
  std::vector<long long> cs = m.column_sums();
  bool const_cols = std::all_of(cs.begin(), cs.end(),
                                [&](long long v) { return v == cs[0]; });

  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = static_cast<double>(m.at(i, j));
  TopEigen r = top_eigen(A);
  TopEigen l = top_eigen(A.transpose());
  out.secondary_modulus = std::max(r.secondary, l.secondary);

  if (const_cols) {
    out.exact = true;
    out.theta = rat_of(cs[0]);
    out.right = perron_kernel(m, out.theta);
    out.left.assign(static_cast<size_t>(n), Rat(1));
    out.theta_d = rat_double(out.theta);
    out.right_d.resize(static_cast<size_t>(n));
    out.left_d.assign(static_cast<size_t>(n), 1.0);
    for (int i = 0; i < n; ++i)
      out.right_d[static_cast<size_t>(i)] =
          rat_double(out.right[static_cast<size_t>(i)]);
    return out;
  }

  out.theta_d = r.value;
  out.right_d = r.vec;
  double dot = 0;
  for (int i = 0; i < n; ++i)
    dot += r.vec[static_cast<size_t>(i)] * l.vec[static_cast<size_t>(i)];
  if (std::abs(dot) < 1e-12) throw InternalError("left/right vectors degenerate");
  out.left_d.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out.left_d[static_cast<size_t>(i)] = l.vec[static_cast<size_t>(i)] / dot;
  return out;
}

FrequencyTable letter_frequencies(const Substitution& s) {
  IntMatrix m = incidence_matrix(s.rule());
  EigenData e = perron_data(m);
  FrequencyTable out;
  out.exact = e.exact;
  for (int a = 0; a < s.alphabet()->size(); ++a)
    out.items.emplace_back(s.alphabet(),
                           std::vector<int32_t>{static_cast<int32_t>(a)});
  if (e.exact) {
    out.freq = e.right;
    out.freq_d = e.right_d;
  } else {
    out.freq_d = e.right_d;
  }
  return out;
}

FrequencyTable word_frequencies(const Substitution& s, long k) {
  BlockPresentation bp = k_block_substitution(s, k);
  IntMatrix m = incidence_matrix(bp.sub.rule());
  EigenData e = perron_data(m);
  FrequencyTable out;
  out.exact = e.exact;
  out.items = bp.blocks;
  if (e.exact) {
    out.freq = e.right;
    out.freq_d = e.right_d;
  } else {
    out.freq_d = e.right_d;
  }
  return out;
}

ThetaScalingReport verify_theta_scaling(const Substitution& s, long max_len) {
  if (max_len < 2) throw ValidationError("max_len must be >= 2");
  ThetaScalingReport rep;
  IntMatrix m = incidence_matrix(s.rule());
  EigenData e = perron_data(m);
  rep.exact = e.exact;

  // I_k = min_a |s^k(a)|: minimum column sum of the k-th matrix power.
  std::vector<long long> I{1};
  IntMatrix pw = IntMatrix::identity(m.rows());
  while (I.back() < max_len) {
    pw = pw * m;
    std::vector<long long> cs = pw.column_sums();
    I.push_back(*std::min_element(cs.begin(), cs.end()));
  }

  auto k_of = [&](long n) {
    for (size_t k = 0; k < I.size(); ++k)
      if (n <= I[k]) return static_cast<int>(k);
    throw InternalError("k(n) scan too short");
  };

  for (long n = 1; n <= max_len; ++n) {
    int k = k_of(n);
    rep.k_of_n.push_back(k);
    FrequencyTable ft = word_frequencies(s, n);
    for (size_t i = 0; i < ft.items.size(); ++i) {
      Rat scaled;
      if (rep.exact) {
        Rat tk(1);
        for (int t = 0; t < k; ++t) tk *= e.theta;
        scaled = ft.freq[i] * tk;
      } else {
        // Round floating values so set membership is meaningful.
        double v = ft.freq_d[i] * std::pow(e.theta_d, k);
        scaled = rat_from_decimal(std::to_string(std::round(v * 1e9) / 1e9));
      }
      rep.scaled.insert(scaled);
      if (n <= max_len / 2) rep.scaled_half.insert(scaled);
    }
  }
  rep.stabilized = rep.scaled == rep.scaled_half;
  return rep;
}

}  // namespace autoseq
