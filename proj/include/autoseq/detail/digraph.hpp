#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace autoseq::detail {

// Strongly connected component id per node (Kosaraju, iterative).
inline std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> radj(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<size_t>(u)])
      radj[static_cast<size_t>(v)].push_back(u);

  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<std::pair<int, size_t>> st{{s, 0}};
    seen[static_cast<size_t>(s)] = 1;
    while (!st.empty()) {
      auto& [u, i] = st.back();
      if (i < adj[static_cast<size_t>(u)].size()) {
        int v = adj[static_cast<size_t>(u)][i++];
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = 1;
          st.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        st.pop_back();
      }
    }
  }

  std::vector<int> id(static_cast<size_t>(n), -1);
  int c = 0;
  for (int k = n - 1; k >= 0; --k) {
    int s = order[static_cast<size_t>(k)];
    if (id[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> st{s};
    id[static_cast<size_t>(s)] = c;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int v : radj[static_cast<size_t>(u)])
        if (id[static_cast<size_t>(v)] < 0) {
          id[static_cast<size_t>(v)] = c;
          st.push_back(v);
        }
    }
    ++c;
  }
  return id;
}

// Gcd of cycle lengths of a strongly connected digraph; 0 when there is no
// cycle (single node without a self-loop).
inline long digraph_period(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<long> level(static_cast<size_t>(n), -1);
  std::vector<int> bfs{0};
  level[0] = 0;
  for (size_t h = 0; h < bfs.size(); ++h) {
    int u = bfs[h];
    for (int v : adj[static_cast<size_t>(u)])
      if (level[static_cast<size_t>(v)] < 0) {
        level[static_cast<size_t>(v)] = level[static_cast<size_t>(u)] + 1;
        bfs.push_back(v);
      }
  }
  long g = 0;
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<size_t>(u)]) {
      long d = level[static_cast<size_t>(u)] + 1 - level[static_cast<size_t>(v)];
      g = std::gcd(g, d < 0 ? -d : d);
    }
  return g;
}

}  // namespace autoseq::detail
