#pragma once

// Brute-force reference implementations over full adjacency matrices. These
// re-derive every metric from first principles, independently of the sparse
// code paths under test, and are only meant for small graphs.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "citynet/graph.hpp"
#include "citynet/metrics.hpp"

namespace citynet::testing {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_adjacency(const Snapshot& snapshot, std::size_t n) {
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const EdgeRecord& e : snapshot.edges())
    a[e.src][e.dst] = static_cast<double>(e.weight);
  return a;
}

/// Row of the matrix restricted to a direction, binarized on demand.
inline std::vector<double> dense_row(const Matrix& a, std::size_t i, Mode mode,
                                     Direction direction) {
  const std::size_t n = a.size();
  std::vector<double> row(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double value = 0.0;
    switch (direction) {
      case Direction::out: value = a[i][j]; break;
      case Direction::in: value = a[j][i]; break;
      case Direction::both: value = a[i][j] + a[j][i]; break;
    }
    if (mode == Mode::binary) value = value > 0.0 ? 1.0 : 0.0;
    row[j] = value;
  }
  return row;
}

/// nullopt when the score is undefined (a zero row sum on either side).
inline std::optional<double> dense_overlap(const Matrix& a1, const Matrix& a2,
                                           std::size_t i, Mode mode,
                                           Direction direction) {
  const std::vector<double> r1 = dense_row(a1, i, mode, direction);
  const std::vector<double> r2 = dense_row(a2, i, mode, direction);
  double sum1 = 0.0, sum2 = 0.0, products = 0.0;
  for (std::size_t j = 0; j < r1.size(); ++j) {
    sum1 += r1[j];
    sum2 += r2[j];
    products += r1[j] * r2[j];
  }
  if (sum1 <= 0.0 || sum2 <= 0.0) return std::nullopt;
  return products / std::sqrt(sum1 * sum2);
}

inline std::vector<std::vector<bool>> dense_undirected(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> u(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a[i][j] > 0.0 || a[j][i] > 0.0)) u[i][j] = true;
  return u;
}

inline double dense_transitivity(const Matrix& a) {
  const auto u = dense_undirected(a);
  const std::size_t n = u.size();
  unsigned long long triangles = 0, paths2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned long long deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += u[i][j] ? 1 : 0;
    if (deg >= 2) paths2 += deg * (deg - 1) / 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (u[i][j] && u[j][k] && u[i][k]) ++triangles;
  if (paths2 == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(paths2);
}

/// Floyd–Warshall mean distance over ordered pairs in the largest connected
/// component; equally large components resolved toward the smallest node id.
inline double dense_average_path_length(const Matrix& a) {
  const auto u = dense_undirected(a);
  const std::size_t n = u.size();
  constexpr double kInf = 1e18;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u[i][j]) dist[i][j] = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];

  std::vector<int> component(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] >= 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (dist[i][j] < kInf) component[j] = next;
    ++next;
  }
  std::vector<std::size_t> size(static_cast<std::size_t>(next), 0);
  for (std::size_t i = 0; i < n; ++i) size[component[i]]++;
  int best = 0;
  for (int c = 1; c < next; ++c)
    if (size[c] > size[best]) best = c;  // first largest wins ties

  if (size[best] < 2) return 0.0;
  double total = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && component[i] == best && component[j] == best) {
        total += dist[i][j];
        pairs += 1.0;
      }
  return total / pairs;
}

}  // namespace citynet::testing
