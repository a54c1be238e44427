#pragma once

// Dense linear algebra straight from the edge list.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "localgsp/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix laplacian(const localgsp::Graph& g, bool use_weights = true) {
  const std::size_t n = g.num_nodes();
  Matrix L(n, std::vector<double>(n, 0.0));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto edge = g.edges()[e];
    const double w = use_weights ? g.weight(static_cast<localgsp::EdgeId>(e)) : 1.0;
    L[edge.u][edge.v] -= w;
    L[edge.v][edge.u] -= w;
    L[edge.u][edge.u] += w;
    L[edge.v][edge.v] += w;
  }
  return L;
}

inline Matrix adjacency(const localgsp::Graph& g) {
  const std::size_t n = g.num_nodes();
  Matrix A(n, std::vector<double>(n, 0.0));
  for (const auto& edge : g.edges()) A[edge.u][edge.v] = A[edge.v][edge.u] = 1.0;
  return A;
}

inline Matrix identity(std::size_t n) {
  Matrix I(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1.0;
  return I;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline std::vector<double> apply(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline Matrix polynomial(const Matrix& s, std::span<const double> taps) {
  const std::size_t n = s.size();
  Matrix out(n, std::vector<double>(n, 0.0));
  Matrix power = identity(n);
  for (std::size_t k = 0; k < taps.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += taps[k] * power[i][j];
    power = multiply(power, s);
  }
  return out;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Cyclic Jacobi rotations; returns ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace oracle
