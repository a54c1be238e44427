#include "localgsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "localgsp/error.hpp"

namespace localgsp {

EigenSystem eigendecompose(const ShiftOperator& s) {
  const std::size_t n = s.size();
  const std::vector<double> dense = s.dense();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dense[i * n + j] != dense[j * n + i]) {
        throw Error(Errc::non_symmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") differs from its transpose");
      }
    }
  }
  EigenSystem out;
  out.n = n;
  if (n == 0) return out;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      dense.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd dense_matrix = m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::infeasible, "eigensolver did not converge");
  }
  const bool laplacian = s.kind() != GsoKind::adjacency;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    double lambda = solver.eigenvalues()(static_cast<Eigen::Index>(j));
    if (laplacian && lambda < 0.0) lambda = 0.0;
    out.values[j] = lambda;
    auto col = solver.eigenvectors().col(static_cast<Eigen::Index>(j));
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = col(static_cast<Eigen::Index>(i));
      if (std::abs(c) > 1e-12) {
        sign = c < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors[j * n + i] = sign * col(static_cast<Eigen::Index>(i));
    }
  }
  return out;
}

std::vector<double> graph_fourier_transform(const EigenSystem& eig, std::span<const double> x) {
  if (x.size() != eig.n) {
    throw Error(Errc::dimension_mismatch, "signal length does not match the eigensystem");
  }
  std::vector<double> coeffs(eig.n, 0.0);
  for (std::size_t j = 0; j < eig.n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < eig.n; ++i) sum += eig.vector_entry(i, j) * x[i];
    coeffs[j] = sum;
  }
  return coeffs;
}

double SpectralDistribution::cdf(double lambda) const {
  double total = 0.0;
  for (const SpectralJump& j : jumps) {
    if (j.lambda > lambda) break;
    total += j.mass;
  }
  return total;
}

double SpectralDistribution::moment(std::size_t k) const {
  double total = 0.0;
  for (const SpectralJump& j : jumps) {
    total += j.mass * std::pow(j.lambda, static_cast<double>(k));
  }
  return total;
}

SpectralDistribution psd(const Graph& g) {
  if (!g.has_signal()) throw Error(Errc::missing_signal, "psd needs a signal");
  return psd(g, eigendecompose(build_gso(g, laplacian_kind_for(g))));
}

SpectralDistribution psd(const Graph& g, const EigenSystem& eig) {
  if (!g.has_signal()) throw Error(Errc::missing_signal, "psd needs a signal");
  const std::size_t n = g.num_nodes();
  SpectralDistribution out;
  out.support_upper = 2.0 * (g.is_weighted() ? g.max_weighted_degree()
                                             : static_cast<double>(g.max_degree()));
  if (n == 0) return out;
  const std::vector<double> coeffs = graph_fourier_transform(eig, g.signal());
  const double inv_n = 1.0 / static_cast<double>(n);
  double m0 = 0.0;
  for (double x : g.signal()) m0 += x * x;
  m0 *= inv_n;

  const double lambda_max = eig.values.back();
  const double cluster_tol = 1e-8 * std::max(1.0, lambda_max);
  const double drop_below = 1e-14 * m0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    double mass = 0.0;
    double lambda_sum = 0.0;
    while (j < n && eig.values[j] - eig.values[i] <= cluster_tol) {
      mass += coeffs[j] * coeffs[j] * inv_n;
      lambda_sum += eig.values[j];
      ++j;
    }
    const double lambda =
        std::clamp(lambda_sum / static_cast<double>(j - i), 0.0, out.support_upper);
    if (mass > drop_below) {
      out.jumps.push_back({lambda, mass});
      out.total_mass += mass;
    }
    i = j;
  }
  return out;
}

double moment_global(const Graph& g, std::size_t K) {
  if (!g.has_signal()) throw Error(Errc::missing_signal, "moments need a signal");
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  const ShiftOperator s = build_gso(g, laplacian_kind_for(g));
  const std::vector<double> y = apply_power(s, K, g.signal());
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) sum += g.signal()[v] * y[v];
  return sum / static_cast<double>(n);
}

double moment_local(const SignalizedBall& ball) { return moment_local(ball, ball.depth); }

double moment_local(const SignalizedBall& ball, std::size_t K) {
  if (K > ball.depth) {
    throw Error(Errc::ball_too_shallow, "moment order " + std::to_string(K) +
                                            " exceeds ball depth " + std::to_string(ball.depth));
  }
  const std::vector<double> x = ball.graph.signal_or_zero();
  const double xr = x[ball.root];
  if (xr == 0.0) return 0.0;
  const ShiftOperator s = build_gso(ball.graph, laplacian_kind_for(ball.graph));
  return xr * apply_power(s, K, x)[ball.root];
}

double moment_local_average(const Graph& g, std::size_t K, Backend backend) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  std::vector<double> values(n);
  parallel_for(n, backend, [&](std::size_t v) {
    values[v] = moment_local(extract_rooted_ball(g, static_cast<NodeId>(v), K));
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(n);
}

double moment_via_distribution(const BallDistribution& dist) {
  return moment_via_distribution(dist, dist.K);
}

double moment_via_distribution(const BallDistribution& dist, std::size_t M) {
  if (M > dist.K) {
    throw Error(Errc::depth_mismatch, "moment order " + std::to_string(M) +
                                          " exceeds distribution depth " + std::to_string(dist.K));
  }
  double total = 0.0;
  for (const Atom& atom : dist.atoms) total += atom.mass * moment_local(to_ball(atom.point), M);
  return total;
}

double psd_weak_distance(const SpectralDistribution& p, const SpectralDistribution& q) {
  double upper = std::max(p.support_upper, q.support_upper);
  if (!p.jumps.empty()) upper = std::max(upper, p.jumps.back().lambda);
  if (!q.jumps.empty()) upper = std::max(upper, q.jumps.back().lambda);

  std::vector<double> points{0.0, upper};
  for (const auto& j : p.jumps) points.push_back(j.lambda);
  for (const auto& j : q.jumps) points.push_back(j.lambda);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double total = 0.0;
  std::size_t ip = 0;
  std::size_t iq = 0;
  double fp = 0.0;
  double fq = 0.0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double t = points[k];
    while (ip < p.jumps.size() && p.jumps[ip].lambda <= t) fp += p.jumps[ip++].mass;
    while (iq < q.jumps.size() && q.jumps[iq].lambda <= t) fq += q.jumps[iq++].mass;
    total += std::abs(fp - fq) * (points[k + 1] - t);
  }
  return total;
}

}  // namespace localgsp
