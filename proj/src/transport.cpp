#include "localgsp/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "localgsp/canon.hpp"
#include "localgsp/error.hpp"
#include "localgsp/network_simplex.hpp"
#include "localgsp/rng.hpp"

namespace localgsp {
namespace {

void check_scale(double C, const char* name) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw Error(Errc::invalid_parameter, std::string(name) + " must be finite and positive");
  }
}

void check_pair(const BallDistribution& mu, const BallDistribution& nu) {
  if (mu.K != nu.K) {
    throw Error(Errc::depth_mismatch, "distributions of depth " + std::to_string(mu.K) + " and " +
                                          std::to_string(nu.K));
  }
  if (mu.atoms.empty() || nu.atoms.empty()) {
    throw Error(Errc::empty_distribution, "transport needs nonempty distributions");
  }
  if (mu.is_weighted() || nu.is_weighted()) {
    throw Error(Errc::kind_mismatch, "no ground metric is defined for weighted balls");
  }
}

// Quotient distances between same-ball atom pairs, clipped at `cap`; other
// pairs are flagged as different balls.
struct PairTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<char> same;
  std::vector<double> distance;

  double cost(std::size_t e, double C) const {
    return same[e] ? std::min(distance[e], 2.0 * C) : C;
  }
};

PairTable pair_table(const BallDistribution& mu, const BallDistribution& nu, double cap,
                     Backend backend) {
  PairTable t;
  t.rows = mu.atoms.size();
  t.cols = nu.atoms.size();
  t.same.assign(t.rows * t.cols, 0);
  t.distance.assign(t.rows * t.cols, 0.0);
  std::vector<DecodedCode> decoded(t.rows);
  parallel_for(t.rows, backend, [&](std::size_t i) { decoded[i] = decode_code(mu.atoms[i].point.code); });
  parallel_for(t.rows, backend, [&](std::size_t i) {
    const OmegaPoint& a = mu.atoms[i].point;
    for (std::size_t j = 0; j < t.cols; ++j) {
      const OmegaPoint& b = nu.atoms[j].point;
      if (a.code != b.code) continue;
      const std::size_t e = i * t.cols + j;
      t.same[e] = 1;
      t.distance[e] = quotient_distance(decoded[i].graph, decoded[i].root, a.signal, b.signal, cap);
    }
  });
  return t;
}

TransportPlan solve(const BallDistribution& mu, const BallDistribution& nu,
                    const std::vector<double>& cost) {
  std::vector<double> supply(mu.atoms.size());
  std::vector<double> demand(nu.atoms.size());
  for (std::size_t i = 0; i < supply.size(); ++i) supply[i] = mu.atoms[i].mass;
  for (std::size_t j = 0; j < demand.size(); ++j) demand[j] = nu.atoms[j].mass;
  TransportSolution solution = solve_transport(supply, demand, cost);
  TransportPlan plan;
  plan.rows = supply.size();
  plan.cols = demand.size();
  plan.flows = std::move(solution.flows);
  plan.cost = solution.cost;
  return plan;
}

}  // namespace

double ball_metric(const OmegaPoint& a, const OmegaPoint& b, double C) {
  check_scale(C, "C");
  if (a.depth != b.depth) {
    throw Error(Errc::depth_mismatch, "points of depth " + std::to_string(a.depth) + " and " +
                                          std::to_string(b.depth));
  }
  if (a.code != b.code) return C;
  const DecodedCode decoded = decode_code(a.code);
  return std::min(quotient_distance(decoded.graph, decoded.root, a.signal, b.signal, 2.0 * C),
                  2.0 * C);
}

std::vector<double> cost_matrix(const BallDistribution& mu, const BallDistribution& nu, double C,
                                Backend backend) {
  check_scale(C, "C");
  check_pair(mu, nu);
  const PairTable table = pair_table(mu, nu, 2.0 * C, backend);
  std::vector<double> cost(table.rows * table.cols);
  for (std::size_t e = 0; e < cost.size(); ++e) cost[e] = table.cost(e, C);
  return cost;
}

WassersteinResult wasserstein1(const BallDistribution& mu, const BallDistribution& nu, double C,
                               Backend backend) {
  const std::vector<double> cost = cost_matrix(mu, nu, C, backend);
  WassersteinResult out;
  out.plan = solve(mu, nu, cost);
  out.distance = out.plan.cost;
  return out;
}

double transfer_bound(const BallDistribution& mu, const BallDistribution& nu, double L) {
  check_scale(L, "L");
  return L * wasserstein1(mu, nu, 1.0 / L).distance;
}

TighterBound tighter_bound(const BallDistribution& mu, const BallDistribution& nu, double L,
                           double A, std::size_t grid) {
  check_scale(L, "L");
  check_scale(A, "A");
  if (grid < 2) throw Error(Errc::invalid_parameter, "grid needs at least two points");
  check_pair(mu, nu);
  const double largest_scale = A / L;
  const PairTable table = pair_table(mu, nu, 2.0 * largest_scale, Backend::openmp);

  TighterBound out;
  out.value = std::numeric_limits<double>::infinity();
  const double log_lo = std::log(1e-6);
  std::vector<double> cost(table.rows * table.cols);
  for (std::size_t i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
    const double C = i + 1 == grid ? 1.0 : std::exp(log_lo * (1.0 - t));
    const double scale = A * C / L;
    for (std::size_t e = 0; e < cost.size(); ++e) cost[e] = table.cost(e, scale);
    const double value = (L / C) * solve(mu, nu, cost).cost;
    out.grid.push_back(C);
    out.values.push_back(value);
    if (value < out.value) {
      out.value = value;
      out.best_C = C;
    }
  }
  return out;
}

LipschitzEstimate lipschitz_estimate(const BallSummary& summary, const BallDistribution& dist,
                                     std::size_t trials, std::uint64_t seed, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(Errc::invalid_parameter, "perturbation radius must be positive");
  }
  LipschitzEstimate out;
  out.radius = radius;
  const std::size_t count = dist.atoms.size();
  if (count == 0) return out;

  std::vector<SignalizedBall> balls(count);
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    balls[i] = to_ball(dist.atoms[i].point);
    values[i] = summary(balls[i]);
  }
  auto consider = [&](const SignalizedBall& ball, std::span<const double> x, double jx,
                      std::span<const double> y, double jy) {
    const double d = quotient_distance(ball.graph, ball.root, x, y);
    if (d > 0.0) {
      out.value = std::max(out.value, std::abs(jx - jy) / d);
      ++out.pairs;
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (dist.atoms[i].point.code != dist.atoms[j].point.code) continue;
      consider(balls[i], dist.atoms[i].point.signal, values[i], dist.atoms[j].point.signal,
               values[j]);
    }
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const std::size_t i = uniform_index(rng, count);
    std::vector<double> y = dist.atoms[i].point.signal;
    for (double& v : y) v += uniform(rng, -radius, radius);
    const SignalizedBall perturbed{balls[i].graph.with_signal(y), balls[i].root, balls[i].depth, {}};
    consider(balls[i], dist.atoms[i].point.signal, values[i], y, summary(perturbed));
  }
  return out;
}

BallDistribution support_union(const BallDistribution& mu, const BallDistribution& nu) {
  if (mu.K != nu.K) throw Error(Errc::depth_mismatch, "distributions of different depth");
  std::vector<Atom> atoms;
  for (const Atom& a : mu.atoms) atoms.push_back({a.point, 0.5 * a.mass});
  for (const Atom& a : nu.atoms) atoms.push_back({a.point, 0.5 * a.mass});
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return point_less(a.point, b.point); });
  BallDistribution out;
  out.K = mu.K;
  for (Atom& a : atoms) {
    if (!out.atoms.empty() && point_equal(out.atoms.back().point, a.point)) {
      out.atoms.back().mass += a.mass;
    } else {
      out.atoms.push_back(std::move(a));
    }
  }
  out.source.n = mu.source.n + nu.source.n;
  out.source.max_degree = std::max(mu.source.max_degree, nu.source.max_degree);
  out.source.signal_bound = std::max(mu.source.signal_bound, nu.source.signal_bound);
  return out;
}

}  // namespace localgsp
