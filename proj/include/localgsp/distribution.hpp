#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localgsp/ball.hpp"
#include "localgsp/canon.hpp"
#include "localgsp/graph.hpp"
#include "localgsp/parallel.hpp"

namespace localgsp {

// One point of Omega_K: a canonical rooted ball plus a signal in canonical
// node order. `weights` mirrors the weights stored in the code (canonical
// edge order) for weighted balls.
struct OmegaPoint {
  std::vector<std::uint8_t> code;
  std::vector<double> signal;
  std::size_t depth = 0;
  std::optional<std::vector<double>> weights;

  std::size_t size() const { return signal.size(); }
  bool is_weighted() const { return weights.has_value(); }
};

// Ball in canonical order with the point's signal attached.
SignalizedBall to_ball(const OmegaPoint& point);
OmegaPoint to_point(const SignalizedBall& ball);

// Total order used for atoms: code bytes, then signal lexicographically.
bool point_less(const OmegaPoint& a, const OmegaPoint& b);
bool point_equal(const OmegaPoint& a, const OmegaPoint& b);

struct Atom {
  OmegaPoint point;
  double mass = 0.0;
};

struct DistributionSource {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  double signal_bound = 0.0;
  bool weighted = false;
  bool zero_signal_substituted = false;
};

struct BallDistribution {
  std::size_t K = 0;
  std::vector<Atom> atoms;
  DistributionSource source;

  double total_mass() const;
  bool is_weighted() const;
};

struct PushforwardOptions {
  Backend backend = Backend::openmp;
  // Optional node measure replacing the uniform one; normalized internally.
  std::optional<std::vector<double>> node_weights;
  std::string graph_id;
};

// (Sigma_K)_* of the uniform measure on the nodes of g.
BallDistribution pushforward(const Graph& g, std::size_t K, const PushforwardOptions& options = {});

// Empirical distribution of a list of points (mass 1/m each, merged).
BallDistribution empirical_distribution(std::span<const OmegaPoint> points, std::size_t K);

std::vector<OmegaPoint> sample_points(const BallDistribution& dist, std::size_t m,
                                      std::uint64_t seed);

struct SupportBound {
  std::size_t max_degree = 0;
  double signal_bound = 0.0;
  std::size_t ball_count = 0;
};
SupportBound support_bound(const BallDistribution& dist);

nlohmann::json distribution_to_json(const BallDistribution& dist);
BallDistribution distribution_from_json(const nlohmann::json& doc);

}  // namespace localgsp
