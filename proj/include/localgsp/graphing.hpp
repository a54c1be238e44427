#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localgsp/ball.hpp"
#include "localgsp/distribution.hpp"
#include "localgsp/graph.hpp"
#include "localgsp/parallel.hpp"
#include "localgsp/rng.hpp"
#include "localgsp/signal_expr.hpp"

namespace localgsp {

// A node of a graphing: a base coordinate plus an exact integer index. Two
// points are the same node iff both fields are equal, so orbit collisions are
// decided on the integer part.
struct GraphingPoint {
  double base = 0.0;
  std::int64_t index = 0;

  friend bool operator==(const GraphingPoint&, const GraphingPoint&) = default;
  friend bool operator<(const GraphingPoint& a, const GraphingPoint& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.base < b.base;
  }
};

// Real function on [0, 1).
class SignalSpec {
 public:
  static SignalSpec constant(double value);
  // values[i] holds on [breaks[i-1], breaks[i]) with breaks[-1] = 0 and
  // breaks[m-1] = 1; breaks are strictly increasing inside (0, 1).
  static SignalSpec piecewise(std::vector<double> breaks, std::vector<double> values);
  static SignalSpec expression(const std::string& text, std::optional<double> bound);
  // {"type": "constant" | "piecewise" | "expr", ...}
  static SignalSpec from_json(const nlohmann::json& doc);

  // Throws Error{signal_bound_violation} when a declared bound is exceeded.
  double operator()(double t) const;
  std::optional<double> bound() const { return bound_; }
  nlohmann::json to_json() const;

 private:
  enum class Type { constant, piecewise, expression } type_ = Type::constant;
  double value_ = 0.0;
  std::vector<double> breaks_;
  std::vector<double> values_;
  std::optional<Expression> expr_;
  std::optional<double> bound_;
};

// Sampling oracle for a graphing of bounded degree.
class Graphing {
 public:
  virtual ~Graphing() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t degree_bound() const = 0;
  virtual GraphingPoint sample(Rng& rng) const = 0;
  virtual std::vector<GraphingPoint> neighbors(const GraphingPoint& v) const = 0;
  virtual double signal(const GraphingPoint& v) const = 0;
  virtual std::optional<double> signal_bound() const = 0;
  // Location of v in [0, 1).
  virtual double position(const GraphingPoint& v) const = 0;
  // One point per interval of a finite-derived graphing; empty otherwise.
  virtual std::vector<GraphingPoint> representatives() const { return {}; }
};

// Interval graphing of a finite graph: node i owns [i/n, (i+1)/n).
std::unique_ptr<Graphing> graphing_from_graph(const Graph& g);

struct RotationAlpha {
  bool irrational = false;
  std::int64_t p = 0;
  std::int64_t q = 1;
  double value = 0.0;

  // "p/q" (reduced on the way in), "irrational", or "irrational:<value>".
  static RotationAlpha parse(const std::string& text);
  std::string to_string() const;
};

inline constexpr double kDefaultIrrationalAlpha = 0.6180339887498949;

// Circle graphing t ~ t +/- alpha (mod 1).
std::unique_ptr<Graphing> rotation_graphing(const RotationAlpha& alpha, SignalSpec signal);

// {"kind": "rotation", "alpha": "1/5" | "irrational", "signal": {...}} or
// {"kind": "finite-derived", "graph": "g.json" | {...}}. Relative graph paths
// resolve against base_dir.
std::unique_ptr<Graphing> graphing_from_json(const nlohmann::json& doc,
                                             const std::filesystem::path& base_dir = {});

// Rooted K-ball around `root` found by BFS through the neighbor oracle.
// Throws Error{degree_bound_violation} on oracle misbehaviour.
SignalizedBall graphing_ball(const Graphing& g, const GraphingPoint& root, std::size_t K);
SignalizedBall sample_rooted_ball(const Graphing& g, std::size_t K, std::uint64_t seed);

// Exhaustive one-point-per-interval distribution (finite-derived only).
BallDistribution graphing_distribution_exhaustive(const Graphing& g, std::size_t K,
                                                  Backend backend = Backend::openmp);
// Empirical distribution of `samples` sampled balls; sample i uses
// derive_seed(seed, i).
BallDistribution graphing_distribution_sampled(const Graphing& g, std::size_t K,
                                               std::size_t samples, std::uint64_t seed,
                                               Backend backend = Backend::openmp);

struct MomentEstimate {
  std::size_t K = 0;
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

MomentEstimate graphing_moment(const Graphing& g, std::size_t K, std::size_t samples,
                               std::uint64_t seed, Backend backend = Backend::openmp);

struct LaplacianEvaluation {
  SignalizedBall ball;
  std::vector<std::size_t> distance;         // hop distance from the root
  std::vector<std::vector<double>> powers;   // powers[k] = S^k x on the ball, k = 0..depth
};

LaplacianEvaluation graphing_laplacian_apply(const Graphing& g, const GraphingPoint& v,
                                             std::size_t depth);

struct ConvergenceRow {
  std::size_t n = 0;
  double w1 = 0.0;
  std::vector<double> moments;  // m_0..m_K of the finite graph
};

struct ConvergenceReport {
  std::size_t K = 0;
  double C = 1.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ConvergenceRow> rows;
  std::vector<MomentEstimate> graphing_moments;  // orders 0..K
};

// W1 of each graph's K-ball distribution against the graphing's, plus moment
// trajectories. samples = 0 uses the exhaustive distribution and exact
// moments of a finite-derived graphing.
ConvergenceReport convergence_experiment(const std::vector<Graph>& sequence, const Graphing& g,
                                         std::size_t K, double C, std::size_t samples,
                                         std::uint64_t seed, Backend backend = Backend::openmp);

}  // namespace localgsp
