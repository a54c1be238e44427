#include "localgsp/graphing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "localgsp/error.hpp"
#include "localgsp/gso.hpp"
#include "localgsp/io.hpp"
#include "localgsp/spectral.hpp"
#include "localgsp/transport.hpp"

namespace localgsp {

SignalSpec SignalSpec::constant(double value) {
  if (!std::isfinite(value)) throw Error(Errc::non_finite_value, "constant signal");
  SignalSpec s;
  s.type_ = Type::constant;
  s.value_ = value;
  s.bound_ = std::abs(value);
  return s;
}

SignalSpec SignalSpec::piecewise(std::vector<double> breaks, std::vector<double> values) {
  if (values.size() != breaks.size() + 1) {
    throw Error(Errc::invalid_parameter, "piecewise signal needs one more value than breaks");
  }
  double prev = 0.0;
  for (double b : breaks) {
    if (!(b > prev) || !(b < 1.0)) {
      throw Error(Errc::invalid_parameter, "piecewise breaks must increase strictly inside (0, 1)");
    }
    prev = b;
  }
  double bound = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(Errc::non_finite_value, "piecewise value");
    bound = std::max(bound, std::abs(v));
  }
  SignalSpec s;
  s.type_ = Type::piecewise;
  s.breaks_ = std::move(breaks);
  s.values_ = std::move(values);
  s.bound_ = bound;
  return s;
}

SignalSpec SignalSpec::expression(const std::string& text, std::optional<double> bound) {
  if (bound && (!(*bound >= 0.0) || !std::isfinite(*bound))) {
    throw Error(Errc::invalid_parameter, "signal bound must be finite and nonnegative");
  }
  SignalSpec s;
  s.type_ = Type::expression;
  s.expr_ = Expression::parse(text);
  s.bound_ = bound;
  return s;
}

SignalSpec SignalSpec::from_json(const nlohmann::json& doc) {
  try {
    const std::string type = doc.at("type").get<std::string>();
    if (type == "constant") return constant(doc.at("value").get<double>());
    if (type == "piecewise") {
      return piecewise(doc.value("breaks", std::vector<double>{}),
                       doc.at("values").get<std::vector<double>>());
    }
    if (type == "expr") {
      std::optional<double> bound;
      if (doc.contains("bound")) bound = doc.at("bound").get<double>();
      return expression(doc.at("expr").get<std::string>(), bound);
    }
    throw Error(Errc::parse_error, "unknown signal type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("signal spec: ") + e.what());
  }
}

nlohmann::json SignalSpec::to_json() const {
  switch (type_) {
    case Type::constant: return {{"type", "constant"}, {"value", value_}};
    case Type::piecewise: return {{"type", "piecewise"}, {"breaks", breaks_}, {"values", values_}};
    case Type::expression: {
      nlohmann::json doc{{"type", "expr"}, {"expr", expr_->text()}};
      if (bound_) doc["bound"] = *bound_;
      return doc;
    }
  }
  return {};
}

double SignalSpec::operator()(double t) const {
  double v = value_;
  if (type_ == Type::piecewise) {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    v = values_[static_cast<std::size_t>(it - breaks_.begin())];
  } else if (type_ == Type::expression) {
    v = (*expr_)(t);
    if (!std::isfinite(v)) {
      throw Error(Errc::non_finite_value, "signal '" + expr_->text() + "' at t=" + format_double(t));
    }
    if (bound_ && std::abs(v) > *bound_) {
      throw Error(Errc::signal_bound_violation, "signal '" + expr_->text() + "' at t=" +
                                                    format_double(t) + " exceeds bound " +
                                                    format_double(*bound_));
    }
  }
  return v;
}

namespace {

class FiniteDerivedGraphing final : public Graphing {
 public:
  explicit FiniteDerivedGraphing(Graph g) : g_(std::move(g)) {
    if (!g_.has_signal()) throw Error(Errc::missing_signal, "finite-derived graphing needs a signal");
    if (g_.num_nodes() == 0) throw Error(Errc::invalid_parameter, "empty graph");
    for (double x : g_.signal()) bound_ = std::max(bound_, std::abs(x));
  }

  std::string kind() const override { return "finite-derived"; }
  std::size_t degree_bound() const override { return g_.max_degree(); }

  GraphingPoint sample(Rng& rng) const override {
    const double n = static_cast<double>(g_.num_nodes());
    const double t = uniform01(rng);
    const auto i = std::min<std::int64_t>(static_cast<std::int64_t>(t * n),
                                          static_cast<std::int64_t>(g_.num_nodes()) - 1);
    return {t - static_cast<double>(i) / n, i};
  }

  std::vector<GraphingPoint> neighbors(const GraphingPoint& v) const override {
    std::vector<GraphingPoint> out;
    for (NodeId j : g_.neighbors(static_cast<NodeId>(v.index))) out.push_back({v.base, j});
    return out;
  }

  double signal(const GraphingPoint& v) const override {
    return g_.signal()[static_cast<std::size_t>(v.index)];
  }
  std::optional<double> signal_bound() const override { return bound_; }

  double position(const GraphingPoint& v) const override {
    return v.base + static_cast<double>(v.index) / static_cast<double>(g_.num_nodes());
  }

  std::vector<GraphingPoint> representatives() const override {
    std::vector<GraphingPoint> out;
    for (std::size_t i = 0; i < g_.num_nodes(); ++i) out.push_back({0.0, static_cast<std::int64_t>(i)});
    return out;
  }

 private:
  Graph g_;
  double bound_ = 0.0;
};

class RotationGraphing final : public Graphing {
 public:
  RotationGraphing(RotationAlpha alpha, SignalSpec signal)
      : alpha_(alpha), signal_(std::move(signal)) {}

  std::string kind() const override { return "rotation"; }
  std::size_t degree_bound() const override { return 2; }

  // Rational: base in [0, 1/q), index j in [0, q), t = base + j/q.
  // Irrational: base t0 in [0, 1), index k, t = frac(t0 + k alpha).
  GraphingPoint sample(Rng& rng) const override {
    const double t = uniform01(rng);
    if (alpha_.irrational) return {t, 0};
    const double q = static_cast<double>(alpha_.q);
    const auto j = std::min<std::int64_t>(static_cast<std::int64_t>(t * q), alpha_.q - 1);
    return {t - static_cast<double>(j) / q, j};
  }

  std::vector<GraphingPoint> neighbors(const GraphingPoint& v) const override {
    if (alpha_.irrational) return {{v.base, v.index - 1}, {v.base, v.index + 1}};
    const std::int64_t up = (v.index + alpha_.p) % alpha_.q;
    const std::int64_t down = ((v.index - alpha_.p) % alpha_.q + alpha_.q) % alpha_.q;
    if (up == down) return {{v.base, up}};
    return {{v.base, std::min(up, down)}, {v.base, std::max(up, down)}};
  }

  double signal(const GraphingPoint& v) const override { return signal_(position(v)); }
  std::optional<double> signal_bound() const override { return signal_.bound(); }

  double position(const GraphingPoint& v) const override {
    if (alpha_.irrational) {
      const double t = v.base + static_cast<double>(v.index) * alpha_.value;
      const double f = t - std::floor(t);
      return f >= 1.0 ? 0.0 : f;
    }
    return v.base + static_cast<double>(v.index) / static_cast<double>(alpha_.q);
  }

 private:
  RotationAlpha alpha_;
  SignalSpec signal_;
};

}  // namespace

std::unique_ptr<Graphing> graphing_from_graph(const Graph& g) {
  return std::make_unique<FiniteDerivedGraphing>(g);
}

RotationAlpha RotationAlpha::parse(const std::string& text) {
  RotationAlpha a;
  if (text == "irrational" || text.rfind("irrational:", 0) == 0) {
    a.irrational = true;
    a.value = text == "irrational" ? kDefaultIrrationalAlpha : parse_double(text.substr(11));
    if (!(a.value > 0.0 && a.value < 1.0)) {
      throw Error(Errc::invalid_parameter, "alpha must lie in (0, 1)");
    }
    return a;
  }
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw Error(Errc::invalid_parameter, "alpha must be p/q or irrational, got '" + text + "'");
  }
  std::int64_t p = 0;
  std::int64_t q = 0;
  try {
    std::size_t used = 0;
    p = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("p");
    const std::string rest = text.substr(slash + 1);
    q = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("q");
  } catch (const std::exception&) {
    throw Error(Errc::invalid_parameter, "cannot parse alpha '" + text + "'");
  }
  if (q <= 0 || p <= 0 || p >= q) throw Error(Errc::invalid_parameter, "alpha must lie in (0, 1)");
  const std::int64_t d = std::gcd(p, q);
  a.p = p / d;
  a.q = q / d;
  a.value = static_cast<double>(a.p) / static_cast<double>(a.q);
  return a;
}

std::string RotationAlpha::to_string() const {
  if (irrational) {
    return value == kDefaultIrrationalAlpha ? "irrational" : "irrational:" + format_double(value);
  }
  return std::to_string(p) + "/" + std::to_string(q);
}

std::unique_ptr<Graphing> rotation_graphing(const RotationAlpha& alpha, SignalSpec signal) {
  if (!(alpha.value > 0.0 && alpha.value < 1.0)) {
    throw Error(Errc::invalid_parameter, "alpha must lie in (0, 1)");
  }
  return std::make_unique<RotationGraphing>(alpha, std::move(signal));
}

std::unique_ptr<Graphing> graphing_from_json(const nlohmann::json& doc,
                                             const std::filesystem::path& base_dir) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "rotation") {
      const RotationAlpha alpha = RotationAlpha::parse(doc.at("alpha").get<std::string>());
      SignalSpec signal = doc.contains("signal") ? SignalSpec::from_json(doc.at("signal"))
                                                 : SignalSpec::constant(0.0);
      return rotation_graphing(alpha, std::move(signal));
    }
    if (kind == "finite-derived") {
      const auto& g = doc.at("graph");
      if (g.is_string()) {
        std::filesystem::path path = g.get<std::string>();
        if (path.is_relative()) path = base_dir / path;
        return graphing_from_graph(load_graph(path));
      }
      return graphing_from_graph(graph_from_json(g));
    }
    throw Error(Errc::parse_error, "unknown graphing kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("graphing spec: ") + e.what());
  }
}

SignalizedBall graphing_ball(const Graphing& g, const GraphingPoint& root, std::size_t K) {
  const std::size_t bound = g.degree_bound();
  std::map<GraphingPoint, NodeId> ids;
  std::vector<GraphingPoint> nodes{root};
  std::vector<std::size_t> dist{0};
  ids.emplace(root, 0);
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const GraphingPoint v = nodes[head];
    std::vector<GraphingPoint> nbrs = g.neighbors(v);
    if (nbrs.size() > bound) {
      throw Error(Errc::degree_bound_violation, "node with " + std::to_string(nbrs.size()) +
                                                    " neighbors in a graphing of degree " +
                                                    std::to_string(bound));
    }
    std::vector<GraphingPoint> sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        std::find(sorted.begin(), sorted.end(), v) != sorted.end()) {
      throw Error(Errc::degree_bound_violation, "neighbor oracle returned a repeat or a self-loop");
    }
    for (const GraphingPoint& u : nbrs) {
      auto it = ids.find(u);
      if (it == ids.end()) {
        if (dist[head] >= K) continue;
        it = ids.emplace(u, static_cast<NodeId>(nodes.size())).first;
        nodes.push_back(u);
        dist.push_back(dist[head] + 1);
      }
      arcs.emplace_back(static_cast<NodeId>(head), it->second);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : arcs) {
    if (!std::binary_search(arcs.begin(), arcs.end(), std::make_pair(b, a))) {
      throw Error(Errc::degree_bound_violation, "neighbor oracle is not symmetric");
    }
    if (a < b) edges.push_back({a, b});
  }
  std::vector<double> signal(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) signal[i] = g.signal(nodes[i]);
  SignalizedBall ball;
  ball.graph = build_graph(nodes.size(), std::move(edges), std::nullopt, std::move(signal));
  ball.root = 0;
  ball.depth = K;
  return ball;
}

SignalizedBall sample_rooted_ball(const Graphing& g, std::size_t K, std::uint64_t seed) {
  Rng rng(seed);
  return graphing_ball(g, g.sample(rng), K);
}

BallDistribution graphing_distribution_exhaustive(const Graphing& g, std::size_t K,
                                                  Backend backend) {
  const std::vector<GraphingPoint> reps = g.representatives();
  if (reps.empty()) {
    throw Error(Errc::invalid_parameter, "exhaustive mode needs a finite-derived graphing");
  }
  std::vector<OmegaPoint> points(reps.size());
  parallel_for(reps.size(), backend,
               [&](std::size_t i) { points[i] = to_point(graphing_ball(g, reps[i], K)); });
  BallDistribution dist = empirical_distribution(points, K);
  dist.source.graph_id = g.kind();
  return dist;
}

BallDistribution graphing_distribution_sampled(const Graphing& g, std::size_t K,
                                               std::size_t samples, std::uint64_t seed,
                                               Backend backend) {
  if (samples == 0) throw Error(Errc::invalid_parameter, "sample count must be positive");
  std::vector<OmegaPoint> points(samples);
  parallel_for(samples, backend, [&](std::size_t i) {
    points[i] = to_point(sample_rooted_ball(g, K, derive_seed(seed, i)));
  });
  BallDistribution dist = empirical_distribution(points, K);
  dist.source.graph_id = g.kind();
  return dist;
}

MomentEstimate graphing_moment(const Graphing& g, std::size_t K, std::size_t samples,
                               std::uint64_t seed, Backend backend) {
  if (samples < 2) throw Error(Errc::invalid_parameter, "moment estimates need at least 2 samples");
  std::vector<double> values(samples);
  parallel_for(samples, backend, [&](std::size_t i) {
    values[i] = moment_local(sample_rooted_ball(g, K, derive_seed(seed, i)));
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(samples - 1));
  return {K, mean, sd / std::sqrt(static_cast<double>(samples)), samples, seed};
}

LaplacianEvaluation graphing_laplacian_apply(const Graphing& g, const GraphingPoint& v,
                                             std::size_t depth) {
  if (depth < 1) throw Error(Errc::invalid_parameter, "depth must be at least 1");
  LaplacianEvaluation out;
  out.ball = graphing_ball(g, v, depth);
  out.distance = bfs_distances(out.ball.graph, out.ball.root);
  const ShiftOperator s = build_gso(out.ball.graph, GsoKind::laplacian);
  out.powers.emplace_back(out.ball.graph.signal().begin(), out.ball.graph.signal().end());
  for (std::size_t k = 1; k <= depth; ++k) out.powers.push_back(s.apply(out.powers.back()));
  return out;
}

ConvergenceReport convergence_experiment(const std::vector<Graph>& sequence, const Graphing& g,
                                         std::size_t K, double C, std::size_t samples,
                                         std::uint64_t seed, Backend backend) {
  const std::size_t bound = g.degree_bound();
  for (const Graph& graph : sequence) {
    if (graph.max_degree() > bound) {
      throw Error(Errc::degree_bound_violation,
                  "sequence graph of max degree " + std::to_string(graph.max_degree()) +
                      " against a graphing of degree " + std::to_string(bound));
    }
    if (!graph.has_signal()) throw Error(Errc::missing_signal, "sequence graph without signal");
  }
  ConvergenceReport report;
  report.K = K;
  report.C = C;
  report.samples = samples;
  report.seed = seed;
  const bool exhaustive = samples == 0;
  if (exhaustive && g.representatives().empty()) {
    throw Error(Errc::invalid_parameter, "samples = 0 needs a finite-derived graphing");
  }
  const BallDistribution limit = exhaustive
                                     ? graphing_distribution_exhaustive(g, K, backend)
                                     : graphing_distribution_sampled(g, K, samples, seed, backend);
  for (const Graph& graph : sequence) {
    ConvergenceRow row;
    row.n = graph.num_nodes();
    row.w1 = wasserstein1(pushforward(graph, K, {backend, std::nullopt, ""}), limit, C, backend)
                 .distance;
    for (std::size_t k = 0; k <= K; ++k) row.moments.push_back(moment_global(graph, k));
    report.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k <= K; ++k) {
    if (exhaustive) {
      const double m = moment_via_distribution(limit, k);
      report.graphing_moments.push_back({k, m, 0.0, g.representatives().size(), seed});
    } else {
      report.graphing_moments.push_back(graphing_moment(g, k, samples, seed, backend));
    }
  }
  return report;
}

}  // namespace localgsp
