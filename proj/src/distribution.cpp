#include "localgsp/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "localgsp/error.hpp"
#include "localgsp/io.hpp"
#include "localgsp/rng.hpp"

namespace localgsp {

SignalizedBall to_ball(const OmegaPoint& point) {
  DecodedCode decoded = decode_code(point.code);
  if (decoded.graph.num_nodes() != point.signal.size()) {
    throw Error(Errc::signal_length_mismatch, "point signal does not match its ball");
  }
  SignalizedBall ball;
  ball.graph = decoded.graph.with_signal(point.signal);
  ball.root = decoded.root;
  ball.depth = point.depth;
  return ball;
}

OmegaPoint to_point(const SignalizedBall& ball) {
  CanonicalPoint canon = canonical_point(ball);
  OmegaPoint point;
  point.code = std::move(canon.code.bytes);
  point.signal = std::move(canon.signal);
  point.depth = ball.depth;
  if (ball.graph.is_weighted()) {
    const DecodedCode decoded = decode_code(point.code);
    point.weights.emplace(decoded.graph.weights().begin(), decoded.graph.weights().end());
  }
  return point;
}

bool point_less(const OmegaPoint& a, const OmegaPoint& b) {
  if (a.code != b.code) return a.code < b.code;
  return a.signal < b.signal;
}

bool point_equal(const OmegaPoint& a, const OmegaPoint& b) {
  return a.code == b.code && a.signal == b.signal;
}

double BallDistribution::total_mass() const {
  double total = 0.0;
  for (const Atom& atom : atoms) total += atom.mass;
  return total;
}

bool BallDistribution::is_weighted() const {
  return std::any_of(atoms.begin(), atoms.end(),
                     [](const Atom& a) { return a.point.is_weighted(); });
}

namespace {

// Groups equal points; masses are count / total or the summed weights.
std::vector<Atom> merge_points(std::vector<OmegaPoint> points,
                               const std::optional<std::vector<double>>& weights) {
  const std::size_t m = points.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return point_less(points[a], points[b]);
  });
  double weight_total = 0.0;
  if (weights) {
    for (double w : *weights) weight_total += w;
  }
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i + 1;
    while (j < m && point_equal(points[order[i]], points[order[j]])) ++j;
    Atom atom;
    if (weights) {
      double w = 0.0;
      for (std::size_t k = i; k < j; ++k) w += (*weights)[order[k]];
      atom.mass = w / weight_total;
    } else {
      atom.mass = static_cast<double>(j - i) / static_cast<double>(m);
    }
    atom.point = std::move(points[order[i]]);
    if (atom.mass > 0.0) atoms.push_back(std::move(atom));
    i = j;
  }
  return atoms;
}

}  // namespace

BallDistribution pushforward(const Graph& g, std::size_t K, const PushforwardOptions& options) {
  const std::size_t n = g.num_nodes();
  if (options.node_weights) {
    const auto& w = *options.node_weights;
    if (w.size() != n) {
      throw Error(Errc::dimension_mismatch, "node weights of length " + std::to_string(w.size()) +
                                                " for " + std::to_string(n) + " nodes");
    }
    double total = 0.0;
    for (double v : w) {
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(Errc::invalid_parameter, "node weights must be finite and nonnegative");
      }
      total += v;
    }
    if (total <= 0.0) throw Error(Errc::invalid_parameter, "node weights sum to zero");
  }

  std::vector<OmegaPoint> points(n);
  parallel_for(n, options.backend, [&](std::size_t v) {
    points[v] = to_point(extract_rooted_ball(g, static_cast<NodeId>(v), K));
  });

  BallDistribution dist;
  dist.K = K;
  dist.atoms = merge_points(std::move(points), options.node_weights);
  dist.source.graph_id = options.graph_id;
  dist.source.n = n;
  dist.source.max_degree = g.max_degree();
  dist.source.weighted = g.is_weighted();
  dist.source.zero_signal_substituted = !g.has_signal();
  double a = 0.0;
  for (double x : g.signal()) a = std::max(a, std::abs(x));
  dist.source.signal_bound = a;
  return dist;
}

BallDistribution empirical_distribution(std::span<const OmegaPoint> points, std::size_t K) {
  if (points.empty()) throw Error(Errc::empty_distribution, "no points");
  std::vector<OmegaPoint> copy(points.begin(), points.end());
  BallDistribution dist;
  dist.K = K;
  dist.source.n = points.size();
  for (const OmegaPoint& p : points) {
    if (p.depth != K) throw Error(Errc::depth_mismatch, "point depth differs from K");
    for (double x : p.signal) dist.source.signal_bound = std::max(dist.source.signal_bound, std::abs(x));
    dist.source.weighted = dist.source.weighted || p.is_weighted();
  }
  dist.atoms = merge_points(std::move(copy), std::nullopt);
  dist.source.max_degree = support_bound(dist).max_degree;
  return dist;
}

std::vector<OmegaPoint> sample_points(const BallDistribution& dist, std::size_t m,
                                      std::uint64_t seed) {
  if (dist.atoms.empty()) throw Error(Errc::empty_distribution, "cannot sample an empty distribution");
  if (m == 0) throw Error(Errc::invalid_parameter, "sample count must be positive");
  std::vector<double> cumulative(dist.atoms.size());
  double running = 0.0;
  for (std::size_t i = 0; i < dist.atoms.size(); ++i) {
    running += dist.atoms[i].mass;
    cumulative[i] = running;
  }
  std::vector<OmegaPoint> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rng rng(derive_seed(seed, i));
    const double u = uniform01(rng) * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t k = std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
    out.push_back(dist.atoms[k].point);
  }
  return out;
}

SupportBound support_bound(const BallDistribution& dist) {
  SupportBound bound;
  std::set<std::vector<std::uint8_t>> codes;
  for (const Atom& atom : dist.atoms) {
    const DecodedCode decoded = decode_code(atom.point.code);
    bound.max_degree = std::max(bound.max_degree, decoded.graph.max_degree());
    for (double x : atom.point.signal) bound.signal_bound = std::max(bound.signal_bound, std::abs(x));
    codes.insert(atom.point.code);
  }
  bound.ball_count = codes.size();
  return bound;
}

nlohmann::json distribution_to_json(const BallDistribution& dist) {
  nlohmann::json doc;
  doc["K"] = dist.K;
  auto atoms = nlohmann::json::array();
  for (const Atom& atom : dist.atoms) {
    nlohmann::json a;
    a["code"] = base64_encode(atom.point.code);
    a["signal"] = atom.point.signal;
    if (atom.point.weights) a["weights"] = *atom.point.weights;
    a["mass"] = atom.mass;
    atoms.push_back(std::move(a));
  }
  doc["atoms"] = std::move(atoms);
  doc["source"] = {
      {"graph", dist.source.graph_id},
      {"n", dist.source.n},
      {"max_degree", dist.source.max_degree},
      {"signal_bound", dist.source.signal_bound},
      {"weighted", dist.source.weighted},
      {"zero_signal_substituted", dist.source.zero_signal_substituted},
  };
  return doc;
}

BallDistribution distribution_from_json(const nlohmann::json& doc) {
  try {
    BallDistribution dist;
    dist.K = doc.at("K").get<std::size_t>();
    for (const auto& a : doc.at("atoms")) {
      Atom atom;
      atom.point.code = base64_decode(a.at("code").get<std::string>());
      atom.point.signal = a.at("signal").get<std::vector<double>>();
      atom.point.depth = dist.K;
      if (a.contains("weights")) atom.point.weights = a.at("weights").get<std::vector<double>>();
      atom.mass = a.at("mass").get<double>();
      if (!(atom.mass > 0.0) || !std::isfinite(atom.mass)) {
        throw Error(Errc::invalid_parameter, "atom masses must be positive");
      }
      const DecodedCode decoded = decode_code(atom.point.code);
      if (decoded.graph.num_nodes() != atom.point.signal.size()) {
        throw Error(Errc::signal_length_mismatch, "atom signal does not match its ball");
      }
      dist.atoms.push_back(std::move(atom));
    }
    if (doc.contains("source")) {
      const auto& s = doc.at("source");
      dist.source.graph_id = s.value("graph", std::string());
      dist.source.n = s.value("n", std::size_t{0});
      dist.source.max_degree = s.value("max_degree", std::size_t{0});
      dist.source.signal_bound = s.value("signal_bound", 0.0);
      dist.source.weighted = s.value("weighted", false);
      dist.source.zero_signal_substituted = s.value("zero_signal_substituted", false);
    }
    return dist;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("distribution JSON: ") + e.what());
  }
}

}  // namespace localgsp
