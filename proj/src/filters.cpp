#include "localgsp/filters.hpp"

#include <cmath>
#include <string>

#include "localgsp/canon.hpp"
#include "localgsp/error.hpp"

namespace localgsp {

Filter make_filter(std::vector<double> taps, GsoKind kind) {
  if (taps.empty()) throw Error(Errc::invalid_parameter, "a filter needs at least one tap");
  for (double h : taps) {
    if (!std::isfinite(h)) throw Error(Errc::non_finite_value, "filter tap is not finite");
  }
  return Filter{std::move(taps), kind};
}

Filter filter_from_json(const nlohmann::json& doc) {
  try {
    const auto taps = doc.at("taps").get<std::vector<double>>();
    const GsoKind kind =
        doc.contains("gso") ? parse_gso_kind(doc.at("gso").get<std::string>()) : GsoKind::laplacian;
    return make_filter(taps, kind);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("filter JSON: ") + e.what());
  }
}

nlohmann::json filter_to_json(const Filter& f) {
  return {{"taps", f.taps}, {"gso", std::string(to_string(f.kind))}};
}

std::vector<double> apply_filter(const Filter& f, const ShiftOperator& s,
                                 std::span<const double> x) {
  if (s.kind() != f.kind) {
    throw Error(Errc::kind_mismatch, "filter expects a " + std::string(to_string(f.kind)) +
                                         " operator, got " + std::string(to_string(s.kind())));
  }
  if (x.size() != s.size()) {
    throw Error(Errc::dimension_mismatch, "signal of length " + std::to_string(x.size()) +
                                              " for an operator of size " +
                                              std::to_string(s.size()));
  }
  return apply_polynomial(s, f.taps, x);
}

double local_filter_value(const Filter& f, const SignalizedBall& ball) {
  if (ball.depth < f.order()) {
    throw Error(Errc::ball_too_shallow, "ball depth " + std::to_string(ball.depth) +
                                            " below filter order " + std::to_string(f.order()));
  }
  const ShiftOperator s = build_gso(ball.graph, f.kind);
  const std::vector<double> x = ball.graph.signal_or_zero();
  return apply_polynomial(s, f.taps, x)[ball.root];
}

std::vector<double> local_filter_outputs(const Filter& f, const Graph& g, Backend backend) {
  std::vector<double> out(g.num_nodes());
  parallel_for(g.num_nodes(), backend, [&](std::size_t v) {
    out[v] = local_filter_value(f, extract_rooted_ball(g, static_cast<NodeId>(v), f.order()));
  });
  return out;
}

bool verify_k_morphism(const Graph& g, const Graph& g2, std::span<const NodeId> map,
                       std::size_t K, Backend backend) {
  if (map.size() != g.num_nodes()) {
    throw Error(Errc::map_not_total, "map covers " + std::to_string(map.size()) + " of " +
                                         std::to_string(g.num_nodes()) + " nodes");
  }
  for (NodeId image : map) {
    if (image >= g2.num_nodes()) throw Error(Errc::node_out_of_range, "map image");
  }
  std::vector<char> ok(g.num_nodes(), 0);
  parallel_for(g.num_nodes(), backend, [&](std::size_t v) {
    const CanonicalPoint a = canonical_point(extract_rooted_ball(g, static_cast<NodeId>(v), K));
    const CanonicalPoint b = canonical_point(extract_rooted_ball(g2, map[v], K));
    ok[v] = a.code.bytes == b.code.bytes && a.signal == b.signal;
  });
  for (char flag : ok) {
    if (!flag) return false;
  }
  return true;
}

double mse_summary_global(const Filter& f, double sigma2, const Graph& g, Backend backend) {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw Error(Errc::invalid_parameter, "sigma2 must be a finite nonnegative number");
  }
  if (!g.has_signal()) throw Error(Errc::missing_signal, "mse summary needs a signal");
  const std::size_t n = g.num_nodes();
  const ShiftOperator s = build_gso(g, f.kind);
  const std::vector<double> hx = apply_polynomial(s, f.taps, g.signal());
  double residual = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const double d = g.signal()[v] - hx[v];
    residual += d * d;
  }
  std::vector<double> column_norms(n, 0.0);
  if (sigma2 > 0.0) {
    parallel_for(n, backend, [&](std::size_t r) {
      std::vector<double> delta(n, 0.0);
      delta[r] = 1.0;
      const std::vector<double> col = apply_polynomial(s, f.taps, delta);
      double sum = 0.0;
      for (double c : col) sum += c * c;
      column_norms[r] = sum;
    });
  }
  double frobenius = 0.0;
  for (double c : column_norms) frobenius += c;
  const double inv_n = 1.0 / static_cast<double>(n);
  return residual * inv_n + sigma2 * frobenius * inv_n;
}

double mse_summary_local(const Filter& f, double sigma2, const SignalizedBall& ball) {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw Error(Errc::invalid_parameter, "sigma2 must be a finite nonnegative number");
  }
  if (ball.depth < 2 * f.order()) {
    throw Error(Errc::ball_too_shallow, "ball depth " + std::to_string(ball.depth) +
                                            " below twice the filter order " +
                                            std::to_string(f.order()));
  }
  const ShiftOperator s = build_gso(ball.graph, f.kind);
  const std::vector<double> x = ball.graph.signal_or_zero();
  const double residual = x[ball.root] - apply_polynomial(s, f.taps, x)[ball.root];
  double diagonal = 0.0;
  if (sigma2 > 0.0) {
    std::vector<double> delta(ball.size(), 0.0);
    delta[ball.root] = 1.0;
    for (double c : apply_polynomial(s, f.taps, delta)) diagonal += c * c;
  }
  return residual * residual + sigma2 * diagonal;
}

}  // namespace localgsp
