// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "localgsp/ball.hpp"
#include "localgsp/canon.hpp"
#include "localgsp/cli.hpp"
#include "localgsp/distribution.hpp"
#include "localgsp/filters.hpp"
#include "localgsp/generators.hpp"
#include "localgsp/graphing.hpp"
#include "localgsp/io.hpp"
#include "localgsp/spectral.hpp"
#include "localgsp/transport.hpp"
#include "oracles/brute_iso.hpp"
#include "oracles/brute_transport.hpp"
#include "oracles/random_instances.hpp"

using namespace localgsp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // <= 0: no runtime limit
  std::function<Outcome()> body;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// 1. local filter value equals global output at every node
Outcome locality() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = oracle::random_signal_graph(1000 + s, 2, 100, 6);
    const Filter f = oracle::random_filter(2000 + s, s % 4);
    const auto global = apply_filter(f, build_gso(g, f.kind), g.signal());
    const auto local = local_filter_outputs(f, g);
    for (std::size_t v = 0; v < global.size(); ++v) worst = std::max(worst, std::abs(local[v] - global[v]));
  }
  return {worst <= 1e-12, "max abs err " + sci(worst) + " (tol 1e-12, 100 graphs)"};
}

// 2. spectral, quadratic-form and Omega_K expectation moments agree
Outcome moment_triple() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = oracle::random_signal_graph(3000 + s, 20, 200, 6);
    const SpectralDistribution p = psd(g);
    for (std::size_t K = 0; K <= 5; ++K) {
      const double quad = moment_global(g, K);
      const double spec = p.moment(K);
      const double dist = moment_via_distribution(pushforward(g, K));
      worst = std::max({worst, rel_err(quad, spec), rel_err(quad, dist), rel_err(spec, dist)});
    }
  }
  return {worst <= 1e-8, "max rel err " + sci(worst) + " (tol 1e-8, 50 graphs, K<=5)"};
}

// 3. PSD well-formedness plus fixture values
Outcome psd_wellformed() {
  bool ok = true;
  double mass_err = 0.0;
  std::size_t checked = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = oracle::random_signal_graph(4000 + s, 1, 120, 6);
    const auto p = psd(g);
    double norm2 = 0.0;
    for (double x : g.signal()) norm2 += x * x;
    mass_err = std::max(mass_err, std::abs(p.total_mass - norm2 / double(g.num_nodes())));
    if (p.cdf(-1e-12) != 0.0) ok = false;
    double prev = 0.0;
    for (std::size_t j = 0; j < p.jumps.size(); ++j) {
      const auto& jump = p.jumps[j];
      if (jump.lambda < 0.0 || jump.lambda > 2.0 * double(g.max_degree())) ok = false;
      if (j > 0 && !(jump.lambda > p.jumps[j - 1].lambda)) ok = false;
      const double at = p.cdf(jump.lambda);
      if (at < prev || at != p.cdf(std::nextafter(jump.lambda, 1e300))) ok = false;
      if (j > 0 && p.cdf(std::nextafter(jump.lambda, -1e300)) != prev) ok = false;
      prev = at;
    }
    ++checked;
  }
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  const auto p2 = psd(path_graph(2).with_signal({1, -1}));
  const bool p2_ok = p2.jumps.size() == 1 && near(p2.jumps[0].lambda, 2) && near(p2.jumps[0].mass, 1) &&
                     near(p2.moment(0), 1);
  const auto k3 = psd(complete_graph(3).with_signal({1, 0, 0}));
  const bool k3_ok = k3.jumps.size() == 2 && near(k3.jumps[0].lambda, 0) && near(k3.jumps[0].mass, 1.0 / 9) &&
                     near(k3.jumps[1].lambda, 3) && near(k3.jumps[1].mass, 2.0 / 9);
  const auto c4 = eigendecompose(build_gso(cycle_graph(4), GsoKind::laplacian)).values;
  const bool c4_ok = near(c4[0], 0) && near(c4[1], 2) && near(c4[2], 2) && near(c4[3], 4);
  ok = ok && mass_err <= 1e-10 && p2_ok && k3_ok && c4_ok;
  return {ok, "total-mass err " + sci(mass_err) + " (tol 1e-10), CDF/support checks on " +
                  std::to_string(checked) + " graphs, P2 " + (p2_ok ? "ok" : "bad") + ", K3 " +
                  (k3_ok ? "ok" : "bad") + ", C4 " + (c4_ok ? "ok" : "bad")};
}

// 4. code equality versus exhaustive root-fixing bijection search
Outcome canon_soundness() {
  struct Item {
    Graph g;
    NodeId root;
    std::vector<std::uint8_t> code;
  };
  std::vector<Item> items;
  Rng rng(5000);
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = oracle::random_signal_graph(5000 + s, 3, 14, 4);
    for (NodeId r = 0; r < g.num_nodes(); ++r) {
      for (std::size_t K = 1; K <= 3; ++K) {
        const auto ball = extract_rooted_ball(g, r, K);
        if (ball.size() > 8) continue;
        const auto perm = oracle::random_permutation(ball.size(), rng);
        const Graph moved = relabel(ball.graph.without_signal(), perm);
        items.push_back({moved, perm[ball.root], canonical_form(moved, perm[ball.root]).bytes});
      }
    }
  }
  std::size_t pairs = 0, iso = 0, disagreements = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const bool same_code = items[i].code == items[j].code;
      bool truth = false;
      if (items[i].g.num_nodes() == items[j].g.num_nodes() &&
          items[i].g.num_edges() == items[j].g.num_edges()) {
        truth = oracle::rooted_isomorphic(items[i].g, items[i].root, items[j].g, items[j].root);
      }
      ++pairs;
      iso += truth;
      disagreements += truth != same_code;
    }
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements over " +
                                  std::to_string(pairs) + " pairs of " + std::to_string(items.size()) +
                                  " balls (" + std::to_string(iso) + " isomorphic)"};
}

// 5. metric axioms, brute-force transport, W1(mu, mu) = 0
Outcome metric_transport() {
  std::vector<std::vector<std::uint8_t>> codes;
  std::map<std::vector<std::uint8_t>, std::size_t> sizes;
  for (std::uint64_t s = 0; s < 30; ++s) {
    for (const auto& a : pushforward(oracle::random_signal_graph(6000 + s, 2, 10, 4), 1).atoms) {
      if (!sizes.count(a.point.code)) codes.push_back(a.point.code);
      sizes[a.point.code] = a.point.size();
    }
  }
  Rng rng(6000);
  auto point = [&](const std::vector<std::uint8_t>& code) {
    OmegaPoint p;
    p.code = code;
    p.depth = 1;
    p.signal.resize(sizes[code]);
    for (double& x : p.signal) x = uniform(rng, -1.5, 1.5);
    return p;
  };
  std::size_t violations = 0;
  double worst_tri = -1e300;
  for (int t = 0; t < 10000; ++t) {
    const auto& c0 = codes[uniform_index(rng, codes.size())];
    const bool same = uniform01(rng) < 0.5;
    const OmegaPoint a = point(c0);
    const OmegaPoint b = point(same ? c0 : codes[uniform_index(rng, codes.size())]);
    const OmegaPoint c = point(same ? c0 : codes[uniform_index(rng, codes.size())]);
    const double C = uniform(rng, 0.05, 2.0);
    const double ab = ball_metric(a, b, C), ba = ball_metric(b, a, C);
    const double bc = ball_metric(b, c, C), ac = ball_metric(a, c, C);
    worst_tri = std::max(worst_tri, ac - ab - bc);
    if (ball_metric(a, a, C) != 0.0 || std::abs(ab - ba) > 1e-12 || ac > ab + bc + 1e-12 || ab < 0 ||
        ab > 2 * C)
      ++violations;
  }
  std::size_t lp_checked = 0;
  double lp_err = 0.0;
  for (std::uint64_t s = 0; lp_checked < 200; ++s) {
    const auto mu = pushforward(oracle::random_signal_graph(7000 + 2 * s, 1, 4, 3), 1);
    const auto nu = pushforward(oracle::random_signal_graph(7001 + 2 * s, 1, 4, 3), 1);
    if (mu.atoms.size() > 4 || nu.atoms.size() > 4) continue;
    std::vector<double> a, b;
    for (const auto& x : mu.atoms) a.push_back(x.mass);
    for (const auto& x : nu.atoms) b.push_back(x.mass);
    const double C = 0.25 + 0.25 * double(s % 4);
    const double w = wasserstein1(mu, nu, C).distance;
    lp_err = std::max(lp_err, std::abs(w - oracle::brute_transport(a, b, cost_matrix(mu, nu, C))));
    ++lp_checked;
  }
  double self = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto mu = pushforward(oracle::random_signal_graph(8000 + s, 5, 60, 5), 2);
    self = std::max(self, wasserstein1(mu, mu, 1.0).distance);
  }
  const bool ok = violations == 0 && lp_err <= 1e-12 && self == 0.0;
  return {ok, std::to_string(violations) + " axiom violations in 1e4 triples (worst triangle slack " +
                  sci(worst_tri) + ", tol 1e-12); W1 vs brute force max err " + sci(lp_err) + " on " +
                  std::to_string(lp_checked) + " instances; max W1(mu,mu) " + sci(self)};
}

// 6. |E_mu J - E_nu J| <= L W1(mu, nu; 1/L) for the clamped MSE summary
Outcome transferability() {
  const Filter f = make_filter({1.0, -0.3});
  const double sigma2 = 0.05;
  const BallSummary J = [&](const SignalizedBall& ball) {
    return std::clamp(mse_summary_local(f, sigma2, ball), 0.0, 1.0);
  };
  auto expectation = [&](const BallDistribution& d) {
    double e = 0.0;
    for (const auto& a : d.atoms) e += a.mass * J(to_ball(a.point));
    return e;
  };
  std::size_t violations = 0;
  double tightest = 1e300, L_max = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g1 = oracle::random_signal_graph(9000 + 2 * s, 8, 30, 3);
    const Graph g2 = oracle::random_signal_graph(9001 + 2 * s, 8, 30, 3);
    const auto mu = pushforward(g1, 2), nu = pushforward(g2, 2);
    const auto L = lipschitz_estimate(J, support_union(mu, nu), 200, 9000 + s);
    const double Lv = std::max(L.value, 1e-6);
    L_max = std::max(L_max, Lv);
    const double lhs = std::abs(expectation(mu) - expectation(nu));
    const double rhs = transfer_bound(mu, nu, Lv);
    if (!(lhs <= rhs)) ++violations;
    tightest = std::min(tightest, rhs - lhs);
  }
  return {violations == 0, std::to_string(violations) + " violations over 50 pairs (smallest slack " +
                               sci(tightest) + ", largest estimated L " + sci(L_max) + ")"};
}

// 7. average of the local MSE summary equals J; J matches Monte Carlo
Outcome mse_identity() {
  double worst = 0.0;
  std::size_t outside = 0;
  double worst_z = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = oracle::random_signal_graph(10000 + s, 2, 15, 4);
    const Filter f = oracle::random_filter(10100 + s, 1 + s % 2);
    const double sigma2 = 0.1 + 0.05 * double(s % 5);
    const double J = mse_summary_global(f, sigma2, g);
    double avg = 0.0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      avg += mse_summary_local(f, sigma2, extract_rooted_ball(g, v, 2 * f.order()));
    }
    avg /= double(g.num_nodes());
    worst = std::max(worst, std::abs(avg - J));

    const auto S = build_gso(g, f.kind);
    const std::size_t n = g.num_nodes(), draws = 100000;
    Rng rng(10200 + s);
    std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
    std::vector<double> y(n);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t d = 0; d < draws; ++d) {
      for (std::size_t v = 0; v < n; ++v) y[v] = g.signal()[v] + noise(rng);
      const auto hy = apply_filter(f, S, y);
      double err = 0.0;
      for (std::size_t v = 0; v < n; ++v) err += (g.signal()[v] - hy[v]) * (g.signal()[v] - hy[v]);
      err /= double(n);
      sum += err;
      sum2 += err * err;
    }
    const double mean = sum / double(draws);
    const double var = (sum2 - double(draws) * mean * mean) / double(draws - 1);
    const double se = std::sqrt(var / double(draws));
    const double z = std::abs(mean - J) / se;
    worst_z = std::max(worst_z, z);
    outside += z > 3.0;
  }
  return {worst <= 1e-10 && outside == 0,
          "identity max abs err " + sci(worst) + " (tol 1e-10); Monte Carlo 1e5 draws: " +
              std::to_string(outside) + "/20 outside 3 sigma (max |z| " + sci(worst_z) + ")"};
}

// 8. cycle sequence: W1 and moment differences shrink beyond n = 16
Outcome cycle_shadow() {
  const std::vector<std::size_t> ns{8, 16, 32, 64, 128, 256};
  auto cyc = [](std::size_t n) { return cycle_graph(n).with_signal(sine_signal(n)); };
  const Graph ref = cyc(256);
  const auto ref_dist = pushforward(ref, 2);
  std::vector<double> w1;
  std::vector<std::vector<double>> dm(5);
  for (std::size_t n : ns) {
    const Graph g = cyc(n);
    w1.push_back(wasserstein1(pushforward(g, 2), ref_dist, 1.0).distance);
    for (std::size_t K = 0; K <= 4; ++K) dm[K].push_back(std::abs(moment_global(g, K) - moment_global(ref, K)));
  }
  // m_0 = 1/2 for every n, so its differences are pure rounding; they only
  // have to stay at that level.
  auto decreasing = [&](const std::vector<double>& v) {
    for (std::size_t i = 2; i < v.size(); ++i) {
      const bool rounding = v[i - 1] <= 1e-12 && v[i] <= 1e-12;
      if (!(v[i] < v[i - 1]) && !rounding) return false;
    }
    return true;
  };
  bool ok = decreasing(w1);
  std::string detail = "W1 " + sci(w1[1]) + " -> " + sci(w1[4]) + " -> " + sci(w1[5]);
  for (std::size_t K = 0; K <= 4; ++K) {
    ok = ok && decreasing(dm[K]);
    detail += "; |dm_" + std::to_string(K) + "| " + sci(dm[K][1]) + " -> " + sci(dm[K][4]);
  }
  return {ok, detail + " (n = 16..256)"};
}

// 9. finite-derived graphings reproduce the graph; rotation 1/5 gives 5-cycles
Outcome graphing_fidelity() {
  std::size_t exact = 0, total = 0, outside = 0, estimates = 0;
  double worst_z = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = oracle::random_signal_graph(11000 + s, 5, 40, 4);
    const auto gr = graphing_from_graph(g);
    for (std::size_t K = 0; K <= 3; ++K) {
      const auto a = graphing_distribution_exhaustive(*gr, K);
      const auto b = pushforward(g, K);
      bool same = a.atoms.size() == b.atoms.size();
      for (std::size_t i = 0; same && i < a.atoms.size(); ++i) {
        same = point_equal(a.atoms[i].point, b.atoms[i].point) && a.atoms[i].mass == b.atoms[i].mass;
      }
      exact += same;
      ++total;
    }
    for (std::size_t K = 0; K <= 4; ++K) {
      const auto e = graphing_moment(*gr, K, 10000, 11100 + s);
      const double truth = moment_global(g, K);
      const double z = e.std_error > 0 ? std::abs(e.value - truth) / e.std_error
                                       : (e.value == truth ? 0.0 : 1e300);
      worst_z = std::max(worst_z, z);
      outside += z > 3.0;
      ++estimates;
    }
  }
  const auto rot = rotation_graphing(RotationAlpha::parse("1/5"), SignalSpec::constant(0.0));
  const auto d = graphing_distribution_sampled(*rot, 2, 2000, 11200);
  const bool pentagon = d.atoms.size() == 1 && d.atoms[0].point.code == canonical_form(cycle_graph(5), 0).bytes;
  const bool ok = exact == total && outside == 0 && pentagon;
  return {ok, std::to_string(exact) + "/" + std::to_string(total) + " exhaustive distributions exact; " +
                  std::to_string(outside) + "/" + std::to_string(estimates) +
                  " moment estimates outside 3 stderr (max |z| " + sci(worst_z) + "); rotation 1/5 K=2 " +
                  (pentagon ? "only 5-cycles" : "other balls seen")};
}

// 10. seeded commands are byte-identical across runs and worker counts
Outcome determinism() {
  const fs::path fx(LOCALGSP_FIXTURES);
  const fs::path dir = fs::temp_directory_path() / "localgsp_acceptance";
  fs::create_directories(dir);
  auto f = [&](const char* name) { return (fx / name).string(); };
  auto o = [&](const std::string& tag, const char* name) { return (dir / (tag + name)).string(); };
  const std::vector<std::vector<std::string>> commands = {
      {"generate", "--kind", "random", "--n", "40", "--D", "4", "--seed", "7", "--signal", "uniform", "--out", "@g.json"},
      {"dist", "--graph", "@g.json", "--K", "2", "--out", "@d.json"},
      {"histogram", "--dist", "@d.json", "--out", "@h.csv"},
      {"sample", "--dist", "@d.json", "--m", "200", "--seed", "7", "--out", "@s.json"},
      {"graphing", "sample", "--spec", f("rotation_sine.json"), "--K", "2", "--samples", "200", "--seed", "7", "--out", "@gs.csv"},
      {"graphing", "moments", "--spec", f("rotation_sine.json"), "--K", "4", "--samples", "2000", "--seed", "7", "--out", "@gm.csv"},
      {"graphing", "dist", "--spec", f("rotation_sine.json"), "--K", "2", "--samples", "500", "--seed", "7", "--out", "@gd.json"},
      {"graphing", "converge", "--spec", f("rotation_sine.json"), "--K", "2", "--samples", "500", "--seed", "7",
       "--graphs", f("c4.json"), "@g4.json", "--out", "@gc.csv"},
      {"converge", "--sizes", "8,16,32", "--K", "2", "--signal", "uniform", "--seed", "7", "--out", "@cv.csv"},
      {"wasserstein", "--a", "@d.json", "--b", "@gd.json", "--plan", "@plan.csv"},
      {"transfer-bound", "--a", "@d.json", "--b", "@gd.json", "--L", "2", "--tighter"},
  };
  std::vector<std::string> produced;
  auto run_all = [&](const std::string& tag, int threads) {
    std::string transcript;
    write_text_file(o(tag, "g4.json"), graph_to_json(cycle_graph(6).with_signal(sine_signal(6))).dump());
    for (const auto& cmd : commands) {
      std::vector<std::string> args{"localgsp", "--threads", std::to_string(threads)};
      for (const auto& a : cmd) args.push_back(a[0] == '@' ? o(tag, a.c_str() + 1) : a);
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      transcript += std::to_string(code) + "\n" + out.str();
      for (const auto& a : cmd) {
        if (a[0] == '@' && a != "@g4.json" && fs::exists(o(tag, a.c_str() + 1))) {
          std::string text = read_text_file(o(tag, a.c_str() + 1));
          // paths embed the run tag; strip it before comparing
          for (std::size_t pos; (pos = text.find(tag)) != std::string::npos;) text.erase(pos, tag.size());
          transcript += text;
        }
      }
      if (code != 0) transcript += "error: " + err.str();
    }
    for (std::size_t pos; (pos = transcript.find(tag)) != std::string::npos;) transcript.erase(pos, tag.size());
    return transcript;
  };
  const std::string a = run_all("a_", 1), b = run_all("b_", 4), c = run_all("c_", 1);
  fs::remove_all(dir);
  const bool failed_cmd = a.find("error: ") != std::string::npos;
  const bool ok = !failed_cmd && a == b && a == c;
  return {ok, std::to_string(commands.size()) + " commands, " + std::to_string(a.size()) +
                  " bytes per run; threads 1 vs 4 " + (a == b ? "identical" : "differ") + ", rerun " +
                  (a == c ? "identical" : "differs") + (failed_cmd ? ", a command failed" : "")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "locality identity", 10, locality},
      {2, "moment triple agreement", 60, moment_triple},
      {3, "psd well-formedness", 5, psd_wellformed},
      {4, "canonicalization soundness", 120, canon_soundness},
      {5, "metric and transport", 30, metric_transport},
      {6, "transferability inequality", 60, transferability},
      {7, "mse summary identity", 60, mse_identity},
      {8, "cycle convergence shadow", 60, cycle_shadow},
      {9, "graphing fidelity", 60, graphing_fidelity},
      {10, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = out.ok && in_time;
    failures += !pass;
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::printf("criterion %d %s: %s - %s [%s]\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL",
                out.detail.c_str(), timing);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
