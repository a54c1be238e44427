#include "localgsp/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "localgsp/distribution.hpp"
#include "localgsp/error.hpp"
#include "localgsp/filters.hpp"
#include "localgsp/generators.hpp"
#include "localgsp/graphing.hpp"
#include "localgsp/io.hpp"
#include "localgsp/parallel.hpp"
#include "localgsp/spectral.hpp"
#include "localgsp/transport.hpp"

namespace localgsp::cli {
namespace {

using nlohmann::json;

struct Meta {
  std::string command;
  json inputs = json::object();
  json params = json::object();
  std::optional<std::uint64_t> seed;

  json to_json() const {
    return {{"tool", "localgsp"},
            {"version", std::string(kVersion)},
            {"command", command},
            {"inputs", inputs},
            {"params", params},
            {"seed", seed ? json(*seed) : json(nullptr)}};
  }

  std::string csv_preamble() const {
    std::string out;
    out += "# tool: localgsp\n";
    out += "# version: " + std::string(kVersion) + "\n";
    out += "# command: " + command + "\n";
    out += "# inputs: " + inputs.dump() + "\n";
    out += "# params: " + params.dump() + "\n";
    out += "# seed: " + (seed ? std::to_string(*seed) : std::string("null")) + "\n";
    return out;
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string dump(json doc, const Meta& meta) {
  doc["meta"] = meta.to_json();
  return doc.dump(2) + "\n";
}

Graph read_graph(const std::string& path, const std::string& signal_path) {
  std::optional<std::filesystem::path> signal;
  if (!signal_path.empty()) signal = signal_path;
  return load_graph(path, signal);
}

json read_json(const std::string& path) { return parse_json(read_text_file(path), path); }

BallDistribution read_distribution(const std::string& path) {
  return distribution_from_json(read_json(path));
}

std::vector<double> read_values(const std::string& path) {
  std::vector<double> values;
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    values.push_back(parse_double(line));
  }
  return values;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out + "\n";
}

std::string histogram_csv(const BallDistribution& dist, const Meta& meta, json& codes) {
  std::string out = meta.csv_preamble();
  out += "code_id,ball_size,mass,root_value,mean_signal\n";
  codes = json::object();
  std::size_t next_id = 0;
  const std::vector<std::uint8_t>* previous = nullptr;
  std::vector<std::vector<std::uint8_t>> seen;
  for (const Atom& atom : dist.atoms) {
    std::size_t id = 0;
    if (previous && *previous == atom.point.code) {
      id = next_id - 1;
    } else {
      auto it = std::find(seen.begin(), seen.end(), atom.point.code);
      if (it != seen.end()) {
        id = static_cast<std::size_t>(it - seen.begin());
      } else {
        id = next_id++;
        seen.push_back(atom.point.code);
        codes[std::to_string(id)] = base64_encode(atom.point.code);
      }
    }
    previous = &atom.point.code;
    const SignalizedBall ball = to_ball(atom.point);
    double mean = 0.0;
    for (double x : atom.point.signal) mean += x;
    mean /= static_cast<double>(atom.point.signal.size());
    out += join_csv({std::to_string(id), std::to_string(atom.point.size()),
                     format_double(atom.mass), format_double(ball.root_value()),
                     format_double(mean)});
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(Errc::invalid_parameter, "bad size '" + item + "'");
    }
  }
  if (sizes.empty()) throw Error(Errc::invalid_parameter, "empty size list");
  return sizes;
}

Graph family_graph(const std::string& family, std::size_t n) {
  if (family == "cycle") return cycle_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "star") return star_graph(n - 1);
  throw Error(Errc::invalid_parameter, "unknown family '" + family + "'");
}

std::vector<double> family_signal(const std::string& kind, std::size_t n, std::uint64_t seed) {
  if (kind == "zero") return std::vector<double>(n, 0.0);
  if (kind == "sine") return sine_signal(n);
  if (kind == "uniform") return uniform_signal(n, -1.0, 1.0, seed);
  throw Error(Errc::invalid_parameter, "unknown signal '" + kind + "'");
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::infeasible: return kInternal;
    default: return kValidation;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rooted-ball distributions, local filtering, spectra and transport on graphs",
               "localgsp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP worker count (0 keeps the default)")
      ->check(CLI::NonNegativeNumber);

  std::string graph_path, signal_path, out_path, filter_path, dist_path, a_path, b_path;
  std::string filter_method, mse_method, moment_method, plan_path, codes_path, spec_path, node_weights_path;
  std::size_t K = 0;
  double sigma2 = 0.0;
  double C = 1.0;
  double L = 1.0;
  double A = 1.0;
  std::size_t grid = 64;
  bool tighter = false;
  std::uint64_t seed = 0;
  std::size_t sample_samples = 10, moment_samples = 10000, dist_samples = 0, converge_samples = 10000;
  std::size_t m = 1;
  std::vector<std::string> graph_list;
  std::string family = "cycle";
  std::string sizes = "8,16,32,64,128,256";
  std::string signal_kind = "sine";
  std::string generate_signal = "none";
  std::size_t reference_n = 0;
  std::string kind = "cycle";
  std::size_t n = 8;
  std::size_t D = 4;
  std::size_t attempts = 0;
  std::vector<double> weight_range;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_path, "graph file (.json or .tsv)")->required();
    sub->add_option("--signal", signal_path, "sidecar signal file, one value per line");
  };

  CLI::App* dist = app.add_subcommand("dist", "pushforward ball distribution of a graph");
  add_graph(dist);
  dist->add_option("--K", K, "ball depth")->required();
  dist->add_option("--node-weights", node_weights_path, "node measure, one value per line");
  dist->add_option("--out", out_path, "output JSON (stdout when omitted)");

  CLI::App* hist = app.add_subcommand("histogram", "ball-class histogram of a distribution");
  hist->add_option("--dist", dist_path, "distribution JSON")->required();
  hist->add_option("--out", out_path, "output CSV (stdout when omitted)");
  hist->add_option("--codes", codes_path, "sidecar JSON mapping code_id to canonical code");

  CLI::App* filt = app.add_subcommand("filter", "apply a K-tap graph filter");
  add_graph(filt);
  filt->add_option("--filter", filter_path, "filter JSON")->required();
  filt->add_option("--method", filter_method, "global | local")->default_val("global");
  filt->add_option("--out", out_path, "output JSON (stdout when omitted)");

  CLI::App* mse = app.add_subcommand("mse", "mean squared error summary of a filter");
  add_graph(mse);
  mse->add_option("--filter", filter_path, "filter JSON")->required();
  mse->add_option("--sigma2", sigma2, "noise variance")->required();
  mse->add_option("--method", mse_method, "global | local")->default_val("global");

  CLI::App* psd_cmd = app.add_subcommand("psd", "normalized power spectral distribution");
  add_graph(psd_cmd);
  psd_cmd->add_option("--out", out_path, "output CSV (stdout when omitted)");

  CLI::App* moments = app.add_subcommand("moments", "spectral moment m_K of the signal");
  add_graph(moments);
  moments->add_option("--K", K, "moment order")->required();
  moments->add_option("--method", moment_method, "spectral | quadratic | local | dist")
      ->default_val("spectral");

  CLI::App* wass = app.add_subcommand("wasserstein", "W1 distance between two distributions");
  wass->add_option("--a", a_path, "first distribution JSON")->required();
  wass->add_option("--b", b_path, "second distribution JSON")->required();
  wass->add_option("--C", C, "ground metric scale")->default_val(1.0);
  wass->add_option("--plan", plan_path, "write the optimal plan as CSV");

  CLI::App* bound = app.add_subcommand("transfer-bound", "transferability bound L W1(mu, nu; 1/L)");
  bound->add_option("--a", a_path, "first distribution JSON")->required();
  bound->add_option("--b", b_path, "second distribution JSON")->required();
  bound->add_option("--L", L, "Lipschitz constant")->required();
  bound->add_flag("--tighter", tighter, "minimize over the C grid instead");
  bound->add_option("--A", A, "range of the summary")->default_val(1.0);
  bound->add_option("--grid", grid, "number of grid points")->default_val(64);

  CLI::App* graphing = app.add_subcommand("graphing", "graphing sampling experiments");
  graphing->require_subcommand(1);
  CLI::App* g_sample = graphing->add_subcommand("sample", "sample rooted balls");
  CLI::App* g_moments = graphing->add_subcommand("moments", "Monte-Carlo moments m_0..m_K");
  CLI::App* g_dist = graphing->add_subcommand("dist", "ball distribution of a graphing");
  CLI::App* g_converge = graphing->add_subcommand("converge", "graph sequence against a graphing");
  for (CLI::App* sub : {g_sample, g_moments, g_dist, g_converge}) {
    sub->add_option("--spec", spec_path, "graphing spec JSON")->required();
    sub->add_option("--K", K, "ball depth")->required();
    sub->add_option("--seed", seed, "random seed")->default_val(0);
    sub->add_option("--out", out_path, "output file (stdout when omitted)");
  }
  g_sample->add_option("--samples", sample_samples, "number of balls")->default_val(10);
  g_moments->add_option("--samples", moment_samples, "number of balls")->default_val(10000);
  g_dist->add_option("--samples", dist_samples, "number of balls (0 = exhaustive)")->default_val(0);
  g_converge->add_option("--samples", converge_samples, "number of graphing samples")->default_val(10000);
  g_converge->add_option("--graphs", graph_list, "sequence of graph files")->required();
  g_converge->add_option("--C", C, "ground metric scale")->default_val(1.0);

  CLI::App* converge = app.add_subcommand("converge", "graph family against its largest member");
  converge->add_option("--family", family, "cycle | path | complete | star")->default_val("cycle");
  converge->add_option("--sizes", sizes, "comma separated sizes")->default_val(sizes);
  converge->add_option("--signal", signal_kind, "sine | zero | uniform")->default_val("sine");
  converge->add_option("--K", K, "ball depth and highest moment")->required();
  converge->add_option("--C", C, "ground metric scale")->default_val(1.0);
  converge->add_option("--reference", reference_n, "reference size (default: largest)");
  converge->add_option("--seed", seed, "seed for uniform signals")->default_val(0);
  converge->add_option("--out", out_path, "output CSV (stdout when omitted)");

  CLI::App* generate = app.add_subcommand("generate", "write a fixture graph");
  generate->add_option("--kind", kind, "cycle | path | complete | star | random")
      ->default_val("cycle");
  generate->add_option("--n", n, "node count")->default_val(8);
  generate->add_option("--D", D, "max degree (random)")->default_val(4);
  generate->add_option("--attempts", attempts, "edge attempts (random, 0 = n*D)")->default_val(0);
  generate->add_option("--signal", generate_signal, "none | zero | sine | uniform")->default_val("none");
  generate->add_option("--weights", weight_range, "uniform weight range lo hi")->expected(2);
  generate->add_option("--seed", seed, "random seed")->default_val(0);
  generate->add_option("--out", out_path, "output JSON (stdout when omitted)");

  CLI::App* sample = app.add_subcommand("sample", "i.i.d. points from a distribution");
  sample->add_option("--dist", dist_path, "distribution JSON")->required();
  sample->add_option("--m", m, "number of points")->default_val(1);
  sample->add_option("--seed", seed, "random seed")->default_val(0);
  sample->add_option("--out", out_path, "output JSON (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  set_num_threads(threads);

  try {
    if (dist->parsed()) {
      Meta meta{"dist", {{"graph", graph_path}}, {{"K", K}}, std::nullopt};
      if (!signal_path.empty()) meta.inputs["signal"] = signal_path;
      const Graph g = read_graph(graph_path, signal_path);
      PushforwardOptions options;
      options.graph_id = graph_path;
      if (!node_weights_path.empty()) {
        meta.inputs["node_weights"] = node_weights_path;
        options.node_weights = read_values(node_weights_path);
      }
      if (!g.labels().empty()) meta.params["labels"] = g.labels();
      emit(out_path, dump(distribution_to_json(pushforward(g, K, options)), meta), out);
    } else if (hist->parsed()) {
      Meta meta{"histogram", {{"dist", dist_path}}, json::object(), std::nullopt};
      const BallDistribution d = read_distribution(dist_path);
      json codes;
      emit(out_path, histogram_csv(d, meta, codes), out);
      std::string sidecar = codes_path;
      if (sidecar.empty() && !out_path.empty() && out_path != "-") sidecar = out_path + ".codes.json";
      if (!sidecar.empty()) write_text_file(sidecar, dump({{"codes", codes}}, meta));
    } else if (filt->parsed()) {
      Meta meta{"filter", {{"graph", graph_path}, {"filter", filter_path}},
                {{"method", filter_method}}, std::nullopt};
      const Graph g = read_graph(graph_path, signal_path);
      if (!g.has_signal()) throw Error(Errc::missing_signal, "filtering needs a signal");
      const Filter f = filter_from_json(read_json(filter_path));
      std::vector<double> y;
      if (filter_method == "global") {
        y = apply_filter(f, build_gso(g, f.kind), g.signal());
      } else if (filter_method == "local") {
        y = local_filter_outputs(f, g);
      } else {
        throw CLI::ValidationError("--method", "expected global or local");
      }
      emit(out_path, dump({{"signal", y}, {"filter", filter_to_json(f)}}, meta), out);
    } else if (mse->parsed()) {
      const Graph g = read_graph(graph_path, signal_path);
      const Filter f = filter_from_json(read_json(filter_path));
      double value = 0.0;
      if (mse_method == "global") {
        value = mse_summary_global(f, sigma2, g);
      } else if (mse_method == "local") {
        if (!g.has_signal()) throw Error(Errc::missing_signal, "mse summary needs a signal");
        std::vector<double> per_node(g.num_nodes());
        parallel_for(g.num_nodes(), Backend::openmp, [&](std::size_t v) {
          per_node[v] = mse_summary_local(
              f, sigma2, extract_rooted_ball(g, static_cast<NodeId>(v), 2 * f.order()));
        });
        for (double x : per_node) value += x;
        value /= static_cast<double>(g.num_nodes());
      } else {
        throw CLI::ValidationError("--method", "expected global or local");
      }
      out << format_double(value) << "\n";
    } else if (psd_cmd->parsed()) {
      Meta meta{"psd", {{"graph", graph_path}}, json::object(), std::nullopt};
      const SpectralDistribution p = psd(read_graph(graph_path, signal_path));
      std::string text = meta.csv_preamble();
      text += "# total_mass: " + format_double(p.total_mass) + "\n";
      text += "# support_upper: " + format_double(p.support_upper) + "\n";
      text += "lambda,mass,cdf\n";
      double cdf = 0.0;
      for (const SpectralJump& j : p.jumps) {
        cdf += j.mass;
        text += join_csv({format_double(j.lambda), format_double(j.mass), format_double(cdf)});
      }
      emit(out_path, text, out);
    } else if (moments->parsed()) {
      const Graph g = read_graph(graph_path, signal_path);
      if (!g.has_signal()) throw Error(Errc::missing_signal, "moments need a signal");
      double value = 0.0;
      if (moment_method == "spectral") {
        value = psd(g).moment(K);
      } else if (moment_method == "quadratic") {
        value = moment_global(g, K);
      } else if (moment_method == "local") {
        value = moment_local_average(g, K);
      } else if (moment_method == "dist") {
        value = moment_via_distribution(pushforward(g, K));
      } else {
        throw CLI::ValidationError("--method", "expected spectral, quadratic, local or dist");
      }
      out << format_double(value) << "\n";
    } else if (wass->parsed()) {
      const BallDistribution mu = read_distribution(a_path);
      const BallDistribution nu = read_distribution(b_path);
      const WassersteinResult result = wasserstein1(mu, nu, C);
      out << format_double(result.distance) << "\n";
      if (!plan_path.empty()) {
        Meta meta{"wasserstein", {{"a", a_path}, {"b", b_path}}, {{"C", C}}, std::nullopt};
        const std::vector<double> cost = cost_matrix(mu, nu, C);
        std::string text = meta.csv_preamble();
        text += "# distance: " + format_double(result.distance) + "\n";
        text += "row,col,flow,cost\n";
        for (std::size_t i = 0; i < result.plan.rows; ++i) {
          for (std::size_t j = 0; j < result.plan.cols; ++j) {
            const double f = result.plan.flow(i, j);
            if (f == 0.0) continue;
            text += join_csv({std::to_string(i), std::to_string(j), format_double(f),
                              format_double(cost[i * result.plan.cols + j])});
          }
        }
        write_text_file(plan_path, text);
      }
    } else if (bound->parsed()) {
      const BallDistribution mu = read_distribution(a_path);
      const BallDistribution nu = read_distribution(b_path);
      if (tighter) {
        out << format_double(tighter_bound(mu, nu, L, A, grid).value) << "\n";
      } else {
        out << format_double(transfer_bound(mu, nu, L)) << "\n";
      }
    } else if (graphing->parsed()) {
      const std::filesystem::path spec_file(spec_path);
      const json spec = read_json(spec_path);
      const auto g = graphing_from_json(spec, spec_file.parent_path());
      const std::size_t samples = g_sample->parsed() ? sample_samples
                                  : g_moments->parsed() ? moment_samples
                                  : g_dist->parsed()    ? dist_samples
                                                        : converge_samples;
      Meta meta{"graphing", {{"spec", spec_path}}, {{"K", K}, {"samples", samples}}, seed};
      if (g_sample->parsed()) {
        meta.command = "graphing sample";
        std::string text = meta.csv_preamble();
        text += "sample,position,ball_size,edge_count,root_value,code\n";
        for (std::size_t i = 0; i < samples; ++i) {
          Rng rng(derive_seed(seed, i));
          const GraphingPoint root = g->sample(rng);
          const SignalizedBall ball = graphing_ball(*g, root, K);
          const CanonicalCode code = canonical_form(ball);
          text += join_csv({std::to_string(i), format_double(g->position(root)),
                            std::to_string(ball.size()), std::to_string(ball.graph.num_edges()),
                            format_double(ball.root_value()), base64_encode(code.bytes)});
        }
        emit(out_path, text, out);
      } else if (g_moments->parsed()) {
        meta.command = "graphing moments";
        std::string text = meta.csv_preamble();
        text += "K,value,stderr,samples,seed\n";
        for (std::size_t k = 0; k <= K; ++k) {
          const MomentEstimate e = graphing_moment(*g, k, samples, seed);
          text += join_csv({std::to_string(k), format_double(e.value), format_double(e.std_error),
                            std::to_string(e.samples), std::to_string(e.seed)});
        }
        emit(out_path, text, out);
      } else if (g_dist->parsed()) {
        meta.command = "graphing dist";
        const BallDistribution d = samples == 0 ? graphing_distribution_exhaustive(*g, K)
                                                : graphing_distribution_sampled(*g, K, samples, seed);
        emit(out_path, dump(distribution_to_json(d), meta), out);
      } else if (g_converge->parsed()) {
        meta.command = "graphing converge";
        meta.inputs["graphs"] = graph_list;
        meta.params["C"] = C;
        std::vector<Graph> sequence;
        for (const std::string& path : graph_list) sequence.push_back(load_graph(path));
        const ConvergenceReport report = convergence_experiment(sequence, *g, K, C, samples, seed);
        std::string text = meta.csv_preamble();
        for (const MomentEstimate& e : report.graphing_moments) {
          text += "# graphing m_" + std::to_string(e.K) + ": " + format_double(e.value) +
                  " stderr " + format_double(e.std_error) + "\n";
        }
        std::vector<std::string> header{"n", "w1"};
        for (std::size_t k = 0; k <= K; ++k) header.push_back("m_" + std::to_string(k));
        text += join_csv(header);
        for (const ConvergenceRow& row : report.rows) {
          std::vector<std::string> fields{std::to_string(row.n), format_double(row.w1)};
          for (double v : row.moments) fields.push_back(format_double(v));
          text += join_csv(fields);
        }
        emit(out_path, text, out);
      }
    } else if (converge->parsed()) {
      const std::vector<std::size_t> ns = parse_sizes(sizes);
      const std::size_t ref = reference_n ? reference_n : *std::max_element(ns.begin(), ns.end());
      Meta meta{"converge", json::object(),
                {{"family", family}, {"sizes", ns}, {"signal", signal_kind}, {"K", K},
                 {"C", C}, {"reference", ref}},
                seed};
      auto make = [&](std::size_t size) {
        return family_graph(family, size).with_signal(family_signal(signal_kind, size, seed));
      };
      const Graph reference = make(ref);
      const BallDistribution ref_dist = pushforward(reference, K);
      const SpectralDistribution ref_psd = psd(reference);
      std::vector<double> ref_moments;
      for (std::size_t k = 0; k <= K; ++k) ref_moments.push_back(moment_global(reference, k));
      std::string text = meta.csv_preamble();
      std::vector<std::string> header{"n", "w1", "psd_distance"};
      for (std::size_t k = 0; k <= K; ++k) header.push_back("m_" + std::to_string(k));
      for (std::size_t k = 0; k <= K; ++k) header.push_back("dm_" + std::to_string(k));
      text += join_csv(header);
      for (std::size_t size : ns) {
        const Graph g = make(size);
        std::vector<std::string> fields{
            std::to_string(size), format_double(wasserstein1(pushforward(g, K), ref_dist, C).distance),
            format_double(psd_weak_distance(psd(g), ref_psd))};
        std::vector<double> ms;
        for (std::size_t k = 0; k <= K; ++k) ms.push_back(moment_global(g, k));
        for (double v : ms) fields.push_back(format_double(v));
        for (std::size_t k = 0; k <= K; ++k) {
          fields.push_back(format_double(std::abs(ms[k] - ref_moments[k])));
        }
        text += join_csv(fields);
      }
      emit(out_path, text, out);
    } else if (generate->parsed()) {
      Meta meta{"generate", json::object(),
                {{"kind", kind}, {"n", n}, {"D", D}, {"attempts", attempts}, {"signal", generate_signal}},
                seed};
      Graph g = kind == "random" ? random_bounded_degree_graph(n, D, seed, attempts)
                                 : family_graph(kind, n);
      if (!weight_range.empty()) {
        meta.params["weights"] = weight_range;
        g = with_random_weights(g, weight_range[0], weight_range[1], derive_seed(seed, 1));
      }
      if (generate_signal != "none") {
        g = g.with_signal(family_signal(generate_signal, g.num_nodes(), derive_seed(seed, 2)));
      }
      emit(out_path, dump(graph_to_json(g), meta), out);
    } else if (sample->parsed()) {
      Meta meta{"sample", {{"dist", dist_path}}, {{"m", m}}, seed};
      const BallDistribution d = read_distribution(dist_path);
      json points = json::array();
      for (const OmegaPoint& p : sample_points(d, m, seed)) {
        points.push_back({{"code", base64_encode(p.code)}, {"signal", p.signal}});
      }
      emit(out_path, dump({{"K", d.K}, {"points", points}}, meta), out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace localgsp::cli
