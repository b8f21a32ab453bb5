#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>
#include <random>

#include "cvm/error.hpp"
#include "cvm/experiments.hpp"
#include "cvm/report_io.hpp"
#include "cvm/snapshot.hpp"
#include "cvm/statics.hpp"
#include "cvm/urn.hpp"

namespace cvm::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string graph;
  std::string graph_file;
  std::string eps;
  std::string eps_grid;
  std::optional<std::uint64_t> seed;
  std::size_t reps = 100;
  std::optional<double> t_max;
  std::optional<std::uint64_t> max_events;
  bool to_absorption = false;
  std::size_t workers = 1;
  std::string out_dir;
  bool snapshot = false;
  std::string init_file;
  bool timing = false;

  std::string strategy = "S";
  std::int64_t balls = 0;
  std::size_t boxes = 3;
};

// Accepts decimals and simple fractions such as "1/3".
double parse_number(const std::string& text) {
  auto parse = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError("not a number: '" + text + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse(text);
  const double den = parse(std::string_view(text).substr(slash + 1));
  if (den == 0.0) throw ValidationError("zero denominator in '" + text + "'");
  return parse(std::string_view(text).substr(0, slash)) / den;
}

double parse_epsilon(const std::string& text) {
  const double eps = parse_number(text);
  check_epsilon(eps);
  return eps;
}

std::vector<double> epsilon_list(const Options& o) {
  std::vector<double> out;
  if (!o.eps_grid.empty()) {
    std::size_t pos = 0;
    while (pos <= o.eps_grid.size()) {
      const auto comma = std::min(o.eps_grid.find(',', pos), o.eps_grid.size());
      out.push_back(parse_epsilon(o.eps_grid.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else if (!o.eps.empty()) {
    out.push_back(parse_epsilon(o.eps));
  }
  if (out.empty()) throw ValidationError("--eps or --eps-grid is required");
  return out;
}

double single_epsilon(const Options& o) {
  if (o.eps.empty()) throw ValidationError("--eps is required");
  return parse_epsilon(o.eps);
}

std::string graph_source(const Options& o) {
  if (!o.graph.empty() && !o.graph_file.empty()) {
    throw ValidationError("--graph and --graph-file are mutually exclusive");
  }
  if (!o.graph_file.empty()) return "file:" + o.graph_file;
  if (o.graph.empty()) throw ValidationError("--graph or --graph-file is required");
  return o.graph;
}

std::uint64_t resolve_seed(const Options& o, std::ostream& err) {
  if (o.seed) return *o.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  err << "seed=" << seed << '\n';
  return seed;
}

std::pair<std::size_t, std::size_t> torus_dims(const std::string& spec) {
  std::size_t w = 0;
  std::size_t h = 0;
  const auto x = spec.find('x');
  if (spec.rfind("torus:", 0) != 0 || x == std::string::npos) {
    throw ValidationError("expected --graph torus:WxH, got '" + spec + "'");
  }
  const char* b = spec.data();
  auto r1 = std::from_chars(b + 6, b + x, w);
  auto r2 = std::from_chars(b + x + 1, b + spec.size(), h);
  if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != b + x ||
      r2.ptr != b + spec.size()) {
    throw ValidationError("bad torus dimensions in '" + spec + "'");
  }
  return {w, h};
}

std::size_t path_length(const std::string& spec) {
  std::size_t n = 0;
  const char* b = spec.data();
  if (spec.rfind("path:", 0) != 0 ||
      std::from_chars(b + 5, b + spec.size(), n).ptr != b + spec.size() || n == 0) {
    throw ValidationError("expected --graph path:N, got '" + spec + "'");
  }
  return n;
}

fs::path output_dir(const Options& o) {
  fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  return dir;
}

std::string snapshot_name(double eps) { return "snapshot_" + format_double(eps) + ".pgm"; }

void emit_experiment(const ExperimentReport& report, const Options& o, std::ostream& out) {
  const auto doc = to_json(report, o.timing);
  if (o.out_dir.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  const auto dir = output_dir(o);
  write_text_file(dir / "report.json", doc.dump(2) + "\n");
  write_text_file(dir / "records.csv", records_csv(report));
  if (o.snapshot) {
    for (const auto& s : report.snapshots) {
      write_snapshot(s.opinions, s.width, s.height, dir / snapshot_name(s.epsilon));
    }
  }
  for (const auto& a : report.aggregates) {
    out << "eps=" << format_double(a.epsilon) << " nu=" << format_double(a.nu.mean)
        << " +- " << format_double(a.nu.radius)
        << " consensus=" << format_double(a.consensus.mean) << '\n';
  }
}

ExperimentSpec experiment_spec(const Options& o, std::ostream& err) {
  ExperimentSpec spec;
  spec.graph = graph_source(o);
  spec.epsilons = epsilon_list(o);
  spec.replicates = o.reps;
  spec.master_seed = resolve_seed(o, err);
  if (!o.to_absorption) spec.t_max = o.t_max;
  if (o.max_events) spec.max_events = *o.max_events;
  spec.workers = o.workers;
  return spec;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const double eps = single_epsilon(o);
  const Graph g = build_graph(graph_source(o));
  SimParams p;
  p.epsilon = eps;
  p.seed = resolve_seed(o, err);
  if (!o.to_absorption) p.t_max = o.t_max;
  if (o.max_events) p.max_events = *o.max_events;
  const OpinionConfig init = o.init_file.empty()
                                 ? random_initial(g, stream_seed(p.seed, Stream::initial))
                                 : parse_opinions_csv(read_text_file(o.init_file));
  const SimReport report = simulate(g, init, p);
  const auto doc = to_json(report).dump(2) + "\n";
  if (o.out_dir.empty()) {
    out << doc;
    return 0;
  }
  const auto dir = output_dir(o);
  write_text_file(dir / "report.json", doc);
  write_text_file(dir / "final_opinions.csv", opinions_csv(report.final_opinions));
  if (o.snapshot) {
    const auto [w, h] = torus_dims(o.graph);
    write_snapshot(report.final_opinions, w, h, dir / snapshot_name(eps));
  }
  out << "events=" << report.events << " absorbed=" << (report.absorbed ? 1 : 0)
      << " opinions=" << count_opinions(report.final_opinions) << '\n';
  return 0;
}

int cmd_index(const Options& o, std::ostream& out) {
  const double eps = single_epsilon(o);
  const Graph g = build_graph(graph_source(o));
  const IndexBounds b = index_bounds(g, eps);
  const auto doc = to_json(b).dump(2) + "\n";
  if (o.out_dir.empty()) {
    out << doc;
    return 0;
  }
  const auto dir = output_dir(o);
  write_text_file(dir / "report.json", doc);
  write_text_file(dir / "lower_witness.csv", opinions_csv(b.lower_witness));
  if (b.exact_witness) write_text_file(dir / "exact_witness.csv", opinions_csv(*b.exact_witness));
  out << "lower=" << b.lower << " upper=" << b.upper;
  if (b.exact) out << " exact=" << *b.exact;
  out << '\n';
  return 0;
}

int cmd_coexistence(const Options& o, std::ostream& out, std::ostream& err) {
  const double eps = single_epsilon(o);
  const std::size_t n = path_length(graph_source(o));
  const auto seed = resolve_seed(o, err);
  emit_experiment(coexistence_experiment(n, eps, o.reps, seed, o.workers), o, out);
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const auto grid = epsilon_list(o);
  const auto [w, h] = torus_dims(graph_source(o));
  if (!o.t_max) throw ValidationError("sweep requires --t-max");
  const auto seed = resolve_seed(o, err);
  emit_experiment(sweep_experiment(w, h, grid, *o.t_max, o.reps, seed, o.workers), o, out);
  return 0;
}

int cmd_urn(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.balls < 0) throw ValidationError("--balls must be nonnegative");
  if (o.boxes < 1) throw ValidationError("--boxes must be at least 1");
  std::string trajectory;
  std::uint64_t steps = 0;
  if (o.strategy == "S") {
    const auto play = play_strategy_S(o.balls, o.boxes);
    steps = play.steps;
    trajectory = urn_trajectory_csv(play.trajectory);
  } else if (o.strategy == "random") {
    const auto seed = resolve_seed(o, err);
    const auto play = play_random(uniform_urn(o.balls, o.boxes), seed);
    steps = play.steps;
    trajectory = urn_trajectory_csv(std::span(&play.final, 1));
  } else {
    throw ValidationError("--strategy must be S or random");
  }
  out << "steps=" << steps << '\n';
  if (!o.out_dir.empty()) write_text_file(output_dir(o) / "trajectory.csv", trajectory);
  return 0;
}

void add_graph(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph, "path:N, cycle:N, complete:N or torus:WxH");
  sub->add_option("--graph-file", o.graph_file, "edge-list file");
}

void add_run(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "64-bit seed (generated and printed if omitted)");
  sub->add_option("--t-max", o.t_max, "stop at this model time");
  sub->add_option("--max-events", o.max_events, "stop after this many events");
  sub->add_flag("--to-absorption", o.to_absorption, "run until no edge interacts");
  sub->add_option("--out", o.out_dir, "output directory");
}

void add_experiment(CLI::App* sub, Options& o) {
  add_graph(sub, o);
  add_run(sub, o);
  sub->add_option("--eps", o.eps, "confidence threshold");
  sub->add_option("--eps-grid", o.eps_grid, "comma-separated thresholds, e.g. 0.2,1/3,0.5");
  sub->add_option("--reps", o.reps, "replicates per threshold")->check(CLI::PositiveNumber);
  sub->add_option("--workers", o.workers, "parallel replicates")->check(CLI::PositiveNumber);
  sub->add_flag("--snapshot", o.snapshot, "write snapshot_<eps>.pgm under --out");
  sub->add_flag("--timing", o.timing, "include wall-clock seconds in report.json");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Confidence-threshold voter model: simulation, index bounds, experiments",
               "cvm");
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "one run; prints the report as JSON");
  add_graph(simulate, o);
  add_run(simulate, o);
  simulate->add_option("--eps", o.eps, "confidence threshold")->required();
  simulate->add_option("--init", o.init_file, "initial opinions, one per line");
  simulate->add_flag("--snapshot", o.snapshot, "write the final state as PGM (torus only)");

  auto* index = app.add_subcommand("index", "bounds on the opinion index, with witnesses");
  add_graph(index, o);
  index->add_option("--eps", o.eps, "confidence threshold")->required();
  index->add_option("--out", o.out_dir, "output directory");

  auto* consensus = app.add_subcommand("consensus", "consensus frequency for eps > 1/2");
  add_experiment(consensus, o);
  auto* coexistence = app.add_subcommand("coexistence", "opinion counts on a path");
  add_experiment(coexistence, o);
  auto* sweep = app.add_subcommand("sweep", "opinion counts on a torus across thresholds");
  add_experiment(sweep, o);
  auto* degree = app.add_subcommand("degree", "non-absorbing initial states vs union bound");
  add_experiment(degree, o);

  auto* urn = app.add_subcommand("urn", "box game: strategy S or random play");
  urn->add_option("--strategy", o.strategy, "S or random");
  urn->add_option("--balls", o.balls, "balls per box")->required();
  urn->add_option("--boxes", o.boxes, "number of nonzero boxes J");
  urn->add_option("--seed", o.seed, "seed for random play");
  urn->add_option("--out", o.out_dir, "write trajectory.csv here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(o, out, err);
    if (index->parsed()) return cmd_index(o, out);
    if (consensus->parsed()) {
      emit_experiment(consensus_experiment(experiment_spec(o, err)), o, out);
      return 0;
    }
    if (coexistence->parsed()) return cmd_coexistence(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (degree->parsed()) {
      emit_experiment(degree_bound_check(experiment_spec(o, err)), o, out);
      return 0;
    }
    if (urn->parsed()) return cmd_urn(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace cvm::cli
