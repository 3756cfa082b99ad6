#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "share_table_io.hpp"
#include "simplex_kde/bandwidth.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/hdr.hpp"
#include "simplex_kde/kde.hpp"
#include "simplex_kde/processes.hpp"
#include "simplex_kde/verify.hpp"

namespace simplex_kde::cli {

namespace {

std::string num(double x) { return fmt::format("{}", x); }

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k > 0) out += ' ';
    out += k == 0 ? std::string(kToolName) : args[k];
  }
  return out;
}

// Output file (or stdout for "-" and empty paths) opened with the common
// comment header.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
    stream_ = file_.get();
  }

  void header(const std::string& command_line,
              const std::vector<std::pair<std::string, std::string>>& fields) {
    *stream_ << "# " << kToolName << ' ' << kVersion << '\n';
    *stream_ << "# command: " << command_line << '\n';
    for (const auto& [key, value] : fields) *stream_ << "# " << key << ": " << value << '\n';
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

struct TableFlags {
  std::string input;
  std::string date_column;
  std::vector<std::string> columns;
  bool renormalize = false;

  void attach(CLI::App& app) {
    app.add_option("--input", input, "CSV file with a header row")->required();
    app.add_option("--date-column", date_column, "date column name (default: first column)");
    app.add_option("--columns", columns, "share columns (default: all but the date column)")
        ->delimiter(',');
    auto* strict = app.add_flag("--strict", "reject rows whose shares do not sum to 1 (default)");
    auto* renorm =
        app.add_flag("--renormalize", renormalize, "divide each row by its total instead");
    strict->excludes(renorm);
  }

  IngestResult load() const {
    IngestOptions options;
    options.date_column = date_column;
    options.share_columns = columns;
    options.mode = renormalize ? ValidationMode::renormalize : ValidationMode::strict;
    return read_share_table_file(input, options);
  }
};

// ingest ---------------------------------------------------------------------

struct IngestCommand {
  TableFlags table;
  std::string out_path;

  int run(const std::string& command_line, std::ostream& out) const {
    const IngestResult r = table.load();
    Output output(out_path, out);
    output.header(command_line, {{"n", std::to_string(r.table.rows.size())},
                                 {"components", std::to_string(r.table.columns.size())},
                                 {"d", std::to_string(r.table.columns.size() - 1)},
                                 {"renormalized_rows", std::to_string(r.renormalized_rows)}});
    std::ostream& os = output.stream();
    os << "component,min,max\n";
    for (std::size_t k = 0; k < r.table.columns.size(); ++k) {
      double lo = r.table.rows.front()[k], hi = lo;
      for (const auto& row : r.table.rows) {
        lo = std::min(lo, row[k]);
        hi = std::max(hi, row[k]);
      }
      os << r.table.columns[k] << ',' << num(lo) << ',' << num(hi) << '\n';
    }
    return kOk;
  }
};

// pipeline -------------------------------------------------------------------

struct PipelineCommand {
  TableFlags table;
  std::vector<std::string> pair;
  bool all_pairs = false;
  std::string grid = "0.01:0.01:0.50";
  std::size_t mc_points = 1000;
  std::size_t hdr_points = 10000;
  double level = 0.95;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::size_t resolution = 200;

  struct PairResult {
    std::string label;
    double b_star;
    HdrResult hdr;
  };

  PairResult run_pair(const std::string& command_line, const ShareTable& shares, std::size_t i,
                      std::size_t j, const std::string& suffix) const {
    const CompositionSeries data = build_pair_composition(shares, i, j);
    const std::string label = shares.columns[i] + "-" + shares.columns[j];
    const std::string n = std::to_string(data.size());

    LscvConfig cfg;
    cfg.mc_points = mc_points;
    cfg.grid = parse_bandwidth_grid(grid);
    cfg.seed = seed;
    const BandwidthSelection selection = select_bandwidth(data, cfg);
    const KdeModel model = KdeModel::fit(data, selection.b_star);

    const std::filesystem::path dir(out_dir);
    {
      Output curve((dir / ("lscv_curve" + suffix + ".csv")).string(), std::cout);
      curve.header(command_line, {{"pair", label},
                                  {"seed", std::to_string(seed)},
                                  {"n", n},
                                  {"b", num(selection.b_star)},
                                  {"mc_points", std::to_string(mc_points)}});
      curve.stream() << "b,lscv\n";
      for (const LscvPoint& p : selection.curve)
        curve.stream() << num(p.bandwidth) << ',' << num(p.criterion) << '\n';
    }
    {
      std::vector<SimplexPoint> nodes;
      const double r = static_cast<double>(resolution);
      for (std::size_t a = 0; a <= resolution; ++a)
        for (std::size_t b = 0; a + b <= resolution; ++b)
          nodes.push_back(SimplexPoint({static_cast<double>(a) / r, static_cast<double>(b) / r}));
      const std::vector<double> values = model.evaluate_batch(nodes);
      Output density((dir / ("density_grid" + suffix + ".csv")).string(), std::cout);
      density.header(command_line, {{"pair", label},
                                    {"seed", std::to_string(seed)},
                                    {"n", n},
                                    {"b", num(selection.b_star)},
                                    {"resolution", std::to_string(resolution)}});
      density.stream() << "s1,s2,fhat\n";
      for (std::size_t k = 0; k < nodes.size(); ++k)
        density.stream() << num(nodes[k][0]) << ',' << num(nodes[k][1]) << ',' << num(values[k])
                         << '\n';
    }
    Rng hdr_rng(derive_seed(seed, 1));
    const HdrResult hdr = hdr_threshold(model, level, hdr_points, hdr_rng);
    return {label, selection.b_star, hdr};
  }

  int run(const std::string& command_line, std::ostream& out) const {
    if (pair.empty() == !all_pairs)
      throw Error(ErrorCode::InvalidArgument, "give exactly one of --pair and --all-pairs");
    if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "--resolution must be >= 1");
    const IngestResult loaded = table.load();
    const ShareTable& shares = loaded.table;
    if (shares.columns.size() > 5)
      throw Error(ErrorCode::InvalidDimension, "pipeline supports at most 5 share columns (d <= 4)");
    std::filesystem::create_directories(out_dir);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (all_pairs) {
      for (std::size_t i = 0; i < shares.columns.size(); ++i)
        for (std::size_t j = i + 1; j < shares.columns.size(); ++j) pairs.emplace_back(i, j);
    } else {
      pairs.emplace_back(resolve_column(shares, pair[0]), resolve_column(shares, pair[1]));
    }

    std::vector<PairResult> results;
    for (const auto& [i, j] : pairs) {
      const std::string suffix =
          all_pairs ? "_" + shares.columns[i] + "_" + shares.columns[j] : std::string();
      results.push_back(run_pair(command_line, shares, i, j, suffix));
      const PairResult& r = results.back();
      out << fmt::format("{}: n={} b*={} threshold={} se={}\n", r.label, shares.rows.size(),
                         num(r.b_star), num(r.hdr.threshold), num(r.hdr.se));
    }

    Output hdr((std::filesystem::path(out_dir) / "hdr.csv").string(), std::cout);
    hdr.header(command_line, {{"seed", std::to_string(seed)},
                              {"n", std::to_string(shares.rows.size())},
                              {"level", num(level)}});
    hdr.stream() << "pair,b_star,level,threshold,se,M,seed\n";
    for (const PairResult& r : results)
      hdr.stream() << r.label << ',' << num(r.b_star) << ',' << num(r.hdr.level) << ','
                   << num(r.hdr.threshold) << ',' << num(r.hdr.se) << ',' << r.hdr.mc_points << ','
                   << seed << '\n';
    return kOk;
  }
};

// verify ---------------------------------------------------------------------

struct VerifyCommand {
  std::string suite;
  std::uint64_t seed = 0;
  std::string out_path;
  std::vector<std::size_t> dims;
  std::vector<double> orders;
  std::vector<double> bandwidths;
  std::vector<std::size_t> sizes;
  std::vector<double> rhos;
  std::optional<std::size_t> replicates;
  std::optional<std::size_t> n;
  std::optional<std::size_t> anchors;
  std::optional<std::size_t> mc_points;
  std::optional<std::size_t> resolution;
  std::optional<double> exponent;
  std::optional<double> level;
  std::optional<double> bandwidth;
  std::optional<std::string> grid;

  verify::Report dispatch() const {
    if (suite == "normalization") {
      verify::NormalizationParams p;
      p.seed = seed;
      if (!dims.empty()) p.dims = dims;
      if (!bandwidths.empty()) p.bandwidths = bandwidths;
      if (anchors) p.anchors = *anchors;
      return verify::verify_normalization(p);
    }
    if (suite == "norms") {
      verify::NormsParams p;
      if (!dims.empty()) p.dims = dims;
      if (!orders.empty()) p.orders = orders;
      if (!bandwidths.empty()) p.bandwidths = bandwidths;
      return verify::verify_norms(p);
    }
    if (suite == "mse") {
      verify::MseParams p;
      p.seed = seed;
      if (!dims.empty()) {
        if (dims.size() != 1) throw Error(ErrorCode::InvalidArgument, "mse takes a single --dim");
        p.target = DirichletParams(std::vector<double>(dims.front(), 2.0), 2.0);
      }
      if (!sizes.empty()) p.sizes = sizes;
      if (replicates) p.replicates = *replicates;
      if (exponent) p.bandwidth_exponent = *exponent;
      if (!rhos.empty()) {
        if (rhos.size() != 1) throw Error(ErrorCode::InvalidArgument, "mse takes a single --rho");
        p.rho = rhos.front();
      }
      return verify::verify_mse(p);
    }
    if (suite == "clt" || suite == "coverage") {
      verify::CltParams p;
      p.seed = seed;
      if (n) p.n = *n;
      if (replicates) p.replicates = *replicates;
      if (exponent) p.bandwidth_exponent = *exponent;
      if (!rhos.empty()) p.rhos = rhos;
      const verify::CltOutcome outcome = verify::run_clt(p);
      return suite == "clt" ? outcome.clt : outcome.coverage;
    }
    if (suite == "hdr") {
      verify::HdrParams p;
      p.seed = seed;
      if (n) p.n = *n;
      if (bandwidth) p.bandwidth = *bandwidth;
      if (level) p.level = *level;
      if (mc_points) p.mc_points = *mc_points;
      if (resolution) p.oracle_resolution = *resolution;
      return verify::verify_hdr(p);
    }
    if (suite == "lscv") {
      verify::LscvParams p;
      p.seed = seed;
      if (n) p.n = *n;
      if (mc_points) p.mc_points = *mc_points;
      if (grid) p.grid = parse_bandwidth_grid(*grid);
      return verify::verify_lscv(p);
    }
    throw Error(ErrorCode::UnknownSuite, fmt::format("unknown suite '{}'", suite));
  }

  int run(const std::string& command_line, std::ostream& out, std::ostream& err) const {
    const verify::Report report = dispatch();
    Output output(out_path, out);
    if (!out_path.empty() && out_path != "-")
      output.header(command_line, {{"suite", suite}, {"seed", std::to_string(seed)}});
    output.stream() << report.to_json_lines();
    err << fmt::format("{}: {}\n", suite, report.passed() ? "PASS" : "FAIL");
    return report.passed() ? kOk : kCheckFailed;
  }
};

// simulate -------------------------------------------------------------------

struct SimulateCommand {
  std::string kind;
  std::vector<double> shape{1.0, 1.0};
  double tail = 1.0;
  double rho = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;

  int run(const std::string& command_line, std::ostream& out) const {
    if (n == 0) throw Error(ErrorCode::EmptyData, "--n must be >= 1");
    const DirichletParams params(shape, tail);
    CompositionSeries series;
    if (kind == "iid") {
      if (rho != 0.0) throw Error(ErrorCode::InvalidRho, "iid series take no --rho");
      Rng rng(seed);
      series = gen_iid(params, n, rng);
    } else {
      MixingProcessConfig cfg;
      cfg.rho = rho;
      cfg.marginal = params;
      cfg.n = n;
      cfg.seed = seed;
      series = gen_mixing_ar1(cfg);
    }
    Output output(out_path, out);
    output.header(command_line,
                  {{"d", std::to_string(params.dim())},
                   {"shapes", fmt::format("{};{}", fmt::join(shape, ","), tail)},
                   {"rho", num(rho)},
                   {"seed", std::to_string(seed)},
                   {"n", std::to_string(n)}});
    std::ostream& os = output.stream();
    os << 't';
    for (std::size_t k = 1; k <= params.dim(); ++k) os << ",x" << k;
    os << '\n';
    for (std::size_t t = 0; t < series.size(); ++t) {
      os << t + 1;
      for (double x : series[t].coords()) os << ',' << num(x);
      os << '\n';
    }
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet kernel density estimation on the simplex", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  IngestCommand ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "validate a share table and summarize it");
  ingest.table.attach(*ingest_cmd);
  ingest_cmd->add_option("--out", ingest.out_path, "summary file (default: stdout)");

  PipelineCommand pipeline;
  auto* pipeline_cmd = app.add_subcommand(
      "pipeline", "pair composition, LSCV bandwidth, density grid and HDR threshold");
  pipeline.table.attach(*pipeline_cmd);
  auto* pair_opt = pipeline_cmd->add_option("--pair", pipeline.pair,
                                            "two share columns (1-based numbers or names)");
  pair_opt->expected(2);
  pipeline_cmd->add_flag("--all-pairs", pipeline.all_pairs, "run every pair of share columns")
      ->excludes(pair_opt);
  pipeline_cmd->add_option("--grid", pipeline.grid, "bandwidth grid lo:step:hi")
      ->capture_default_str();
  pipeline_cmd->add_option("--mc-points", pipeline.mc_points, "LSCV Monte Carlo points")
      ->capture_default_str();
  pipeline_cmd->add_option("--hdr-points", pipeline.hdr_points, "HDR Monte Carlo points")
      ->capture_default_str();
  pipeline_cmd->add_option("--level", pipeline.level, "HDR mass level")->capture_default_str();
  pipeline_cmd->add_option("--seed", pipeline.seed, "random seed")->required();
  pipeline_cmd->add_option("--out-dir", pipeline.out_dir, "output directory")
      ->capture_default_str();
  pipeline_cmd->add_option("--resolution", pipeline.resolution, "density lattice resolution")
      ->capture_default_str();

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "rerun an asymptotic check");
  verify_cmd
      ->add_option("--suite", verify.suite,
                   "normalization | norms | mse | clt | coverage | hdr | lscv")
      ->required();
  verify_cmd->add_option("--seed", verify.seed, "random seed")->required();
  verify_cmd->add_option("--out", verify.out_path, "JSON-lines report (default: stdout)");
  verify_cmd->add_option("--dim", verify.dims, "simplex dimension(s)")->delimiter(',');
  verify_cmd->add_option("--order", verify.orders, "norm orders q")->delimiter(',');
  verify_cmd->add_option("--bandwidths", verify.bandwidths, "bandwidths")->delimiter(',');
  verify_cmd->add_option("--sizes", verify.sizes, "sample sizes (mse)")->delimiter(',');
  verify_cmd->add_option("--rho", verify.rhos, "latent autocorrelation(s)")->delimiter(',');
  verify_cmd->add_option("--replicates", verify.replicates, "Monte Carlo replicates");
  verify_cmd->add_option("--n", verify.n, "sample size");
  verify_cmd->add_option("--anchors", verify.anchors, "random anchors (normalization)");
  verify_cmd->add_option("--mc-points", verify.mc_points, "Monte Carlo points (hdr, lscv)");
  verify_cmd->add_option("--resolution", verify.resolution, "oracle lattice resolution (hdr)");
  verify_cmd->add_option("--bandwidth-exponent", verify.exponent, "b = n^-exponent");
  verify_cmd->add_option("--level", verify.level, "HDR mass level (hdr)");
  verify_cmd->add_option("--bandwidth", verify.bandwidth, "bandwidth (hdr)");
  verify_cmd->add_option("--grid", verify.grid, "bandwidth grid lo:step:hi (lscv)");

  SimulateCommand simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "generate a Dirichlet series");
  simulate_cmd->add_option("kind", simulate.kind, "iid | ar1")
      ->required()
      ->check(CLI::IsMember({"iid", "ar1"}));
  simulate_cmd->add_option("--shape", simulate.shape, "Dirichlet shapes u_1..u_d")
      ->delimiter(',')
      ->capture_default_str();
  simulate_cmd->add_option("--tail", simulate.tail, "Dirichlet shape of the residual part")
      ->capture_default_str();
  simulate_cmd->add_option("--rho", simulate.rho, "latent AR(1) coefficient (ar1)")
      ->capture_default_str();
  simulate_cmd->add_option("--n", simulate.n, "series length")->required();
  simulate_cmd->add_option("--seed", simulate.seed, "random seed")->required();
  simulate_cmd->add_option("--out", simulate.out_path, "output CSV (default: stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const std::string command_line = join_args(args);
  try {
    if (*ingest_cmd) return ingest.run(command_line, out);
    if (*pipeline_cmd) return pipeline.run(command_line, out);
    if (*verify_cmd) return verify.run(command_line, out, err);
    if (*simulate_cmd) return simulate.run(command_line, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace simplex_kde::cli
