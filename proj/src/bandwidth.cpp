#include "simplex_kde/bandwidth.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "simplex_kde/error.hpp"
#include "simplex_kde/parallel.hpp"
#include "simplex_kde/stats.hpp"

namespace simplex_kde {

namespace {

double parse_number(std::string_view text) {
  std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != owned.size())
    throw Error(ErrorCode::InvalidGrid, "not a number: '" + owned + "'");
  return value;
}

// Rounds away the representation error of lo + k * step (e.g. 0.30000000000000004).
double snap(double x) { return std::round(x * 1e12) / 1e12; }

}  // namespace

std::vector<double> default_bandwidth_grid() {
  std::vector<double> grid(50);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = static_cast<double>(k + 1) / 100.0;
  return grid;
}

std::vector<double> parse_bandwidth_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos)
    throw Error(ErrorCode::InvalidGrid, "expected lo:step:hi, got '" + std::string(spec) + "'");
  const double lo = parse_number(spec.substr(0, first));
  const double step = parse_number(spec.substr(first + 1, second - first - 1));
  const double hi = parse_number(spec.substr(second + 1));
  if (!(lo > 0.0) || !(step > 0.0) || !(hi >= lo))
    throw Error(ErrorCode::InvalidGrid, "need 0 < lo <= hi and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = snap(lo + static_cast<double>(k) * step);
  return grid;
}

void LscvConfig::validate() const {
  if (mc_points < 1) throw Error(ErrorCode::InvalidArgument, "M must be >= 1");
  if (grid.empty()) throw Error(ErrorCode::InvalidGrid, "bandwidth grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0)) throw Error(ErrorCode::InvalidGrid, "bandwidths must be positive");
    if (k > 0 && !(grid[k] > grid[k - 1]))
      throw Error(ErrorCode::InvalidGrid, "bandwidth grid must be strictly ascending");
  }
}

LscvDraws draw_lscv_points(std::size_t d, std::size_t n, std::size_t mc_points, Rng& rng) {
  LscvDraws draws;
  draws.uniform_points.reserve(mc_points);
  for (std::size_t m = 0; m < mc_points; ++m) draws.uniform_points.push_back(sample_uniform(d, rng));
  draws.indices.resize(mc_points);
  for (auto& i : draws.indices) i = rng.index(n);
  return draws;
}

double lscv_criterion(const KdeModel& model, const LscvDraws& draws) {
  if (model.size() < 2) throw Error(ErrorCode::SingleObservation, "LSCV needs n >= 2");
  if (draws.uniform_points.empty() || draws.indices.empty())
    throw Error(ErrorCode::InvalidArgument, "LSCV needs at least one draw per term");

  std::vector<double> squares = model.evaluate_batch(draws.uniform_points);
  for (double& v : squares) v *= v;

  std::vector<double> loo(draws.indices.size());
  parallel_for(loo.size(), [&](std::size_t m) {
    const std::size_t i = draws.indices[m];
    loo[m] = model.evaluate_loo(model.data()[i], i);
  }, 16);

  const double volume = simplex_volume(model.dim());
  return stats::mean(squares) * volume - 2.0 * stats::mean(loo);
}

double lscv_mc(const CompositionSeries& data, double bandwidth, const LscvConfig& cfg, Rng& rng) {
  if (data.size() < 2) throw Error(ErrorCode::SingleObservation, "LSCV needs n >= 2");
  const KdeModel model = KdeModel::fit(data, bandwidth);
  const LscvDraws draws = draw_lscv_points(data.dim(), data.size(), cfg.mc_points, rng);
  return lscv_criterion(model, draws);
}

BandwidthSelection select_bandwidth(const CompositionSeries& data, const LscvConfig& cfg) {
  cfg.validate();
  if (data.size() < 2) throw Error(ErrorCode::SingleObservation, "LSCV needs n >= 2");
  const KdeModel base = KdeModel::fit(data, cfg.grid.front());
  Rng rng(cfg.seed);
  const LscvDraws draws = draw_lscv_points(data.dim(), data.size(), cfg.mc_points, rng);

  BandwidthSelection out{cfg.grid.front(), {}};
  out.curve.reserve(cfg.grid.size());
  double best = 0.0;
  for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
    const double value = lscv_criterion(base.with_bandwidth(cfg.grid[k]), draws);
    out.curve.push_back({cfg.grid[k], value});
    // Strict comparison keeps the smaller bandwidth on ties.
    if (k == 0 || value < best) {
      best = value;
      out.b_star = cfg.grid[k];
    }
  }
  return out;
}

}  // namespace simplex_kde
