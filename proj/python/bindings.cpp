#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "simplex_kde/asymptotics.hpp"
#include "simplex_kde/bandwidth.hpp"
#include "simplex_kde/dirichlet.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/hdr.hpp"
#include "simplex_kde/kde.hpp"
#include "simplex_kde/processes.hpp"

namespace py = pybind11;
using namespace simplex_kde;

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

namespace {

SimplexPoint to_point(const std::vector<double>& coords) { return SimplexPoint(coords); }

std::vector<SimplexPoint> to_points(const Array& rows) {
  if (rows.ndim() != 2) throw Error(ErrorCode::InvalidDimension, "expected a 2-d array of points");
  const auto view = rows.unchecked<2>();
  std::vector<SimplexPoint> out;
  out.reserve(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    std::vector<double> c(static_cast<std::size_t>(view.shape(1)));
    for (py::ssize_t k = 0; k < view.shape(1); ++k) c[static_cast<std::size_t>(k)] = view(i, k);
    out.emplace_back(std::move(c));
  }
  return out;
}

CompositionSeries to_series(const Array& rows) { return CompositionSeries(to_points(rows)); }

py::array_t<double> to_array(const CompositionSeries& series) {
  const std::size_t n = series.size(), d = series.dim();
  py::array_t<double> out({n, d});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) view(i, k) = series[i][k];
  return out;
}

py::dict selection_dict(const BandwidthSelection& s) {
  std::vector<double> b, crit;
  for (const LscvPoint& p : s.curve) {
    b.push_back(p.bandwidth);
    crit.push_back(p.criterion);
  }
  py::dict out;
  out["b_star"] = s.b_star;
  out["bandwidths"] = py::array_t<double>(b.size(), b.data());
  out["criterion"] = py::array_t<double>(crit.size(), crit.data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet kernel density estimation on the simplex";
  py::register_exception<Error>(m, "SimplexKdeError", PyExc_ValueError);

  m.def("log_dirichlet_density",
        [](const std::vector<double>& shape, double tail, const std::vector<double>& x) {
          return log_dirichlet_density(DirichletParams(shape, tail), to_point(x));
        },
        py::arg("shape"), py::arg("tail"), py::arg("x"));
  m.def("kappa",
        [](const std::vector<double>& s, double b, const std::vector<double>& x) {
          return kappa(KernelSpec(to_point(s), b), to_point(x));
        },
        py::arg("s"), py::arg("b"), py::arg("x"), "Dirichlet kernel kappa_{s,b}(x).");
  m.def("kappa_lq_norm_sq_asymptotic",
        [](const std::vector<double>& s, double b, double q) {
          return kappa_lq_norm_sq_asymptotic(to_point(s), b, q);
        },
        py::arg("s"), py::arg("b"), py::arg("q"));
  m.def("kappa_sup_bound",
        [](const std::vector<double>& s, double b) { return kappa_sup_bound(to_point(s), b); },
        py::arg("s"), py::arg("b"));
  m.def("psi", [](const std::vector<double>& s) { return psi(to_point(s)); }, py::arg("s"));
  m.def("sample_uniform",
        [](std::size_t d, std::size_t n, std::uint64_t seed) {
          Rng rng(seed);
          CompositionSeries out;
          for (std::size_t i = 0; i < n; ++i) out.push_back(sample_uniform(d, rng));
          return to_array(out);
        },
        py::arg("d"), py::arg("n"), py::arg("seed"));

  py::class_<KdeModel>(m, "KdeModel")
      .def(py::init([](const Array& data, double bandwidth) {
             return KdeModel::fit(to_series(data), bandwidth);
           }),
           py::arg("data"), py::arg("bandwidth"))
      .def_property_readonly("bandwidth", &KdeModel::bandwidth)
      .def_property_readonly("n", &KdeModel::size)
      .def_property_readonly("dim", &KdeModel::dim)
      .def("evaluate",
           [](const KdeModel& model, const std::vector<double>& s) {
             return model.evaluate(to_point(s));
           },
           py::arg("s"))
      .def("evaluate_batch",
           [](const KdeModel& model, const Array& points) {
             const std::vector<SimplexPoint> pts = to_points(points);
             std::vector<double> values;
             {
               py::gil_scoped_release release;
               values = model.evaluate_batch(pts);
             }
             return py::array_t<double>(values.size(), values.data());
           },
           py::arg("points"))
      .def("evaluate_loo",
           [](const KdeModel& model, const std::vector<double>& s, std::size_t i) {
             return model.evaluate_loo(to_point(s), i);
           },
           py::arg("s"), py::arg("i"), "Leave-one-out estimate without observation i (0-based).")
      .def("with_bandwidth", &KdeModel::with_bandwidth, py::arg("bandwidth"));

  m.def("lscv_mc",
        [](const Array& data, double b, std::size_t mc_points, std::uint64_t seed) {
          LscvConfig cfg;
          cfg.mc_points = mc_points;
          cfg.seed = seed;
          const CompositionSeries series = to_series(data);
          py::gil_scoped_release release;
          Rng rng(seed);
          return lscv_mc(series, b, cfg, rng);
        },
        py::arg("data"), py::arg("b"), py::arg("mc_points") = 1000, py::arg("seed") = 0);
  m.def("select_bandwidth",
        [](const Array& data, std::optional<std::vector<double>> grid, std::size_t mc_points,
           std::uint64_t seed) {
          LscvConfig cfg;
          if (grid) cfg.grid = *grid;
          cfg.mc_points = mc_points;
          cfg.seed = seed;
          const CompositionSeries series = to_series(data);
          BandwidthSelection selection;
          {
            py::gil_scoped_release release;
            selection = select_bandwidth(series, cfg);
          }
          return selection_dict(selection);
        },
        py::arg("data"), py::arg("grid") = py::none(), py::arg("mc_points") = 1000,
        py::arg("seed") = 0);

  m.def("hdr_threshold",
        [](const KdeModel& model, double level, std::size_t mc_points, std::uint64_t seed) {
          HdrResult r;
          {
            py::gil_scoped_release release;
            Rng rng(seed);
            r = hdr_threshold(model, level, mc_points, rng);
          }
          py::dict out;
          out["threshold"] = r.threshold;
          out["level"] = r.level;
          out["mc_points"] = r.mc_points;
          out["se"] = r.se;
          return out;
        },
        py::arg("model"), py::arg("level") = 0.95, py::arg("mc_points") = 10000,
        py::arg("seed") = 0);

  m.def("confidence_interval",
        [](double fhat, const std::vector<double>& s, std::size_t n, double b, double conf_alpha) {
          const ConfidenceInterval ci = confidence_interval(fhat, to_point(s), n, b, conf_alpha);
          return py::make_tuple(ci.lo, ci.hi);
        },
        py::arg("fhat"), py::arg("s"), py::arg("n"), py::arg("b"), py::arg("conf_alpha") = 0.05);
  m.def("mse_expansion",
        [](const std::vector<double>& shape, double tail, const std::vector<double>& s,
           std::size_t n, double b) {
          const MseExpansion e =
              mse_expansion(DensityModel::dirichlet(DirichletParams(shape, tail)), to_point(s), n, b);
          py::dict out;
          out["bias_term"] = e.bias_term;
          out["variance_term"] = e.variance_term;
          out["total"] = e.total;
          return out;
        },
        py::arg("shape"), py::arg("tail"), py::arg("s"), py::arg("n"), py::arg("b"),
        "Leading MSE terms for a Dirichlet(shape, tail) target.");

  m.def("gen_iid",
        [](const std::vector<double>& shape, double tail, std::size_t n, std::uint64_t seed) {
          Rng rng(seed);
          return to_array(gen_iid(DirichletParams(shape, tail), n, rng));
        },
        py::arg("shape"), py::arg("tail"), py::arg("n"), py::arg("seed"));
  m.def("gen_mixing_ar1",
        [](const std::vector<double>& shape, double tail, double rho, std::size_t n,
           std::uint64_t seed) {
          MixingProcessConfig cfg;
          cfg.rho = rho;
          cfg.marginal = DirichletParams(shape, tail);
          cfg.n = n;
          cfg.seed = seed;
          return to_array(gen_mixing_ar1(cfg));
        },
        py::arg("shape"), py::arg("tail"), py::arg("rho"), py::arg("n"), py::arg("seed"));
}
