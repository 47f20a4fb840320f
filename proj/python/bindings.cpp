#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "skingame/analytics.hpp"
#include "skingame/error.hpp"
#include "skingame/estimation.hpp"

namespace py = pybind11;
using namespace skingame;

namespace {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kDegenerateSplit: return "degenerate_split";
    case ErrorKind::kInfiniteMean: return "infinite_mean";
    case ErrorKind::kInfeasibleFamily: return "infeasible_family";
    case ErrorKind::kEmptySeries: return "empty_series";
    case ErrorKind::kNoBlowup: return "no_blowup";
    case ErrorKind::kNoSurvivor: return "no_survivor";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

Contract make_contract(double gamma, double k, int m_periods, double q, std::optional<double> r) {
  Contract c{gamma, k, m_periods, ConstantExposure{q}};
  if (r) c.exposure = MultiplicativeExposure{q, *r};
  c.validate();
  return c;
}

py::array_t<double> to_array(const std::vector<double>& xs) {
  return py::array_t<double>(static_cast<py::ssize_t>(xs.size()), xs.data());
}

}  // namespace

PYBIND11_MODULE(_skingame, m) {
  m.doc() = "Agent payoff asymmetry under skewed return distributions";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Distribution>(m, "Distribution")
      .def_static("pareto", [](double alpha, double x_min, bool reflected) {
            return Distribution::mirrored_pareto(
                alpha, x_min, reflected ? ParetoMirror::kReflected : ParetoMirror::kNegated);
          },
          py::arg("alpha"), py::arg("x_min"), py::arg("reflected") = false)
      .def_static("neglognormal", &Distribution::negative_lognormal, py::arg("mu"),
                  py::arg("sigma"))
      .def_static("gaussian", &Distribution::gaussian, py::arg("mean"), py::arg("sd"))
      .def_static("two_point", &Distribution::two_point, py::arg("p_up"), py::arg("up"),
                  py::arg("down"))
      .def_static("parse", [](const std::string& spec) { return parse_distribution(spec); },
                  py::arg("spec"), "Parse 'family:p1,p2[,p3]'.")
      .def("mean", &Distribution::mean)
      .def("exceedance", &Distribution::exceedance, py::arg("x"), "P(X > x).")
      .def("describe", &Distribution::describe)
      .def("__repr__", [](const Distribution& d) { return "<Distribution " + d.describe() + ">"; });

  py::class_<SplitMeasures>(m, "SplitMeasures")
      .def_readonly("f_plus", &SplitMeasures::f_plus)
      .def_readonly("f_minus", &SplitMeasures::f_minus)
      .def_readonly("e_plus", &SplitMeasures::e_plus)
      .def_readonly("e_minus", &SplitMeasures::e_minus)
      .def_readonly("nu", &SplitMeasures::nu)
      .def_readonly("m", &SplitMeasures::m);

  m.def("split_at", &split_at, py::arg("dist"), py::arg("k"));
  m.def("asymmetry_nu", &asymmetry_nu, py::arg("dist"), py::arg("k"));
  m.def("prob_above_mean", &prob_above_mean, py::arg("dist"));
  m.def("sample",
        [](const Distribution& d, std::size_t n, std::uint64_t seed) {
          return to_array(sample(d, n, seed));
        },
        py::arg("dist"), py::arg("n"), py::arg("seed"));

  py::class_<Contract>(m, "Contract")
      .def(py::init(&make_contract), py::arg("gamma"), py::arg("k"), py::arg("m_periods"),
           py::arg("q") = 1.0, py::arg("r") = py::none(),
           "Constant exposure q, or q * exp(r * i) when r is given.")
      .def_readonly("gamma", &Contract::gamma)
      .def_readonly("k", &Contract::k)
      .def_readonly("m_periods", &Contract::m_periods)
      .def_property_readonly("growth_rate", &Contract::growth_rate)
      .def_property_readonly("base_exposure", &Contract::base_exposure)
      .def("exposure_at", &Contract::exposure_at, py::arg("i"));

  py::class_<PathResult>(m, "PathResult")
      .def_readonly("payoff", &PathResult::payoff)
      .def_readonly("tau_index", &PathResult::tau_index)
      .def_property_readonly("returns", [](const PathResult& p) { return to_array(p.returns); })
      .def_property_readonly("exposures",
                             [](const PathResult& p) { return to_array(p.exposures); })
      .def_property_readonly("gross", [](const PathResult& p) { return to_array(p.gross); })
      .def("blew_up", &PathResult::blew_up, py::arg("m_periods"));

  py::class_<EnsembleStats>(m, "EnsembleStats")
      .def_readonly("n_paths", &EnsembleStats::n_paths)
      .def_readonly("mean_payoff", &EnsembleStats::mean_payoff)
      .def_readonly("stderr_payoff", &EnsembleStats::stderr_payoff)
      .def_readonly("tau_histogram", &EnsembleStats::tau_histogram)
      .def_readonly("blowup_fraction", &EnsembleStats::blowup_fraction)
      .def_readonly("mean_principal_pnl", &EnsembleStats::mean_principal_pnl)
      .def(py::self == py::self);

  m.def("simulate_path", &simulate_path, py::arg("contract"), py::arg("dist"), py::arg("seed"));
  m.def("simulate_ensemble",
        [](const Contract& c, const Distribution& d, std::size_t n, std::uint64_t seed,
           unsigned threads) {
          py::gil_scoped_release release;
          return simulate_ensemble(c, d, n, seed, {threads});
        },
        py::arg("contract"), py::arg("dist"), py::arg("n_paths"), py::arg("seed"),
        py::arg("threads") = 0);
  m.def("blowup_trajectory", &blowup_trajectory, py::arg("contract"), py::arg("dist"),
        py::arg("seed"), py::arg("max_attempts") = 1'000'000);

  py::class_<RunLengthPmf>(m, "RunLengthPmf")
      .def_readonly("stop", &RunLengthPmf::stop)
      .def_readonly("survival", &RunLengthPmf::survival);
  m.def("run_length_pmf", &run_length_pmf, py::arg("f_plus"), py::arg("m_periods"));
  m.def("expected_stopping_sum", &expected_stopping_sum, py::arg("f_plus"),
        py::arg("m_periods"), py::arg("large_m_limit") = false);
  m.def("multiplier", &multiplier, py::arg("f_plus"), py::arg("r"), py::arg("m_periods"));
  m.def("multiplier_direct", &multiplier_direct, py::arg("f_plus"), py::arg("r"),
        py::arg("m_periods"));

  py::class_<MultiplierGrid>(m, "MultiplierGrid")
      .def_readonly("f_values", &MultiplierGrid::f_values)
      .def_readonly("r_values", &MultiplierGrid::r_values)
      .def_readonly("m_periods", &MultiplierGrid::m_periods)
      .def_readonly("values", &MultiplierGrid::values);
  m.def("table1",
        [](const std::vector<double>& f, const std::vector<double>& r, int m_periods) {
          return table1(f, r, m_periods);
        },
        py::arg("f_values"), py::arg("r_values"), py::arg("m_periods"));
  m.def("table1_default", &table1_default);

  m.def("expected_payoff",
        py::overload_cast<const Contract&, const Distribution&>(&expected_payoff),
        py::arg("contract"), py::arg("dist"));
  m.def("expected_path_payoff", &expected_path_payoff, py::arg("contract"), py::arg("dist"));

  py::class_<SkewnessRow>(m, "SkewnessRow")
      .def_readonly("nu", &SkewnessRow::nu)
      .def_readonly("p_up", &SkewnessRow::p_up)
      .def_readonly("down", &SkewnessRow::down)
      .def_readonly("agent_payoff", &SkewnessRow::agent_payoff)
      .def_readonly("principal_mean", &SkewnessRow::principal_mean);
  m.def("skewness_preference_demo",
        [](double mean_m, const std::vector<double>& nus, double up, double gamma, int m_periods,
           double r) {
          return skewness_preference_demo(mean_m, nus, {up, gamma, m_periods, r});
        },
        py::arg("mean_m"), py::arg("nu_grid"), py::arg("up") = 1.0, py::arg("gamma") = 1.0,
        py::arg("m_periods") = 20, py::arg("r") = 0.0);

  py::class_<DigitalVanilla>(m, "DigitalVanilla")
      .def_readonly("digital", &DigitalVanilla::digital)
      .def_readonly("vanilla", &DigitalVanilla::vanilla);
  m.def("digital_vs_vanilla", &digital_vs_vanilla, py::arg("dist"), py::arg("k"));

  py::class_<EmpiricalSplit>(m, "EmpiricalSplit")
      .def_readonly("f_plus_hat", &EmpiricalSplit::f_plus_hat)
      .def_readonly("f_minus_hat", &EmpiricalSplit::f_minus_hat)
      .def_readonly("e_plus_hat", &EmpiricalSplit::e_plus_hat)
      .def_readonly("e_minus_hat", &EmpiricalSplit::e_minus_hat)
      .def_readonly("nu_hat", &EmpiricalSplit::nu_hat)
      .def_readonly("n_above", &EmpiricalSplit::n_above)
      .def_readonly("n_below", &EmpiricalSplit::n_below)
      .def_readonly("mean_hat", &EmpiricalSplit::mean_hat);
  m.def("empirical_split",
        [](std::vector<double> values, double k) {
          return empirical_split(ReturnSeries(std::move(values)), k);
        },
        py::arg("values"), py::arg("k"));

  py::class_<ConcealmentScore>(m, "ConcealmentScore")
      .def_readonly("score", &ConcealmentScore::score)
      .def_readonly("degenerate", &ConcealmentScore::degenerate);
  m.def("concealment_score",
        [](std::vector<double> values) {
          return concealment_score(ReturnSeries(std::move(values)));
        },
        py::arg("values"));

  py::class_<SurvivorshipGap>(m, "SurvivorshipGap")
      .def_readonly("surviving_mean", &SurvivorshipGap::surviving_mean)
      .def_readonly("true_mean", &SurvivorshipGap::true_mean)
      .def_readonly("gap", &SurvivorshipGap::gap)
      .def_readonly("stderr_surviving", &SurvivorshipGap::stderr_surviving)
      .def_readonly("n_survivors", &SurvivorshipGap::n_survivors);
  m.def("survivorship_gap", &survivorship_gap, py::arg("dist"), py::arg("k"),
        py::arg("m_periods"), py::arg("n_paths"), py::arg("seed"));
}
