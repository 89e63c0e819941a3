// Python bindings for the hetnet core: model parsing, intensity
// mixtures, the isotropic representation, simulation and GOF tests.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "hetnet/equivalence.hpp"
#include "hetnet/gof.hpp"
#include "hetnet/hata.hpp"
#include "hetnet/intensity.hpp"
#include "hetnet/model.hpp"
#include "hetnet/moments.hpp"
#include "hetnet/simulate.hpp"

namespace py = pybind11;
using namespace hetnet;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::pair<double, double>> sample_pairs(
    const PropagationSample& sample) {
  std::vector<std::pair<double, double>> out;
  out.reserve(sample.points.size());
  for (const auto& point : sample.points)
    out.emplace_back(point.y, point.mark.t);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hetnet, m) {
  m.doc() = "propagation processes of heterogeneous Poisson networks";

  py::class_<NetworkModel>(m, "NetworkModel")
      .def_static("from_json", &parse_model, py::arg("text"))
      .def("to_json", &serialize_model)
      .def("total_density", &NetworkModel::total_density)
      .def("__repr__", [](const NetworkModel& model) {
        return "<NetworkModel tiers=" + std::to_string(model.tiers.size()) +
               ">";
      });

  py::class_<PropagationSample>(m, "PropagationSample")
      .def_property_readonly("points", &sample_pairs,
                             "list of (y, mark) pairs, sorted by y")
      .def_property_readonly(
          "tiers",
          [](const PropagationSample& sample) {
            std::vector<int> tiers;
            for (const auto& point : sample.points)
              tiers.push_back(point.mark.tier_index);
            return tiers;
          })
      .def_readonly("s_max", &PropagationSample::s_max)
      .def_readonly("replication", &PropagationSample::replication)
      .def_readonly("truncation_radius", &PropagationSample::truncation_radius)
      .def_readonly("missed_mass_bound",
                    &PropagationSample::missed_mass_bound)
      .def("__len__",
           [](const PropagationSample& sample) { return sample.points.size(); });

  py::class_<IntensityMeasure>(m, "IntensityMeasure")
      .def_static("build", &IntensityMeasure::build, py::arg("model"))
      .def("lambda_", py::overload_cast<double, double>(
                          &IntensityMeasure::lambda, py::const_),
           py::arg("s"), py::arg("t") = kInf)
      .def("lambda_inverse", &IntensityMeasure::lambda_inverse,
           py::arg("value"))
      .def("phi",
           py::overload_cast<double, double, double>(&IntensityMeasure::phi,
                                                     py::const_),
           py::arg("beta_prime"), py::arg("r"), py::arg("t") = kInf)
      .def("mark_cdf", &IntensityMeasure::mark_cdf, py::arg("beta_prime"),
           py::arg("r"), py::arg("t"))
      .def("term_weights", &IntensityMeasure::term_weights,
           py::arg("beta_prime"), py::arg("r"))
      .def("terms", [](const IntensityMeasure& im) {
        std::vector<std::tuple<double, double, double>> rows;
        for (const auto& term : im.terms())
          rows.emplace_back(term.coefficient, term.exponent, term.beta);
        return rows;
      });

  py::class_<IsotropicModel>(m, "IsotropicModel")
      .def_property_readonly("beta_prime", &IsotropicModel::beta_prime)
      .def("phi", &IsotropicModel::phi, py::arg("r"))
      .def("weights", &IsotropicModel::weights, py::arg("r"))
      .def("mark_cdf", &IsotropicModel::mark_cdf, py::arg("r"), py::arg("t"))
      .def("radial_measure", &IsotropicModel::radial_measure, py::arg("R"))
      .def("propagation_lambda",
           py::overload_cast<double, double>(
               &IsotropicModel::propagation_lambda, py::const_),
           py::arg("s"), py::arg("t") = kInf)
      .def("terms", [](const IsotropicModel& iso) {
        std::vector<std::pair<double, double>> rows;
        for (const auto& term : iso.terms()) rows.emplace_back(term.d, term.g);
        return rows;
      });

  m.def("isotropic_representation", &equivalence::isotropic_representation,
        py::arg("model"), py::arg("beta_prime"));
  m.def("homogeneous_density", &equivalence::homogeneous_density,
        py::arg("model"));
  m.def("exponential_replacement_density",
        &equivalence::exponential_replacement_density, py::arg("model"));
  m.def("phi_corrected", &equivalence::phi_corrected, py::arg("iso"),
        py::arg("r"));

  m.def(
      "hata_params",
      [](double base_height_m, double user_height_m, double frequency_mhz,
         const std::string& environment) {
        hata::HataParams params;
        params.base_height_m = base_height_m;
        params.user_height_m = user_height_m;
        params.frequency_mhz = frequency_mhz;
        params.environment = environment;
        const auto result = hata::hata_params(params);
        return py::make_tuple(result.beta, result.A, result.warnings);
      },
      py::arg("base_height_m"), py::arg("user_height_m") = 1.0,
      py::arg("frequency_mhz") = 1800.0,
      py::arg("environment") = "metropolitan-large-city",
      "returns (beta, A, warnings) with distances in km");
  m.def("average_height", &hata::average_height, py::arg("densities"),
        py::arg("heights"));

  py::enum_<simulate::Mode>(m, "Mode")
      .value("SPATIAL_ORIGINAL", simulate::Mode::kSpatialOriginal)
      .value("SPATIAL_ISOTROPIC", simulate::Mode::kSpatialIsotropic)
      .value("DIRECT", simulate::Mode::kDirectPropagation);

  m.def(
      "simulate",
      [](const NetworkModel& model, double s_max, std::uint64_t seed,
         std::uint64_t replications, simulate::Mode mode, double epsilon,
         double beta_prime) {
        simulate::SimPlan plan;
        plan.s_max = s_max;
        plan.master_seed = seed;
        plan.replications = replications;
        plan.mode = mode;
        plan.epsilon = epsilon;
        plan.beta_prime = beta_prime;
        return simulate::replicate(model, plan);
      },
      py::arg("model"), py::arg("s_max"), py::arg("seed") = 0,
      py::arg("replications") = 1,
      py::arg("mode") = simulate::Mode::kSpatialOriginal,
      py::arg("epsilon") = 1e-3, py::arg("beta_prime") = 0.0);

  py::class_<gof::GofReport>(m, "GofReport")
      .def_readonly("method", &gof::GofReport::method)
      .def_readonly("statistic", &gof::GofReport::statistic)
      .def_readonly("p_value", &gof::GofReport::p_value)
      .def_readonly("n_points", &gof::GofReport::n_points)
      .def_readonly("inconclusive", &gof::GofReport::inconclusive)
      .def("to_json", &gof::GofReport::to_json);

  m.def("time_change_ks", &gof::time_change_ks, py::arg("sample"),
        py::arg("intensity"));
  m.def("binned_chi2", &gof::binned_chi2, py::arg("samples"),
        py::arg("intensity"), py::arg("bin_edges"));
  m.def("two_sample_ks", &gof::two_sample_ks, py::arg("a"), py::arg("b"));

  py::enum_<gof::Verdict>(m, "Verdict")
      .value("EQUIVALENT_ANALYTIC", gof::Verdict::kEquivalentAnalytic)
      .value("CONSISTENT_EMPIRICAL", gof::Verdict::kConsistentEmpirical)
      .value("REJECTED", gof::Verdict::kRejected);

  py::class_<gof::EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("verdict", &gof::EquivalenceReport::verdict)
      .def_readonly("max_relative_gap",
                    &gof::EquivalenceReport::max_relative_gap)
      .def("to_json", &gof::EquivalenceReport::to_json);

  m.def(
      "equivalence_verdict",
      [](const NetworkModel& a, const NetworkModel& b, double s_max,
         std::uint64_t seed, std::uint64_t replications) {
        simulate::SimPlan plan;
        plan.s_max = s_max;
        plan.master_seed = seed;
        plan.replications = replications;
        return gof::equivalence_verdict(a, b, plan);
      },
      py::arg("model_a"), py::arg("model_b"), py::arg("s_max") = 10.0,
      py::arg("seed") = 0, py::arg("replications") = 100);
}
