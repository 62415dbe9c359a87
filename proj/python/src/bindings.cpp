#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "leeyang/cmv.hpp"
#include "leeyang/dynamics.hpp"
#include "leeyang/error.hpp"
#include "leeyang/io.hpp"
#include "leeyang/ising.hpp"
#include "leeyang/model.hpp"
#include "leeyang/spectral.hpp"
#include "leeyang/szego.hpp"
#include "leeyang/verify.hpp"

namespace py = pybind11;
using namespace leeyang;
using nlohmann::json;

namespace {

CoefficientSequence alphas_of(const std::vector<cplx>& a) { return CoefficientSequence(a); }

spectral::Normalization normalization_of(const std::string& name) { return io::parse_normalization(name); }

}  // namespace

PYBIND11_MODULE(_leeyang, m) {
  m.doc() = "Lee-Yang zeros of one-dimensional Ising chains through CMV matrices.";

  static PyObject* error = py::exception<Error>(m, "LeeyangError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<spectral::EigenphaseList>(m, "EigenphaseList")
      .def(py::init<std::vector<double>, std::size_t, std::vector<double>>(), py::arg("phases"),
           py::arg("chain_length"), py::arg("deviations") = std::vector<double>{})
      .def_property_readonly("phases", &spectral::EigenphaseList::phases)
      .def_property_readonly("deviations", &spectral::EigenphaseList::deviations)
      .def_property_readonly("chain_length", &spectral::EigenphaseList::chain_length)
      .def_property_readonly("max_deviation", &spectral::EigenphaseList::max_deviation)
      .def("__len__", &spectral::EigenphaseList::size)
      .def("__repr__", [](const spectral::EigenphaseList& e) {
        return "<EigenphaseList " + std::to_string(e.size()) + " phases, N=" + std::to_string(e.chain_length()) + ">";
      });

  py::class_<spectral::IDSCurve>(m, "IDSCurve")
      .def("__call__", &spectral::IDSCurve::operator())
      .def("jumps", &spectral::IDSCurve::jumps)
      .def_property_readonly("total_mass", &spectral::IDSCurve::total_mass)
      .def_property_readonly("reference", &spectral::IDSCurve::reference);

  py::class_<spectral::LabelGroup>(m, "LabelGroup")
      .def_static("integers", &spectral::LabelGroup::integers)
      .def_static("rank2", &spectral::LabelGroup::rank2, py::arg("gamma"))
      .def_static("generated", &spectral::LabelGroup::generated, py::arg("generators"))
      .def_property_readonly("generators", &spectral::LabelGroup::generators);

  py::class_<spectral::LabelMatch>(m, "LabelMatch")
      .def_readonly("n", &spectral::LabelMatch::n)
      .def_readonly("m", &spectral::LabelMatch::m)
      .def_readonly("residual", &spectral::LabelMatch::residual)
      .def_readonly("generator_index", &spectral::LabelMatch::generator_index);

  py::class_<spectral::Gap>(m, "Gap")
      .def_readonly("left", &spectral::Gap::left)
      .def_readonly("right", &spectral::Gap::right)
      .def_readonly("length", &spectral::Gap::length)
      .def_readonly("label", &spectral::Gap::label)
      .def_readonly("match", &spectral::Gap::match);

  py::class_<spectral::GapReport>(m, "GapReport")
      .def_readonly("gaps", &spectral::GapReport::gaps)
      .def_readonly("mean_spacing", &spectral::GapReport::mean_spacing)
      .def_readonly("threshold", &spectral::GapReport::threshold);

  py::class_<model::Model>(m, "Model")
      .def_property_readonly("kind", [](const model::Model& x) { return model::to_string(x.spec.kind); })
      .def_property_readonly("pipeline", [](const model::Model& x) { return model::to_string(x.pipeline); })
      .def_property_readonly("alphas",
                             [](const model::Model& x) {
                               return std::vector<cplx>(x.alphas.values().begin(), x.alphas.values().end());
                             })
      .def_property_readonly("couplings",
                             [](const model::Model& x) -> std::optional<std::vector<double>> {
                               if (!x.couplings) return std::nullopt;
                               return std::vector<double>(x.couplings->values().begin(), x.couplings->values().end());
                             })
      .def_property_readonly("label_group", [](const model::Model& x) { return x.group; })
      .def_readonly("precision_bits", &model::Model::precision_bits)
      .def("zeros", [](const model::Model& x) { return model::model_zeros(x); });

  // words and sequences
  m.def("fibonacci_word", [](unsigned k) { return dynamics::fibonacci_word(k).letters(); }, py::arg("k"));
  m.def("cat_map_bits", &dynamics::cat_map_bits, py::arg("n"));
  m.def("skew_shift_bits", &dynamics::skew_shift_bits, py::arg("n"));
  m.def("stationary_vector", &dynamics::stationary_vector, py::arg("P"));

  // Ising side
  m.def("partition_bruteforce",
        [](const std::vector<double>& ps, cplx zeta) { return ising::partition_bruteforce(ps, zeta); },
        py::arg("ps"), py::arg("zeta"));
  m.def("partition_via_trace",
        [](const std::vector<double>& ps, cplx zeta) { return ising::partition_via_trace(ps, zeta); },
        py::arg("ps"), py::arg("zeta"));
  m.def("couplings_to_verblunsky",
        [](const std::vector<double>& ps) {
          const auto a = ising::couplings_to_verblunsky(CouplingSequence(ps));
          return std::vector<cplx>(a.values().begin(), a.values().end());
        },
        py::arg("ps"));

  // CMV and Szego
  m.def("floquet_matrix",
        [](const std::vector<cplx>& a, double theta) { return cmv::floquet_matrix(alphas_of(a), theta).entries(); },
        py::arg("alphas"), py::arg("theta"));
  m.def("band_permutation", [](std::size_t n) { return cmv::band_permutation(n).image(); }, py::arg("n"));
  m.def("banded_floquet_matrix",
        [](const std::vector<cplx>& a, double theta) {
          const auto f = cmv::floquet_matrix(alphas_of(a), theta);
          return cmv::reorder(f, cmv::band_permutation(a.size()));
        },
        py::arg("alphas"), py::arg("theta"));
  m.def("max_offset", [](const cmv::Matrix& x) { return cmv::max_offset(x); }, py::arg("matrix"));
  m.def("discriminant",
        [](const std::vector<cplx>& a, cplx z, bool normalized) {
          return szego::discriminant(alphas_of(a), z,
                                     normalized ? szego::DiscriminantFlavor::Normalized
                                                : szego::DiscriminantFlavor::Unnormalized)
              .value;
        },
        py::arg("alphas"), py::arg("z"), py::arg("normalized") = true);
  m.def("similarity_witness", &szego::similarity_witness, py::arg("beta"), py::arg("zeta"));

  // spectra
  m.def("eigenphases", [](const cmv::Matrix& x) { return spectral::eigenphases(x); }, py::arg("matrix"));
  m.def("lee_yang_zeros", [](const std::vector<double>& ps) { return spectral::lee_yang_zeros(CouplingSequence(ps)); },
        py::arg("ps"));
  m.def("zeros_of_discriminant",
        [](const std::vector<cplx>& a) { return spectral::zeros_of_discriminant(alphas_of(a)); }, py::arg("alphas"));
  m.def("ids",
        [](const spectral::EigenphaseList& z, const std::string& normalization, double reference) {
          return spectral::ids(z, normalization_of(normalization), reference);
        },
        py::arg("zeros"), py::arg("normalization") = "paper", py::arg("reference") = 0.0);
  m.def("match_label", &spectral::match_label, py::arg("label"), py::arg("group"), py::arg("m_max") = 30);
  m.def("detect_gaps",
        [](const spectral::EigenphaseList& z, double multiplier, const std::string& normalization,
           double reference) {
          spectral::GapOptions opt;
          opt.threshold_multiplier = multiplier;
          opt.normalization = normalization_of(normalization);
          opt.reference = reference;
          return spectral::detect_gaps(z, opt);
        },
        py::arg("zeros"), py::arg("multiplier") = 5.0, py::arg("normalization") = "paper",
        py::arg("reference") = 0.0);
  m.def("label_gaps",
        [](spectral::GapReport report, const spectral::LabelGroup& g, int m_max) {
          spectral::label_gaps(report, g, m_max);
          return report;
        },
        py::arg("report"), py::arg("group"), py::arg("m_max") = 30);
  m.def("widest_gaps", &spectral::widest_gaps, py::arg("report"), py::arg("count"));
  m.def("spacings", &spectral::spacings, py::arg("zeros"));
  m.def("gap_histogram",
        [](const spectral::EigenphaseList& z, std::size_t bins) {
          const auto h = spectral::gap_histogram(z, bins);
          return py::make_tuple(h.edges, h.counts);
        },
        py::arg("zeros"), py::arg("bins"));

  // JSON-described models and the verification suite
  m.def("_build_model", [](const std::string& spec) { return model::build_model(io::model_spec_from_json(json::parse(spec))); });
  m.def("_run_verify", [](const std::string& config) {
    return verify::to_json(verify::run_suite(io::run_config_from_json(json::parse(config)))).dump();
  });
}
