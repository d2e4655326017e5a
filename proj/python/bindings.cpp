#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"
#include "skewlab/hermitian.hpp"
#include "skewlab/inequality.hpp"
#include "skewlab/io.hpp"
#include "skewlab/skew.hpp"
#include "skewlab/states.hpp"

namespace py = pybind11;
using namespace skewlab;

namespace {

using CArray = py::array_t<complex_t, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw DimensionError("expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<complex_t>(a.data(), a.data() + n * n));
}

CArray to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew informations, uncertainty relations and their randomized verification";

  auto base = py::register_exception<Error>(m, "SkewlabError", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<NotHermitianError>(m, "NotHermitianError", base.ptr());
  py::register_exception<StateError>(m, "StateError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());

  m.def("eig_hermitian", [](const CArray& a) {
    const SpectralDecomposition s = eig_hermitian(to_matrix(a));
    return py::make_tuple(s.eigenvalues, to_array(s.eigenvectors));
  }, py::arg("matrix"), "Ascending eigenvalues and unitary eigenvectors (columns).");

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", [](const DensityMatrix& d) { return to_array(d.matrix()); })
      .def_property_readonly("eigenvalues", &DensityMatrix::eigenvalues)
      .def_property_readonly("eigen_floor", &DensityMatrix::eigen_floor)
      .def("power", [](const DensityMatrix& d, double a) { return to_array(d.power(a)); });

  m.def("density", [](const CArray& a, double floor) { return validate_density(to_matrix(a), floor); },
        py::arg("matrix"), py::arg("eigen_floor") = 0.0);

  py::class_<Observable>(m, "Observable")
      .def(py::init([](const CArray& a) { return Observable(to_matrix(a)); }), py::arg("matrix"))
      .def_property_readonly("dim", &Observable::dim)
      .def_property_readonly("matrix", [](const Observable& o) { return to_array(o.matrix()); });

  m.def("pauli", [](const std::string& name) { return pauli(name); }, py::arg("name"));

  py::class_<SkewParams>(m, "SkewParams")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("alpha", &SkewParams::alpha)
      .def_property_readonly("beta", &SkewParams::beta)
      .def_property_readonly("region", [](const SkewParams& p) { return std::string(to_string(p.region())); })
      .def("__repr__", [](const SkewParams& p) {
        return "SkewParams(" + io::format_double(p.alpha()) + ", " + io::format_double(p.beta()) + ")";
      });

  m.def("variance", &variance, py::arg("rho"), py::arg("h"));
  m.def("covariance", &covariance, py::arg("rho"), py::arg("a"), py::arg("b"));
  m.def("skew_I", &skew_I, py::arg("rho"), py::arg("h"), py::arg("params"));
  m.def("skew_J", &skew_J, py::arg("rho"), py::arg("h"), py::arg("params"));
  m.def("u_geo", &u_geo, py::arg("rho"), py::arg("h"), py::arg("params"));
  m.def("u_luo", &u_luo, py::arg("rho"), py::arg("h"), py::arg("alpha"));
  m.def("dyson_I", &dyson_I, py::arg("rho"), py::arg("h"), py::arg("alpha"));
  m.def("dyson_J", &dyson_J, py::arg("rho"), py::arg("h"), py::arg("alpha"));
  m.def("report", [](const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
    return json_loads(io::report_to_json(report(rho, h, p)));
  }, py::arg("rho"), py::arg("h"), py::arg("params"));

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("name", &Verdict::name)
      .def_readonly("lhs", &Verdict::lhs)
      .def_readonly("rhs", &Verdict::rhs)
      .def_readonly("slack", &Verdict::slack)
      .def_readonly("holds", &Verdict::holds)
      .def_readonly("tol", &Verdict::tol)
      .def_readonly("asserted", &Verdict::asserted)
      .def("to_json", [](const Verdict& v) { return io::verdict_to_json(v); })
      .def("__repr__", [](const Verdict& v) { return "Verdict(" + io::verdict_to_json(v) + ")"; });

  m.def("check_heisenberg", &check_heisenberg);
  m.def("check_schrodinger", &check_schrodinger);
  m.def("check_luo", &check_luo);
  m.def("check_wy_naive", &check_wy_naive);
  m.def("check_thm21", &check_thm21, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("alpha"));
  m.def("check_thm31", &check_thm31, py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("params"));
  m.def("check_chain", &check_chain, py::arg("rho"), py::arg("h"), py::arg("alpha"));
  m.def("scalar_lemma33", &scalar_lemma33, py::arg("t"), py::arg("alpha"), py::arg("beta"));
  m.def("scalar_prior", &scalar_prior, py::arg("p"), py::arg("s"));
  m.def("scalar_f", [](double t, double k) { return scalar_f(t, k).verdict; }, py::arg("t"), py::arg("k"));

  m.def("run_trials", [](const std::string& target, std::vector<std::size_t> dims, std::size_t trials,
                         std::uint64_t seed, const std::string& region, double floor, unsigned threads) {
    TrialConfig cfg;
    cfg.target = parse_target(target);
    cfg.dims = std::move(dims);
    cfg.trials_per_dim = trials;
    cfg.seed = seed;
    cfg.region = parse_param_region(region);
    cfg.eigen_floor = floor;
    cfg.threads = threads;
    TrialAggregate agg;
    {
      py::gil_scoped_release release;
      agg = run_trials(cfg);
    }
    return json_loads(io::aggregate_to_json(agg));
  }, py::arg("target"), py::arg("dims"), py::arg("trials") = 10000, py::arg("seed") = 0,
     py::arg("region") = "asserted", py::arg("eigen_floor") = 1e-6, py::arg("threads") = 1);

  m.def("hunt", [](const std::string& target, std::size_t dim, std::size_t max_trials, std::uint64_t seed,
                   const std::string& region, double floor) -> py::object {
    HuntConfig cfg;
    cfg.target = parse_target(target);
    cfg.dim = dim;
    cfg.max_trials = max_trials;
    cfg.seed = seed;
    cfg.region = parse_param_region(region);
    cfg.eigen_floor = floor;
    std::optional<TrialRecord> found;
    {
      py::gil_scoped_release release;
      found = hunt(cfg);
    }
    if (!found) return py::none();
    return json_loads(io::trial_record_to_json(*found));
  }, py::arg("target"), py::arg("dim") = 2, py::arg("max_trials") = 100000, py::arg("seed") = 0,
     py::arg("region") = "asserted", py::arg("eigen_floor") = 1e-6);

  m.def("replay", [](const std::string& record_json) { return replay(io::parse_trial_record(record_json)); },
        py::arg("record_json"), "Re-evaluates a serialized trial record from its witness.");

  m.def("sweep_csv", [](std::vector<double> alpha_grid, std::vector<double> beta_grid,
                        std::vector<std::size_t> dims, std::size_t trials, std::uint64_t seed,
                        bool fixture, unsigned threads) {
    SweepConfig cfg;
    cfg.alpha_grid = std::move(alpha_grid);
    cfg.beta_grid = std::move(beta_grid);
    cfg.dims = std::move(dims);
    cfg.trials_per_cell = trials;
    cfg.seed = seed;
    cfg.include_fixture = fixture;
    cfg.threads = threads;
    py::gil_scoped_release release;
    return io::sweep_to_csv(sweep(cfg));
  }, py::arg("alpha_grid"), py::arg("beta_grid"), py::arg("dims") = std::vector<std::size_t>{2},
     py::arg("trials") = 100, py::arg("seed") = 0, py::arg("fixture") = false, py::arg("threads") = 1);

  m.def("scalar_suite", [](std::uint64_t seed) {
    ScalarSuiteConfig cfg;
    cfg.seed = seed;
    return json_loads(io::scalar_suite_to_json(run_scalar_suite(cfg)));
  }, py::arg("seed") = 0);

  m.def("load_matrix", [](const std::string& path) { return to_array(io::load_matrix(path)); });
  m.def("matrix_to_json", [](const CArray& a) { return io::matrix_to_json(to_matrix(a)); });
}
