#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "pbwos/analytic.hpp"
#include "pbwos/cli.hpp"
#include "pbwos/estimator.hpp"
#include "pbwos/geometry.hpp"
#include "pbwos/rng.hpp"
#include "pbwos/vec3.hpp"
#include "pbwos/walker.hpp"

namespace py = pybind11;
using namespace pbwos;

namespace {

Vec3 vec3_from_sequence(const py::sequence& s) {
    if (py::len(s) != 3) throw std::invalid_argument("a point needs exactly 3 components");
    return {s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
}

std::string vec3_repr(const Vec3& v) {
    std::ostringstream os;
    os << "Vec3(" << v.x << ", " << v.y << ", " << v.z << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Walk-on-spheres solver for the linearized Poisson-Boltzmann equation";

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init(&vec3_from_sequence))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("__repr__", &vec3_repr)
        .def("__eq__", [](const Vec3& a, const Vec3& b) { return a == b; }, py::is_operator())
        .def("__iter__",
             [](const Vec3& v) { return py::iter(py::make_tuple(v.x, v.y, v.z)); });
    py::implicitly_convertible<py::sequence, Vec3>();

    py::class_<Domain>(m, "Domain")
        .def("contains", &Domain::contains, py::arg("p"))
        .def("distance_to_boundary", &Domain::distance_to_boundary, py::arg("p"))
        .def("nearest_boundary_point", &Domain::nearest_boundary_point, py::arg("p"))
        .def("boundary_value", &Domain::boundary_value, py::arg("b"))
        .def("signed_distance", &Domain::signed_distance, py::arg("p"))
        .def("project", &Domain::project, py::arg("p"))
        .def("is_open", &Domain::is_open)
        .def("describe", &Domain::describe)
        .def("__repr__", [](const Domain& d) { return "<Domain " + d.describe() + ">"; });

    py::class_<HalfSpace, Domain>(m, "HalfSpace")
        .def(py::init<double>(), py::arg("psi0") = 1.0);
    py::class_<Slab, Domain>(m, "Slab")
        .def(py::init<double, double, double>(), py::arg("half_width"), py::arg("psi_top") = 1.0,
             py::arg("psi_bottom") = 1.0)
        .def_property_readonly("half_width", &Slab::half_width);
    py::class_<CylinderExterior, Domain>(m, "CylinderExterior")
        .def(py::init<double, double>(), py::arg("radius"), py::arg("psi0") = 1.0)
        .def_property_readonly("radius", &CylinderExterior::radius);
    py::class_<SphereExterior, Domain>(m, "SphereExterior")
        .def(py::init<double, double>(), py::arg("radius"), py::arg("psi0") = 1.0)
        .def_property_readonly("radius", &SphereExterior::radius);
    m.def("make_domain", &make_domain, py::arg("name"), py::arg("param") = 1.0,
          "Build one of the named geometries: half_space, slab, cylinder or sphere");

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("index"))
        .def("next_u64", &RngStream::next_u64)
        .def("uniform", &RngStream::uniform)
        .def("draws", &RngStream::draws);
    m.def("sample_unit_sphere", &sample_unit_sphere<RngStream>, py::arg("rng"),
          "Uniform direction on the unit sphere; consumes two uniforms");
    m.def("derive_seed", &derive_seed, py::arg("seed"), py::arg("salt"));

    py::enum_<Method>(m, "Method")
        .value("NewSurvival", Method::NewSurvival)
        .value("OldWeighted", Method::OldWeighted);

    py::enum_<WalkTermination>(m, "WalkTermination")
        .value("Absorbed", WalkTermination::Absorbed)
        .value("Killed", WalkTermination::Killed)
        .value("Truncated", WalkTermination::Truncated)
        .value("CutOff", WalkTermination::CutOff);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("kappa", &SolverConfig::kappa)
        .def_readwrite("delta", &SolverConfig::delta)
        .def_readwrite("n_walkers", &SolverConfig::n_walkers)
        .def_readwrite("seed", &SolverConfig::seed)
        .def_readwrite("method", &SolverConfig::method)
        .def_readwrite("max_steps", &SolverConfig::max_steps)
        .def_readwrite("cutoff_distance", &SolverConfig::cutoff_distance)
        .def_readwrite("threads", &SolverConfig::threads);

    py::class_<WalkOutcome>(m, "WalkOutcome")
        .def_readonly("kind", &WalkOutcome::kind)
        .def_readonly("boundary_point", &WalkOutcome::boundary_point)
        .def_readonly("steps", &WalkOutcome::steps)
        .def_readonly("weight", &WalkOutcome::weight);

    m.def("survival_probability", &survival_probability, py::arg("d"), py::arg("kappa"),
          "Probability d*kappa/sinh(d*kappa) that a jump of radius d is not killed");
    m.def("validate_config", &validate_config, py::arg("domain"), py::arg("config"));
    m.def("run_walk", &run_walk<RngStream>, py::arg("domain"), py::arg("config"), py::arg("start"),
          py::arg("rng"), "One walk; dispatches on config.method");
    m.def("run_walk_new", &run_walk_new<RngStream>, py::arg("domain"), py::arg("config"),
          py::arg("start"), py::arg("rng"));
    m.def("run_walk_old", &run_walk_old<RngStream>, py::arg("domain"), py::arg("config"),
          py::arg("start"), py::arg("rng"));

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_error", &Estimate::std_error)
        .def_readonly("n_total", &Estimate::n_total)
        .def_readonly("n_survived", &Estimate::n_survived)
        .def_readonly("n_killed", &Estimate::n_killed)
        .def_readonly("n_truncated", &Estimate::n_truncated)
        .def_readonly("n_cutoff", &Estimate::n_cutoff)
        .def_readonly("total_steps", &Estimate::total_steps)
        .def_readonly("wall_time_s", &Estimate::wall_time_s)
        .def("__repr__", [](const Estimate& e) {
            std::ostringstream os;
            os << "<Estimate mean=" << e.mean << " std_error=" << e.std_error << " n=" << e.n_total
               << ">";
            return os.str();
        });

    m.def("estimate", &estimate, py::arg("domain"), py::arg("config"), py::arg("point"),
          py::call_guard<py::gil_scoped_release>(),
          "Monte Carlo estimate of the potential at one point");

    py::class_<DeltaBiasReport>(m, "DeltaBiasReport")
        .def_readonly("coarse", &DeltaBiasReport::coarse)
        .def_readonly("fine", &DeltaBiasReport::fine)
        .def_readonly("difference", &DeltaBiasReport::difference)
        .def_readonly("combined_std_error", &DeltaBiasReport::combined_std_error);
    m.def("delta_bias_check", &delta_bias_check, py::arg("domain"), py::arg("config"),
          py::arg("point"), py::call_guard<py::gil_scoped_release>(),
          "The same estimate at delta and delta/10 with independent seeds");

    py::class_<MethodBench>(m, "MethodBench")
        .def_readonly("method", &MethodBench::method)
        .def_readonly("cpu_time_per_run_s", &MethodBench::cpu_time_per_run_s)
        .def_readonly("variance_of_run_means", &MethodBench::variance_of_run_means)
        .def_readonly("laboriousness", &MethodBench::laboriousness)
        .def_readonly("mean_of_run_means", &MethodBench::mean_of_run_means);
    py::class_<BenchReport>(m, "BenchReport")
        .def_readonly("old_method", &BenchReport::old_method)
        .def_readonly("new_method", &BenchReport::new_method)
        .def_readonly("runs", &BenchReport::runs)
        .def_readonly("n_per_run", &BenchReport::n_per_run);
    m.def("laboriousness", &laboriousness, py::arg("domain"), py::arg("config_new"),
          py::arg("config_old"), py::arg("point"), py::arg("runs"),
          py::call_guard<py::gil_scoped_release>(),
          "Efficiency comparison of the two methods over independent runs");

    m.def("analytic_half_space", &analytic_half_space, py::arg("r"), py::arg("kappa"));
    m.def("analytic_slab", &analytic_slab, py::arg("r"), py::arg("half_width"), py::arg("kappa"));
    m.def("analytic_cylinder", &analytic_cylinder, py::arg("r"), py::arg("radius"), py::arg("kappa"));
    m.def("analytic_sphere", &analytic_sphere, py::arg("r"), py::arg("radius"), py::arg("kappa"));
    m.def("bessel_k0", &bessel_k0, py::arg("x"));

    m.def(
        "cli_main",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli_main(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface in-process; returns (exit_code, stdout, stderr)");
}
