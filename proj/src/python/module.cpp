#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "isores/fourier.hpp"
#include "isores/hermite.hpp"
#include "isores/invariants.hpp"
#include "isores/moments.hpp"
#include "isores/wavelets.hpp"

namespace py = pybind11;
using namespace isores;

namespace {

py::array_t<cplx> values(const Signal& s) {
    py::array_t<cplx> out(static_cast<py::ssize_t>(s.size()));
    auto v = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < s.size(); ++i) {
        v(static_cast<py::ssize_t>(i)) = s[i];
    }
    return out;
}

py::array_t<double> nodes(const Grid& g) {
    py::array_t<double> out(static_cast<py::ssize_t>(g.size()));
    auto v = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < g.size(); ++i) {
        v(static_cast<py::ssize_t>(i)) = g[i];
    }
    return out;
}

Signal from_array(const Grid& g, py::array_t<cplx, py::array::c_style | py::array::forcecast> a) {
    if (a.ndim() != 1) {
        throw std::invalid_argument("samples must be one-dimensional");
    }
    const cplx* p = a.data();
    return Signal(g, std::vector<cplx>(p, p + a.size()));
}

FourierConvention conv(int sign) { return {sign}; }

py::dict moment_dict(const MomentReport& r) {
    py::dict d;
    d["energy"] = r.energy;
    d["mean_t"] = r.mean_t;
    d["mean_w"] = r.mean_w;
    d["var_t"] = r.var_t;
    d["var_w"] = r.var_w;
    d["m2_t"] = r.m2_t;
    d["m2_w"] = r.m2_w;
    d["delta_t"] = r.delta_t;
    d["delta_w"] = r.delta_w;
    d["gabor_product"] = r.gabor_product;
    d["divergent_t"] = r.divergent_t;
    d["divergent_w"] = r.divergent_w;
    return d;
}

}  // namespace

PYBIND11_MODULE(isores, m) {
    m.doc() = "Fourier eigenfunctions, invariant constructors and time-frequency resolution";
    m.attr("sqrt_two_pi") = sqrt_two_pi;

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, std::size_t>(), py::arg("t_min"), py::arg("t_max"), py::arg("n_points"))
        .def_static("symmetric", &Grid::symmetric, py::arg("half_width"), py::arg("n_points"))
        .def_static("symmetric_with_step", &Grid::symmetric_with_step, py::arg("half_width"), py::arg("step"))
        .def_property_readonly("t_min", &Grid::t_min)
        .def_property_readonly("t_max", &Grid::t_max)
        .def_property_readonly("step", &Grid::step)
        .def_property_readonly("nodes", &nodes)
        .def("__len__", &Grid::size)
        .def("__repr__", [](const Grid& g) {
            std::ostringstream os;
            os << "Grid(" << g.t_min() << ", " << g.t_max() << ", " << g.size() << ")";
            return os.str();
        });

    py::class_<Signal>(m, "Signal")
        .def(py::init(&from_array), py::arg("grid"), py::arg("samples"))
        .def_property_readonly("grid", &Signal::grid)
        .def_property_readonly("values", &values)
        .def_property_readonly("zero", [](const Signal& s) { return s.flags().zero; })
        .def_property_readonly("slow_decay", [](const Signal& s) { return s.flags().slow_decay; })
        .def_property_readonly("form", &Signal::provenance_id)
        .def("__len__", &Signal::size);

    m.def(
        "sample",
        [](const std::string& id, const Grid& g, const std::vector<double>& params) { return sample(id, g, params); },
        py::arg("form"), py::arg("grid"), py::arg("params") = std::vector<double>{});
    m.def("integrate", &integrate);
    m.def("energy", &energy);
    m.def("inner_product", &inner_product);
    m.def("even_part", &even_part);
    m.def("odd_part", &odd_part);

    m.def(
        "transform", [](const Signal& s, int sign) { return transform(s, conv(sign)); }, py::arg("signal"),
        py::arg("kernel_sign") = -1);
    m.def(
        "transform_onto", [](const Signal& s, const Grid& g, int sign) { return transform_onto(s, g, conv(sign)); },
        py::arg("signal"), py::arg("grid"), py::arg("kernel_sign") = -1);
    m.def(
        "iterate", [](const Signal& s, int n, int sign) { return iterate(s, n, conv(sign)); }, py::arg("signal"),
        py::arg("n"), py::arg("kernel_sign") = -1);
    m.def(
        "eigencheck",
        [](const Signal& s, int sign) {
            const EigenReport r = eigencheck(s, conv(sign));
            py::dict d;
            d["eigenvalue"] = r.best_eigenvalue;
            d["quarter_turns"] = r.quarter_turns;
            d["residual"] = r.relative_residual;
            d["second_residual"] = r.second_residual;
            d["residuals"] = std::vector<double>(r.residuals.begin(), r.residuals.end());
            d["is_invariant"] = r.is_invariant;
            return d;
        },
        py::arg("signal"), py::arg("kernel_sign") = -1);

    m.def(
        "hermite_coefficients",
        [](int n) {
            py::list out;
            const py::object to_int = py::module_::import("builtins").attr("int");
            for (const auto& c : hermite(n).coefficients) {
                out.append(to_int(c.str()));
            }
            return out;
        },
        py::arg("n"));
    m.def("rodrigues_check", &rodrigues_check, py::arg("n"));
    m.def(
        "eigenvalue", [](int n, int sign) { return eigenfunction_spec(n, conv(sign)).eigenvalue; }, py::arg("n"),
        py::arg("kernel_sign") = -1);
    m.def("psi", &psi, py::arg("n"), py::arg("grid"));
    m.def("psi_normalized", &psi_normalized, py::arg("n"), py::arg("grid"));
    m.def("ode_residual", &ode_residual, py::arg("signal"), py::arg("kappa"));

    m.def(
        "even_invariant", [](const Signal& f, int sign) { return even_invariant(numeric_pair(f, conv(sign))); },
        py::arg("signal"), py::arg("kernel_sign") = -1);
    m.def(
        "odd_invariant", [](const Signal& f, int sign) { return odd_invariant(numeric_pair(f, conv(sign))); },
        py::arg("signal"), py::arg("kernel_sign") = -1);
    m.def(
        "invariant",
        [](const std::string& name) -> py::object {
            const CatalogEntry e = catalog(name, catalog_default_grid(name));
            if (!e.signal) {
                return py::none();
            }
            return py::cast(*e.signal);
        },
        py::arg("name"), "Sampled catalog invariant, or None for the symbolic one.");

    m.def(
        "moments", [](const Signal& s, int sign) { return moment_dict(moments(s, conv(sign))); }, py::arg("signal"),
        py::arg("kernel_sign") = -1);
    m.def(
        "gabor_product", [](const Signal& s, int sign) { return gabor_product(s, conv(sign)); }, py::arg("signal"),
        py::arg("kernel_sign") = -1);

    m.def("wavelet_names", &wavelet_names);
    m.def("resolution_table", []() {
        py::list rows;
        for (const ResolutionReport& r : table1()) {
            py::dict d;
            d["wavelet"] = r.wavelet;
            d["m2_t"] = r.m2_t;
            d["m2_w"] = r.m2_w;
            d["delta_t"] = r.delta_t;
            d["delta_w"] = r.delta_w;
            d["paper_factor"] = r.paper_factor ? py::cast(*r.paper_factor) : py::none();
            d["equalizing_factor"] = r.equalizing_factor ? py::cast(*r.equalizing_factor) : py::none();
            d["notes"] = r.notes;
            rows.append(d);
        }
        return rows;
    });
    m.def(
        "isoscale",
        [](const Signal& s) {
            const IsoScaleResult r = isoresolution_scale(s);
            return py::make_tuple(r.scaled, r.a);
        },
        py::arg("signal"), "Returns the rescaled signal and the dilation factor a.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in-process: (exit code, stdout, stderr).");
}
