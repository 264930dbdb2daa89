#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <mexlab/cli.hpp>
#include <mexlab/combinat.hpp>
#include <mexlab/qfactory.hpp>
#include <mexlab/report_json.hpp>
#include <mexlab/verify.hpp>

namespace py = pybind11;
using namespace mexlab;

namespace
{

MexVariant variant_arg(const std::string &name)
{
    const auto v = parse_variant(name);
    if (!v) {
        throw std::invalid_argument("unknown variant '" + name + "' (nonoverlined | overlined | all)");
    }
    return *v;
}

py::int_ to_py(const BigInt &x)
{
    return py::int_(py::str(x.get_str()));
}

py::list coefficients(const Series &s)
{
    py::list out;
    for (const auto &c : s.coeffs()) {
        out.append(to_py(c));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_mexlab, m)
{
    m.doc() = "Minimal excludant statistics of overpartitions";

    py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_ValueError);

    m.def("sigma_mex", [](const std::string &variant, std::size_t n_max) {
        return coefficients(sigma_mex_gf(variant_arg(variant), n_max));
    }, py::arg("variant"), py::arg("n_max"), "sigma-mex values for n = 0..n_max");

    m.def("mex_counts", [](const std::string &variant, std::size_t m, std::size_t n_max) {
        return coefficients(mex_count_gf(variant_arg(variant), m, n_max));
    }, py::arg("variant"), py::arg("m"), py::arg("n_max"), "number of overpartitions of n with mex m, n = 0..n_max");

    m.def("overpartition_counts", [](std::size_t n_max) { return coefficients(overpartition_gf(n_max)); },
          py::arg("n_max"));
    m.def("ramanujan_sigma", [](std::size_t n_max) { return coefficients(ramanujan_sigma(n_max)); }, py::arg("n_max"));

    m.def("sigma_mex_oracle", [](unsigned n, const std::string &variant, unsigned limit) {
        const auto v = variant_arg(variant);
        BigInt sum;
        {
            py::gil_scoped_release release;
            sum = sigma_mex_oracle(n, v, limit);
        }
        return to_py(sum);
    }, py::arg("n"), py::arg("variant"), py::arg("limit") = default_oracle_limit);

    py::class_<PartGroup>(m, "PartGroup")
        .def_readonly("part", &PartGroup::part)
        .def_readonly("count", &PartGroup::count)
        .def_readonly("overlined", &PartGroup::overlined)
        .def("__repr__", [](const PartGroup &g) {
            return "PartGroup(part=" + std::to_string(g.part) + ", count=" + std::to_string(g.count)
                   + ", overlined=" + (g.overlined ? "True" : "False") + ")";
        });

    py::class_<Overpartition>(m, "Overpartition")
        .def_property_readonly("groups", &Overpartition::groups)
        .def_property_readonly("weight", &Overpartition::weight)
        .def_property_readonly("underlying", [](const Overpartition &pi) { return pi.underlying().to_string(); })
        .def("mex", [](const Overpartition &pi, const std::string &variant) { return pi.mex(variant_arg(variant)); },
             py::arg("variant"))
        .def("__str__", &Overpartition::to_string)
        .def("__repr__", [](const Overpartition &pi) { return "Overpartition('" + pi.to_string() + "')"; })
        .def(py::self == py::self);

    m.def("enumerate_overpartitions", &enumerate_overpartitions, py::arg("n"), py::arg("limit") = default_oracle_limit);
    m.def("overpartitions_from_multiset", &overpartitions_from_multiset, py::arg("parts"));

    m.def("_run_suite_json", [](std::optional<std::string> only, std::size_t identity_order) {
        SuiteConfig c;
        c.identity_order = identity_order;
        std::vector<VerifyReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_suite(c, only);
        }
        std::string out;
        for (const auto &r : reports) {
            out += to_json(r).dump() + "\n";
        }
        return out;
    }, py::arg("only") = py::none(), py::arg("identity_order") = 2000);

    m.def("_run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
