#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "valleypaths/bijections.hpp"
#include "valleypaths/cli.hpp"
#include "valleypaths/error.hpp"
#include "valleypaths/json_io.hpp"
#include "valleypaths/oracles.hpp"
#include "valleypaths/verify.hpp"

namespace py = pybind11;
using namespace valleypaths;

namespace {

WeightSpec spec_arg(const std::string& name, const ParamMap& params, std::size_t order) {
    return registry_get(name, params, order);
}

std::vector<std::string> strs(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (const Polynomial& p : s.coeffs()) out.push_back(p.str());
    return out;
}

// Objects cross the boundary as JSON text; the Python side decodes them.
std::string apply_map(const std::string& map_name, const std::string& json_text) {
    const MapId map = parse_map(map_name);
    const Json in = parse_json(json_text);
    if (map == MapId::Tau) {
        const TauDecorated t = tau_from_json(in);
        return to_json(t.side == TauSide::Src4372 ? tau_forward(t) : tau_inverse(t)).dump();
    }
    if (in.is_object() && in.contains("steps")) return to_json(inverse(map, path_from_json(in))).dump();
    return to_json(forward(decorated_from_json(in))).dump();
}

std::string decorated_list(const std::string& map_name, int n) {
    const MapId map = parse_map(map_name);
    Json out = Json::array();
    if (map == MapId::Tau) {
        for (const TauDecorated& t : enumerate_tau(n, TauSide::Src4372)) out.push_back(to_json(t));
    } else {
        for (const DecoratedVPath& d : enumerate_decorated(n, map)) out.push_back(to_json(d));
    }
    return out.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact weighted Dyck path computations";

    py::register_exception<Error>(m, "ValleyError", PyExc_ValueError);

    m.def(
        "series",
        [](const std::string& spec, const ParamMap& params, std::size_t order) {
            return strs(spec_v_series(spec_arg(spec, params, order)));
        },
        py::arg("spec"), py::arg("params") = ParamMap{}, py::arg("order") = 12,
        "Coefficients of the generating function as polynomial strings.");
    m.def(
        "count",
        [](const std::string& spec, int n, const ParamMap& params) {
            return weight_sum_v(n, spec_arg(spec, params, static_cast<std::size_t>(std::max(n, 1)))).str();
        },
        py::arg("spec"), py::arg("n"), py::arg("params") = ParamMap{});
    m.def(
        "enumerate",
        [](const std::string& family, int n, const std::string& filter) {
            std::vector<std::string> out;
            for (const Path& p : enumerate_family(parse_family(family), n, parse_filter(filter))) out.push_back(p.str());
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("filter") = "none");
    m.def(
        "render",
        [](const std::string& steps, const std::string& family) {
            return render_ascii(parse_path(steps, parse_family(family)));
        },
        py::arg("steps"), py::arg("family") = "dyck");
    m.def(
        "oracle",
        [](const std::string& name, long n, const ParamMap& params) {
            const auto& names = oracle_names();
            const bool seq = std::find(names.begin(), names.end(), name) != names.end();
            return (seq ? oracle(name, n, params) : formula_vn(name, n, params)).str();
        },
        py::arg("name"), py::arg("n"), py::arg("params") = ParamMap{});
    m.def("decorated", &decorated_list, py::arg("map"), py::arg("n"), "Decorated sources of size n as a JSON array.");
    m.def("apply", &apply_map, py::arg("map"), py::arg("obj"), "Maps a JSON object through the bijection.");
    m.def(
        "verify",
        [](const std::string& suite, int max_n, unsigned jobs) { return to_json(run_verify(suite, max_n, jobs)).dump(); },
        py::arg("suite") = "all", py::arg("max_n") = 6, py::arg("jobs") = 1);
    m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line tool in-process; returns (code, out, err).");
    m.def("suites", &suite_names);
}
