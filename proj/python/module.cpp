// Python bindings: JSON-shaped inputs and outputs, converted through the json module.
#include "nilgeom/pipeline.hpp"
#include "nilgeom/trunc_ring.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace nilgeom;

namespace {

json to_cpp(const py::object& o)
{
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object to_py(const json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_nilgeom, m)
{
    m.doc() = "Exact construction and verification of metric germs with parallel structures";

    py::register_exception<nilgeom::Error>(m, "NilgeomError", PyExc_ValueError);

    m.def(
        "trunc_mul",
        [](const std::string& a, const std::string& b, int order) {
            return (TruncScalar::parse(a, order) * TruncScalar::parse(b, order)).to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("order"), "product in R[nu]/(nu^order), e.g. trunc_mul('1 + 1*v', '1 - 1*v', 2)");

    m.def(
        "classify", [](const py::object& payload) { return to_py(classify_pair(to_cpp(payload))); },
        py::arg("payload"), "characteristic signatures of {'g': ..., 'N': ...}");

    m.def(
        "commutant_dim",
        [](const std::string& c, const py::object& shape) { return commutant_dim(c, shape_from_json(to_cpp(shape))); },
        py::arg("case"), py::arg("shape"));

    m.def(
        "cartan_test",
        [](int delta, const std::string& eps) { return to_py(to_json(cartan_character_test(delta, parse_epsilon(eps)))); },
        py::arg("delta"), py::arg("epsilon") = "-1");

    m.def(
        "forge",
        [](const std::string& kind, const py::object& payload, std::uint64_t seed) {
            return to_py(to_json(forge_from_spec(kind, to_cpp(payload), seed)));
        },
        py::arg("kind"), py::arg("payload"), py::arg("seed") = 0);

    m.def(
        "roundtrip",
        [](const std::string& kind, const py::object& payload, std::uint64_t seed, int points, int order) {
            RoundtripResult rt = forge_and_verify(kind, to_cpp(payload), seed, points, order);
            json r = {{"germ", to_json(rt.germ)},
                      {"report", to_json(rt.report)},
                      {"passed", rt.report.all_passed()},
                      {"generic", rt.generic},
                      {"json_roundtrip", rt.json_roundtrip}};
            return to_py(r);
        },
        py::arg("kind"), py::arg("payload"), py::arg("seed") = 0, py::arg("points") = 5, py::arg("holonomy_order") = 1);
}
