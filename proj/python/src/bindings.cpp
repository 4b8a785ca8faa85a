#include "ggl/blowup_chain.hpp"
#include "ggl/canonical.hpp"
#include "ggl/cli.hpp"
#include "ggl/error.hpp"
#include "ggl/herzog.hpp"
#include "ggl/idealization.hpp"
#include "ggl/report.hpp"
#include "ggl/ulrich.hpp"
#include "ggl/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ggl;

namespace {

// Structured results cross the boundary as the CLI's JSON text; the Python
// side turns them into dicts.
std::string dump(const Json& j) { return j.dump(); }

template <class T>
std::string dump_list(const std::vector<T>& items) {
    Json out = Json::array();
    for (const auto& item : items) out.push_back(to_json(item));
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Classifier for numerical semigroup rings";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "GglError", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            // Raised as an instance so that Python code can read `.kind`.
            const py::object& type = error_type.get_stored();
            py::object exc = type(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init<std::vector<int>>(), py::arg("generators"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("conductor", &NumericalSemigroup::conductor)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
        .def_property_readonly("type", &NumericalSemigroup::type)
        .def_property_readonly("pseudo_frobenius", &NumericalSemigroup::pseudo_frobenius)
        .def("is_symmetric", &NumericalSemigroup::is_symmetric)
        .def("apery_set", &NumericalSemigroup::apery_set, py::arg("e"))
        .def("__contains__", [](const NumericalSemigroup& h, long long z) { return h.contains(z); })
        .def("__repr__", &NumericalSemigroup::to_string);

    m.def("_classify", [](const std::vector<int>& gens) { return dump(to_json(classify(NumericalSemigroup(gens)))); });
    m.def("_verify", [](const std::vector<int>& gens) { return dump(to_json(verify_all(NumericalSemigroup(gens)))); });
    m.def("_enumerate_ulrich",
          [](const std::vector<int>& gens) { return dump_list(enumerate_ulrich(NumericalSemigroup(gens))); });
    m.def("_is_ulrich", [](const std::vector<int>& gens, const std::vector<int>& ideal) {
        const auto h = share(NumericalSemigroup(gens));
        return dump(to_json(is_ulrich(RelativeIdeal::from_generators(h, ideal))));
    });
    m.def("trace_is_ulrich", [](const std::vector<int>& gens) { return trace_is_ulrich(NumericalSemigroup(gens)); });
    m.def("_chain", [](const std::vector<int>& gens, int cap) {
        return dump_list(blowup_chain(NumericalSemigroup(gens), cap));
    }, py::arg("gens"), py::arg("cap") = default_step_cap);
    m.def("_herzog", [](int a1, int a2, int a3) {
        const auto hd = herzog_data(a1, a2, a3);
        Json out;
        out["data"] = to_json(hd);
        out["ggl"] = to_json(ggl_by_exponents(hd));
        out["pairs"] = to_json(trace_ulrich_by_pairs(hd));
        return out.dump();
    });
    m.def("family_mult_le5", [](const std::string& family, int alpha, int alpha_p) {
        return family_mult_le5(parse_family(family), alpha, alpha_p);
    });
    m.def("_idealize_conductor",
          [](const std::vector<int>& gens) { return dump(to_json(idealization_of_conductor(share(NumericalSemigroup(gens))))); });
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line interface; returns (status, stdout, stderr).");
}
