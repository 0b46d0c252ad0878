#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyhopf/cli.hpp"
#include "cyhopf/report.hpp"

namespace py = pybind11;
using namespace cyhopf;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list linking_list(const GenericDatum& d) {
  py::list out;
  for (const auto& [a, b] : d.data().linking) out.append(py::make_tuple(a, b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Calabi-Yau decisions for pointed Hopf algebras of finite Cartan type";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", base.ptr());
  py::register_exception<CartanError>(m, "CartanError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  py::class_<Monomial>(m, "Monomial")
      .def(py::init([](const std::string& text) { return Monomial::parse(text); }), py::arg("text") = "1")
      .def_property_readonly("sign", &Monomial::sign)
      .def("exponent", [](const Monomial& x, const std::string& name) { return x.exponent(name).to_string(); })
      .def("is_one", &Monomial::is_one)
      .def("is_root_of_unity", &Monomial::is_root_of_unity)
      .def("inverse", &Monomial::inverse)
      .def("__pow__", [](const Monomial& x, std::int64_t n) { return x.pow(n); })
      .def("__mul__", [](const Monomial& a, const Monomial& b) { return a * b; })
      .def("__truediv__", [](const Monomial& a, const Monomial& b) { return a / b; })
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__hash__", [](const Monomial& x) { return py::hash(py::str(x.to_string())); })
      .def("__str__", &Monomial::to_string)
      .def("__repr__", [](const Monomial& x) { return "Monomial('" + x.to_string() + "')"; });

  py::class_<GenericDatum>(m, "Datum")
      .def_static("from_text", [](const std::string& text) { return validate_datum(parse_datum(text)); })
      .def_static("from_file", [](const std::string& path) { return validate_datum(read_datum_file(path)); })
      .def_property_readonly("group_rank", &GenericDatum::s)
      .def_property_readonly("theta", &GenericDatum::theta)
      .def_property_readonly("cartan", [](const GenericDatum& d) { return d.data().cartan; })
      .def_property_readonly("g", [](const GenericDatum& d) { return d.data().g; })
      .def_property_readonly("chi", [](const GenericDatum& d) { return d.data().chi; })
      .def_property_readonly("linking", &linking_list)
      .def("q", &GenericDatum::q, py::arg("i"), py::arg("j"))
      .def("to_text", [](const GenericDatum& d) { return format_datum(d.data()); })
      .def("to_dict", [](const GenericDatum& d) { return to_python(Json(d.data())); })
      .def("__eq__", [](const GenericDatum& a, const GenericDatum& b) { return a.data() == b.data(); })
      .def("__repr__", [](const GenericDatum& d) {
        return "<Datum s=" + std::to_string(d.s()) + " theta=" + std::to_string(d.theta()) + ">";
      });

  m.def("violations", [](const std::string& text) { return datum_violations(parse_datum(text)); }, py::arg("text"),
        "Violated conditions of a datum in the text format; empty if valid.");
  m.def("roots", [](const std::string& cartan) {
    return to_python(root_system_json(root_system(CartanMatrix::validate(parse_cartan(cartan)))));
  }, py::arg("cartan"));

  m.def("gldim", py::overload_cast<const GenericDatum&>(&gldim));
  m.def("integral_character", py::overload_cast<const GenericDatum&>(&integral_character));
  m.def("s2_inner", &s2_inner);
  m.def("coeff_identity_check", py::overload_cast<const GenericDatum&>(&coeff_identity_check));
  m.def("is_cy_U", [](const GenericDatum& d) { return to_python(Json(is_cy_U(d))); });
  m.def("is_cy_nichols", [](const GenericDatum& d) { return to_python(Json(is_cy_nichols(d))); });

  m.def("find_isomorphism", [](const GenericDatum& a, const GenericDatum& b, std::int64_t bound) {
    IsomorphismOptions opts;
    opts.bound = bound;
    return to_python(Json(find_isomorphism(a, b, opts)));
  }, py::arg("a"), py::arg("b"), py::arg("bound") = 8);
  m.def("canonicalize_group_data", [](const GenericDatum& d) {
    const auto t = canonicalize_group_data(d);
    Json j = Json::object();
    j["datum"] = t.datum;
    j["witness"] = t.witness;
    return to_python(j);
  });
  m.def("classify", [](const GenericDatum& d) { return to_python(Json(classify(d))); });
  m.def("classify_group_algebra", [](std::size_t s) { return to_python(Json(classify_group_algebra(s))); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    const auto r = cli::run_args(args);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
