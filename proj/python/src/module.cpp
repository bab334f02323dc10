#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otb/error.hpp"
#include "otb/koszul_betti.hpp"
#include "otb/report.hpp"
#include "otb/resonance.hpp"

namespace py = pybind11;
using namespace otb;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_otb, m) {
  m.doc() = "Orlik-Terao algebras of line arrangements";
  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<VerificationError> verification_error(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const VerificationError& e) {
      verification_error(e.what());
    } catch (const InputError& e) {
      input_error(e.what());
    }
  });

  py::class_<Arrangement>(m, "Arrangement")
      .def_static("builtin", [](const std::string& name) { return builtin_arrangement(name); })
      .def_static("parse", [](const std::string& text) { return parse_arrangement(text); },
                  "JSON document or builtin name")
      .def_static("from_forms",
                  [](const std::vector<std::vector<std::string>>& forms, const std::string& name) {
                    std::vector<LinearForm> fs;
                    for (const auto& f : forms) {
                      if (f.size() != 3) throw InputError("each form needs three coefficients");
                      fs.push_back({parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2])});
                    }
                    return Arrangement(fs, name);
                  },
                  py::arg("forms"), py::arg("name") = "")
      .def_property_readonly("name", &Arrangement::name)
      .def("__len__", &Arrangement::size)
      .def("form", &Arrangement::form_to_string)
      .def("to_json", [](const Arrangement& a) { return arrangement_to_json(a); })
      .def("__repr__", [](const Arrangement& a) {
        return "<Arrangement " + a.name() + " with " + std::to_string(a.size()) + " lines>";
      });

  m.def("builtin_names", &builtin_names);
  m.def("command_names", &command_names);
  m.def(
      "run",
      [](const std::string& command, const Arrangement& a, std::size_t max_circuit_size, std::size_t upto,
         bool verify_regularity, long degree, const std::string& mults, std::size_t k, long max_weight, bool all) {
        CommandOptions o{max_circuit_size, upto, verify_regularity, degree, mults, k, max_weight, all};
        Json r;
        {
          py::gil_scoped_release release;
          r = run_command(command, a, o);
        }
        return r.dump();
      },
      py::arg("command"), py::arg("arrangement"), py::arg("max_circuit_size") = 4, py::arg("upto") = 5,
      py::arg("verify_regularity") = false, py::arg("m") = 0, py::arg("mults") = "", py::arg("k") = 3,
      py::arg("max_weight") = 1, py::arg("all") = false, "Report of a subcommand as a JSON string");
  m.def(
      "betti_table",
      [](const Arrangement& a, bool verify_regularity) {
        BettiOptions o;
        o.verify_regularity = verify_regularity;
        BettiTable t;
        {
          py::gil_scoped_release release;
          t = betti_table(a, o);
        }
        return t.entries;
      },
      py::arg("arrangement"), py::arg("verify_regularity") = false, "{(i, j): b_ij} over nonzero entries");
  m.def("tor_dimension", [](const Arrangement& a, int i, int j) { return tor_dimension(a, i, j); });
  m.def("poincare", [](const Arrangement& a) { return poincare_polynomial(a).coeffs; });
  m.def("h1_dimension", [](const Arrangement& a, const std::vector<std::string>& v) {
    auto r = h1_dimension(a, to_rationals(v));
    return r.dimension;
  });
}
