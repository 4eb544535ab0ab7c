#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "macmahon/divisor_family.hpp"
#include "macmahon/identities.hpp"
#include "macmahon/quasimodular.hpp"
#include "macmahon/theta.hpp"

namespace py = pybind11;
using namespace macmahon;

namespace {

// Rationals cross the boundary as "p/q" strings so everything stays exact.
Rational rat(const std::string& s) { return parse_rational(s); }

Kind kind_of(const std::string& k) {
    if (k == "A") return Kind::A;
    if (k == "B") return Kind::B;
    throw ValidationError("kind must be 'A' or 'B'");
}

ResidueSet spec_of(std::int64_t n, const std::vector<std::int64_t>& set) {
    return validate(n, set);
}

}  // namespace

PYBIND11_MODULE(_macmahon, m) {
    m.doc() = "Exact q-series engine for generalized sum-of-divisors "
              "generating functions and theta identities";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ReconstructionMismatch>(m, "ReconstructionMismatch",
                                                   PyExc_ArithmeticError);
    py::register_exception<SeriesError>(m, "SeriesError", PyExc_RuntimeError);

    py::class_<BiSeries>(m, "Series")
        .def_static("from_json", &biseries_from_json_string, py::arg("text"))
        .def("to_json", [](const BiSeries& s) { return to_json_string(s); })
        .def("coeff",
             [](const BiSeries& s, const std::string& q, const std::string& z) {
                 return rational_str(s.coeff(rat(q), rat(z)));
             },
             py::arg("qexp"), py::arg("zexp") = "0")
        .def_property_readonly("order",
                               [](const BiSeries& s) { return rational_str(s.order()); })
        .def_property_readonly("is_zero", &BiSeries::is_zero)
        .def("terms",
             [](const BiSeries& s) {
                 std::vector<std::tuple<std::string, std::string, std::string>> out;
                 for (const auto& [k, c] : s.terms())
                     out.emplace_back(rational_str(s.qexp_of(k)), rational_str(s.zexp_of(k)),
                                      rational_str(c));
                 return out;
             })
        .def("__eq__", [](const BiSeries& a, const BiSeries& b) { return a == b; })
        .def("__repr__", [](const BiSeries& s) {
            return "Series(order=" + rational_str(s.order()) + ", terms=" +
                   std::to_string(s.terms().size()) + ")";
        });

    m.def("family",
          [](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& kind,
             std::int64_t kmax, const std::string& order) {
              return macmahon::family(spec_of(n, set), kind_of(kind), kmax, rat(order)).entries;
          },
          py::arg("n"), py::arg("set"), py::arg("kind") = "A", py::arg("kmax") = kmax_auto,
          py::arg("order") = "30");

    m.def("oracle",
          [](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& kind,
             std::int64_t k, std::int64_t mm) {
              return rational_str(coefficient_oracle(spec_of(n, set), kind_of(kind), k, mm));
          },
          py::arg("n"), py::arg("set"), py::arg("kind"), py::arg("k"), py::arg("m"));

    m.def("gen_poly",
          [](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& order) {
              return macmahon::gen_poly(spec_of(n, set), rat(order));
          },
          py::arg("n"), py::arg("set"), py::arg("order") = "30");

    m.def("theta",
          [](const std::string& r, std::int64_t scale, bool is_signed,
             const std::string& order) {
              return theta_series(rat(r), scale, is_signed, rat(order));
          },
          py::arg("r"), py::arg("scale") = 1, py::arg("is_signed") = true,
          py::arg("order") = "10");

    m.def("eta",
          [](std::int64_t scale, const std::string& order) {
              return macmahon::eta(scale, rat(order));
          },
          py::arg("scale") = 1, py::arg("order") = "10");

    auto rep = [](const VerifyReport& r) { return to_json_string(r); };
    m.def("verify_jtp",
          [rep](const std::string& r, const std::string& order) {
              return rep(macmahon::verify_jtp(rat(r), rat(order)));
          },
          py::arg("r"), py::arg("order") = "20");
    m.def("verify_heat",
          [rep](const std::string& r, std::int64_t scale, const std::string& order) {
              return rep(macmahon::verify_heat(rat(r), scale, rat(order)));
          },
          py::arg("r"), py::arg("scale") = 1, py::arg("order") = "20");
    m.def("verify_eta_cubed",
          [rep](const std::string& order) { return rep(macmahon::verify_eta_cubed(rat(order))); },
          py::arg("order") = "20");
    m.def("verify_thm1_odd",
          [rep](const std::string& order) { return rep(macmahon::verify_thm1_odd(rat(order))); },
          py::arg("order") = "15");
    m.def("verify_thm1_even",
          [rep](const std::string& order) { return rep(macmahon::verify_thm1_even(rat(order))); },
          py::arg("order") = "15");
    m.def("verify_product_remark",
          [rep](const std::string& order) {
              return rep(macmahon::verify_product_remark(rat(order)));
          },
          py::arg("order") = "20");
    m.def("verify_thm2",
          [rep](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& order) {
              return rep(macmahon::verify_thm2(spec_of(n, set), rat(order)));
          },
          py::arg("n"), py::arg("set"), py::arg("order") = "15");
    m.def("verify_thm3",
          [rep](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& order) {
              return rep(macmahon::verify_thm3(spec_of(n, set), rat(order)));
          },
          py::arg("n"), py::arg("set"), py::arg("order") = "15");

    m.def("reconstruct",
          [](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& kind,
             std::int64_t kmax, const std::string& order) {
              return to_json_string(
                  macmahon::reconstruct(spec_of(n, set), kind_of(kind), kmax, rat(order)));
          },
          py::arg("n"), py::arg("set"), py::arg("kind") = "A", py::arg("kmax") = 2,
          py::arg("order") = "15");

    m.def("two_path_check",
          [rep](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& kind,
                std::int64_t w, const std::string& order) {
              return rep(macmahon::two_path_check(spec_of(n, set), kind_of(kind), w, rat(order)));
          },
          py::arg("n"), py::arg("set"), py::arg("kind") = "A", py::arg("w") = 1,
          py::arg("order") = "12");

    m.def("kmax_bound",
          [](std::int64_t n, const std::vector<std::int64_t>& set, const std::string& order) {
              return macmahon::kmax_bound(spec_of(n, set), rat(order));
          },
          py::arg("n"), py::arg("set"), py::arg("order"));
}
