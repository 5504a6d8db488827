#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modjac/arith.hpp"
#include "modjac/corresp.hpp"
#include "modjac/verify.hpp"

namespace py = pybind11;
using namespace modjac;

// Forms cross the boundary as the same JSON text the CLI emits.
PYBIND11_MODULE(_core, m) {
  m.doc() = "exact q-expansions for Jacobi forms of index D_r";

  m.def("hurwitz_h", [](long N) { return to_string(hurwitz_h(N)); });
  m.def("cohen_h", [](int k, long N) { return to_string(cohen_h(k, N)); });
  m.def("r3", [](long N) { return r3_table(N).at(N); });
  m.def("kronecker", &kronecker);

  m.def("theta_pow", [](int m_, long prec) { return to_json(theta_pow(m_, prec)); });
  m.def("cohen_eisenstein", [](int k, long prec) { return to_json(cohen_eisenstein(k, prec)); });
  m.def("cohen_star", [](int r, int k, long prec) { return to_json(cohen_star(r, k, prec)); });
  m.def("e_3_2_8", [](long prec) { return to_json(e_3_2_8(prec)); });
  m.def("eta_pow", [](int s, long prec) { return to_json(eta_pow(s, prec)); });
  m.def("jacobi_eisenstein", [](int r, int k, long prec) { return to_json(eisenstein(r, k, prec)); });
  m.def("j_even", [](const std::string& phi) { return to_json(j_even(jacobi_from_json(phi))); });
  m.def("j_odd_inverse", [](const std::string& h, int r, int k) { return to_json(j_odd_inverse(eta_from_json(h), r, k)); });
  m.def("hecke_tj", [](const std::string& phi, long p) { return to_json(hecke_tj(jacobi_from_json(phi), p)); });

  m.def("newforms", [](int twok, long prec) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [f, rec] : newforms(twok, prec)) out.emplace_back(to_json(f), eigen_csv({rec}));
    return out;
  });
  m.def("eigen_chain", [](int r, int k, std::vector<long> primes, long prec) {
    return to_json(eigen_chain_verify(r, k, primes, prec));
  });

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, long bound) {
        SuiteOptions opt;
        opt.bound = bound;
        return to_json(run_suite(name, opt));
      },
      py::arg("name"), py::arg("bound") = 0);

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
