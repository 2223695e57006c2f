#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dihedra/cli.hpp"
#include "dihedra/errors.hpp"
#include "dihedra/serialize.hpp"

namespace py = pybind11;
using namespace dihedra;

namespace {

triples::Triple triple(std::int64_t a1, std::int64_t a2, std::int64_t a3) { return triples::Triple::make(a1, a2, a3); }

std::string sweep_json(const std::vector<std::array<std::int64_t, 3>>& input, int jobs) {
  std::vector<triples::Triple> ts;
  ts.reserve(input.size());
  for (const auto& t : input) ts.push_back(triple(t[0], t[1], t[2]));
  const auto s = serialize::sweep(ts, serialize::resolve_jobs(jobs));
  serialize::json flags = serialize::json::array();
  for (const auto& r : s.records) {
    for (const auto& f : r.flags) flags.push_back(f);
  }
  serialize::json out = {{"triples", s.triples},
                         {"condition_c", s.condition_c},
                         {"equivalence_mismatches", s.equivalence_mismatches},
                         {"count_mismatches", s.count_mismatches},
                         {"simplified_formula_mismatches", s.simplified_mismatches},
                         {"discrepancy_flags", std::move(flags)}};
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact dihedral-triple algebra; every function returns a JSON string";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ConditionError>(m, "ConditionError", PyExc_ValueError);
  py::register_exception<DegenerateLabeling>(m, "DegenerateLabeling", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

  m.def("classify", [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return serialize::classify_record(triple(a, b, c)).dump();
  });
  m.def(
      "count",
      [](std::int64_t a, std::int64_t b, std::int64_t c, bool oracle) {
        return serialize::count_record(triple(a, b, c), oracle).dump();
      },
      py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("oracle") = false);
  m.def("snf", [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return serialize::snf_record(triple(a, b, c)).dump();
  });
  m.def("involutions", [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return serialize::involutions_record(triple(a, b, c)).dump();
  });
  m.def(
      "repr", [](std::int64_t n, bool inventory) { return serialize::repr_record(n, inventory).dump(); },
      py::arg("n"), py::arg("inventory") = false);
  m.def("identity", [](const std::string& a, const std::string& b, const std::string& c) {
    return serialize::identity_record(cyclo::RationalAngle::parse(a), cyclo::RationalAngle::parse(b),
                                      cyclo::RationalAngle::parse(c))
        .dump();
  });
  m.def("witnesses", [](std::int64_t p, std::int64_t q, std::int64_t r) {
    return serialize::witnesses_record(p, q, r).dump();
  });
  m.def("verify", [](std::int64_t p, std::int64_t q, std::int64_t r) {
    return serialize::verify_record(p, q, r).dump();
  });
  m.def(
      "order",
      [](std::int64_t n, std::int64_t k, bool refl, const std::vector<std::int64_t>& v) {
        return serialize::order_record(n, k, refl, std::vector<arith::BigInt>(v.begin(), v.end())).dump();
      },
      py::arg("n"), py::arg("k"), py::arg("refl") = false, py::arg("vec") = std::vector<std::int64_t>{});
  m.def("sweep", &sweep_json, py::arg("triples"), py::arg("jobs") = 0);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
