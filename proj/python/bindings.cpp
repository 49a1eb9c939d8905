#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parking/asymptotics.hpp"
#include "parking/exact.hpp"
#include "parking/simulation.hpp"

namespace py = pybind11;

namespace {

// Counts cross the boundary as Python ints via their decimal form.
py::int_ to_py(const parking::Count& c) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(c.to_string().c_str(), nullptr, 10)));
}

py::list to_py(const std::vector<parking::Count>& counts) {
  py::list out;
  for (const auto& c : counts) out.append(to_py(c));
  return out;
}

parking::ParkingParams params(std::int64_t n, std::int64_t m, std::int64_t k) { return {n, m, k}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and asymptotic enumeration of defective parking functions";

  py::register_exception<parking::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("defect_count", [](std::int64_t n, std::int64_t mm, std::int64_t k) {
        return to_py(parking::defect_count_explicit(params(n, mm, k)));
      }, py::arg("n"), py::arg("m"), py::arg("k"),
      "cp(n, m, k) from the closed-form tail sums");
  m.def("defect_count_recurrence", [](std::int64_t n, std::int64_t mm, std::int64_t k) {
        return to_py(parking::defect_count_recurrence(params(n, mm, k)));
      }, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("tail_sum", [](std::int64_t n, std::int64_t mm, std::int64_t k) {
        return to_py(parking::tail_sum(params(n, mm, k)));
      }, py::arg("n"), py::arg("m"), py::arg("k"),
      "S(n, m, k): sequences leaving at least k drivers unparked");
  m.def("tail_sum_alternating", [](std::int64_t n, std::int64_t mm, std::int64_t k) {
        return to_py(parking::tail_sum_alternating(params(n, mm, k)));
      }, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("parking_function_count", [](std::int64_t n, std::int64_t mm) {
        const auto r = parking::parking_function_count(n, mm);
        return py::make_tuple(to_py(r.count), r.status == parking::PollakStatus::ok);
      }, py::arg("n"), py::arg("m"),
      "(count, in_domain) for the all-park count (n+1-m)(n+1)^(m-1)");
  m.def("abel_identity_check", &parking::abel_identity_check, py::arg("a"), py::arg("b"), py::arg("m"));
  m.def("defect_distribution", [](std::int64_t n, std::int64_t mm) {
        return to_py(parking::defect_distribution(n, mm).counts);
      }, py::arg("n"), py::arg("m"));
  m.def("defect_probabilities", [](std::int64_t n, std::int64_t mm) {
        return parking::defect_distribution(n, mm).probabilities();
      }, py::arg("n"), py::arg("m"));

  m.def("park", [](std::int64_t n, std::vector<std::int64_t> choices) {
        const auto out = parking::park(parking::PreferenceSequence(n, std::move(choices)));
        return py::make_tuple(out.assignment, out.defect);
      }, py::arg("n"), py::arg("choices"),
      "(assignment, defect); walked drivers map to None");
  m.def("enumerate_exhaustive", [](std::int64_t n, std::int64_t mm, std::uint64_t cap) {
        return to_py(parking::enumerate_exhaustive(n, mm, cap).counts);
      }, py::arg("n"), py::arg("m"), py::arg("cap") = parking::kDefaultEnumerationCap);
  m.def("sample_empirical", [](std::int64_t n, std::int64_t mm, std::uint64_t trials, std::uint64_t seed) {
        return parking::sample_empirical(n, mm, trials, parking::Seed{seed}).histogram;
      }, py::arg("n"), py::arg("m"), py::arg("trials"), py::arg("seed"),
      py::call_guard<py::gil_scoped_release>());
  m.def("cars_until_full", [](std::int64_t n, std::uint64_t seed) {
        return parking::cars_until_full(n, parking::Seed{seed});
      }, py::arg("n"), py::arg("seed"));

  m.def("tree_function", &parking::tree_function, py::arg("v"));
  m.def("limiting_tail", &parking::limiting_tail, py::arg("x"), py::arg("y"));
  m.def("rayleigh_cdf", &parking::rayleigh_cdf, py::arg("x"));
  m.def("pmf_approx", &parking::pmf_approx, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("limiting_density", &parking::limiting_density, py::arg("x"), py::arg("y"), py::arg("alpha"));
  m.def("density_integral_check", &parking::density_integral_check, py::arg("x"), py::arg("y"));
  m.def("full_lot_limit", &parking::full_lot_limit, py::arg("lam"));
  m.def("full_lot_series", &parking::full_lot_series, py::arg("lam"), py::arg("terms"));
  m.def("phi", &parking::phi, py::arg("ell"), py::arg("k"));
  m.def("defect_ratio_limit", &parking::defect_ratio_limit, py::arg("ell"), py::arg("k"));
}
