#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetasphere/errors.hpp"
#include "zetasphere/mero.hpp"
#include "zetasphere/modulus.hpp"
#include "zetasphere/specfun.hpp"
#include "zetasphere/sphere.hpp"
#include "zetasphere/zeros.hpp"
#include "zetasphere/zeta.hpp"

namespace py = pybind11;
using namespace zetasphere;

namespace {

py::object extended(const ExtendedPoint& p) {
  if (p.is_infinite()) return py::none();
  return py::cast(p.value());
}

ExtendedPoint extended(const py::object& o) {
  if (o.is_none()) return ExtendedPoint::infinity();
  return ExtendedPoint(o.cast<Complex>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zeta function evaluation, zero location and Riemann-sphere tools";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<PoleError> pole(m, "PoleError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PoleError& e) {
      py::set_error(pole, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("zeta", &zeta::zeta_eval, py::arg("s"));
  m.def("eta", [](Complex s) { return zeta::eta_eval(s); }, py::arg("s"));
  m.def("completed_zeta", &zeta::completed_zeta, py::arg("s"));
  m.def("functional_factor", &zeta::functional_factor, py::arg("s"));
  m.def("gamma", &specfun::gamma, py::arg("s"));
  m.def("log_gamma", &specfun::log_gamma, py::arg("s"));
  m.def("digamma", &specfun::digamma, py::arg("s"));
  m.def("stieltjes_gamma", &zeta::stieltjes_gamma, py::arg("k"));
  m.def("even_zeta_rational", [](int k) { return zeta::even_zeta_rational(k).str(); }, py::arg("k"),
        "alpha with zeta(k) = alpha*pi^k, as 'p/q'");
  m.def("criterion_ratio", &modulus::criterion_ratio, py::arg("s0"), py::arg("radius") = zeros::kCriterionRadius);

  py::class_<zeros::ZeroRecord>(m, "ZeroRecord")
      .def_readonly("ordinate", &zeros::ZeroRecord::ordinate)
      .def_readonly("bracket", &zeros::ZeroRecord::bracket)
      .def_readonly("residual", &zeros::ZeroRecord::residual)
      .def_readonly("criterion", &zeros::ZeroRecord::criterion)
      .def("__repr__", [](const zeros::ZeroRecord& r) { return "ZeroRecord(" + std::to_string(r.ordinate) + ")"; });
  m.def("z_real", &zeros::z_real, py::arg("t"));
  m.def("scan_zeros", &zeros::scan_zeros, py::arg("t0"), py::arg("t1"), py::arg("step") = 0.25,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "count_zeros_rectangle",
      [](double x0, double x1, double y0, double y1) { return zeros::count_zeros_rectangle({x0, x1, y0, y1}); },
      py::arg("x_min"), py::arg("x_max"), py::arg("y_min"), py::arg("y_max"));

  m.def(
      "stereo_lift",
      [](const py::object& z) {
        const auto p = sphere::stereo_lift(extended(z));
        return py::make_tuple(p.z0, p.w0);
      },
      py::arg("z"), "Point of the sphere as (z0, w0); None stands for infinity");
  m.def(
      "stereo_project", [](Complex z0, double w0) { return extended(sphere::stereo_project({z0, w0})); },
      py::arg("z0"), py::arg("w0"));
  m.def(
      "chordal_distance",
      [](const py::object& a, const py::object& b) { return sphere::chordal_distance(extended(a), extended(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "build_zeta_hat",
      [](double ordinate, Complex anchor) {
        const auto hat = mero::build_zeta_hat(ordinate, anchor);
        py::dict out;
        out["constant"] = hat.map.constant;
        out["zeros"] = hat.map.zeros;
        out["poles"] = hat.map.poles;
        out["degree"] = hat.branch.degree;
        py::list ram;
        for (const auto& [q, e] : hat.branch.ramification) ram.append(py::make_tuple(extended(q), e));
        out["ramification"] = ram;
        out["b"] = hat.branch.total_b;
        return out;
      },
      py::arg("ordinate"), py::arg("anchor"));
}
