#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eulertop/cli.hpp"
#include "eulertop/invariants.hpp"
#include "eulertop/normal_form.hpp"
#include "eulertop/numeric_oracle.hpp"
#include "eulertop/radius.hpp"

namespace py = pybind11;
using namespace eulertop;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list poly_list(const KappaPoly& p) {
  py::list out;
  for (const Rational& c : p.coefficients()) out.append(fraction(c));
  return out;
}

py::list series_list(const PowerSeries& s) {
  py::list out;
  for (const KappaPoly& c : s.coefficients()) out.append(poly_list(c));
  return out;
}

py::list hpoly_list(const HPoly& p) {
  py::list out;
  for (const KappaPoly& c : p.coefficients()) out.append(poly_list(c));
  return out;
}

py::dict symbolic_dict(const SymbolicConstant& c) {
  py::dict terms;
  for (Atom a : {Atom::half_log_64_over_k2p4, Atom::inv_pi_atan_inv_rho, Atom::inv_pi_atan_rho, Atom::area_plus,
                 Atom::area_minus}) {
    const Rational k = c.coeff(a);
    if (!is_zero(k)) terms[py::str(std::string(atom_tag(a)))] = fraction(k);
  }
  py::dict out;
  out["terms"] = terms;
  out["constant"] = fraction(c.rational_part());
  return out;
}

QuadratureScheme scheme_from(const std::string& name) {
  if (name == "gauss_legendre") return QuadratureScheme::gauss_legendre;
  if (name == "tanh_sinh") return QuadratureScheme::tanh_sinh;
  throw UsageError("scheme must be gauss_legendre or tanh_sinh");
}

FrobeniusMethod method_from(const std::string& name) {
  if (name == "recursion") return FrobeniusMethod::recursion;
  if (name == "closed_form") return FrobeniusMethod::closed_form;
  throw UsageError("method must be recursion or closed_form");
}

Rational rational_from(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact normal forms, action series and the semi-global invariant of the Euler top";

  static py::exception<Error> base(m, "EulertopError", PyExc_ValueError);
  static py::exception<InternalError> internal(m, "InternalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InternalError& e) {
      internal(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("birkhoff_normal_form", [](int order) { return series_list(birkhoff_normal_form(order)); },
        py::arg("order") = 7, "H*(J) by Lie transform: list over J^n of kappa-coefficient lists (Fractions).");
  m.def("bnf_via_reversion", [](int order) { return series_list(bnf_via_reversion(order)); }, py::arg("order") = 7);
  m.def("alpha_action", [](int order) { return series_list(alpha_action(order)); }, py::arg("order") = 7);

  m.def(
      "frobenius_a",
      [](int n, const std::string& method) {
        py::list out;
        for (const KappaPoly& p : frobenius_a(n, method_from(method))) out.append(poly_list(p));
        return out;
      },
      py::arg("n"), py::arg("method") = "recursion");
  m.def(
      "frobenius_b",
      [](int n, const std::string& method) {
        py::list out;
        for (const KappaPoly& p : frobenius_b(n, method_from(method))) out.append(poly_list(p));
        return out;
      },
      py::arg("n"), py::arg("method") = "recursion");

  m.def("pf_coefficients", [] {
    const PFCoefficients c = derive_pf_coefficients();
    py::dict out;
    out["c0"] = hpoly_list(c.c0);
    out["c1"] = hpoly_list(c.c1);
    out["c2"] = hpoly_list(c.c2);
    out["c3"] = hpoly_list(c.c3);
    return out;
  });

  m.def(
      "sigma",
      [](int order) {
        const InvariantReport r = extract_sigma(order);
        py::dict out;
        out["linear"] = symbolic_dict(r.linear);
        out["tail"] = series_list(r.tail);
        out["area_plus"] = symbolic_dict(r.area_plus);
        out["area_minus"] = symbolic_dict(r.area_minus);
        out["branch_consistent"] = r.branch_consistent;
        return out;
      },
      py::arg("order") = 7);

  m.def(
      "params_from_inertia",
      [](double t1, double t2, double t3, double ell) {
        const TopParams p = params_from_inertia(t1, t2, t3, ell);
        py::dict out;
        out["rho"] = p.rho;
        out["kappa"] = p.kappa;
        out["lambda"] = p.lambda;
        return out;
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("theta3"), py::arg("ell") = 1.0);

  m.def(
      "action_quadrature",
      [](double kappa, double h, double tol, const std::string& scheme) {
        const QuadratureResultT<double> r = action_quadrature(kappa, h, tol, scheme_from(scheme));
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("kappa"), py::arg("h"), py::arg("tol") = 1e-12, py::arg("scheme") = "gauss_legendre",
      "I_beta+(h) for h > 0, I_beta-(h) for h < 0; returns (value, error_estimate).");
  m.def(
      "period_quadrature",
      [](double kappa, double h, double tol, const std::string& scheme) {
        const QuadratureResultT<double> r = period_quadrature(kappa, h, tol, scheme_from(scheme));
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("kappa"), py::arg("h"), py::arg("tol") = 1e-12, py::arg("scheme") = "tanh_sinh");

  m.def(
      "verify",
      [](const py::object& kappa, const std::vector<std::string>& samples, int order, double tol,
         const std::string& scheme) {
        std::vector<Real> hs;
        for (const auto& s : samples) hs.emplace_back(s);
        const VerifyReport r = verify_series_numerics(rational_from(kappa), hs, order, tol, scheme_from(scheme));
        py::list rows;
        for (const VerifyRow& row : r.rows) {
          py::dict d;
          d["h"] = to_string(row.h, 20);
          d["side"] = to_string(row.side);
          d["series"] = to_string(row.series, 40);
          d["quadrature"] = to_string(row.quadrature, 40);
          d["deviation"] = row.deviation;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["max_deviation"] = r.max_deviation;
        out["side_sum_error"] = r.side_sum_error;
        out["area_sum_error"] = r.area_sum_error;
        out["disc_radius"] = r.disc_radius;
        return out;
      },
      py::arg("kappa"), py::arg("samples"), py::arg("order") = 30, py::arg("tol") = 1e-15,
      py::arg("scheme") = "gauss_legendre", "kappa may be a Fraction, int or 'p/q' string.");

  m.def(
      "radius",
      [](const py::object& kappa, int n_max, const std::vector<std::string>& targets) {
        std::vector<RadiusTarget> ts;
        for (const auto& t : targets) {
          const auto rt = radius_target_from_string(t);
          if (!rt) throw UsageError("unknown radius target " + t);
          ts.push_back(*rt);
        }
        py::list out;
        for (const RadiusReport& r : radius_analysis(rational_from(kappa), n_max, ts)) {
          py::dict d;
          d["sequence"] = r.name;
          d["n"] = r.n;
          d["estimates"] = r.estimates;
          d["extrapolated"] = r.extrapolated;
          d["theoretical"] = r.theoretical ? py::cast(*r.theoretical) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("kappa"), py::arg("n_max") = 120,
      py::arg("targets") = std::vector<std::string>{"a-seq", "b-seq", "bnf-seq", "sigma-seq"});

  m.def(
      "pendulum",
      [](const std::vector<double>& kappas) {
        py::list out;
        for (const PendulumRow& r : pendulum_compare(kappas)) {
          py::dict d;
          d["kappa"] = r.kappa;
          d["euler_leading"] = r.euler_leading;
          d["margin"] = r.margin;
          d["above_bound"] = r.above_bound;
          out.append(d);
        }
        return out;
      },
      py::arg("kappas"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"eulertop"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in process; returns (exit_code, stdout, stderr).");
}
