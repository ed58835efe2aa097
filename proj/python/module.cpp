#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "cli.hpp"
#include "fracjet/error.hpp"
#include "fracjet/fodesolve.hpp"
#include "fracjet/fracops.hpp"
#include "fracjet/jet.hpp"
#include "fracjet/lagrangians.hpp"
#include "fracjet/models.hpp"
#include "fracjet/specfun.hpp"
#include "fracjet/varcalc.hpp"

namespace py = pybind11;
using namespace fracjet;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vec(const Array& a) {
  if (a.ndim() != 1) throw DomainError("expected a one-dimensional array");
  return {a.data(), a.data() + a.size()};
}

Array to_array(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw DomainError("side must be 'left' or 'right'");
}

CoefficientSet parse_set(const std::string& s) {
  if (s == "normalized") return CoefficientSet::normalized;
  if (s == "paper") return CoefficientSet::paper;
  throw DomainError("coefficients must be 'normalized' or 'paper'");
}

Variant parse_variant(const std::string& s) {
  if (s == "classical") return Variant::classical;
  if (s == "fractional") return Variant::fractional;
  throw DomainError("variant must be 'classical' or 'fractional'");
}

std::function<double(double)> wrap(const std::optional<py::function>& f) {
  if (!f) return {};
  py::function fn = *f;
  return [fn](double t) {
    py::gil_scoped_acquire gil;
    return fn(t).cast<double>();
  };
}

Lagrangian catalog_lagrangian(const std::string& name, const std::map<std::string, double>& coeffs,
                              std::optional<double> alpha, const std::string& coefficients,
                              const std::optional<py::function>& forcing) {
  LagrangianSpec spec;
  spec.coeffs = coeffs;
  spec.alpha = alpha;
  spec.set = parse_set(coefficients);
  spec.forcing = wrap(forcing);
  return make_lagrangian(name, spec);
}

py::dict report_dict(const SolveReport& r) {
  py::dict d;
  std::vector<double> t(r.solution.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = r.solution.t(j);
  d["t"] = to_array(t);
  d["x"] = to_array(r.solution.values());
  if (r.velocity) d["v"] = to_array(r.velocity->values());
  d["max_defect"] = r.max_defect;
  d["steps"] = r.steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fractional jet calculus: derivatives, jets, Lagrangians and FDE solvers";
  m.attr("__version__") = cli::kVersion;

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", PyExc_ValueError);
  static py::exception<NumericalError> numerical(m, "NumericalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const NumericalError& e) {
      py::set_error(numerical, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("gamma", &fracjet::gamma, py::arg("x"));
  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def(
      "mittag_leffler",
      [](double alpha, double z, double tol) {
        MLParams p;
        p.alpha = alpha;
        p.tol = tol;
        return mittag_leffler(p, z);
      },
      py::arg("alpha"), py::arg("z"), py::arg("tol") = 1e-14);

  m.def(
      "gl_weights", [](double mu, std::size_t count) { return to_array(gl_weights(mu, count)); }, py::arg("mu"),
      py::arg("count"));

  m.def(
      "frac_deriv",
      [](const Array& values, double h, double alpha, const std::string& side, double t0) {
        const SampledPath x(t0, h, to_vec(values));
        return to_array(frac_deriv(x, FracOrder(alpha), parse_side(side)).values());
      },
      py::arg("values"), py::arg("h"), py::arg("alpha"), py::arg("side") = "left", py::arg("t0") = 0.0,
      "Grunwald-Letnikov derivative of uniformly sampled values; constants map to zero.");

  m.def(
      "frac_integral",
      [](const Array& values, double h, double order) {
        return to_array(frac_integral(SampledPath(0.0, h, to_vec(values)), order).values());
      },
      py::arg("values"), py::arg("h"), py::arg("order"));

  m.def(
      "ibp_residual",
      [](const Array& f1, const Array& f2, double h, double alpha) {
        return ibp_residual(SampledPath(0.0, h, to_vec(f1)), SampledPath(0.0, h, to_vec(f2)), FracOrder(alpha))
            .residual;
      },
      py::arg("f1"), py::arg("f2"), py::arg("h"), py::arg("alpha"));

  m.def(
      "lift",
      [](const Array& values, double h, double alpha, int k, double t0) {
        const auto traj = lift(SampledPath(t0, h, to_vec(values)), alpha, k);
        Array out({static_cast<py::ssize_t>(k), static_cast<py::ssize_t>(traj.size())});
        auto r = out.mutable_unchecked<2>();
        for (int a = 1; a <= k; ++a) {
          for (std::size_t j = 0; j < traj.size(); ++j) r(a - 1, static_cast<py::ssize_t>(j)) = traj.jet(a, 0)[j];
        }
        return out;
      },
      py::arg("values"), py::arg("h"), py::arg("alpha"), py::arg("k"), py::arg("t0") = 0.0,
      "Jet levels y1..yk of a sampled path, shape (k, n).");

  m.def(
      "taylor_reconstruct",
      [](double x0, const std::vector<double>& jets, double alpha, double t) {
        JetPoint p(0.0, {x0}, jets, static_cast<int>(jets.size()));
        return taylor_reconstruct(p, alpha, t)[0];
      },
      py::arg("x0"), py::arg("jets"), py::arg("alpha"), py::arg("t"));

  m.def("lagrangian_names", &lagrangian_names);

  m.def(
      "action",
      [](const std::string& name, const Array& values, double h, const std::map<std::string, double>& coeffs,
         std::optional<double> alpha, const std::string& coefficients, std::optional<py::function> forcing) {
        const auto L = catalog_lagrangian(name, coeffs, alpha, coefficients, forcing);
        return action(L, lift(SampledPath(0.0, h, to_vec(values)), L.alpha(), L.order()));
      },
      py::arg("lagrangian"), py::arg("values"), py::arg("h"), py::arg("coeffs") = std::map<std::string, double>{},
      py::arg("alpha") = py::none(), py::arg("coefficients") = "normalized", py::arg("forcing") = py::none());

  m.def(
      "el_residual",
      [](const std::string& name, const Array& values, double h, const std::map<std::string, double>& coeffs,
         std::optional<double> alpha, const std::string& coefficients, std::optional<py::function> forcing,
         const std::string& variant) {
        const auto L = catalog_lagrangian(name, coeffs, alpha, coefficients, forcing);
        const auto rep =
            el_residual(L, lift(SampledPath(0.0, h, to_vec(values)), L.alpha(), L.order()), parse_variant(variant));
        py::dict d;
        d["residual"] = to_array(rep.residual.front().values());
        d["norm_inf"] = rep.norm_inf;
        d["first_interior"] = rep.first_interior;
        d["last_interior"] = rep.last_interior;
        return d;
      },
      py::arg("lagrangian"), py::arg("values"), py::arg("h"), py::arg("coeffs") = std::map<std::string, double>{},
      py::arg("alpha") = py::none(), py::arg("coefficients") = "normalized", py::arg("forcing") = py::none(),
      py::arg("variant") = "classical");

  m.def(
      "solve_multiterm",
      [](const std::vector<std::pair<double, double>>& terms, double c0, const py::function& forcing, double T,
         double h) {
        MultiTermFDE fde;
        for (const auto& [c, mu] : terms) fde.terms.push_back({c, FracOrder(mu)});
        fde.zero_order_coeff = c0;
        fde.forcing = wrap(forcing);
        fde.T = T;
        return report_dict(solve_multiterm(fde, h));
      },
      py::arg("terms"), py::arg("c0"), py::arg("forcing"), py::arg("T"), py::arg("h"),
      "terms: [(coefficient, order), ...]; zero initial state.");

  m.def(
      "solve_fode2",
      [](double alpha, const py::function& rhs, double x0, double v0, double T, double h) {
        FODE2 f;
        f.alpha = alpha;
        py::function fn = rhs;
        f.rhs = [fn](double t, double x, double v) { return fn(t, x, v).cast<double>(); };
        f.x0 = x0;
        f.v0 = v0;
        f.T = T;
        return report_dict(solve_fode2(f, h));
      },
      py::arg("alpha"), py::arg("rhs"), py::arg("x0"), py::arg("v0"), py::arg("T"), py::arg("h"));

  m.def(
      "models",
      [] {
        py::list out;
        for (const auto& mi : model_catalog()) {
          py::dict d;
          d["name"] = mi.name;
          d["classical_form"] = mi.classical_form;
          d["fractional_form"] = mi.fractional_form;
          d["parameters"] = mi.parameters;
          d["classical_alpha"] = mi.classical_alpha;
          out.append(d);
        }
        return out;
      });

  m.def(
      "solve_model",
      [](const std::string& name, const std::map<std::string, double>& params, double T, double h,
         std::optional<double> alpha, std::optional<py::function> forcing) {
        ModelParams mp;
        mp.values = params;
        mp.forcing = wrap(forcing);
        mp.T = T;
        auto inst = instantiate_model(name, mp, alpha);
        const double x0 = params.count("x0") ? params.at("x0") : 0.0;
        const double v0 = params.count("v0") ? params.at("v0") : 0.0;
        if (auto* fde = std::get_if<MultiTermFDE>(&inst); fde && (x0 != 0.0 || v0 != 0.0)) {
          auto pair = as_fode2(*fde, x0, v0);
          if (!pair) throw DomainError("non-zero initial data needs a model with orders {2b, b}");
          inst = *pair;
        }
        return std::visit(
            [h](const auto& eq) {
              if constexpr (std::is_same_v<std::decay_t<decltype(eq)>, MultiTermFDE>) {
                return report_dict(solve_multiterm(eq, h));
              } else {
                return report_dict(solve_fode2(eq, h));
              }
            },
            inst);
      },
      py::arg("name"), py::arg("params") = std::map<std::string, double>{}, py::arg("T") = 1.0,
      py::arg("h") = 1.0 / 1024, py::arg("alpha") = py::none(), py::arg("forcing") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
