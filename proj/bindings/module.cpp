#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kkp/ansatz.hpp"
#include "kkp/claws.hpp"
#include "kkp/config.hpp"
#include "kkp/diagnostics.hpp"
#include "kkp/model.hpp"
#include "kkp/spectral.hpp"
#include "kkp/stability.hpp"

namespace py = pybind11;
using namespace kkp;

namespace {

FTriple ftriple_by_name(const std::string& name) {
    for (FTriple& f : FTriple::builtins())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown f (use \"1\", \"t\" or \"t2\"): " + name);
}

Generator generator_by_name(const std::string& name) {
    if (name == "X1") return Generator::X1;
    if (name == "X2") return Generator::X2;
    if (name == "X3") return Generator::X3;
    throw std::invalid_argument("unknown generator (use X1, X2 or X3): " + name);
}

py::dict record_to_dict(const DiagnosticsRecord& r) {
    py::dict d;
    d["t"] = r.t;
    d["M"] = r.M;
    d["My"] = r.My;
    d["Px"] = r.Px;
    d["Py"] = r.Py;
    d["E"] = r.E;
    d["Mx"] = r.Mx;
    d["Pxy"] = r.Pxy;
    d["chi_M"] = r.chi_M ? py::object(py::float_(*r.chi_M)) : py::object(py::none());
    py::dict aux;
    for (const auto& [k, v] : r.aux) aux[py::str(k)] = v;
    d["aux"] = aux;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kkp, m) {
    m.doc() = "Kawahara-KP soliton laboratory";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double beta, int sigma) {
                 ModelParams p{beta, sigma};
                 p.validate();
                 return p;
             }),
             py::arg("beta"), py::arg("sigma"))
        .def_readonly("beta", &ModelParams::beta)
        .def_readonly("sigma", &ModelParams::sigma);

    py::class_<LineWave>(m, "LineWave")
        .def(py::init<const ModelParams&, double, double>(), py::arg("params"), py::arg("mu"),
             py::arg("nu"))
        .def_readonly("mu", &LineWave::mu)
        .def_readonly("nu", &LineWave::nu)
        .def_readonly("kappa", &LineWave::kappa)
        .def_readonly("r", &LineWave::r)
        .def_readonly("q", &LineWave::q)
        .def_readonly("p", &LineWave::p)
        .def_readonly("c", &LineWave::c)
        .def_readonly("theta", &LineWave::theta);

    m.def("soliton_profile", &soliton_profile, py::arg("params"), py::arg("wave"),
          py::arg("xi"));
    m.def("profile_derivative", &profile_derivative, py::arg("params"), py::arg("wave"),
          py::arg("order"), py::arg("xi"));
    m.def("potential_profile", &potential_profile, py::arg("params"), py::arg("wave"),
          py::arg("xi"));
    m.def("zero_background_nu", &zero_background_nu, py::arg("params"), py::arg("mu"));
    m.def("c_of_theta", &c_of_theta, py::arg("params"), py::arg("theta"));

    m.def("balance_degree", &balance_degree);
    m.def("linear_symbol", &linear_symbol, py::arg("params"), py::arg("kx"), py::arg("ky"));

    m.def("verify_ansatz", [](int n_beta, int n_kappa) {
        std::vector<Rational> betas, kappas;
        for (int i = 1; i <= n_beta; ++i) betas.push_back(Rational(-i, i % 3 + 1));
        for (int i = 0; i < n_kappa; ++i) kappas.push_back(Rational(2 * i - 3, i + 1));
        const FamilyReport rep = verify_family(betas, kappas);
        bool c1_all = true, c2_all = true;
        for (const auto& cc : rep.constants) {
            c1_all = c1_all && cc.c1_match;
            c2_all = c2_all && cc.c2_match;
        }
        py::dict d;
        d["all_zero"] = rep.all_zero;
        d["degree_bounds_met"] = rep.degree_bounds_met;
        d["samples"] = rep.samples.size();
        d["c1_matches_literature"] = c1_all;
        d["c2_matches_literature"] = c2_all;
        {
            std::ostringstream c1, c2;
            c1 << rep.constants.front().c1_derived;
            c2 << rep.constants.front().c2_derived;
            d["c1_example"] = c1.str();
            d["c2_example"] = c2.str();
        }
        return d;
    }, py::arg("n_beta") = 10, py::arg("n_kappa") = 5);

    m.def("rescaled_ode_check", [] {
        const RescaledOdeReport rep = rescaled_ode_check();
        return py::make_tuple(rep.residual_as_printed.str(), rep.residual_with_linear.str());
    });
    m.def("rescaled_symbol", &rescaled_symbol, py::arg("k"));

    m.def("claw_divergence_residual",
          [](int claw_id, const std::string& f, const ModelParams& params, const LineWave& wave,
             double x, double y, double t, double h) {
              return claw_divergence_residual(claw_id, ftriple_by_name(f), params, wave, x, y, t,
                                              h);
          },
          py::arg("claw_id"), py::arg("f"), py::arg("params"), py::arg("wave"), py::arg("x"),
          py::arg("y"), py::arg("t"), py::arg("h"));

    m.def("topological_charge",
          [](int charge_id, const ModelParams& params, const LineWave& wave, double x0,
             double x1, double y0, double y1, double t, int n) {
              return topological_charge(charge_id, params, wave, {x0, x1, y0, y1}, t, n);
          },
          py::arg("charge_id"), py::arg("params"), py::arg("wave"), py::arg("x0"), py::arg("x1"),
          py::arg("y0"), py::arg("y1"), py::arg("t"), py::arg("n") = 4096);

    m.def("symmetry_action_check",
          [](const std::string& gen, const std::string& f, double epsilon,
             const ModelParams& params, const LineWave& wave, int n_points) {
              const SymmetryReport rep = symmetry_action_check(
                  generator_by_name(gen), ftriple_by_name(f), epsilon, params, wave, n_points);
              py::dict d;
              d["max_residual"] = rep.max_residual;
              d["points"] = rep.points;
              if (rep.has_frame_check) {
                  d["frame_velocity"] = py::make_tuple(rep.frame_vx, rep.frame_vy);
                  d["expected_velocity"] = py::make_tuple(rep.expected_vx, rep.expected_vy);
              }
              return d;
          },
          py::arg("generator"), py::arg("f"), py::arg("epsilon"), py::arg("params"),
          py::arg("wave"), py::arg("n_points") = 200);

    m.def("stability_integral", [](int n, double L) {
        const StabilityReport rep = stability_integral(n, L);
        py::dict d;
        d["I"] = rep.I;
        d["projected_mean"] = rep.projected_mean;
        d["min_symbol"] = rep.min_symbol;
        d["symbol_positive"] = rep.symbol_positive;
        d["caveat"] = rep.caveat;
        return d;
    }, py::arg("n") = 16384, py::arg("L") = 100.0);

    m.def("simulate", [](const std::string& config_text) {
        RunConfig cfg = parse_config_text(config_text);
        const Grid2D grid = cfg.grid();
        const SpectralSolver solver(grid, cfg.solver_config());
        const LineWave wave = cfg.line_wave();
        const InitResult init = init_line_soliton(grid, cfg.params, wave, cfg.x0);

        SpectralState state;
        state.grid = grid;
        state.uhat = solver.forward(init.u);

        py::list diagnostics;
        solver.simulate(state, [&](const SpectralState& s) {
            diagnostics.append(record_to_dict(conserved_integrals(solver, s)));
        });

        py::dict d;
        d["diagnostics"] = diagnostics;
        d["final_t"] = state.t;
        d["final_u"] = solver.inverse(state.uhat);
        d["nx"] = grid.nx;
        d["ny"] = grid.ny;
        d["projection_norm"] = init.projection_norm;
        return d;
    }, py::arg("config_text"));
}
