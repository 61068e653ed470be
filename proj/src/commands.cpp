#include "kkp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "kkp/ansatz.hpp"
#include "kkp/claws.hpp"
#include "kkp/diagnostics.hpp"
#include "kkp/output.hpp"
#include "kkp/stability.hpp"

namespace kkp {

namespace fs = std::filesystem;

int max_threads() {
    const char* env = std::getenv("KKP_THREADS");
    if (!env || !*env) return 0;
    const int v = std::atoi(env);
    if (v < 1) throw std::invalid_argument("KKP_THREADS must be a positive integer");
    return v;
}

namespace {

std::string out_path(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir.empty() ? "." : out_dir);
    return (fs::path(out_dir.empty() ? "." : out_dir) / name).string();
}

}  // namespace

int cmd_soliton(const SolitonOptions& opt, const std::string& out_dir, std::ostream& log) {
    if (opt.n < 2) throw std::invalid_argument("need at least 2 xi samples");
    std::vector<std::string> header = {"xi"};
    std::vector<std::pair<ModelParams, LineWave>> waves;
    for (double beta : opt.betas) {
        ModelParams params{beta, 1};
        params.require_soliton();
        const double nu = opt.zero_background ? zero_background_nu(params, 0.0) : opt.kappa;
        waves.emplace_back(params, LineWave(params, 0.0, nu));  // mu = 0: kappa = nu
        header.push_back("U_beta=" + format_double(beta));
    }
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < opt.n; ++i) {
        const double xi = opt.xi_min + (opt.xi_max - opt.xi_min) * i / (opt.n - 1);
        std::vector<double> row = {xi};
        for (const auto& [params, wave] : waves)
            row.push_back(soliton_profile(params, wave, xi));
        rows.push_back(std::move(row));
    }
    write_file_atomic(out_path(out_dir, "soliton.csv"), csv_table(header, rows));
    for (const auto& [params, wave] : waves)
        log << "beta=" << format_double(params.beta) << " kappa=" << format_double(wave.kappa)
            << " p=" << format_double(wave.p) << " q=" << format_double(wave.q)
            << " r=" << format_double(wave.r) << "\n";
    log << "wrote soliton.csv (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_kinematics(const KinematicsOptions& opt, const std::string& out_dir, std::ostream& log) {
    if (opt.n < 2) throw std::invalid_argument("need at least 2 theta samples");
    if (!(opt.theta_max > 0.0) || opt.theta_max >= std::asin(1.0) * 2.0)
        throw std::invalid_argument("theta_max must lie in (0, pi/2)");
    std::vector<std::string> header = {"theta"};
    std::vector<ModelParams> models;
    for (double g : opt.b2) {
        if (!(g > 0.0)) throw std::invalid_argument("(6 beta/13)^2 values must be positive");
        models.push_back({-13.0 * std::sqrt(g) / 6.0, opt.sigma});
        header.push_back("c_b2=" + format_double(g));
    }
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < opt.n; ++i) {
        const double theta = -opt.theta_max + 2.0 * opt.theta_max * i / (opt.n - 1);
        std::vector<double> row = {theta};
        for (const auto& params : models) row.push_back(c_of_theta(params, theta));
        rows.push_back(std::move(row));
    }
    write_file_atomic(out_path(out_dir, "kinematics.csv"), csv_table(header, rows));
    log << "wrote kinematics.csv (" << rows.size() << " rows, sigma=" << opt.sigma << ")\n";
    return 0;
}

int cmd_verify_ansatz(std::ostream& log) {
    log << "tanh-method balance degree: " << balance_degree() << " (expected 4)\n";

    std::vector<Rational> betas;
    for (int i = 1; i <= 10; ++i) betas.push_back(Rational(-i, i % 3 + 1));
    std::vector<Rational> kappas = {Rational(0), Rational(8), Rational(-5), Rational(36, 169),
                                    Rational(-7, 3)};
    const FamilyReport rep = verify_family(betas, kappas);
    log << "family residuals: " << rep.samples.size() << " (beta, kappa) members, "
        << (rep.all_zero ? "all exactly zero" : "NONZERO RESIDUAL FOUND") << "\n";
    log << "sample coverage certifies the identity in all beta < 0, kappa: "
        << (rep.degree_bounds_met ? "yes" : "no") << " (" << rep.beta_count << " beta, "
        << rep.kappa_count << " kappa)\n";

    bool c1_all = true, c2_all = true;
    for (const auto& cc : rep.constants) {
        c1_all = c1_all && cc.c1_match;
        c2_all = c2_all && cc.c2_match;
    }
    const auto& cc = rep.constants.front();
    log << "derived constants at beta=" << cc.beta << ", kappa=" << cc.kappa << ":\n"
        << "  C1 = p^2/2 - kappa p          = " << cc.c1_derived << "\n"
        << "  C2 = p^3/6 - kappa p^2/2 - C1 p = " << cc.c2_derived << "\n"
        << "literature comparison: C1 " << (c1_all ? "matches" : "DIFFERS (opposite sign)")
        << ", C2 " << (c2_all ? "matches" : "DIFFERS (missing a factor of kappa + 36(2m)^4)")
        << "\n";
    if (!c1_all || !c2_all)
        log << "note: the derived values are forced by the |xi|->inf background limit and make "
            << "the third-order ODE residual vanish identically; the literature expressions do "
            << "not.\n";

    const RescaledOdeReport ode = rescaled_ode_check();
    log << "rescaled ODE, printed form residual: "
        << (ode.residual_as_printed.is_zero() ? "0" : ode.residual_as_printed.str()) << "\n";
    log << "rescaled ODE with the (12/35) U linear term restored: "
        << (ode.residual_with_linear.is_zero() ? "exactly zero" : "NONZERO") << "\n";

    std::vector<double> ks;
    for (int i = 1; i <= 2000; ++i) ks.push_back(0.01 * i);
    const SymbolReport sym = fourier_symbol_positivity(ks);
    log << "Fourier symbol s(k)=k^4/1680+13k^2/420: min over sampled k != 0 is "
        << format_double(sym.min_value) << " at k=" << format_double(sym.min_at_k)
        << (sym.all_positive ? " (positive)" : " (NOT positive)") << ", s(0)="
        << format_double(sym.value_at_zero) << "\n";

    const bool pass = rep.all_zero && rep.degree_bounds_met
                   && ode.residual_with_linear.is_zero() && sym.all_positive;
    log << (pass ? "verify-ansatz: PASS\n" : "verify-ansatz: FAIL\n");
    return pass ? 0 : 1;
}

int cmd_verify_claws(const std::string& out_dir, std::ostream& log) {
    const ModelParams params{-13.0 / 16.0, 1};
    const LineWave wave(params, 2.0, 3.0);
    const std::vector<double> hs = {4e-2, 2e-2, 1e-2, 5e-3, 2.5e-3, 1.25e-3};
    const double x = 0.3, y = -0.4, t = 0.7;

    std::vector<std::string> header = {"claw", "f_index", "h", "residual", "observed_order"};
    std::vector<std::vector<double>> rows;
    bool pass = true;
    log << "claw  f    min|residual|  max order   verdict\n";
    for (int claw = 1; claw <= 5; ++claw) {
        int f_index = 0;
        for (const FTriple& f : FTriple::builtins()) {
            ++f_index;
            std::vector<double> res;
            for (double h : hs)
                res.push_back(std::abs(
                    claw_divergence_residual(claw, f, params, wave, x, y, t, h)));
            double best_order = 0.0, min_res = res[0];
            for (size_t i = 0; i + 1 < res.size(); ++i) {
                min_res = std::min(min_res, res[i + 1]);
                if (res[i + 1] > 0.0 && res[i] > 0.0)
                    best_order = std::max(best_order, std::log2(res[i] / res[i + 1]));
                rows.push_back({double(claw), double(f_index), hs[i], res[i],
                                res[i + 1] > 0.0 ? std::log2(res[i] / res[i + 1]) : 0.0});
            }
            rows.push_back({double(claw), double(f_index), hs.back(), res.back(), 0.0});
            const bool ok = best_order >= 3.5 && min_res <= 1e-7;
            pass = pass && ok;
            log << "  " << claw << "   " << f.name << (f.name.size() == 1 ? "  " : " ")
                << "  " << format_double(min_res) << "  " << format_double(best_order)
                << "  " << (ok ? "ok" : "FAIL") << "\n";
        }
    }
    write_file_atomic(out_path(out_dir, "claws.csv"), csv_table(header, rows));
    log << (pass ? "verify-claws: PASS\n" : "verify-claws: FAIL\n");
    return pass ? 0 : 1;
}

int cmd_stability(const StabilityOptions& opt, const std::string& out_dir, std::ostream& log) {
    std::vector<std::string> header = {"n", "L", "I", "projected_mean", "min_symbol"};
    std::vector<std::vector<double>> rows;
    bool pass = true;
    std::string caveat;
    for (double L : opt.lengths) {
        const StabilityReport rep = stability_integral(opt.n, L);
        pass = pass && rep.symbol_positive;
        caveat = rep.caveat;
        rows.push_back({double(rep.n), rep.L, rep.I, rep.projected_mean, rep.min_symbol});
        log << "n=" << rep.n << " L=" << format_double(rep.L)
            << ": I=" << format_double(rep.I)
            << " projected_mean=" << format_double(rep.projected_mean)
            << " min_symbol=" << format_double(rep.min_symbol)
            << (rep.symbol_positive ? " (>0)" : " (NOT >0)") << "\n";
    }
    write_file_atomic(out_path(out_dir, "stability.csv"), csv_table(header, rows));
    log << "caveat: " << caveat << "\n";
    log << (pass ? "stability: PASS (symbol positivity)\n" : "stability: FAIL\n");
    return pass ? 0 : 1;
}

int cmd_simulate(RunConfig config, const std::string& out_dir, std::ostream& log) {
    config.validate();
    const Grid2D grid = config.grid();
    const SpectralSolver solver(grid, config.solver_config());
    const LineWave wave = config.line_wave();
    const InitResult init = init_line_soliton(grid, config.params, wave, config.x0);

    {
        std::ostringstream m;
        m << "beta = " << format_double(config.params.beta) << "\n"
          << "sigma = " << config.params.sigma << "\n"
          << "mode = " << (config.mode == SolverMode::kkp2d ? "kkp2d" : "kawahara1d") << "\n"
          << "nx = " << config.nx << "\nny = " << config.ny << "\n"
          << "lx = " << format_double(config.lx) << "\nly = " << format_double(config.ly) << "\n"
          << "dt = " << format_double(config.dt) << "\n"
          << "t_end = " << format_double(config.t_end) << "\n"
          << "snapshot_every = " << config.snapshot_every << "\n"
          << "dealias = " << (config.dealias ? "true" : "false") << "\n"
          << "mu = " << format_double(config.mu) << "\nnu = " << format_double(config.nu) << "\n"
          << "x0 = " << format_double(config.x0) << "\n"
          << "# derived\n"
          << "kappa = " << format_double(wave.kappa) << "\n"
          << "r = " << format_double(wave.r) << "\n"
          << "p = " << format_double(wave.p) << "\n"
          << "q = " << format_double(wave.q) << "\n"
          << "c = " << format_double(wave.c) << "\n"
          << "theta = " << format_double(wave.theta) << "\n"
          << "projection_norm = " << format_double(init.projection_norm) << "\n";
        write_file_atomic(out_path(out_dir, "run_manifest.txt"), m.str());
    }

    std::vector<std::string> header = {"t", "M", "My", "Px", "Py", "E", "chi_M", "Pxy"};
    std::vector<std::string> aux_keys;
    std::vector<std::vector<double>> rows;
    size_t snapshot_counter = 0;

    SpectralState state;
    state.grid = grid;
    state.t = 0.0;
    state.uhat = solver.forward(init.u);

    solver.simulate(state, [&](const SpectralState& s) {
        const DiagnosticsRecord rec = conserved_integrals(solver, s);
        if (aux_keys.empty())
            for (const auto& [k, v] : rec.aux) aux_keys.push_back(k);
        std::vector<double> row = {rec.t,  rec.M, rec.My,
                                   rec.Px, rec.Py, rec.E,
                                   rec.chi_M ? *rec.chi_M : std::nan(""), rec.Pxy};
        for (const auto& k : aux_keys) row.push_back(rec.aux.at(k));
        rows.push_back(std::move(row));

        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%04zu", snapshot_counter++);
        write_snapshot(out_path(out_dir, name), grid, s.t, solver.inverse(s.uhat));
    });

    for (const auto& k : aux_keys) header.push_back(k);
    write_file_atomic(out_path(out_dir, "diagnostics.csv"), csv_table(header, rows));
    log << "simulate: " << rows.size() << " diagnostics rows, " << snapshot_counter
        << " snapshots, final t=" << format_double(state.t) << "\n";
    return 0;
}

}  // namespace kkp
