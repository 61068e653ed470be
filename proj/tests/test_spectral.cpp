#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kkp/diagnostics.hpp"
#include "kkp/spectral.hpp"

using namespace kkp;

namespace {

SolverConfig basic_config(double beta = -1.0, int sigma = 1, double dt = 0.01) {
    SolverConfig cfg;
    cfg.params = {beta, sigma};
    cfg.dt = dt;
    cfg.t_end = 0.0;
    return cfg;
}

Field random_constrained_field(const SpectralSolver& solver, unsigned seed) {
    const Grid2D& g = solver.grid();
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    Field u(g.size());
    for (auto& v : u) v = dist(rng);
    return solver.inverse(solver.forward(u));  // forward() projects the constraint
}

}  // namespace

TEST_CASE("grid wavenumbers and validation") {
    const Grid2D g(8, 4, 16.0, 8.0);
    const double kx1 = 2.0 * std::numbers::pi / 16.0;
    CHECK(g.kx(0) == 0.0);
    CHECK(g.kx(1) == doctest::Approx(kx1));
    CHECK(g.kx(7) == doctest::Approx(-kx1));
    CHECK(g.ky(3) == doctest::Approx(-2.0 * std::numbers::pi / 8.0));
    CHECK(g.x(4) == doctest::Approx(8.0));
    CHECK_THROWS_AS(Grid2D(7, 4, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(8, 3, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid2D(8, 4, -1.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW(Grid2D(8, 1, 1.0, 1.0));  // 1D reduction
}

TEST_CASE("linear symbol") {
    const ModelParams p{-1.0, 1};
    CHECK(linear_symbol(p, 1.0, 0.0) == doctest::Approx(-2.0));
    CHECK(linear_symbol(p, 0.0, 3.0) == 0.0);
    CHECK(linear_symbol(p, 2.0, 1.0) == doctest::Approx(-39.5));
}

TEST_CASE("transform round trip, realness and constraint") {
    const Grid2D g(32, 16, 10.0, 5.0);
    const SpectralSolver solver(g, basic_config());
    const Field u = random_constrained_field(solver, 1);
    const SpectralField uhat = solver.forward(u);
    for (int iy = 1; iy < g.ny; ++iy) CHECK(std::abs(uhat[g.index(0, iy)]) == 0.0);
    const Field back = solver.inverse(uhat);
    for (int i = 0; i < g.size(); ++i) CHECK(back[i] == doctest::Approx(u[i]).epsilon(1e-12));
    CHECK(solver.max_imag_residue(uhat) <= 1e-12);
}

TEST_CASE("nonlinear rhs of a single cosine") {
    // u = cos(k1 x): -(1/2)(u^2)_x = (k1/2) sin(2 k1 x)
    const Grid2D g(64, 4, 10.0, 4.0);
    const SpectralSolver solver(g, basic_config());
    const double k1 = 2.0 * std::numbers::pi / g.lx;
    Field u(g.size());
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy) u[g.index(ix, iy)] = std::cos(k1 * g.x(ix));
    const Field rhs = solver.inverse(solver.nonlinear_rhs(solver.forward(u)));
    for (int ix = 0; ix < g.nx; ++ix) {
        const double want = 0.5 * k1 * std::sin(2.0 * k1 * g.x(ix));
        CHECK(rhs[g.index(ix, 0)] == doctest::Approx(want).epsilon(1e-10));
    }

    // constant field: zero rhs
    Field c(g.size(), 3.0);
    for (double v : solver.inverse(solver.nonlinear_rhs(solver.forward(c))))
        CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("dealiasing zeroes the top third") {
    const Grid2D g(32, 16, 10.0, 5.0);
    const SpectralSolver solver(g, basic_config());
    const SpectralField rhs = solver.nonlinear_rhs(solver.forward(
        random_constrained_field(solver, 2)));
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy) {
            const int mx = ix <= g.nx / 2 ? ix : g.nx - ix;
            const int my = iy <= g.ny / 2 ? iy : g.ny - iy;
            if (3 * mx >= g.nx || 3 * my >= g.ny)
                CHECK(std::abs(rhs[g.index(ix, iy)]) == 0.0);
        }
}

TEST_CASE("linear propagator is exact and unitary") {
    const Grid2D g(16, 8, 7.0, 3.0);
    const SpectralSolver solver(g, basic_config(-2.0, -1, 0.37));
    SpectralState state;
    state.grid = g;
    state.uhat.assign(g.size(), 0.0);
    const int ix = 3, iy = 2;
    state.uhat[g.index(ix, iy)] = {1.0, 0.5};
    state.uhat[g.index(g.nx - ix, g.ny - iy)] = {1.0, -0.5};  // conjugate partner

    double energy0 = 0.0;
    for (const auto& v : state.uhat) energy0 += std::norm(v);

    const double l = linear_symbol(solver.config().params, g.kx(ix), g.ky(iy));
    const std::complex<double> want =
        std::exp(std::complex<double>(0.0, l * 0.37)) * std::complex<double>(1.0, 0.5);
    solver.step_ifrk4(state, 0.37, /*with_nonlinearity=*/false);
    CHECK(std::abs(state.uhat[g.index(ix, iy)] - want) <= 1e-14);

    double energy1 = 0.0;
    for (const auto& v : state.uhat) energy1 += std::norm(v);
    CHECK(energy1 == doctest::Approx(energy0).epsilon(1e-14));
    CHECK(state.t == doctest::Approx(0.37));
}

TEST_CASE("step preserves constraint, realness and zero field") {
    const Grid2D g(32, 8, 20.0, 6.0);
    const SpectralSolver solver(g, basic_config());
    SpectralState state;
    state.grid = g;
    state.uhat = solver.forward(random_constrained_field(solver, 3));
    for (int s = 0; s < 5; ++s) solver.step_ifrk4(state, 1e-3);
    for (int iy = 1; iy < g.ny; ++iy) CHECK(std::abs(state.uhat[g.index(0, iy)]) == 0.0);
    CHECK(solver.max_imag_residue(state.uhat) <= 1e-12);

    SpectralState zero;
    zero.grid = g;
    zero.uhat.assign(g.size(), 0.0);
    solver.step_ifrk4(zero, 0.01);
    for (const auto& v : zero.uhat) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("line soliton initialization") {
    const ModelParams params{-1.0, 1};

    SUBCASE("mu = 0 is y-independent") {
        const Grid2D g(128, 8, 120.0, 8.0);
        const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));
        const InitResult init = init_line_soliton(g, params, wave, 60.0);
        CHECK(init.projection_norm <= 1e-13);
        for (int ix = 0; ix < g.nx; ++ix)
            for (int iy = 1; iy < g.ny; ++iy)
                CHECK(init.u[g.index(ix, iy)] == init.u[g.index(ix, 0)]);
        CHECK(init.u[g.index(64, 0)]
              == doctest::Approx(soliton_profile(params, wave, 0.0)).epsilon(1e-14));
    }

    SUBCASE("non-commensurate tilt is rejected") {
        const Grid2D g(64, 8, 100.0, 7.0);
        const LineWave wave(params, 0.5, zero_background_nu(params, 0.5));
        CHECK_THROWS_AS(init_line_soliton(g, params, wave, 50.0), std::invalid_argument);
    }

    SUBCASE("commensurate tilt: one box-width per box-height") {
        const Grid2D g(256, 64, 150.0, 150.0);
        const LineWave wave(params, 1.0, zero_background_nu(params, 1.0));
        const InitResult init = init_line_soliton(g, params, wave, 75.0);
        // the x-average per row is y-independent up to the sech tail at the seam
        CHECK(init.projection_norm <= 16.0 * wave.q * std::exp(-wave.r * g.lx / 2.0) * g.lx);
    }

    SUBCASE("nonzero background shifts the mean") {
        const Grid2D g(128, 4, 200.0, 4.0);
        const LineWave wave(params, 0.0, 1.0);  // p != 0
        const InitResult init = init_line_soliton(g, params, wave, 100.0);
        double mean = 0.0;
        for (double v : init.u) mean += v;
        mean /= g.size();
        // mean = p - (soliton deficit)/lx
        CHECK(mean == doctest::Approx(wave.p - 8.0 * wave.q / (3.0 * wave.r * g.lx))
                          .epsilon(1e-6));
    }
}

TEST_CASE("simulate emits snapshots on schedule") {
    const ModelParams params{-1.0, 1};
    const Grid2D g(64, 4, 100.0, 4.0);
    SolverConfig cfg = basic_config();
    cfg.dt = 0.05;
    cfg.t_end = 0.5;
    cfg.snapshot_every = 4;
    const SpectralSolver solver(g, cfg);
    const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));
    SpectralState state;
    state.grid = g;
    state.uhat = solver.forward(init_line_soliton(g, params, wave, 50.0).u);

    std::vector<double> times;
    solver.simulate(state, [&](const SpectralState& s) { times.push_back(s.t); });
    CHECK(times.size() == 4);  // t = 0, 0.2, 0.4, 0.5 (final step always emitted)
    CHECK(times.front() == 0.0);
    CHECK(times[1] == doctest::Approx(0.2));
    CHECK(times.back() == doctest::Approx(0.5));

    SolverConfig bad = cfg;
    bad.t_end = 0.53;  // not an integer number of steps
    const SpectralSolver solver2(g, bad);
    SpectralState s2;
    s2.grid = g;
    s2.uhat = state.uhat;
    s2.t = 0.0;
    CHECK_THROWS_AS(solver2.simulate(s2, nullptr), std::invalid_argument);
}

TEST_CASE("travelling-wave spectral residual is small at adequate resolution") {
    // -nu U' + U U' + beta U''' + U^(5) - sigma mu^2 U' = 0 evaluated spectrally
    const ModelParams params{-1.0, 1};
    const Grid2D g(512, 4, 220.0, 4.0);
    const SpectralSolver solver(g, basic_config());
    const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));
    const SpectralField uhat = solver.forward(init_line_soliton(g, params, wave, 110.0).u);
    const SpectralField nl = solver.nonlinear_rhs(uhat);  // -(1/2)(u^2)_x
    double maxres = 0.0;
    Field lin(g.size());
    SpectralField rhs(g.size());
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy) {
            const int i = g.index(ix, iy);
            const std::complex<double> L(0.0, linear_symbol(params, g.kx(ix), g.ky(iy)));
            // u_t = L u + nl; travelling wave: u_t = -nu u_x
            rhs[i] = L * uhat[i] + nl[i]
                   + wave.nu * std::complex<double>(0.0, g.kx(ix)) * uhat[i];
        }
    for (double v : solver.inverse(rhs)) maxres = std::max(maxres, std::abs(v));
    CHECK(maxres <= 1e-6);
}

TEST_CASE("spatial resolution convergence is spectral") {
    const ModelParams params{-1.0, 1};
    const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));
    // measure the max PDE residual at two resolutions; spectral decay means
    // halving the grid spacing improves the error by far more than 2^k
    auto residual = [&](int nx) {
        const Grid2D g(nx, 4, 160.0, 4.0);
        const SpectralSolver solver(g, basic_config());
        const SpectralField uhat = solver.forward(init_line_soliton(g, params, wave, 80.0).u);
        const SpectralField nl = solver.nonlinear_rhs(uhat);
        SpectralField rhs(g.size());
        for (int ix = 0; ix < g.nx; ++ix)
            for (int iy = 0; iy < g.ny; ++iy) {
                const int i = g.index(ix, iy);
                const std::complex<double> L(0.0, linear_symbol(params, g.kx(ix), g.ky(iy)));
                rhs[i] = L * uhat[i] + nl[i]
                       + wave.nu * std::complex<double>(0.0, g.kx(ix)) * uhat[i];
            }
        double m = 0.0;
        for (double v : solver.inverse(rhs)) m = std::max(m, std::abs(v));
        return m;
    };
    const double coarse = residual(128), fine = residual(256);
    CHECK(coarse / fine > 100.0);
}

TEST_CASE("time stepping order is at least 3.5") {
    const ModelParams params{-1.0, 1};
    const Grid2D g(128, 4, 120.0, 4.0);
    const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));
    const Field u0 = init_line_soliton(g, params, wave, 60.0).u;

    auto run = [&](double dt) {
        SolverConfig cfg = basic_config();
        cfg.dt = dt;
        cfg.t_end = 1.0;
        const SpectralSolver solver(g, cfg);
        SpectralState state;
        state.grid = g;
        state.uhat = solver.forward(u0);
        solver.simulate(state, nullptr);
        return solver.inverse(state.uhat);
    };
    const Field a = run(0.2), b = run(0.1), c = run(0.05);
    double e1 = 0.0, e2 = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        e1 = std::max(e1, std::abs(a[i] - c[i]));
        e2 = std::max(e2, std::abs(b[i] - c[i]));
    }
    // Richardson: errors behave as C dt^p; (a-c)/(b-c) ~ (4^p-1)/(2^p-1)... use
    // the simpler pairwise ratio e(2dt)/e(dt) >= 2^3.5 after removing the
    // shared reference bias factor (1 - 2^-p) ~ 1
    const double order = std::log2(e1 / e2);
    CHECK(order >= 3.5);
}

TEST_CASE("divergence is detected") {
    const Grid2D g(32, 4, 5.0, 4.0);
    SolverConfig cfg = basic_config();
    cfg.dt = 10.0;  // wildly unstable for the nonlinear part
    const SpectralSolver solver(g, cfg);
    SpectralState state;
    state.grid = g;
    Field u(g.size());
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy)
            u[g.index(ix, iy)] = 100.0 * std::sin(2.0 * std::numbers::pi * g.x(ix) / g.lx);
    state.uhat = solver.forward(u);
    CHECK_THROWS_AS(
        [&] {
            for (int s = 0; s < 50; ++s) solver.step_ifrk4(state, cfg.dt);
        }(),
        std::runtime_error);
}

TEST_CASE("kawahara 1d mode matches 2d mu=0 run") {
    const ModelParams params{-1.0, 1};
    const LineWave wave(params, 0.0, zero_background_nu(params, 0.0));

    auto run = [&](SolverMode mode, int ny) {
        const Grid2D g(256, ny, 160.0, ny == 1 ? 1.0 : 4.0);
        SolverConfig cfg = basic_config();
        cfg.dt = 0.01;
        cfg.t_end = 1.0;
        cfg.mode = mode;
        const SpectralSolver solver(g, cfg);
        SpectralState state;
        state.grid = g;
        state.uhat = solver.forward(init_line_soliton(g, params, wave, 80.0).u);
        solver.simulate(state, nullptr);
        return solver.inverse(state.uhat);
    };
    const Field u1 = run(SolverMode::kawahara1d, 1);
    const Field u2 = run(SolverMode::kkp2d, 4);
    const Grid2D g2(256, 4, 160.0, 4.0);
    for (int ix = 0; ix < 256; ++ix)
        CHECK(u1[ix] == doctest::Approx(u2[g2.index(ix, 0)]).epsilon(1e-10));
}
