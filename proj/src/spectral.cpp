#include "kkp/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kkp {

namespace {
std::mutex fftw_mutex;  // fftw planning is not thread-safe
}  // namespace

Grid2D::Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 4 || nx % 2 != 0)
        throw std::invalid_argument("nx must be even and >= 4");
    if (ny != 1 && (ny < 2 || ny % 2 != 0))
        throw std::invalid_argument("ny must be 1 (for 1D runs) or even and >= 2");
    if (lx <= 0.0 || ly <= 0.0) throw std::invalid_argument("box lengths must be positive");
}

double Grid2D::kx(int ix) const {
    const int m = ix <= nx / 2 ? ix : ix - nx;
    return 2.0 * std::numbers::pi * m / lx;
}

double Grid2D::ky(int iy) const {
    const int m = iy <= ny / 2 ? iy : iy - ny;
    return 2.0 * std::numbers::pi * m / ly;
}

void SolverConfig::validate() const {
    params.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("t_end must be nonnegative");
    if (snapshot_every < 1) throw std::invalid_argument("snapshot_every must be >= 1");
}

double linear_symbol(const ModelParams& params, double kx, double ky) {
    if (kx == 0.0) return 0.0;
    return params.beta * kx * kx * kx - kx * kx * kx * kx * kx
         + params.sigma * ky * ky / kx;
}

struct SpectralSolver::FftPlans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;

    explicit FftPlans(const Grid2D& g) : n(g.size()) {
        std::lock_guard<std::mutex> lock(fftw_mutex);
        buf = fftw_alloc_complex(n);
        // layout is index(ix, iy) = ix*ny + iy, i.e. x is the slow dimension.
        // FFTW_ESTIMATE: FFTW_MEASURE selects plans by timing, which makes
        // repeated runs differ in roundoff; estimated plans are reproducible.
        fwd = fftw_plan_dft_2d(g.nx, g.ny, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_2d(g.nx, g.ny, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~FftPlans() {
        std::lock_guard<std::mutex> lock(fftw_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
};

SpectralSolver::SpectralSolver(const Grid2D& grid, const SolverConfig& config)
    : grid_(grid), config_(config) {
    config_.validate();
    symbol_.resize(grid_.size());
    dealias_.resize(grid_.size());
    for (int ix = 0; ix < grid_.nx; ++ix) {
        const double kx = grid_.kx(ix);
        const int mx = ix <= grid_.nx / 2 ? ix : grid_.nx - ix;
        for (int iy = 0; iy < grid_.ny; ++iy) {
            const double ky = grid_.ky(iy);
            const int my = iy <= grid_.ny / 2 ? iy : grid_.ny - iy;
            const int i = grid_.index(ix, iy);
            if (config_.mode == SolverMode::kawahara1d)
                symbol_[i] = linear_symbol(config_.params, kx, 0.0);
            else
                symbol_[i] = linear_symbol(config_.params, kx, ky);
            // the unpaired kx-Nyquist column has no conjugate partner; freeze it
            // so the purely imaginary symbol cannot break realness
            if (2 * ix == grid_.nx) symbol_[i] = 0.0;
            dealias_[i] = (3 * mx < grid_.nx && 3 * my < grid_.ny) ? 1 : 0;
        }
    }
    plans_ = std::make_unique<FftPlans>(grid_);
}

SpectralSolver::~SpectralSolver() = default;

void SpectralSolver::project(SpectralField& uhat) const {
    if (config_.mode == SolverMode::kawahara1d) return;
    for (int iy = 1; iy < grid_.ny; ++iy) uhat[grid_.index(0, iy)] = 0.0;
}

SpectralField SpectralSolver::forward(const Field& u) const {
    if (static_cast<int>(u.size()) != grid_.size())
        throw std::invalid_argument("field size does not match grid");
    auto* buf = plans_->buf;
    for (int i = 0; i < grid_.size(); ++i) {
        buf[i][0] = u[i];
        buf[i][1] = 0.0;
    }
    fftw_execute(plans_->fwd);
    SpectralField uhat(grid_.size());
    for (int i = 0; i < grid_.size(); ++i) uhat[i] = {buf[i][0], buf[i][1]};
    project(uhat);
    return uhat;
}

Field SpectralSolver::inverse(const SpectralField& uhat) const {
    if (static_cast<int>(uhat.size()) != grid_.size())
        throw std::invalid_argument("spectral field size does not match grid");
    auto* buf = plans_->buf;
    for (int i = 0; i < grid_.size(); ++i) {
        buf[i][0] = uhat[i].real();
        buf[i][1] = uhat[i].imag();
    }
    fftw_execute(plans_->bwd);
    Field u(grid_.size());
    const double scale = 1.0 / grid_.size();
    for (int i = 0; i < grid_.size(); ++i) u[i] = buf[i][0] * scale;
    return u;
}

double SpectralSolver::max_imag_residue(const SpectralField& uhat) const {
    auto* buf = plans_->buf;
    for (int i = 0; i < grid_.size(); ++i) {
        buf[i][0] = uhat[i].real();
        buf[i][1] = uhat[i].imag();
    }
    fftw_execute(plans_->bwd);
    double m = 0.0;
    const double scale = 1.0 / grid_.size();
    for (int i = 0; i < grid_.size(); ++i) m = std::max(m, std::abs(buf[i][1] * scale));
    return m;
}

SpectralField SpectralSolver::nonlinear_rhs(const SpectralField& uhat) const {
    SpectralField work = uhat;
    if (config_.dealias)
        for (int i = 0; i < grid_.size(); ++i)
            if (!dealias_[i]) work[i] = 0.0;
    Field u = inverse(work);
    for (auto& v : u) v *= v;
    SpectralField u2hat;
    {
        auto* buf = plans_->buf;
        for (int i = 0; i < grid_.size(); ++i) {
            buf[i][0] = u[i];
            buf[i][1] = 0.0;
        }
        fftw_execute(plans_->fwd);
        u2hat.resize(grid_.size());
        for (int i = 0; i < grid_.size(); ++i) u2hat[i] = {buf[i][0], buf[i][1]};
    }
    for (int ix = 0; ix < grid_.nx; ++ix) {
        // zero the unpaired kx-Nyquist derivative (realness), like the symbol
        const double kx = 2 * ix == grid_.nx ? 0.0 : grid_.kx(ix);
        for (int iy = 0; iy < grid_.ny; ++iy) {
            const int i = grid_.index(ix, iy);
            if (config_.dealias && !dealias_[i]) {
                u2hat[i] = 0.0;
                continue;
            }
            u2hat[i] *= std::complex<double>(0.0, -0.5 * kx);
        }
    }
    project(u2hat);
    return u2hat;
}

void SpectralSolver::check_finite(const SpectralField& uhat, double t) const {
    bool bad = false;
    double max_abs = 0.0;
    for (const auto& v : uhat) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            bad = true;
        else
            max_abs = std::max(max_abs, std::abs(v));
    }
    if (bad) {
        std::ostringstream os;
        os << "solution diverged (non-finite spectral coefficient) at t = " << t
           << ", max finite |uhat| = " << max_abs << "; reduce dt or increase resolution";
        throw std::runtime_error(os.str());
    }
}

void SpectralSolver::step_ifrk4(SpectralState& state, double dt, bool with_nonlinearity) const {
    const int n = grid_.size();
    if (static_cast<int>(state.uhat.size()) != n)
        throw std::invalid_argument("state does not match grid");

    std::vector<std::complex<double>> e1(n), e2(n);
    for (int i = 0; i < n; ++i) {
        e1[i] = std::exp(std::complex<double>(0.0, symbol_[i] * dt * 0.5));
        e2[i] = std::exp(std::complex<double>(0.0, symbol_[i] * dt));
    }

    const SpectralField& u0 = state.uhat;
    SpectralField out(n);
    if (!with_nonlinearity) {
        for (int i = 0; i < n; ++i) out[i] = e2[i] * u0[i];
    } else {
        const SpectralField n1 = nonlinear_rhs(u0);

        SpectralField stage(n);
        for (int i = 0; i < n; ++i) stage[i] = e1[i] * (u0[i] + 0.5 * dt * n1[i]);
        SpectralField n2 = nonlinear_rhs(stage);

        for (int i = 0; i < n; ++i) stage[i] = e1[i] * u0[i] + 0.5 * dt * n2[i];
        const SpectralField n3 = nonlinear_rhs(stage);

        for (int i = 0; i < n; ++i) stage[i] = e2[i] * u0[i] + dt * e1[i] * n3[i];
        const SpectralField n4 = nonlinear_rhs(stage);

        for (int i = 0; i < n; ++i) {
            const std::complex<double> acc =
                e2[i] * n1[i] + 2.0 * e1[i] * (n2[i] + n3[i]) + n4[i];
            out[i] = e2[i] * u0[i] + (dt / 6.0) * acc;
        }
    }
    project(out);
    check_finite(out, state.t + dt);
    state.uhat = std::move(out);
    state.t += dt;
}

void SpectralSolver::simulate(SpectralState& state, const SnapshotFn& on_snapshot) const {
    const double t0 = state.t;
    const double span = config_.t_end - t0;
    if (span < 0.0) throw std::invalid_argument("t_end is before the state time");
    const long nsteps = std::lround(span / config_.dt);
    if (std::abs(nsteps * config_.dt - span) > 1e-9 * std::max(1.0, std::abs(span)))
        throw std::invalid_argument("t_end - t0 must be an integer number of dt steps");

    if (on_snapshot) on_snapshot(state);
    for (long s = 1; s <= nsteps; ++s) {
        step_ifrk4(state, config_.dt);
        state.t = t0 + s * config_.dt;  // avoid accumulated roundoff in t
        if (on_snapshot && (s % config_.snapshot_every == 0 || s == nsteps)) on_snapshot(state);
    }
}

InitResult init_line_soliton(const Grid2D& grid, const ModelParams& params, const LineWave& wave,
                             double x0) {
    params.require_soliton();
    if (wave.mu != 0.0) {
        const double winding = wave.mu * grid.ly / grid.lx;
        if (std::abs(winding - std::round(winding)) > 1e-12) {
            std::ostringstream os;
            os << "line soliton not periodic on this box: require mu*ly/lx in Z, got "
               << winding;
            throw std::invalid_argument(os.str());
        }
    }
    InitResult res;
    res.u.resize(grid.size());
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        for (int iy = 0; iy < grid.ny; ++iy) {
            // wrap xi into the principal x-period so the sampled field is the
            // periodic extension of the line (commensurability makes the
            // y-period consistent automatically)
            const double xi = std::remainder(x + wave.mu * grid.y(iy) - x0, grid.lx);
            res.u[grid.index(ix, iy)] = soliton_profile(params, wave, xi);
        }
    }
    // how much the kx=0, ky!=0 projection would remove: the y-variation of the
    // x-averaged field (~0 for a commensurate line soliton)
    Field meanx(grid.ny, 0.0);
    for (int iy = 0; iy < grid.ny; ++iy) {
        double acc = 0.0;
        for (int ix = 0; ix < grid.nx; ++ix) acc += res.u[grid.index(ix, iy)];
        meanx[iy] = acc / grid.nx;
    }
    double mean = 0.0;
    for (double v : meanx) mean += v;
    mean /= grid.ny;
    double norm2 = 0.0;
    for (double v : meanx) norm2 += (v - mean) * (v - mean);
    res.projection_norm = std::sqrt(norm2 * grid.ly / grid.ny);
    return res;
}

}  // namespace kkp
