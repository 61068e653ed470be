#ifndef KKP_SPECTRAL_HPP
#define KKP_SPECTRAL_HPP

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "kkp/model.hpp"

namespace kkp {

/// Periodic rectangle [0,lx) x [0,ly) with nx x ny collocation points.
struct Grid2D {
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;

    Grid2D() = default;
    Grid2D(int nx, int ny, double lx, double ly);

    int size() const { return nx * ny; }
    double x(int ix) const { return lx * ix / nx; }
    double y(int iy) const { return ly * iy / ny; }
    double kx(int ix) const;  // signed wavenumber of mode index ix
    double ky(int iy) const;
    int index(int ix, int iy) const { return ix * ny + iy; }  // row-major in x
    double area() const { return lx * ly; }
};

using Field = std::vector<double>;                  // real samples, grid.index layout
using SpectralField = std::vector<std::complex<double>>;

struct SpectralState {
    Grid2D grid;
    SpectralField uhat;  // unnormalized FFT coefficients (fftw convention)
    double t = 0.0;
};

enum class SolverMode { kkp2d, kawahara1d };

struct SolverConfig {
    ModelParams params;
    double dt = 0.0;
    double t_end = 0.0;
    bool dealias = true;
    int snapshot_every = 1;
    SolverMode mode = SolverMode::kkp2d;

    void validate() const;
};

/// Imaginary coefficient l(kx,ky) of the linear symbol: uhat_t = i*l*uhat with
///   l = beta kx^3 - kx^5 + sigma ky^2/kx  (kx != 0),  l = 0 at kx = 0.
double linear_symbol(const ModelParams& params, double kx, double ky);

class SpectralSolver {
  public:
    SpectralSolver(const Grid2D& grid, const SolverConfig& config);
    ~SpectralSolver();
    SpectralSolver(const SpectralSolver&) = delete;
    SpectralSolver& operator=(const SpectralSolver&) = delete;

    const Grid2D& grid() const { return grid_; }
    const SolverConfig& config() const { return config_; }

    SpectralField forward(const Field& u) const;     // FFT, projects kx=0,ky!=0
    Field inverse(const SpectralField& uhat) const;  // normalized inverse, real part
    double max_imag_residue(const SpectralField& uhat) const;

    /// Fourier coefficients of -(1/2)(u^2)_x, dealiased (2/3 rule) when enabled.
    SpectralField nonlinear_rhs(const SpectralField& uhat) const;

    /// One integrating-factor RK4 step. `with_nonlinearity=false` is a test
    /// hook giving the exact linear propagator.
    void step_ifrk4(SpectralState& state, double dt, bool with_nonlinearity = true) const;

    using SnapshotFn = std::function<void(const SpectralState&)>;

    /// Advances from state.t to t_end, invoking on_snapshot at t=start and
    /// every snapshot_every steps plus the final step.
    void simulate(SpectralState& state, const SnapshotFn& on_snapshot) const;

  private:
    void project(SpectralField& uhat) const;  // kx=0, ky!=0 rows to zero
    void check_finite(const SpectralField& uhat, double t) const;

    Grid2D grid_;
    SolverConfig config_;
    std::vector<double> symbol_;   // l(kx,ky) per mode
    std::vector<char> dealias_;    // 2/3-rule keep mask
    struct FftPlans;
    std::unique_ptr<FftPlans> plans_;
};

struct InitResult {
    Field u;
    double projection_norm = 0.0;  // l2 norm of removed kx=0, ky!=0 content
};

/// Samples u(x,y) = U(x + mu y - x0) on the grid. For mu != 0 the box must be
/// commensurate: mu*ly/lx integer, else the tilted line is not periodic.
InitResult init_line_soliton(const Grid2D& grid, const ModelParams& params, const LineWave& wave,
                             double x0);

}  // namespace kkp

#endif
