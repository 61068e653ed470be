#ifndef KKP_DIAGNOSTICS_HPP
#define KKP_DIAGNOSTICS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kkp/spectral.hpp"

namespace kkp {

/// f(t) together with its first three derivatives, supplied consistently.
struct FTriple {
    std::string name;
    std::function<double(double)> f, fp, fpp, fppp;

    static FTriple one();  // f = 1
    static FTriple t();    // f = t
    static FTriple t2();   // f = t^2
    static std::vector<FTriple> builtins();
};

/// One time sample of every tracked integral.
struct DiagnosticsRecord {
    double t = 0.0;
    double M = 0.0;    // mass
    double My = 0.0;   // y-moment of mass
    double Px = 0.0;
    double Py = 0.0;
    double E = 0.0;
    double Mx = 0.0;   // x-moment of mass
    double Pxy = 0.0;  // y-center numerator, int (1/2) y u^2
    std::optional<double> chi_M;              // Mx/M, absent when M ~ 0
    std::map<std::string, double> aux;        // generalized momenta per f
};

/// Spectral x-derivative (any order >= 0) and first y-derivative.
SpectralField deriv_x(const Grid2D& grid, const SpectralField& uhat, int order);
SpectralField deriv_y(const Grid2D& grid, const SpectralField& uhat);

/// Zero-mean x-antiderivative: divide by i*kx, zero the kx=0 row. Requires the
/// kx=0, ky!=0 content to be below 1e-8 of the field norm.
SpectralField dx_inv(const Grid2D& grid, const SpectralField& what);

/// All conserved integrals of a state, including the generalized momenta for
/// the built-in f in {1, t, t^2} (keys "Px[<f>]", "Py[<f>]").
DiagnosticsRecord conserved_integrals(const SpectralSolver& solver, const SpectralState& state);

/// Pair (Px[f], Py[f]) of the generalized momenta
///   Px[f] = int (1/2 f u^2 - f' x u),
///   Py[f] = int 1/2 (f u dx_inv(u_y) + (y/sigma)(1/2 f' u^2 - f'' x u)).
std::pair<double, double> generalized_momenta(const SpectralSolver& solver,
                                              const SpectralState& state, const FTriple& f);

struct GalileanReport {
    double chi_M_slope = 0.0;
    double px_over_m = 0.0;     // predicted chi_M speed
    double chi_M_rel_dev = 0.0;
    double chi_M_fit_residual = 0.0;  // max |fit error| / range of chi_M
    double chi_Px_slope = 0.0;
    double predicted_chi_Px = 0.0;  // -2 sigma Py / Px
    double chi_Px_rel_dev = 0.0;
    int samples = 0;
};

/// Least-squares slopes of the two center-of-mass relations along a series.
GalileanReport galilean_relations(const std::vector<DiagnosticsRecord>& series, int sigma);

}  // namespace kkp

#endif
