#ifndef KKP_CLAWS_HPP
#define KKP_CLAWS_HPP

#include "kkp/diagnostics.hpp"
#include "kkp/model.hpp"

namespace kkp {

/// Closed-form jet of the potential v(x,y,t) = V(x + mu y - nu t) on a line
/// soliton, through every partial derivative the conservation laws use.
struct PotentialJet {
    double v = 0.0;
    double vx = 0.0, vy = 0.0, vt = 0.0;
    double vxx = 0.0, vxxx = 0.0, vxxxx = 0.0, vxxxxx = 0.0;
    double vtx = 0.0, vtxx = 0.0;
    double vxy = 0.0, vxxy = 0.0;
};

PotentialJet potential_jet(const ModelParams& params, const LineWave& wave, double x, double y,
                           double t);

/// Density T and fluxes (Phi^x, Phi^y) of conservation law claw_id in 1..5,
/// evaluated in closed form on the line soliton.
struct ClawDensityFlux {
    double T = 0.0;
    double Fx = 0.0;
    double Fy = 0.0;
};

ClawDensityFlux claw_density_flux(int claw_id, const FTriple& f, const ModelParams& params,
                                  const LineWave& wave, double x, double y, double t);

/// D_t T + D_x Phi^x + D_y Phi^y by 4th-order central differences of step h
/// over the exactly-evaluated density and fluxes. Identically 0 for a true
/// conservation law, so the return value measures only the h^4 FD error.
double claw_divergence_residual(int claw_id, const FTriple& f, const ModelParams& params,
                                const LineWave& wave, double x, double y, double t, double h);

struct Rectangle {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
};

/// Counterclockwise loop integral of the topological charge over a rectangle,
/// with n quadrature panels per edge (composite trapezoid):
///   charge 1:  oint (beta u_xx + u_xxxx + u^2/2 + dx^{-1}u_t) dy + sigma dx^{-1}u_y dx
///   charge 2:  the y-weighted version, with sigma(y dx^{-1}u_y - dx^{-1}u) dx.
/// Both vanish identically for an exact solution; evaluated in closed form.
double topological_charge(int charge_id, const ModelParams& params, const LineWave& wave,
                          const Rectangle& rect, double t, int n = 4096);

enum class Generator { X1, X2, X3 };

struct SymmetryReport {
    double max_residual = 0.0;
    int points = 0;
    // frame drift of the transformed soliton relative to the base one,
    // measured when the check is meaningful (X3 with f = t)
    bool has_frame_check = false;
    double frame_vx = 0.0, frame_vy = 0.0;
    double expected_vx = 0.0, expected_vy = 0.0;
};

/// Applies the finite group action of X1 (time translation), X2 (generalized
/// x-translation u(x - eps f, y, t) + eps f') or X3 (generalized
/// y-translation) to the line soliton and evaluates the PDE residual
///   u_tx + (u u_x)_x + beta u_xxxx + u_xxxxxx - sigma u_yy
/// in closed form at n random sample points.
SymmetryReport symmetry_action_check(Generator gen, const FTriple& f, double epsilon,
                                     const ModelParams& params, const LineWave& wave,
                                     int n_points = 200, unsigned seed = 12345);

}  // namespace kkp

#endif
