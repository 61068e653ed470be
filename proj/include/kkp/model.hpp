#ifndef KKP_MODEL_HPP
#define KKP_MODEL_HPP

#include <stdexcept>
#include <utility>

namespace kkp {

/// Coefficients of the scaled K-KP equation
///   u_t + u u_x + beta u_xxx + u_xxxxx = sigma dx^{-1} u_yy,
/// with the advection and fifth-order coefficients scaled to one.
struct ModelParams {
    double beta = -1.0;  // third-order dispersion; sech-form solitons need beta < 0
    int sigma = 1;       // +1: K-KP I, -1: K-KP II

    void validate() const {
        if (beta == 0.0) throw std::invalid_argument("beta must be nonzero");
        if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be +1 or -1");
    }
    void require_soliton() const {
        validate();
        if (beta >= 0.0)
            throw std::domain_error("no sech-type soliton exists (requires beta < 0)");
    }
};

/// One line wave u = U(xi), xi = x + mu*y - nu*t. All derived quantities are
/// computed once at construction.
struct LineWave {
    double mu = 0.0;
    double nu = 0.0;
    // derived
    double kappa = 0.0;  // sigma*mu^2 + nu
    double r = 0.0;      // sqrt(|beta|/13)
    double q = 0.0;      // 105 r^4 (trough depth below background)
    double p = 0.0;      // kappa + 36 r^4 (background level)
    double c = 0.0;      // nu / sqrt(1 + mu^2)
    double theta = 0.0;  // arctan(mu)

    LineWave() = default;
    LineWave(const ModelParams& params, double mu, double nu);
};

/// U(xi) = p - q sech^4(r xi / 2). Requires beta < 0.
double soliton_profile(const ModelParams& params, const LineWave& wave, double xi);

/// Exact closed-form k-th derivative of the profile, k in 0..6.
double profile_derivative(const ModelParams& params, const LineWave& wave, int order, double xi);

/// V(xi) with V' = U and V(0) = 0:
///   V(xi) = p*xi - (2q/r) (tanh(r xi/2) - tanh^3(r xi/2)/3).
double potential_profile(const ModelParams& params, const LineWave& wave, double xi);

/// nu that makes the background vanish: nu = -sigma mu^2 - (6 beta/13)^2.
double zero_background_nu(const ModelParams& params, double mu);

/// Speed of zero-background waves as a function of direction angle:
///   c(theta) = -(6 beta/13)^2 |cos theta| - sigma sin^2 theta / |cos theta|.
double c_of_theta(const ModelParams& params, double theta);

/// (c, theta) of a line wave.
std::pair<double, double> speed_and_direction(const LineWave& wave);

}  // namespace kkp

#endif
