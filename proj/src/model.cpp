#include "kkp/model.hpp"

#include <array>
#include <cmath>

namespace kkp {

LineWave::LineWave(const ModelParams& params, double mu_, double nu_) : mu(mu_), nu(nu_) {
    params.validate();
    kappa = params.sigma * mu * mu + nu;
    r = std::sqrt(std::abs(params.beta) / 13.0);
    const double r4 = r * r * r * r;
    q = 105.0 * r4;
    p = kappa + 36.0 * r4;
    c = nu / std::sqrt(1.0 + mu * mu);
    theta = std::atan(mu);
}

double soliton_profile(const ModelParams& params, const LineWave& wave, double xi) {
    params.require_soliton();
    const double s = 1.0 / std::cosh(0.5 * wave.r * xi);
    const double s2 = s * s;
    return wave.p - wave.q * s2 * s2;
}

namespace {

// With h = r/2, T = tanh(h xi), s = sech(h xi):
//   U = p - q s^4,  U^(k) = -q h^k s^4 P_k(T),
// where P_0 = 1 and P_{k+1} = (1-T^2) P_k' - 4 T P_k (degree k).
constexpr int kMaxOrder = 6;

std::array<std::array<double, kMaxOrder + 2>, kMaxOrder + 1> make_poly_table() {
    std::array<std::array<double, kMaxOrder + 2>, kMaxOrder + 1> P{};
    P[0][0] = 1.0;
    for (int k = 0; k < kMaxOrder; ++k) {
        for (int j = 0; j <= k; ++j) {
            const double cj = P[k][j];
            if (cj == 0.0) continue;
            if (j >= 1) P[k + 1][j - 1] += j * cj;   // derivative, 1 part
            P[k + 1][j + 1] -= (j + 4.0) * cj;       // -T^2 P' - 4T P part
        }
    }
    return P;
}

const auto kProfilePolys = make_poly_table();

}  // namespace

double profile_derivative(const ModelParams& params, const LineWave& wave, int order, double xi) {
    params.require_soliton();
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("profile_derivative: order must be in 0..6");
    if (order == 0) return soliton_profile(params, wave, xi);
    const double h = 0.5 * wave.r;
    const double T = std::tanh(h * xi);
    const double s = 1.0 / std::cosh(h * xi);
    const double s4 = s * s * s * s;
    // Horner on P_order
    double acc = 0.0;
    for (int j = order; j >= 0; --j) acc = acc * T + kProfilePolys[order][j];
    return -wave.q * std::pow(h, order) * s4 * acc;
}

double potential_profile(const ModelParams& params, const LineWave& wave, double xi) {
    params.require_soliton();
    const double T = std::tanh(0.5 * wave.r * xi);
    return wave.p * xi - (2.0 * wave.q / wave.r) * (T - T * T * T / 3.0);
}

double zero_background_nu(const ModelParams& params, double mu) {
    params.require_soliton();
    const double b = 6.0 * params.beta / 13.0;
    return -params.sigma * mu * mu - b * b;
}

double c_of_theta(const ModelParams& params, double theta) {
    params.require_soliton();
    if (!(std::abs(theta) < M_PI / 2.0))
        throw std::domain_error("c_of_theta: |theta| must be < pi/2");
    const double b = 6.0 * params.beta / 13.0;
    const double ac = std::abs(std::cos(theta));
    const double s = std::sin(theta);
    return -b * b * ac - params.sigma * s * s / ac;
}

std::pair<double, double> speed_and_direction(const LineWave& wave) {
    return {wave.c, wave.theta};
}

}  // namespace kkp
