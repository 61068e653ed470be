#include "kkp/claws.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kkp {

PotentialJet potential_jet(const ModelParams& params, const LineWave& wave, double x, double y,
                           double t) {
    const double xi = x + wave.mu * y - wave.nu * t;
    double U[6];
    for (int k = 0; k < 6; ++k) U[k] = profile_derivative(params, wave, k, xi);

    PotentialJet j;
    j.v = potential_profile(params, wave, xi);
    j.vx = U[0];
    j.vy = wave.mu * U[0];
    j.vt = -wave.nu * U[0];
    j.vxx = U[1];
    j.vxxx = U[2];
    j.vxxxx = U[3];
    j.vxxxxx = U[4];
    j.vtx = -wave.nu * U[1];
    j.vtxx = -wave.nu * U[2];
    j.vxy = wave.mu * U[1];
    j.vxxy = wave.mu * U[2];
    return j;
}

ClawDensityFlux claw_density_flux(int claw_id, const FTriple& ft, const ModelParams& params,
                                  const LineWave& wave, double x, double y, double t) {
    if (claw_id < 1 || claw_id > 5) throw std::invalid_argument("claw_id must be in 1..5");
    params.require_soliton();
    const PotentialJet j = potential_jet(params, wave, x, y, t);
    const double f = ft.f(t), fp = ft.fp(t), fpp = ft.fpp(t), fppp = ft.fppp(t);
    const double sigma = params.sigma, beta = params.beta;

    ClawDensityFlux c;
    switch (claw_id) {
        case 1:  // energy
            c.T = 0.5 * (j.vxxx * j.vxxx - beta * j.vxx * j.vxx + j.vx * j.vx * j.vx / 3.0
                         - sigma * j.vy * j.vy);
            c.Fx = (beta * j.vxx + j.vxxxx) * j.vtx - 0.5 * j.vt * j.vt
                 - (beta * j.vxxx + j.vxxxxx + 0.5 * j.vx * j.vx) * j.vt - j.vtxx * j.vxxx;
            c.Fy = sigma * j.vt * j.vy;
            break;
        case 2:  // generalized x-momentum
            c.T = 0.5 * j.vx * j.vx * f + j.v * fp;
            c.Fx = (0.5 * sigma * j.vy * j.vy + beta * j.vx * j.vxxx - 0.5 * beta * j.vxx * j.vxx
                    + j.vx * j.vx * j.vx / 3.0 + j.vxxxxx * j.vx - j.vxx * j.vxxxx
                    + 0.5 * j.vxxx * j.vxxx) * f
                 - (x * (beta * j.vxxx + j.vxxxxx + 0.5 * j.vx * j.vx + j.vt)
                    - (beta * j.vxx + j.vxxxx)) * fp
                 - 0.5 / sigma * y * y
                   * (beta * j.vxxx + j.vxxxxx + 0.5 * j.vx * j.vx + j.vt) * fpp;
            c.Fy = -sigma * f * j.vx * j.vy + sigma * x * fp * j.vy
                 + (0.5 * y * y * j.vy - y * j.v) * fpp;
            break;
        case 3: {  // generalized y-momentum
            const double ham_flux = beta * j.vx * j.vxxx - 0.5 * beta * j.vxx * j.vxx
                                  + j.vx * j.vx * j.vx / 3.0 + j.vxxxxx * j.vx - j.vxx * j.vxxxx
                                  + 0.5 * j.vxxx * j.vxxx;
            const double eqn = beta * j.vxxx + 0.5 * j.vx * j.vx + j.vxxxxx + j.vt;
            c.T = 0.5 * (j.vx * j.vy * f + 0.5 / sigma * y * j.vx * j.vx * fp
                         + (1.0 / sigma) * y * j.v * fpp);
            c.Fx = (0.5 * j.vt * j.vy + (beta * j.vxxx + 0.5 * j.vx * j.vx + j.vxxxxx) * j.vy
                    - (beta * j.vxx + j.vxxxx) * j.vxy + j.vxxx * j.vxxy) * f
                 + y * (0.25 * j.vy * j.vy + 0.5 / sigma * ham_flux) * fp
                 - 0.5 / sigma * (x * y * eqn - y * (beta * j.vxx + j.vxxxx)) * fpp
                 - 1.0 / (12.0 * sigma * sigma) * y * y * y * eqn * fppp;
            c.Fy = -0.5 * ((j.vx * j.vt + sigma * j.vy * j.vy - beta * j.vxx * j.vxx
                            + j.vx * j.vx * j.vx / 3.0 + j.vxxx * j.vxxx) * f
                           + y * fp * j.vx * j.vy - x * (y * j.vy - j.v) * fpp
                           - 0.5 / sigma * (y * y * y * j.vy / 3.0 - y * y * j.v) * fppp);
            break;
        }
        case 4:
            c.T = 0.0;
            c.Fx = (beta * j.vxxx + j.vxxxxx + 0.5 * j.vx * j.vx + j.vt) * f;
            c.Fy = -sigma * j.vy * f;
            break;
        case 5:
            c.T = 0.0;
            c.Fx = y * (beta * j.vxxx + j.vxxxxx + 0.5 * j.vx * j.vx + j.vt) * f;
            c.Fy = sigma * (j.v - y * j.vy) * f;
            break;
    }
    return c;
}

double claw_divergence_residual(int claw_id, const FTriple& f, const ModelParams& params,
                                const LineWave& wave, double x, double y, double t, double h) {
    if (h <= 0.0) throw std::invalid_argument("h must be positive");
    auto cdf = [&](double xx, double yy, double tt) {
        return claw_density_flux(claw_id, f, params, wave, xx, yy, tt);
    };
    // 4th-order central difference: (-g(+2h) + 8g(+h) - 8g(-h) + g(-2h)) / (12h)
    auto d4 = [&](auto&& g) {
        return (-g(2.0 * h) + 8.0 * g(h) - 8.0 * g(-h) + g(-2.0 * h)) / (12.0 * h);
    };
    const double dT = d4([&](double d) { return cdf(x, y, t + d).T; });
    const double dFx = d4([&](double d) { return cdf(x + d, y, t).Fx; });
    const double dFy = d4([&](double d) { return cdf(x, y + d, t).Fy; });
    return dT + dFx + dFy;
}

double topological_charge(int charge_id, const ModelParams& params, const LineWave& wave,
                          const Rectangle& rect, double t, int n) {
    if (charge_id < 1 || charge_id > 2) throw std::invalid_argument("charge_id must be 1 or 2");
    if (!(rect.x0 < rect.x1) || !(rect.y0 < rect.y1))
        throw std::invalid_argument("rectangle must have x0 < x1 and y0 < y1");
    if (n < 2) throw std::invalid_argument("need at least 2 quadrature panels per edge");
    params.require_soliton();

    // closed-form pieces; dx^{-1} uses the V(0)=0 antiderivative convention:
    //   dx^{-1} u_t = -nu U,  dx^{-1} u_y = mu U,  dx^{-1} u = V
    auto A = [&](double x, double y) {  // dy-integrand
        const double xi = x + wave.mu * y - wave.nu * t;
        const double u = profile_derivative(params, wave, 0, xi);
        return params.beta * profile_derivative(params, wave, 2, xi)
             + profile_derivative(params, wave, 4, xi) + 0.5 * u * u - wave.nu * u;
    };
    auto B = [&](double x, double y) {  // dx-integrand
        const double xi = x + wave.mu * y - wave.nu * t;
        const double u = profile_derivative(params, wave, 0, xi);
        if (charge_id == 1) return params.sigma * wave.mu * u;
        return params.sigma * (y * wave.mu * u - potential_profile(params, wave, xi));
    };
    auto weightA = [&](double y) { return charge_id == 1 ? 1.0 : y; };

    // composite trapezoid along each edge, counterclockwise
    auto edge = [&](auto&& g, double a, double b) {
        double acc = 0.5 * (g(a) + g(b));
        for (int i = 1; i < n; ++i) acc += g(a + (b - a) * i / n);
        return acc * (b - a) / n;
    };
    double total = 0.0;
    total += edge([&](double x) { return B(x, rect.y0); }, rect.x0, rect.x1);  // bottom, +dx
    total += edge([&](double y) { return weightA(y) * A(rect.x1, y); }, rect.y0, rect.y1);
    total += edge([&](double x) { return B(x, rect.y1); }, rect.x1, rect.x0);  // top, -dx
    total += edge([&](double y) { return weightA(y) * A(rect.x0, y); }, rect.y1, rect.y0);
    return total;
}

SymmetryReport symmetry_action_check(Generator gen, const FTriple& ft, double epsilon,
                                     const ModelParams& params, const LineWave& wave,
                                     int n_points, unsigned seed) {
    params.require_soliton();
    const double sigma = params.sigma;

    // every group action maps the line soliton to
    //   u~(x,y,t) = U(x + a(t) y + b(t)) + s(y,t)
    // with s linear in y (s_yy = 0); the PDE residual in the local form
    //   u_tx + u_x^2 + u u_xx + beta u_xxxx + u_xxxxxx - sigma u_yy
    // then closes over the profile derivatives at xi~ = x + a y + b.
    struct Coeffs {
        double a, ap, b, bp, s;
    };
    auto coeffs = [&](double t, double y) -> Coeffs {
        const double f = ft.f(t), fp = ft.fp(t), fpp = ft.fpp(t);
        switch (gen) {
            case Generator::X1:  // t -> t + eps
                return {wave.mu, 0.0, -wave.nu * (t - epsilon), -wave.nu, 0.0};
            case Generator::X2:  // x-translation by eps f, vertical shift eps f'
                return {wave.mu, 0.0, -wave.nu * t - epsilon * f,
                        -wave.nu - epsilon * fp, epsilon * fp};
            case Generator::X3:  // y-translation by eps f with induced shear
                return {wave.mu - epsilon * fp / (2.0 * sigma),
                        -epsilon * fpp / (2.0 * sigma),
                        epsilon * epsilon * f * fp / (4.0 * sigma) - wave.mu * epsilon * f
                            - wave.nu * t,
                        epsilon * epsilon * (fp * fp + f * fpp) / (4.0 * sigma)
                            - wave.mu * epsilon * fp - wave.nu,
                        epsilon * y * fpp / (2.0 * sigma)
                            - epsilon * epsilon * f * fpp / (4.0 * sigma)};
        }
        throw std::logic_error("unknown generator");
    };

    std::mt19937 rng(seed);
    const double core = 10.0 / wave.r;  // sample within the soliton core scale
    std::uniform_real_distribution<double> dxi(-core, core);
    std::uniform_real_distribution<double> dy(-5.0, 5.0);
    std::uniform_real_distribution<double> dt(0.0, 2.0);

    SymmetryReport rep;
    rep.points = n_points;
    for (int i = 0; i < n_points; ++i) {
        const double y = dy(rng), t = dt(rng);
        const auto [a, ap, b, bp, s] = coeffs(t, y);
        const double x = dxi(rng) - a * y - b;  // keeps xi~ inside the core
        const double xi = x + a * y + b;
        const double U = profile_derivative(params, wave, 0, xi);
        const double U1 = profile_derivative(params, wave, 1, xi);
        const double U2 = profile_derivative(params, wave, 2, xi);
        const double U4 = profile_derivative(params, wave, 4, xi);
        const double U6 = profile_derivative(params, wave, 6, xi);
        const double res = (ap * y + bp) * U2 + U1 * U1 + (U + s) * U2 + params.beta * U4 + U6
                         - sigma * a * a * U2;
        rep.max_residual = std::max(rep.max_residual, std::abs(res));
    }

    if (gen == Generator::X3 && ft.name == "t") {
        // the transformed crest sits at xi~ = 0 and y - eps t = const: its drift
        // relative to the base crest must be (eps^2/(4 sigma), eps)
        rep.has_frame_check = true;
        auto crest = [&](double t) {
            const double y = epsilon * t;  // image of the base line y = 0
            const Coeffs c = coeffs(t, y);
            return std::pair<double, double>{-c.a * y - c.b, y};  // x with xi~ = 0
        };
        const auto [x0, y0] = crest(0.0);
        const auto [x1, y1] = crest(1.0);
        rep.frame_vx = (x1 - x0) - wave.nu;  // base crest moves at dx/dt = nu on y = 0
        rep.frame_vy = y1 - y0;
        rep.expected_vx = epsilon * epsilon / (4.0 * sigma);
        rep.expected_vy = epsilon;
    }
    return rep;
}

}  // namespace kkp
