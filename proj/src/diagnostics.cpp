#include "kkp/diagnostics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kkp {

FTriple FTriple::one() {
    return {"1", [](double) { return 1.0; }, [](double) { return 0.0; },
            [](double) { return 0.0; }, [](double) { return 0.0; }};
}

FTriple FTriple::t() {
    return {"t", [](double t) { return t; }, [](double) { return 1.0; },
            [](double) { return 0.0; }, [](double) { return 0.0; }};
}

FTriple FTriple::t2() {
    return {"t2", [](double t) { return t * t; }, [](double t) { return 2.0 * t; },
            [](double) { return 2.0; }, [](double) { return 0.0; }};
}

std::vector<FTriple> FTriple::builtins() { return {one(), t(), t2()}; }

SpectralField deriv_x(const Grid2D& grid, const SpectralField& uhat, int order) {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    SpectralField out(uhat.size());
    for (int ix = 0; ix < grid.nx; ++ix) {
        std::complex<double> factor = 1.0;
        const std::complex<double> ikx(0.0, grid.kx(ix));
        for (int k = 0; k < order; ++k) factor *= ikx;
        for (int iy = 0; iy < grid.ny; ++iy) {
            const int i = grid.index(ix, iy);
            out[i] = factor * uhat[i];
        }
    }
    return out;
}

SpectralField deriv_y(const Grid2D& grid, const SpectralField& uhat) {
    SpectralField out(uhat.size());
    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.ny; ++iy) {
            const int i = grid.index(ix, iy);
            out[i] = std::complex<double>(0.0, grid.ky(iy)) * uhat[i];
        }
    return out;
}

SpectralField dx_inv(const Grid2D& grid, const SpectralField& what) {
    double total2 = 0.0, bad2 = 0.0;
    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.ny; ++iy) {
            const double a = std::norm(what[grid.index(ix, iy)]);
            total2 += a;
            if (ix == 0 && iy != 0) bad2 += a;
        }
    if (total2 > 0.0 && std::sqrt(bad2 / total2) > 1e-8) {
        std::ostringstream os;
        os << "dx_inv constraint violated: kx=0, ky!=0 relative norm "
           << std::sqrt(bad2 / total2) << " exceeds 1e-8";
        throw std::invalid_argument(os.str());
    }
    SpectralField out(what.size());
    for (int ix = 1; ix < grid.nx; ++ix) {
        const std::complex<double> inv(0.0, -1.0 / grid.kx(ix));
        for (int iy = 0; iy < grid.ny; ++iy) {
            const int i = grid.index(ix, iy);
            out[i] = inv * what[i];
        }
    }
    for (int iy = 0; iy < grid.ny; ++iy) out[grid.index(0, iy)] = 0.0;
    return out;
}

namespace {

// spectral-accuracy quadrature on the periodic box: cell mean times area
double integral(const Grid2D& grid, const Field& f) {
    double acc = 0.0;
    for (double v : f) acc += v;
    return acc * grid.area() / grid.size();
}

}  // namespace

std::pair<double, double> generalized_momenta(const SpectralSolver& solver,
                                              const SpectralState& state, const FTriple& ft) {
    const Grid2D& grid = solver.grid();
    const Field u = solver.inverse(state.uhat);
    const Field w = solver.inverse(dx_inv(grid, deriv_y(grid, state.uhat)));
    const double sigma = solver.config().params.sigma;
    const double f = ft.f(state.t), fp = ft.fp(state.t), fpp = ft.fpp(state.t);

    Field px_density(grid.size()), py_density(grid.size());
    for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        for (int iy = 0; iy < grid.ny; ++iy) {
            const double y = grid.y(iy);
            const int i = grid.index(ix, iy);
            const double u2 = u[i] * u[i];
            px_density[i] = 0.5 * f * u2 - fp * x * u[i];
            py_density[i] =
                0.5 * (f * u[i] * w[i] + (y / sigma) * (0.5 * fp * u2 - fpp * x * u[i]));
        }
    }
    return {integral(grid, px_density), integral(grid, py_density)};
}

DiagnosticsRecord conserved_integrals(const SpectralSolver& solver, const SpectralState& state) {
    const Grid2D& grid = solver.grid();
    const ModelParams& params = solver.config().params;
    const Field u = solver.inverse(state.uhat);
    const Field ux = solver.inverse(deriv_x(grid, state.uhat, 1));
    const Field uxx = solver.inverse(deriv_x(grid, state.uhat, 2));
    const Field w = solver.inverse(dx_inv(grid, deriv_y(grid, state.uhat)));

    DiagnosticsRecord rec;
    rec.t = state.t;

    Field dens(grid.size());
    auto accumulate = [&](auto&& pointwise) {
        for (int ix = 0; ix < grid.nx; ++ix)
            for (int iy = 0; iy < grid.ny; ++iy) {
                const int i = grid.index(ix, iy);
                dens[i] = pointwise(i, grid.x(ix), grid.y(iy));
            }
        return integral(grid, dens);
    };

    rec.M = accumulate([&](int i, double, double) { return u[i]; });
    rec.My = accumulate([&](int i, double, double y) { return y * u[i]; });
    rec.Mx = accumulate([&](int i, double x, double) { return x * u[i]; });
    rec.Px = accumulate([&](int i, double, double) { return 0.5 * u[i] * u[i]; });
    rec.Py = accumulate([&](int i, double, double) { return 0.5 * u[i] * w[i]; });
    rec.Pxy = accumulate([&](int i, double, double y) { return 0.5 * y * u[i] * u[i]; });
    rec.E = accumulate([&](int i, double, double) {
        return 0.5 * (uxx[i] * uxx[i] - params.beta * ux[i] * ux[i]
                      - params.sigma * w[i] * w[i] + u[i] * u[i] * u[i] / 3.0);
    });

    if (std::abs(rec.M) > 1e-12 * std::max(1.0, std::abs(rec.Mx)))
        rec.chi_M = rec.Mx / rec.M;

    for (const FTriple& f : FTriple::builtins()) {
        const auto [pxf, pyf] = generalized_momenta(solver, state, f);
        rec.aux["Px[" + f.name + "]"] = pxf;
        rec.aux["Py[" + f.name + "]"] = pyf;
    }
    return rec;
}

namespace {

// least-squares slope of (t_i, y_i)
double ls_slope(const std::vector<double>& t, const std::vector<double>& y) {
    const size_t n = t.size();
    double mt = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mt += t[i];
        my += y[i];
    }
    mt /= n;
    my /= n;
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        num += (t[i] - mt) * (y[i] - my);
        den += (t[i] - mt) * (t[i] - mt);
    }
    if (den == 0.0) throw std::invalid_argument("degenerate series: no time spread");
    return num / den;
}

double rel_dev(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

GalileanReport galilean_relations(const std::vector<DiagnosticsRecord>& series, int sigma) {
    if (series.size() < 3) throw std::invalid_argument("degenerate series: need >= 3 samples");
    GalileanReport rep;
    rep.samples = static_cast<int>(series.size());

    std::vector<double> t, chi_m, chi_px;
    double px0 = series.front().Px;
    if (px0 == 0.0) throw std::invalid_argument("degenerate series: Px = 0");
    for (const auto& r : series) {
        t.push_back(r.t);
        chi_px.push_back(r.Pxy / r.Px);
    }
    rep.chi_Px_slope = ls_slope(t, chi_px);
    rep.predicted_chi_Px = -2.0 * sigma * series.front().Py / px0;
    rep.chi_Px_rel_dev = rel_dev(rep.chi_Px_slope, rep.predicted_chi_Px);

    std::vector<double> tm;
    for (const auto& r : series)
        if (r.chi_M) {
            tm.push_back(r.t);
            chi_m.push_back(*r.chi_M);
        }
    if (tm.size() >= 3) {
        rep.chi_M_slope = ls_slope(tm, chi_m);
        const double m0 = series.front().M;
        rep.px_over_m = m0 != 0.0 ? px0 / m0 : 0.0;
        rep.chi_M_rel_dev = rel_dev(rep.chi_M_slope, rep.px_over_m);

        // affinity of chi_M(t): max fit error over data range
        double mt = 0.0, my = 0.0;
        for (size_t i = 0; i < tm.size(); ++i) {
            mt += tm[i];
            my += chi_m[i];
        }
        mt /= tm.size();
        my /= tm.size();
        double lo = chi_m[0], hi = chi_m[0], maxerr = 0.0;
        for (size_t i = 0; i < tm.size(); ++i) {
            lo = std::min(lo, chi_m[i]);
            hi = std::max(hi, chi_m[i]);
            const double fit = my + rep.chi_M_slope * (tm[i] - mt);
            maxerr = std::max(maxerr, std::abs(chi_m[i] - fit));
        }
        rep.chi_M_fit_residual = maxerr / std::max(hi - lo, 1e-300);
    }
    return rep;
}

}  // namespace kkp
