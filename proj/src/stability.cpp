#include "kkp/stability.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kkp/ansatz.hpp"

namespace kkp {

StabilityReport stability_integral(int n, double L) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 8");
    if (L <= 0.0) throw std::invalid_argument("L must be positive");

    std::vector<double> U(n);
    for (int i = 0; i < n; ++i) {
        const double xi = -L / 2 + L * i / n;
        const double c = std::cosh(xi);
        U[i] = 1.0 / (c * c * c * c);
    }

    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    for (int i = 0; i < n; ++i) {
        buf[i][0] = U[i];
        buf[i][1] = 0.0;
    }
    fftw_execute(fwd);

    StabilityReport rep;
    rep.n = n;
    rep.L = L;
    rep.projected_mean = std::abs(buf[0][0]) / n;
    buf[0][0] = buf[0][1] = 0.0;

    bool first = true;
    for (int i = 1; i < n; ++i) {
        const int m = i <= n / 2 ? i : i - n;
        const double k = 2.0 * std::numbers::pi * m / L;
        const double s = rescaled_symbol(k);
        if (first || s < rep.min_symbol) {
            rep.min_symbol = s;
            rep.min_symbol_at_k = k;
            first = false;
        }
        buf[i][0] /= s;
        buf[i][1] /= s;
    }
    rep.symbol_positive = rep.min_symbol > 0.0;

    fftw_execute(bwd);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += U[i] * buf[i][0] / n;
    rep.I = acc * L / n;

    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);

    rep.caveat =
        "psi is the mean-projected surrogate: the symbol s(k) vanishes at k=0 while "
        "int sech^4 != 0, so L psi = U has no L^2 solution; I is the regularized value "
        "and is nonnegative by Parseval (sum |U_hat(k)|^2 / s(k) over k != 0).";
    return rep;
}

}  // namespace kkp
