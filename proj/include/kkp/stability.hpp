#ifndef KKP_STABILITY_HPP
#define KKP_STABILITY_HPP

#include <string>

namespace kkp {

struct StabilityReport {
    double I = 0.0;               // int U psi, with L psi = U under mean projection
    double projected_mean = 0.0;  // |mean of U| removed by the k=0 projection
    double min_symbol = 0.0;      // min of s(k) over nonzero grid modes
    double min_symbol_at_k = 0.0;
    bool symbol_positive = false;
    int n = 0;
    double L = 0.0;
    std::string caveat;
};

/// Solves s(k) psi_hat = U_hat for U = sech^4(xi) on a periodic grid of n
/// points over [-L/2, L/2), with s(k) = k^4/1680 + 13 k^2/420. The symbol
/// vanishes at k = 0 while U has nonzero mean, so the k = 0 mode is projected
/// out and the result is a regularized surrogate, flagged in the caveat.
StabilityReport stability_integral(int n, double L);

}  // namespace kkp

#endif
