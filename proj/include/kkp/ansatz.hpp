#ifndef KKP_ANSATZ_HPP
#define KKP_ANSATZ_HPP

#include <utility>
#include <vector>

#include "kkp/tanh_poly.hpp"

namespace kkp {

/// One member of the sech-form ansatz U = a0 + a1 sech^2(m xi) + a2 sech^4(m xi)
/// together with the travelling-wave ODE data it is checked against.
struct AnsatzInstance {
    Rational m2;     // m^2
    Rational a0;     // background value, U at T = +-1
    Rational a1;
    Rational a2;
    Rational kappa;
    Rational beta;
    Rational C1;
    Rational C2;
};

/// Integration constants fixed by the |xi| -> inf background limit:
///   C1 = p^2/2 - kappa p,   C2 = p^3/6 - kappa p^2/2 - C1 p,  p = a0.
std::pair<Rational, Rational> derive_constants(const Rational& a0, const Rational& kappa);

/// The unique real sech-form solution family, with derived C1, C2:
///   m^2 = -beta/52, a1 = 0, a2 = -105 (2m)^4, a0 = kappa + 36 (2m)^4.
AnsatzInstance family_instance(const Rational& beta, const Rational& kappa);

/// Residual polynomial in T of the twice-integrated travelling-wave ODE
///   U^3/6 - kappa U^2/2 + beta U'^2/2 + U'U''' - U''^2/2 - C1 U - C2
/// under the substitution U = a0 + a1(1-T^2) + a2(1-T^2)^2. Odd derivatives
/// occur only in products, so every m pairs into m^2.
TanhPoly ode3_residual(const AnsatzInstance& inst);

struct FamilySample {
    Rational beta;
    Rational kappa;
    bool zero = false;
    TanhPoly residual;
};

/// C1/C2 as printed in the source literature vs the background-limit values.
struct ConstantComparison {
    Rational beta, kappa;
    Rational c1_derived, c2_derived;
    Rational c1_literature, c2_literature;
    bool c1_match = false, c2_match = false;
};

struct FamilyReport {
    std::vector<FamilySample> samples;
    std::vector<ConstantComparison> constants;
    bool all_zero = false;
    bool degree_bounds_met = false;  // enough samples to certify the identity
    int beta_count = 0, kappa_count = 0;
};

/// Checks the sech-form family on a (beta, kappa) grid. The residual's
/// coefficients are polynomials of degree <= 8 in beta and <= 3 in kappa, so
/// >= 9 distinct beta and >= 4 distinct kappa samples certify the identity
/// for all beta < 0 and kappa.
FamilyReport verify_family(const std::vector<Rational>& beta_samples,
                           const std::vector<Rational>& kappa_samples);

struct RescaledOdeReport {
    TanhPoly residual_as_printed;   // (1/1680) U'''' - (13/420) U'' - U^2/2
    TanhPoly residual_with_linear;  // same plus (12/35) U
};

/// Substitutes U = sech^4(xi) = (1-T^2)^2 (m = 1) into the rescaled
/// travelling-wave ODE. The printed form leaves -(12/35) sech^4; restoring
/// the (12/35) U linear term gives an exact identity.
RescaledOdeReport rescaled_ode_check();

struct SymbolReport {
    double min_value = 0.0;
    double min_at_k = 0.0;
    bool all_positive = false;
    double value_at_zero = 0.0;
};

/// s(k) = k^4/1680 + 13 k^2/420, the Fourier symbol of the rescaled linear
/// operator; positive for every k != 0 and zero at k = 0.
double rescaled_symbol(double k);
SymbolReport fourier_symbol_positivity(const std::vector<double>& k_samples);

}  // namespace kkp

#endif
