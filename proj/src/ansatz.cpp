#include "kkp/ansatz.hpp"

#include <set>
#include <stdexcept>

namespace kkp {

std::pair<Rational, Rational> derive_constants(const Rational& a0, const Rational& kappa) {
    const Rational& p = a0;
    Rational c1 = p * p / 2 - kappa * p;
    Rational c2 = p * p * p / 6 - kappa * p * p / 2 - c1 * p;
    return {c1, c2};
}

AnsatzInstance family_instance(const Rational& beta, const Rational& kappa) {
    if (beta >= 0) throw std::domain_error("sech-form family requires beta < 0");
    AnsatzInstance inst;
    inst.beta = beta;
    inst.kappa = kappa;
    inst.m2 = -beta / 52;
    const Rational four_m4 = (4 * inst.m2) * (4 * inst.m2);  // (2m)^4 = beta^2/169
    inst.a0 = kappa + 36 * four_m4;
    inst.a1 = 0;
    inst.a2 = -105 * four_m4;
    std::tie(inst.C1, inst.C2) = derive_constants(inst.a0, inst.kappa);
    return inst;
}

TanhPoly ode3_residual(const AnsatzInstance& inst) {
    // U as a polynomial in T via sech^2 = 1 - T^2
    const TanhPoly s2{{Rational(1), Rational(0), Rational(-1)}};
    TanhPoly U = TanhPoly::constant(inst.a0) + s2 * inst.a1 + s2 * s2 * inst.a2;

    const TanhPoly d1 = U.xi_derivative_factor();        // U'   = m   * d1
    const TanhPoly d2 = d1.xi_derivative_factor();       // U''  = m^2 * d2
    const TanhPoly d3 = d2.xi_derivative_factor();       // U''' = m^3 * d3
    const Rational& m2 = inst.m2;

    return U * U * U * Rational(1, 6) - U * U * (inst.kappa / 2)
         + d1 * d1 * (inst.beta * m2 / 2)                 // beta U'^2 / 2
         + d1 * d3 * (m2 * m2)                            // U' U'''
         - d2 * d2 * (m2 * m2 / 2)                        // -U''^2 / 2
         - U * inst.C1 - TanhPoly::constant(inst.C2);
}

FamilyReport verify_family(const std::vector<Rational>& beta_samples,
                           const std::vector<Rational>& kappa_samples) {
    FamilyReport report;
    std::set<Rational> betas(beta_samples.begin(), beta_samples.end());
    std::set<Rational> kappas(kappa_samples.begin(), kappa_samples.end());
    report.beta_count = static_cast<int>(betas.size());
    report.kappa_count = static_cast<int>(kappas.size());
    report.degree_bounds_met = report.beta_count >= 9 && report.kappa_count >= 4;

    report.all_zero = true;
    for (const auto& beta : beta_samples) {
        for (const auto& kappa : kappa_samples) {
            const AnsatzInstance inst = family_instance(beta, kappa);
            FamilySample s;
            s.beta = beta;
            s.kappa = kappa;
            s.residual = ode3_residual(inst);
            s.zero = s.residual.is_zero();
            report.all_zero = report.all_zero && s.zero;
            report.samples.push_back(std::move(s));

            // literature values of the integration constants, Eq.-level check
            const Rational Q = (4 * inst.m2) * (4 * inst.m2);
            ConstantComparison cc;
            cc.beta = beta;
            cc.kappa = kappa;
            cc.c1_derived = inst.C1;
            cc.c2_derived = inst.C2;
            cc.c1_literature = Rational(1, 2) * (kappa - 36 * Q) * (kappa + 36 * Q);
            cc.c2_literature = Rational(1, 6) * (kappa - 72 * Q) * (kappa + 36 * Q);
            cc.c1_match = cc.c1_derived == cc.c1_literature;
            cc.c2_match = cc.c2_derived == cc.c2_literature;
            report.constants.push_back(std::move(cc));
        }
    }
    return report;
}

RescaledOdeReport rescaled_ode_check() {
    const TanhPoly s2{{Rational(1), Rational(0), Rational(-1)}};
    const TanhPoly U = s2 * s2;  // sech^4, m = 1
    const Rational m2 = 1;
    const TanhPoly U2 = tanh_derivative(U, m2, 2);
    const TanhPoly U4 = tanh_derivative(U, m2, 4);
    RescaledOdeReport rep;
    rep.residual_as_printed =
        U4 * Rational(1, 1680) - U2 * Rational(13, 420) - U * U * Rational(1, 2);
    rep.residual_with_linear = rep.residual_as_printed + U * Rational(12, 35);
    return rep;
}

double rescaled_symbol(double k) {
    const double k2 = k * k;
    return k2 * k2 / 1680.0 + 13.0 * k2 / 420.0;
}

SymbolReport fourier_symbol_positivity(const std::vector<double>& k_samples) {
    SymbolReport rep;
    rep.value_at_zero = rescaled_symbol(0.0);
    rep.all_positive = true;
    bool first = true;
    for (double k : k_samples) {
        if (k == 0.0) continue;
        const double s = rescaled_symbol(k);
        if (first || s < rep.min_value) {
            rep.min_value = s;
            rep.min_at_k = k;
            first = false;
        }
        rep.all_positive = rep.all_positive && s > 0.0;
    }
    return rep;
}

}  // namespace kkp
