#ifndef KKP_TANH_POLY_HPP
#define KKP_TANH_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace kkp {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in T = tanh(m xi) with exact rational coefficients,
/// coefficients[j] multiplying T^j. Trailing zeros are always trimmed.
class TanhPoly {
  public:
    TanhPoly() = default;
    TanhPoly(std::initializer_list<Rational> coeffs);
    explicit TanhPoly(std::vector<Rational> coeffs);
    static TanhPoly constant(const Rational& c);
    static TanhPoly monomial(int degree, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    const Rational& coeff(int j) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TanhPoly operator+(const TanhPoly& o) const;
    TanhPoly operator-(const TanhPoly& o) const;
    TanhPoly operator*(const TanhPoly& o) const;
    TanhPoly operator*(const Rational& c) const;
    bool operator==(const TanhPoly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& T) const;
    double eval(double T) const;
    std::string str() const;

    /// d/dT-level derivative factor: D(P) = (1 - T^2) P'(T), so that
    /// d/dxi P(T) = m * D(P). One call peels exactly one factor of m.
    TanhPoly xi_derivative_factor() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact d^order/dxi^order of poly, for even order (odd derivatives carry an
/// unpaired factor of m and do not stay polynomial in T with m^2 data alone).
TanhPoly tanh_derivative(const TanhPoly& poly, const Rational& m2, int order);

/// Degree balance n solving  a_factors*n + a_order = b_factors*n + b_order,
/// e.g. U^3 vs U'U''' is (3,0) vs (2,4) giving n = 4.
int tanh_balance(int a_factors, int a_order, int b_factors, int b_order);

/// Balance for the K-KP travelling-wave ODE: U^3 against U'U'''.
int balance_degree();

}  // namespace kkp

#endif
