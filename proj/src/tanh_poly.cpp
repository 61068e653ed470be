#include "kkp/tanh_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kkp {

TanhPoly::TanhPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
TanhPoly::TanhPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TanhPoly TanhPoly::constant(const Rational& c) { return TanhPoly{{c}}; }

TanhPoly TanhPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return TanhPoly(std::move(v));
}

void TanhPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& TanhPoly::coeff(int j) const {
    static const Rational zero = 0;
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[j];
}

TanhPoly TanhPoly::operator+(const TanhPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t j = 0; j < v.size(); ++j) {
        if (j < coeffs_.size()) v[j] += coeffs_[j];
        if (j < o.coeffs_.size()) v[j] += o.coeffs_[j];
    }
    return TanhPoly(std::move(v));
}

TanhPoly TanhPoly::operator-(const TanhPoly& o) const {
    return *this + o * Rational(-1);
}

TanhPoly TanhPoly::operator*(const TanhPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return TanhPoly(std::move(v));
}

TanhPoly TanhPoly::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x *= c;
    return TanhPoly(std::move(v));
}

Rational TanhPoly::eval(const Rational& T) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * T + *it;
    return acc;
}

double TanhPoly::eval(double T) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * T + it->convert_to<double>();
    return acc;
}

std::string TanhPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[j] << ")";
        if (j >= 1) os << "*T";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return os.str();
}

TanhPoly TanhPoly::xi_derivative_factor() const {
    // D(P) = (1 - T^2) P'
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() + 1);
    for (size_t j = 1; j < coeffs_.size(); ++j) {
        v[j - 1] += Rational(j) * coeffs_[j];
        v[j + 1] -= Rational(j) * coeffs_[j];
    }
    return TanhPoly(std::move(v));
}

TanhPoly tanh_derivative(const TanhPoly& poly, const Rational& m2, int order) {
    if (order < 0) throw std::invalid_argument("tanh_derivative: negative order");
    if (order % 2 != 0)
        throw std::invalid_argument("tanh_derivative: odd m power; pair derivatives");
    TanhPoly p = poly;
    for (int k = 0; k < order / 2; ++k)
        p = p.xi_derivative_factor().xi_derivative_factor() * m2;
    return p;
}

int tanh_balance(int a_factors, int a_order, int b_factors, int b_order) {
    const int df = a_factors - b_factors;
    const int dord = b_order - a_order;
    if (df == 0 || dord % df != 0 || dord / df <= 0)
        throw std::domain_error("no positive balance");
    return dord / df;
}

int balance_degree() { return tanh_balance(3, 0, 2, 4); }

}  // namespace kkp
