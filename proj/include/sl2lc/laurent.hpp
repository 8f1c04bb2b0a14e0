#pragma once

#include <map>

#include "sl2lc/cyclotomic.hpp"

namespace sl2lc {

/// Finite Laurent polynomial in the formal variable X = q^(-s), with exact
/// cyclotomic coefficients.  Substituting s -> 1-s sends c*X^k to
/// c*q^(-k)*X^(-k); substituting s -> -s sends it to c*X^(-k).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(CycContextPtr ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly zero(CycContextPtr ctx) { return LaurentPoly(std::move(ctx)); }
    static LaurentPoly monomial(const CycNum& coeff, int degree);
    static LaurentPoly constant(const CycNum& coeff) { return monomial(coeff, 0); }

    const CycContextPtr& context() const { return ctx_; }
    const std::map<int, CycNum>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int monomial_degree() const;
    CycNum coeff(int degree) const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other) { return *this = *this + other; }

    LaurentPoly scaled(const CycNum& scalar) const;
    LaurentPoly scaled(const Rational& scalar) const;

    /// Division by a monomial divisor.
    LaurentPoly divided_by_monomial(const LaurentPoly& divisor) const;

    /// X^k -> X^(-k)
    LaurentPoly substitute_minus_s() const;
    /// c*X^k -> c*q^(-k)*X^(-k)
    LaurentPoly substitute_one_minus_s(long long q) const;

    std::string to_string() const;

private:
    void add_term(int degree, const CycNum& coeff);

    CycContextPtr ctx_;
    std::map<int, CycNum> coeffs_;  // no zero coefficients stored
};

} // namespace sl2lc
