#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2lc/errors.hpp"

namespace sl2lc {

using Rational = mpq_class;

/// Shared data for a fixed cyclotomic order N.
///
/// The canonical representation of an element of Q(zeta_N) is the remainder
/// of its defining polynomial modulo the N-th cyclotomic polynomial Phi_N,
/// i.e. exponents live in [0, phi(N)).  Phi_N(X) = Phi_rad(X^(N/rad)) where
/// rad is the radical of N, so the divisor stays sparse even when N is large;
/// Phi_rad itself is computed densely by iterated exact division of X^rad - 1.
class CycContext {
public:
    static std::shared_ptr<const CycContext> make(long long order);

    long long order() const { return order_; }
    long long phi() const { return phi_; }
    long long radical() const { return radical_; }
    long long stride() const { return stride_; }

    /// Phi_rad coefficients, degree phi(rad); Phi_N term t has exponent t*stride.
    const std::vector<long>& radical_poly() const { return radical_poly_; }

    const std::vector<std::pair<long long, int>>& factorization() const { return factors_; }

private:
    long long order_ = 1;
    long long phi_ = 1;
    long long radical_ = 1;
    long long stride_ = 1;
    std::vector<long> radical_poly_;
    std::vector<std::pair<long long, int>> factors_;
};

using CycContextPtr = std::shared_ptr<const CycContext>;

/// Exact element of Q(zeta_N), always kept in canonical form.
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(CycContextPtr ctx) : ctx_(std::move(ctx)) {}

    static CycNum zero(CycContextPtr ctx) { return CycNum(std::move(ctx)); }
    static CycNum rational(const Rational& value, CycContextPtr ctx);
    static CycNum integer(long value, CycContextPtr ctx) { return rational(Rational(value), std::move(ctx)); }
    /// zeta_N^exponent (exponent taken mod N).
    static CycNum root_of_unity(long long exponent, CycContextPtr ctx);
    /// Build from an arbitrary exponent->coefficient map and reduce.
    static CycNum from_terms(const std::map<long long, Rational>& terms, CycContextPtr ctx);

    const CycContextPtr& context() const { return ctx_; }
    const std::map<long long, Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    /// The exponent-zero coefficient; exact value only when is_rational().
    Rational rational_part() const;

    bool operator==(const CycNum& other) const;
    bool operator!=(const CycNum& other) const { return !(*this == other); }

    CycNum operator+(const CycNum& other) const;
    CycNum operator-(const CycNum& other) const;
    CycNum operator*(const CycNum& other) const;
    CycNum operator/(const CycNum& other) const;
    CycNum operator-() const;

    CycNum& operator+=(const CycNum& other) { return *this = *this + other; }
    CycNum& operator-=(const CycNum& other) { return *this = *this - other; }
    CycNum& operator*=(const CycNum& other) { return *this = *this * other; }

    CycNum operator*(const Rational& scalar) const;
    CycNum operator+(const Rational& scalar) const { return *this + rational(scalar, ctx_); }
    CycNum operator-(const Rational& scalar) const { return *this - rational(scalar, ctx_); }

    CycNum inverse() const;
    /// Galois conjugation zeta -> zeta^(N-1); fixes rationals, an involution.
    CycNum conjugate() const;
    CycNum pow(long long exponent) const;

    /// Numerical embedding at zeta = exp(2*pi*i/N).  Display only.
    std::complex<double> embed() const;

    /// "c0 + c1*z^1 + ..." with exact rational coefficients.
    std::string to_string() const;

private:
    void check_same_context(const CycNum& other) const;

    CycContextPtr ctx_;
    std::map<long long, Rational> coeffs_;

    friend CycNum reduce_terms(std::map<long long, Rational>&& terms, const CycContextPtr& ctx);
};

/// Canonical remainder mod Phi_N of a raw exponent->coefficient polynomial.
CycNum reduce_terms(std::map<long long, Rational>&& terms, const CycContextPtr& ctx);

} // namespace sl2lc
