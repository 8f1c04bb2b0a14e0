#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2lc/cyclotomic.hpp"
#include "sl2lc/errors.hpp"

namespace sl2lc {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Field and measure context shared by every computation: the prime p,
/// the character level, the global precision budget, the shell range,
/// and the cyclotomic coefficient field.
class FieldContext {
public:
    /// shell_depth defaults to level + 4, prec to level + shell_depth + 6.
    static FieldContextPtr make(long long p, int level, int shell_depth = -1, int prec = -1);

    long long prime() const { return p_; }
    long long residue_size() const { return p_; }  // q = p, prime residue field
    int level() const { return level_; }           // conductor exponent of the character
    int precision() const { return prec_; }
    int shell_depth() const { return shell_depth_; }
    long long cyclotomic_order() const { return cyc_->order(); }
    const CycContextPtr& cyclotomic() const { return cyc_; }

    /// Relative-precision floor below which nonzero arithmetic results raise.
    int precision_floor() const { return level_ + 1; }

    /// p^k as an exact integer, 0 <= k <= precision + shell margin.
    const mpz_class& pow(int k) const;

    CycNum cyc_rational(const Rational& r) const { return CycNum::rational(r, cyc_); }
    CycNum cyc_one() const { return CycNum::integer(1, cyc_); }
    CycNum cyc_zero() const { return CycNum::zero(cyc_); }

private:
    long long p_ = 0;
    int level_ = 0;
    int prec_ = 0;
    int shell_depth_ = 0;
    CycContextPtr cyc_;
    std::vector<mpz_class> pow_cache_;
};

/// Capped-relative-precision element of the local field.
///
/// Three states:
///   exact zero            valuation = +infinity
///   bounded zero O(p^A)   valuation tracked only as >= A (rel == 0)
///   unit form p^v * u     u coprime to p, known modulo p^rel, rel >= 1
///
/// Absolute precision is always valuation + rel.  Addition tracks
/// cancellation; a sum that cancels below its absolute precision becomes a
/// bounded zero rather than a silently wrong value.
class PadicNum {
public:
    static constexpr long long kInfValuation = std::numeric_limits<long long>::max() / 4;

    PadicNum() = default;

    static PadicNum zero(FieldContextPtr ctx);
    static PadicNum bounded_zero(FieldContextPtr ctx, long long abs_prec);
    static PadicNum from_integer(long long value, FieldContextPtr ctx);
    static PadicNum from_rational(long long num, long long den, FieldContextPtr ctx);
    /// p^val * unit at relative precision rel (unit reduced mod p^rel).
    static PadicNum make(long long val, const mpz_class& unit, int rel, FieldContextPtr ctx);
    static PadicNum one(FieldContextPtr ctx) { return from_integer(1, std::move(ctx)); }
    static PadicNum uniformizer_power(long long k, FieldContextPtr ctx);

    const FieldContextPtr& context() const { return ctx_; }

    bool is_exact_zero() const { return val_ == kInfValuation; }
    bool is_bounded_zero() const { return rel_ == 0 && !is_exact_zero(); }
    bool is_unit_form() const { return rel_ >= 1; }

    /// Exact valuation; +infinity sentinel for exact zero; raises on a bounded zero.
    long long valuation() const;
    /// Largest k with this value provably in p^k * o.
    long long valuation_lower_bound() const { return val_; }
    long long abs_precision() const { return is_exact_zero() ? kInfValuation : val_ + rel_; }
    int rel_precision() const { return rel_; }
    const mpz_class& unit() const { return unit_; }

    /// Decidable valuation tests; raise PrecisionExhausted when the digits
    /// carried cannot settle the question.
    bool valuation_at_least(long long k) const;
    bool valuation_equals(long long k) const;

    /// Unit residue modulo p^k (requires unit form with rel >= k).
    mpz_class unit_residue(int k) const;
    long long unit_residue_ll(int k) const { return unit_residue(k).get_si(); }
    /// Integer residue of the value modulo p^k; requires valuation >= 0.
    mpz_class residue(int k) const;

    PadicNum operator+(const PadicNum& other) const;
    PadicNum operator-(const PadicNum& other) const { return *this + (-other); }
    PadicNum operator*(const PadicNum& other) const;
    PadicNum operator/(const PadicNum& other) const;
    PadicNum operator-() const;
    PadicNum inverse() const;

    /// Equality of the carried digits at the shared absolute precision.
    bool agrees_with(const PadicNum& other) const;

    std::string to_string() const;

private:
    void check_same_context(const PadicNum& other) const;

    FieldContextPtr ctx_;
    long long val_ = kInfValuation;
    int rel_ = 0;
    mpz_class unit_;
};

} // namespace sl2lc
