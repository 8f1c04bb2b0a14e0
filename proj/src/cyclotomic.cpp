#include "sl2lc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sl2lc {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

// Dense exact division of integer polynomials, remainder known to be zero.
std::vector<long> exact_divide(const std::vector<long>& num, const std::vector<long>& den) {
    std::vector<long> rem = num;
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (long long i = static_cast<long long>(rem.size()) - 1;
         i >= static_cast<long long>(den.size()) - 1; --i) {
        long c = rem[i];
        if (c == 0) continue;
        long long shift = i - (static_cast<long long>(den.size()) - 1);
        quot[shift] = c;  // den is monic
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
    }
    for (long c : rem)
        if (c != 0) throw Error("cyclotomic polynomial division left a remainder");
    return quot;
}

// Phi_n for small square-free n, by iterated division of X^n - 1.
std::vector<long> cyclotomic_poly(long long n) {
    if (n == 1) return {-1, 1};
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_divide(num, cyclotomic_poly(d));
    }
    return num;
}

} // namespace

std::shared_ptr<const CycContext> CycContext::make(long long order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    auto ctx = std::make_shared<CycContext>();
    ctx->order_ = order;
    ctx->factors_ = factorize(order);
    long long phi = 1, rad = 1;
    for (auto [p, e] : ctx->factors_) {
        rad *= p;
        phi *= (p - 1);
        for (int i = 1; i < e; ++i) phi *= p;
    }
    ctx->phi_ = phi;
    ctx->radical_ = rad;
    ctx->stride_ = order / rad;
    ctx->radical_poly_ = cyclotomic_poly(rad);
    return ctx;
}

CycNum reduce_terms(std::map<long long, Rational>&& terms, const CycContextPtr& ctx) {
    const long long n = ctx->order();
    const long long phi = ctx->phi();
    const long long stride = ctx->stride();
    const auto& divisor = ctx->radical_poly();
    const size_t top = divisor.size() - 1;  // degree of Phi_rad; Phi_N degree = top*stride = phi

    std::map<long long, Rational> work;
    for (auto& [e, c] : terms) {
        if (c == 0) continue;
        long long r = e % n;
        if (r < 0) r += n;
        auto [it, inserted] = work.try_emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) work.erase(it);
        }
    }

    // Sparse long division: eliminate the top term against the monic Phi_N.
    while (!work.empty()) {
        auto last = std::prev(work.end());
        long long e = last->first;
        if (e < phi) break;
        Rational c = std::move(last->second);
        work.erase(last);
        const long long base = e - phi;
        for (size_t t = 0; t < top; ++t) {
            if (divisor[t] == 0) continue;
            Rational delta = c * long(-divisor[t]);
            long long target = base + static_cast<long long>(t) * stride;
            auto [it, inserted] = work.try_emplace(target, delta);
            if (!inserted) {
                it->second += delta;
                if (it->second == 0) work.erase(it);
            }
        }
    }

    CycNum out(ctx);
    out.coeffs_ = std::move(work);
    return out;
}

CycNum CycNum::rational(const Rational& value, CycContextPtr ctx) {
    CycNum out(std::move(ctx));
    if (value != 0) out.coeffs_.emplace(0, value);
    return out;
}

CycNum CycNum::root_of_unity(long long exponent, CycContextPtr ctx) {
    std::map<long long, Rational> terms;
    terms.emplace(exponent, Rational(1));
    return reduce_terms(std::move(terms), ctx);
}

CycNum CycNum::from_terms(const std::map<long long, Rational>& terms, CycContextPtr ctx) {
    auto copy = terms;
    return reduce_terms(std::move(copy), ctx);
}

bool CycNum::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational CycNum::rational_part() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void CycNum::check_same_context(const CycNum& other) const {
    if (!ctx_ || !other.ctx_) throw IncompatibleContext("uninitialized cyclotomic value");
    if (ctx_->order() != other.ctx_->order())
        throw IncompatibleContext("cyclotomic orders differ: " + std::to_string(ctx_->order()) +
                                  " vs " + std::to_string(other.ctx_->order()));
}

bool CycNum::operator==(const CycNum& other) const {
    check_same_context(other);
    return coeffs_ == other.coeffs_;
}

CycNum CycNum::operator+(const CycNum& other) const {
    check_same_context(other);
    CycNum out(ctx_);
    out.coeffs_ = coeffs_;
    for (const auto& [e, c] : other.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

CycNum CycNum::operator-(const CycNum& other) const { return *this + (-other); }

CycNum CycNum::operator-() const {
    CycNum out(ctx_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

CycNum CycNum::operator*(const CycNum& other) const {
    check_same_context(other);
    std::map<long long, Rational> terms;
    const long long n = ctx_->order();
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : other.coeffs_) {
            long long e = e1 + e2;
            if (e >= n) e -= n;
            Rational c = c1 * c2;
            auto [it, inserted] = terms.try_emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    return reduce_terms(std::move(terms), ctx_);
}

CycNum CycNum::operator*(const Rational& scalar) const {
    CycNum out(ctx_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, c * scalar);
    return out;
}

CycNum CycNum::operator/(const CycNum& other) const { return *this * other.inverse(); }

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("cyclotomic division by zero");
    if (is_rational()) return rational(Rational(1) / rational_part(), ctx_);
    if (coeffs_.size() == 1) {
        // c * zeta^e inverts term-wise.
        auto [e, c] = *coeffs_.begin();
        return root_of_unity(ctx_->order() - e, ctx_) * (Rational(1) / c);
    }

    // Extended Euclid against Phi_N, dense.  Only sensible at moderate degree;
    // the large contexts in this project never divide by dense elements.
    const long long phi = ctx_->phi();
    if (phi > 1 << 14)
        throw Error("dense cyclotomic inversion not supported at degree " + std::to_string(phi));

    using Poly = std::vector<Rational>;
    auto degree = [](const Poly& p) {
        for (long long i = static_cast<long long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1LL;
    };

    Poly modulus(phi + 1, Rational(0));
    const auto& rp = ctx_->radical_poly();
    for (size_t t = 0; t < rp.size(); ++t)
        if (rp[t] != 0) modulus[t * ctx_->stride()] = Rational(rp[t]);
    Poly value(phi, Rational(0));
    for (const auto& [e, c] : coeffs_) value[e] = c;

    // Invariants: s0*value = r0 (mod Phi_N), s1*value = r1 (mod Phi_N).
    Poly r0 = modulus, r1 = value;
    Poly s0(1, Rational(0)), s1(1, Rational(1));
    auto shrink = [&](Poly& p) {
        long long d = degree(p);
        p.resize(static_cast<size_t>(std::max(d + 1, 1LL)), Rational(0));
    };
    while (degree(r1) > 0) {
        long long d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
        Rational factor = r0[d0] / r1[d1];
        long long shift = d0 - d1;
        for (long long i = 0; i <= d1; ++i) r0[i + shift] -= factor * r1[i];
        if (s1.size() + shift > s0.size()) s0.resize(s1.size() + shift, Rational(0));
        for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= factor * s1[i];
        shrink(r0);
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (degree(r1) != 0 || r1[0] == 0) throw DivisionByZero("element has no inverse modulo Phi_N");
    Rational lead = r1[0];
    std::map<long long, Rational> terms;
    for (size_t i = 0; i < s1.size(); ++i)
        if (s1[i] != 0) terms.emplace(static_cast<long long>(i), s1[i] / lead);
    return reduce_terms(std::move(terms), ctx_);
}

CycNum CycNum::conjugate() const {
    std::map<long long, Rational> terms;
    const long long n = ctx_->order();
    for (const auto& [e, c] : coeffs_) terms.emplace(e == 0 ? 0 : n - e, c);
    return reduce_terms(std::move(terms), ctx_);
}

CycNum CycNum::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    CycNum base = *this;
    CycNum out = rational(Rational(1), ctx_);
    while (exponent > 0) {
        if (exponent & 1) out = out * base;
        base = base * base;
        exponent >>= 1;
    }
    return out;
}

std::complex<double> CycNum::embed() const {
    std::complex<double> acc{0.0, 0.0};
    const double n = static_cast<double>(ctx_->order());
    for (const auto& [e, c] : coeffs_) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
        acc += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycNum::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*z^" << e;
    }
    return os.str();
}

} // namespace sl2lc
