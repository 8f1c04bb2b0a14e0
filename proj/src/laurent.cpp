#include "sl2lc/laurent.hpp"

#include <sstream>

namespace sl2lc {

LaurentPoly LaurentPoly::monomial(const CycNum& coeff, int degree) {
    LaurentPoly out(coeff.context());
    if (!coeff.is_zero()) out.coeffs_.emplace(degree, coeff);
    return out;
}

int LaurentPoly::monomial_degree() const {
    if (!is_monomial()) throw Error("not a monomial: " + to_string());
    return coeffs_.begin()->first;
}

CycNum LaurentPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    if (it != coeffs_.end()) return it->second;
    return CycNum::zero(ctx_);
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    if (!ctx_ || !other.ctx_) throw IncompatibleContext("uninitialized Laurent polynomial");
    if (ctx_->order() != other.ctx_->order()) throw IncompatibleContext("Laurent coefficients from different orders");
    return coeffs_ == other.coeffs_;
}

void LaurentPoly::add_term(int degree, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [d, c] : other.coeffs_) out.add_term(d, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ctx_);
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out(ctx_);
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : other.coeffs_) out.add_term(d1 + d2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::scaled(const CycNum& scalar) const {
    LaurentPoly out(ctx_);
    for (const auto& [d, c] : coeffs_) out.add_term(d, c * scalar);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& scalar) const {
    LaurentPoly out(ctx_);
    if (scalar == 0) return out;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, c * scalar);
    return out;
}

LaurentPoly LaurentPoly::divided_by_monomial(const LaurentPoly& divisor) const {
    if (!divisor.is_monomial()) throw Error("division only by monomials");
    int d = divisor.monomial_degree();
    CycNum inv = divisor.coeffs_.begin()->second.inverse();
    LaurentPoly out(ctx_);
    for (const auto& [deg, c] : coeffs_) out.add_term(deg - d, c * inv);
    return out;
}

LaurentPoly LaurentPoly::substitute_minus_s() const {
    LaurentPoly out(ctx_);
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(-d, c);
    return out;
}

LaurentPoly LaurentPoly::substitute_one_minus_s(long long q) const {
    LaurentPoly out(ctx_);
    for (const auto& [d, c] : coeffs_) {
        Rational factor(1);
        long long qq = q;
        if (d >= 0) {
            for (int i = 0; i < d; ++i) factor /= static_cast<long>(qq);
        } else {
            for (int i = 0; i < -d; ++i) factor *= static_cast<long>(qq);
        }
        out.coeffs_.emplace(-d, c * factor);
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (d != 0) os << "*X^" << d;
    }
    return os.str();
}

} // namespace sl2lc
