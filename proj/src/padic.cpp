#include "sl2lc/padic.hpp"

#include <sstream>

namespace sl2lc {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FieldContextPtr FieldContext::make(long long p, int level, int shell_depth, int prec) {
    if (!is_prime(p)) throw ConfigError("residue characteristic must be prime, got " + std::to_string(p));
    if (level < 1) throw ConfigError("character level must be positive");
    if (shell_depth < 0) shell_depth = level + 4;
    if (shell_depth < level + 2) throw ConfigError("shell depth must be at least level + 2");
    if (prec < 0) prec = level + shell_depth + 6;
    if (prec < level + shell_depth + 4) throw ConfigError("precision must be at least level + shell_depth + 4");

    auto ctx = std::make_shared<FieldContext>();
    ctx->p_ = p;
    ctx->level_ = level;
    ctx->shell_depth_ = shell_depth;
    ctx->prec_ = prec;

    // Cyclotomic order lcm(p^(m+2), 2): hosts the additive character down to
    // the deepest shells and the quadratic character values.
    long long order = 1;
    for (int i = 0; i < shell_depth + 2; ++i) order *= p;
    if (p != 2) order *= 2;
    ctx->cyc_ = CycContext::make(order);

    int cache = prec + shell_depth + 8;
    ctx->pow_cache_.reserve(cache + 1);
    mpz_class acc = 1;
    for (int i = 0; i <= cache; ++i) {
        ctx->pow_cache_.push_back(acc);
        acc *= static_cast<long>(p);
    }
    return ctx;
}

const mpz_class& FieldContext::pow(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= pow_cache_.size())
        throw Error("p-power cache exceeded at exponent " + std::to_string(k));
    return pow_cache_[static_cast<size_t>(k)];
}

PadicNum PadicNum::zero(FieldContextPtr ctx) {
    PadicNum x;
    x.ctx_ = std::move(ctx);
    return x;
}

PadicNum PadicNum::bounded_zero(FieldContextPtr ctx, long long abs_prec) {
    PadicNum x;
    x.ctx_ = std::move(ctx);
    x.val_ = abs_prec;
    x.rel_ = 0;
    return x;
}

PadicNum PadicNum::make(long long val, const mpz_class& unit, int rel, FieldContextPtr ctx) {
    if (rel < 1) throw Error("unit form needs at least one digit");
    if (rel > ctx->precision()) rel = ctx->precision();
    PadicNum x;
    x.ctx_ = std::move(ctx);
    x.val_ = val;
    x.rel_ = rel;
    mpz_class m = x.ctx_->pow(rel);
    mpz_mod(x.unit_.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
    if (x.unit_ == 0 || mpz_divisible_ui_p(x.unit_.get_mpz_t(), static_cast<unsigned long>(x.ctx_->prime())))
        throw Error("unit part is divisible by p");
    return x;
}

PadicNum PadicNum::from_integer(long long value, FieldContextPtr ctx) {
    if (value == 0) return zero(std::move(ctx));
    long long p = ctx->prime();
    long long val = 0;
    while (value % p == 0) { value /= p; ++val; }
    int prec = ctx->precision();
    return make(val, mpz_class(static_cast<long>(value)), prec, std::move(ctx));
}

PadicNum PadicNum::from_rational(long long num, long long den, FieldContextPtr ctx) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    PadicNum n = from_integer(num, ctx);
    PadicNum d = from_integer(den, ctx);
    return n / d;
}

PadicNum PadicNum::uniformizer_power(long long k, FieldContextPtr ctx) {
    int prec = ctx->precision();
    return make(k, mpz_class(1), prec, std::move(ctx));
}

long long PadicNum::valuation() const {
    if (is_bounded_zero())
        throw PrecisionExhausted("valuation known only as >= " + std::to_string(val_));
    return val_;
}

bool PadicNum::valuation_at_least(long long k) const {
    if (is_exact_zero()) return true;
    if (is_unit_form()) return val_ >= k;
    if (val_ >= k) return true;  // O(p^A) with A >= k
    throw PrecisionExhausted("cannot decide valuation >= " + std::to_string(k));
}

bool PadicNum::valuation_equals(long long k) const {
    if (is_exact_zero()) return false;
    if (is_unit_form()) return val_ == k;
    if (val_ > k) return false;  // true valuation >= A > k
    throw PrecisionExhausted("cannot decide valuation == " + std::to_string(k));
}

mpz_class PadicNum::unit_residue(int k) const {
    if (!is_unit_form()) throw PrecisionExhausted("no unit digits on a zero value");
    if (rel_ < k) throw PrecisionExhausted("unit known mod p^" + std::to_string(rel_) +
                                           ", need mod p^" + std::to_string(k));
    mpz_class out;
    mpz_class m = ctx_->pow(k);
    mpz_mod(out.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    return out;
}

mpz_class PadicNum::residue(int k) const {
    if (is_exact_zero()) return mpz_class(0);
    if (val_ < 0) throw Error("residue of a non-integral value");
    if (abs_precision() < k) throw PrecisionExhausted("absolute precision below p^" + std::to_string(k));
    if (val_ >= k) return mpz_class(0);
    mpz_class out = unit_ * ctx_->pow(static_cast<int>(val_));
    mpz_class m = ctx_->pow(k);
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
    return out;
}

void PadicNum::check_same_context(const PadicNum& other) const {
    if (!ctx_ || !other.ctx_) throw IncompatibleContext("uninitialized p-adic value");
    if (ctx_->prime() != other.ctx_->prime() || ctx_->precision() != other.ctx_->precision())
        throw IncompatibleContext("p-adic values from different field contexts");
}

PadicNum PadicNum::operator-() const {
    if (!is_unit_form()) return *this;
    PadicNum x = *this;
    x.unit_ = ctx_->pow(rel_) - unit_;
    return x;
}

PadicNum PadicNum::operator+(const PadicNum& other) const {
    check_same_context(other);
    if (is_exact_zero()) return other;
    if (other.is_exact_zero()) return *this;

    long long abs_a = abs_precision(), abs_b = other.abs_precision();
    long long cap = std::min(abs_a, abs_b);

    if (!is_unit_form() && !other.is_unit_form()) return bounded_zero(ctx_, cap);
    if (!is_unit_form()) {
        // O(p^A) + unit form: digits of the unit form survive below A.
        if (val_ <= other.val_) return bounded_zero(ctx_, val_);
        int rel = static_cast<int>(std::min<long long>(other.rel_, val_ - other.val_));
        return make(other.val_, other.unit_, rel, ctx_);
    }
    if (!other.is_unit_form()) return other + *this;

    long long vmin = std::min(val_, other.val_);
    int digits = static_cast<int>(cap - vmin);  // >= 1 since rel >= 1 on both
    mpz_class m = ctx_->pow(digits);
    mpz_class s = unit_ * ctx_->pow(static_cast<int>(val_ - vmin)) +
                  other.unit_ * ctx_->pow(static_cast<int>(other.val_ - vmin));
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
    if (s == 0) return bounded_zero(ctx_, cap);

    // cancellation depth
    long long w = 0;
    while (mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(ctx_->prime()))) {
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(ctx_->prime()));
        ++w;
    }
    int rel = static_cast<int>(digits - w);
    if (rel < ctx_->precision_floor())
        throw PrecisionExhausted("additive cancellation left " + std::to_string(rel) + " digits");
    return make(vmin + w, s, rel, ctx_);
}

PadicNum PadicNum::operator*(const PadicNum& other) const {
    check_same_context(other);
    if (is_exact_zero() || other.is_exact_zero()) return zero(ctx_);
    if (!is_unit_form() || !other.is_unit_form())
        return bounded_zero(ctx_, val_ + other.val_);  // O(p^(A+v))
    int rel = std::min(rel_, other.rel_);
    return make(val_ + other.val_, unit_ * other.unit_, rel, ctx_);
}

PadicNum PadicNum::inverse() const {
    if (is_exact_zero()) throw DivisionByZero("p-adic inverse of zero");
    if (!is_unit_form()) throw PrecisionExhausted("inverse of a value indistinguishable from zero");
    mpz_class inv;
    mpz_class m = ctx_->pow(rel_);
    if (mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("unit inversion failed");
    return make(-val_, inv, rel_, ctx_);
}

PadicNum PadicNum::operator/(const PadicNum& other) const {
    check_same_context(other);
    if (other.is_exact_zero()) throw DivisionByZero("p-adic division by zero");
    if (!other.is_unit_form()) throw PrecisionExhausted("division by a value indistinguishable from zero");
    if (is_exact_zero()) return zero(ctx_);
    if (!is_unit_form()) return bounded_zero(ctx_, val_ - other.val_);
    return *this * other.inverse();
}

bool PadicNum::agrees_with(const PadicNum& other) const {
    check_same_context(other);
    long long cap = std::min(abs_precision(), other.abs_precision());
    if (cap == kInfValuation) return is_exact_zero() && other.is_exact_zero();
    long long vmin = std::min(valuation_lower_bound(), other.valuation_lower_bound());
    if (vmin >= cap) return true;
    int digits = static_cast<int>(cap - vmin);
    mpz_class m = ctx_->pow(digits);
    auto repr = [&](const PadicNum& x) {
        if (!x.is_unit_form()) return mpz_class(0);
        mpz_class r = x.unit_ * ctx_->pow(static_cast<int>(x.val_ - vmin));
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        return r;
    };
    return repr(*this) == repr(other);
}

std::string PadicNum::to_string() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    if (is_bounded_zero()) {
        os << "O(p^" << val_ << ")";
        return os.str();
    }
    os << unit_.get_str() << "*p^" << val_ << " + O(p^" << (val_ + rel_) << ")";
    return os.str();
}

} // namespace sl2lc
