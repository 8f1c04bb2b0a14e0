#include "sl2lc/characters.hpp"

#include <numeric>

namespace sl2lc {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Smallest primitive root modulo an odd prime power p^k.
long long primitive_root(long long p, int k) {
    long long group = p - 1;
    std::vector<long long> prime_factors;
    long long n = group;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_factors.push_back(n);

    long long g = 0;
    for (long long cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (long long f : prime_factors)
            if (mod_pow(cand, group / f, p) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (k == 1) return g;
    // lift: g stays primitive mod p^k unless g^(p-1) = 1 mod p^2
    if (mod_pow(g, p - 1, p * p) == 1) g += p;
    return g;
}

} // namespace

MultCharacter::MultCharacter(long long p, int level,
                             std::vector<std::pair<long long, int>> generator_signs)
    : p_(p), level_(level), modulus_(pow_ll(p, level)), generator_signs_(std::move(generator_signs)) {
    table_.assign(static_cast<size_t>(modulus_), 0);
    // fill by walking words in the generators (groups here have order <= a few dozen)
    table_[1 % modulus_] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (long long r = 0; r < modulus_; ++r) {
            if (table_[r] == 0) continue;
            for (const auto& [g, e] : generator_signs_) {
                long long s = r * (g % modulus_) % modulus_;
                signed char v = static_cast<signed char>(table_[r] * (e % 2 == 0 ? 1 : -1));
                if (table_[s] == 0) { table_[s] = v; grew = true; }
                else if (table_[s] != v) throw Error("inconsistent character data");
            }
        }
    }
    for (long long r = 1; r < modulus_; ++r)
        if (std::gcd(r, modulus_) == 1 && table_[r] == 0)
            throw Error("generators do not span the unit group");
}

int MultCharacter::sign_at_residue(const mpz_class& residue) const {
    mpz_class r;
    mpz_class m(static_cast<long>(modulus_));
    mpz_mod(r.get_mpz_t(), residue.get_mpz_t(), m.get_mpz_t());
    long long idx = static_cast<long long>(r.get_si());
    if (idx % p_ == 0 || table_[idx] == 0) throw NotAUnit("character argument is not a unit");
    return table_[idx];
}

CycNum MultCharacter::eval(const PadicNum& x) const {
    if (!x.valuation_equals(0)) throw NotAUnit("multiplicative character needs a unit");
    int sign = sign_at_residue(x.unit_residue(level_));
    return CycNum::integer(sign, x.context()->cyclotomic());
}

CycNum ExtChar::eval(const PadicNum& x) const {
    if (x.is_exact_zero() || x.is_bounded_zero())
        throw NotAUnit("character of F^x evaluated at zero");
    int s = sign(x.valuation(), x.unit_residue(unit_part_.level()));
    return CycNum::integer(s, x.context()->cyclotomic());
}

CycNum AddChar::eval(const PadicNum& x, const FieldContext& ctx) const {
    const auto& cyc = ctx.cyclotomic();
    if (x.is_exact_zero()) return CycNum::integer(1, cyc);
    if (x.valuation_at_least(0)) return CycNum::integer(1, cyc);
    long long k = -x.valuation();
    long long pk = 1;
    for (long long i = 0; i < k; ++i) pk *= ctx.prime();
    if (cyc->order() % pk != 0)
        throw Error("additive character argument deeper than the cyclotomic order supports");
    mpz_class a = x.unit_residue(static_cast<int>(k));
    long long exponent = a.get_si() % pk;
    exponent = exponent * (cyc->order() / pk) % cyc->order();
    if (sign_ == -1) exponent = (cyc->order() - exponent) % cyc->order();
    return CycNum::root_of_unity(exponent, cyc);
}

CycNum AddChar::eval_conj(const PadicNum& x, const FieldContext& ctx) const {
    return conjugate_char().eval(x, ctx);
}

std::vector<MultCharacter> ramified_quadratic_chars(long long p) {
    std::vector<MultCharacter> out;
    if (p == 2) {
        // (Z/8)^x = <-1> x <5>; nontrivial sign patterns, minimal levels 2, 3, 3.
        out.emplace_back(2, 2, std::vector<std::pair<long long, int>>{{3, 1}});
        out.emplace_back(2, 3, std::vector<std::pair<long long, int>>{{7, 0}, {5, 1}});
        out.emplace_back(2, 3, std::vector<std::pair<long long, int>>{{7, 1}, {5, 1}});
        return out;
    }
    // (Z/p)^x cyclic: the unique quadratic character has level 1.
    out.emplace_back(p, 1, std::vector<std::pair<long long, int>>{{primitive_root(p, 1), 1}});
    return out;
}

std::vector<ExtChar> ramified_quadratic_extensions(long long p) {
    std::vector<ExtChar> out;
    for (const auto& chi : ramified_quadratic_chars(p)) {
        out.emplace_back(chi, +1);
        out.emplace_back(chi, -1);
    }
    return out;
}

} // namespace sl2lc
