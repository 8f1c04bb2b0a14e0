#pragma once

#include <vector>

#include "sl2lc/cyclotomic.hpp"
#include "sl2lc/padic.hpp"

namespace sl2lc {

/// Quadratic character of the unit group o^x, ramified, of minimal level n:
/// trivial on 1 + p^n, nontrivial on 1 + p^(n-1) when n >= 2.
///
/// Stored as sign exponents on fixed generators of (Z/p^n)^x (a primitive
/// root for odd p; the classes of -1 and 5 for p = 2), with a small value
/// table derived from discrete logarithms on those generators.
class MultCharacter {
public:
    MultCharacter(long long p, int level, std::vector<std::pair<long long, int>> generator_signs);

    long long prime() const { return p_; }
    int level() const { return level_; }
    bool quadratic() const { return true; }
    const std::vector<std::pair<long long, int>>& generator_signs() const { return generator_signs_; }

    /// Sign at a unit residue mod p^level (residue must be coprime to p).
    int sign_at_residue(const mpz_class& residue) const;
    int sign_at_residue(long long residue) const { return sign_at_residue(mpz_class(static_cast<long>(residue))); }

    /// eta(x) as an exact cyclotomic value; requires valuation(x) = 0.
    CycNum eval(const PadicNum& x) const;

    int sign_at_minus_one() const { return sign_at_residue(modulus_ - 1); }

private:
    long long p_;
    int level_;
    long long modulus_;  // p^level
    std::vector<std::pair<long long, int>> generator_signs_;
    std::vector<signed char> table_;  // indexed by residue mod p^level; 0 off the units
};

/// Extension of a quadratic unit character to F^x by a choice of value at
/// the uniformizer.
class ExtChar {
public:
    ExtChar(MultCharacter unit_part, int w_pi) : unit_part_(std::move(unit_part)), w_pi_(w_pi) {
        if (w_pi != 1 && w_pi != -1) throw ConfigError("uniformizer value must be +1 or -1");
    }

    const MultCharacter& unit_part() const { return unit_part_; }
    int w_pi() const { return w_pi_; }
    int level() const { return unit_part_.level(); }

    /// Sign of the full character at p^val * unit.
    int sign(long long valuation, const mpz_class& unit_residue) const {
        int s = unit_part_.sign_at_residue(unit_residue);
        if (w_pi_ == -1 && (valuation % 2 != 0)) s = -s;
        return s;
    }

    CycNum eval(const PadicNum& x) const;

    /// epsilon = value at -1, independent of the extension choice.
    int epsilon() const { return unit_part_.sign_at_minus_one(); }

    ExtChar inverse_char() const { return *this; }  // quadratic: order two

private:
    MultCharacter unit_part_;
    int w_pi_;
};

/// The canonical additive character: trivial on o, nontrivial on p^(-1),
/// x -> zeta_(p^k)^a where a / p^k is the fractional part of x.
/// sign = -1 gives the conjugate character psi^(-1) = psi(-x).
class AddChar {
public:
    explicit AddChar(int sign = 1) : sign_(sign) {}

    int sign() const { return sign_; }
    AddChar conjugate_char() const { return AddChar(-sign_); }

    CycNum eval(const PadicNum& x, const FieldContext& ctx) const;
    /// conj(psi(x)), the bar in Gauss-sum integrands.
    CycNum eval_conj(const PadicNum& x, const FieldContext& ctx) const;

private:
    int sign_;
};

/// All ramified quadratic characters of o^x with minimal levels; for odd p a
/// single level-1 character, for p = 2 the three characters of levels 2, 3, 3.
std::vector<MultCharacter> ramified_quadratic_chars(long long p);

/// Both uniformizer extensions of each ramified quadratic character.
std::vector<ExtChar> ramified_quadratic_extensions(long long p);

} // namespace sl2lc
