#pragma once

#include <functional>
#include <map>

#include "sl2lc/laurent.hpp"
#include "sl2lc/sl2.hpp"

namespace sl2lc {

/// Which formal variable a vector's evaluations carry: X^v(a) on the s side,
/// X^(-v(a)) on the 1/(-s) side of the intertwining operator.
enum class SSide { Plus, Minus };

/// Element of the two-dimensional isotypic subspace of the induced space,
/// in the basis indexed by the Weyl elements {1, w0}.  Evaluation at any
/// group element goes through the cell decomposition and is lambda-equivariant
/// on the right.
struct InducedVec {
    CycNum coeff_id;
    CycNum coeff_w0;
    ExtChar character;
    SSide side = SSide::Plus;

    static InducedVec basis_id(const ExtChar& chi, const FieldContextPtr& ctx, SSide side = SSide::Plus);
    static InducedVec basis_w0(const ExtChar& chi, const FieldContextPtr& ctx, SSide side = SSide::Plus);
    static InducedVec combination(const CycNum& a, const CycNum& b, const ExtChar& chi, SSide side = SSide::Plus);
};

/// Value of the vector at g: the matching basis function contributes
/// chi(a) * q^(-v(a)) * X^(+-v(a)) * lambda(j); off both cells the value is 0.
LaurentPoly induced_eval(const InducedVec& v, const GroupElem& g);

/// Additive-measure integral over the shell p^r * o^x, sampled on unit
/// representatives modulo p^depth:  q^(-r-depth) * sum over units of
/// integrand(p^r * u).  The caller asserts the integrand is constant on
/// cosets of p^(r+depth); tests validate by oversampling.
LaurentPoly shell_integral(const std::function<LaurentPoly(const PadicNum&)>& integrand,
                           long long r, int depth, const FieldContextPtr& ctx);

/// Gauss sum: integral over o^x of eta(x^-1) * conj(psi(c x)) dx.
CycNum gauss_sum(const MultCharacter& eta, const AddChar& psi, const PadicNum& c,
                 const FieldContextPtr& ctx);

/// Principal-value Whittaker functional: integral over U of
/// v(w0 u(x)) psi^-1(x) dx, summed over shells |r| <= depth_m plus the tail
/// ball.  The value is recomputed with the range extended by two and must
/// agree exactly, otherwise UnstablePrincipalValue.
LaurentPoly whittaker_omega(const InducedVec& v, const AddChar& psi, int depth_m,
                            const FieldContextPtr& ctx, int oversample = 0);

/// Per-shell contributions to the Whittaker integral: r -> shell value, plus
/// the tail recorded at key range+1.  For the shell-vanishing checks.
std::map<long long, LaurentPoly> whittaker_shells(const InducedVec& v, const AddChar& psi,
                                                  int range, const FieldContextPtr& ctx);

enum class WeylWord { W0, W0Inverse };

/// The standard intertwining operator evaluated on the two-dimensional
/// isotypic space: coefficients determined by evaluating the defining
/// integral at the identity and at w0.  Output lives on the flipped side
/// with the inverse character.
InducedVec intertwine(const InducedVec& v, WeylWord w, int depth_m, const FieldContextPtr& ctx);

/// Ratio of the two transported Whittaker functionals, as a Laurent monomial,
/// checked exactly against the closed form
/// chi(-pi^n) tau(eta, psi, pi^(-n)) q^n X^n.
LaurentPoly local_coefficient(const ExtChar& chi, const AddChar& psi, const FieldContextPtr& ctx);

struct LocalFactors {
    LaurentPoly L;               // = 1
    LaurentPoly epsilon_factor;  // = the local coefficient
    CycNum fe_product;           // C(s) * C(1-s), expected epsilon
    LaurentPoly plancherel;      // q^n * X^0 from the intertwiner composition
};

LocalFactors factors_and_equations(const ExtChar& chi, const AddChar& psi, const FieldContextPtr& ctx);

} // namespace sl2lc
