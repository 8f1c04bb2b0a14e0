#pragma once

#include <map>
#include <string>
#include <utility>

#include "sl2lc/induced.hpp"
#include "sl2lc/laurent.hpp"
#include "sl2lc/sl2.hpp"

namespace sl2lc {

/// The cover data every Hecke-side computation needs: the field context, the
/// unit character eta defining (J, lambda), and the additive character.
struct Cover {
    FieldContextPtr field;
    MultCharacter eta;
    AddChar psi;

    int epsilon() const { return eta.sign_at_minus_one(); }
    long long coset_count() const;  // [J w0 J : J] = q^level

    static Cover make(long long p, const MultCharacter& eta, AddChar psi = AddChar());
};

/// Element of the two-dimensional convolution algebra on K, coordinates in
/// the basis indexed by the Weyl elements.
struct HeckeOp {
    CycNum coeff_id;
    CycNum coeff_w0;

    static HeckeOp basis_id(const Cover& c);
    static HeckeOp basis_w0(const Cover& c);
    static HeckeOp combination(const CycNum& a, const CycNum& b);
};

/// Element of the isotypic part of the space of Whittaker-equivariant
/// functions, coordinates in the basis supported on U J and U w0 J.
struct WhittakerVec {
    CycNum coeff_id;
    CycNum coeff_w0;

    static WhittakerVec basis_id(const Cover& c);
    static WhittakerVec basis_w0(const Cover& c);
    static WhittakerVec combination(const CycNum& a, const CycNum& b);
};

/// Finitely supported function on the torus, recorded on diag(pi^k u, ...)
/// by the pair (k, unit residue modulo p^level).
class TorusFn {
public:
    using Key = std::pair<long long, long long>;

    void set(long long k, long long unit_residue, const CycNum& value);
    const std::map<Key, CycNum>& values() const { return values_; }
    bool operator==(const TorusFn& other) const { return values_ == other.values_; }
    bool is_zero() const { return values_.empty(); }
    std::string to_string() const;

    /// vol(Ubar cap J) * eta(t) on the unit torus: the reference generator.
    static TorusFn reference_ch(const Cover& c);

private:
    std::map<Key, CycNum> values_;
};

/// Evaluation of a Hecke operator at g in K: lambda-check biequivariant,
/// supported on J and J w0 J, zero on the level gap.
CycNum hecke_eval(const HeckeOp& T, const GroupElem& g, const Cover& c);

/// Convolution resolved in the two-element basis by evaluating at the
/// identity and at w0; the result is cross-checked at every coset
/// representative and a sample of translates (BasisResolutionFailure).
HeckeOp convolve(const HeckeOp& A, const HeckeOp& B, const Cover& c);

/// phi(g) for the Whittaker vector: psi(u) lambda(j) on U J and U w0 J.
CycNum whittaker_eval(const WhittakerVec& v, const GroupElem& g, const Cover& c);

/// g in U J or U w0 J: one of the two cells with a unit torus part.
bool in_whittaker_support(const GroupElem& g);

/// Module action (T * phi)(g) = sum over coset representatives r of
/// T(r) phi(g r), resolved in the phi-basis and cross-checked off-basis.
WhittakerVec act(const HeckeOp& T, const WhittakerVec& v, const Cover& c);

/// Jacquet-type projection to the torus: delta^(1/2)(t) * integral over Ubar
/// of phi(t ubar), probed for |k| <= torus_range, computed at integration
/// range depth and depth+2 (UnstablePrincipalValue on disagreement).
TorusFn s_delta_project(const WhittakerVec& v, int torus_range, int depth, const Cover& c);

struct SignActionReport {
    bool act_id_identity = false;        // T_id * phi = phi
    bool act_w0_on_phi_id = false;       // T_w0 * phi_id = eps * phi_w0
    bool act_w0_on_phi_w0 = false;       // T_w0 * phi_w0 = q^n * phi_id
    bool double_action_scalar = false;   // T_w0^2 action = eps q^n on random vectors
    bool module_law = false;             // act(A*B) = act(A) o act(B) on random inputs
    bool normalized_square_identity = false;  // scalar bookkeeping for T*^2 = T*_id
    std::string detail;

    bool all() const {
        return act_id_identity && act_w0_on_phi_id && act_w0_on_phi_w0 &&
               double_action_scalar && module_law && normalized_square_identity;
    }
};

/// The sign-module verification in radical-free form.
SignActionReport verify_sign_action(const Cover& c, unsigned long long seed = 20260810);

} // namespace sl2lc
