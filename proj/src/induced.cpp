#include "sl2lc/induced.hpp"

namespace sl2lc {

InducedVec InducedVec::basis_id(const ExtChar& chi, const FieldContextPtr& ctx, SSide side) {
    return InducedVec{ctx->cyc_one(), ctx->cyc_zero(), chi, side};
}

InducedVec InducedVec::basis_w0(const ExtChar& chi, const FieldContextPtr& ctx, SSide side) {
    return InducedVec{ctx->cyc_zero(), ctx->cyc_one(), chi, side};
}

InducedVec InducedVec::combination(const CycNum& a, const CycNum& b, const ExtChar& chi, SSide side) {
    return InducedVec{a, b, chi, side};
}

namespace {

Rational q_power(long long q, long long k) {
    Rational out(1);
    for (long long i = 0; i < k; ++i) out *= static_cast<long>(q);
    for (long long i = 0; i < -k; ++i) out /= static_cast<long>(q);
    return out;
}

// chi * nu_s * delta^(1/2) at diag(a, a^-1): q^(-v(a)) X^(sigma v(a)) chi(a).
LaurentPoly torus_weight(const ExtChar& chi, SSide side, const PadicNum& a,
                         const FieldContextPtr& ctx) {
    long long v = a.valuation();
    CycNum coeff = chi.eval(a) * q_power(ctx->prime(), -v);
    int degree = static_cast<int>(side == SSide::Plus ? v : -v);
    return LaurentPoly::monomial(coeff, degree);
}

} // namespace

LaurentPoly induced_eval(const InducedVec& v, const GroupElem& g) {
    const auto& ctx = g.context();
    CellDecomp dec = cell_decompose(g);
    if (dec.cell == Cell::Outside) return LaurentPoly::zero(ctx->cyclotomic());
    const CycNum& coeff = dec.cell == Cell::BJ ? v.coeff_id : v.coeff_w0;
    if (coeff.is_zero()) return LaurentPoly::zero(ctx->cyclotomic());
    CycNum lam = v.character.unit_part().eval(dec.j_part.a11());
    return torus_weight(v.character, v.side, dec.torus_part.a, ctx).scaled(coeff * lam);
}

LaurentPoly shell_integral(const std::function<LaurentPoly(const PadicNum&)>& integrand,
                           long long r, int depth, const FieldContextPtr& ctx) {
    const long long p = ctx->prime();
    long long modulus = 1;
    for (int i = 0; i < depth; ++i) modulus *= p;
    LaurentPoly sum = LaurentPoly::zero(ctx->cyclotomic());
    for (long long u = 1; u < modulus; ++u) {
        if (u % p == 0) continue;
        PadicNum x = PadicNum::make(r, mpz_class(static_cast<long>(u)), ctx->precision(), ctx);
        sum += integrand(x);
    }
    return sum.scaled(q_power(p, -(r + depth)));
}

CycNum gauss_sum(const MultCharacter& eta, const AddChar& psi, const PadicNum& c,
                 const FieldContextPtr& ctx) {
    long long depth = eta.level();
    if (!c.is_exact_zero() && !c.is_bounded_zero())
        depth = std::max<long long>(depth, -c.valuation());
    depth = std::max<long long>(depth, 1);

    const long long p = ctx->prime();
    long long modulus = 1;
    for (long long i = 0; i < depth; ++i) modulus *= p;
    CycNum sum = ctx->cyc_zero();
    for (long long u = 1; u < modulus; ++u) {
        if (u % p == 0) continue;
        PadicNum x = PadicNum::make(0, mpz_class(static_cast<long>(u)), ctx->precision(), ctx);
        int chi_at_inverse = eta.sign_at_residue(x.inverse().unit_residue(eta.level()));
        CycNum term = psi.eval_conj(c * x, *ctx) * Rational(chi_at_inverse);
        sum += term;
    }
    return sum * q_power(p, -depth);
}

namespace {

// One shell of the Whittaker/intertwining integrand f(w_mat * u(x) * g) * extra(x).
LaurentPoly functional_shell(const InducedVec& v, const GroupElem& w_mat, const GroupElem* g,
                             const std::function<CycNum(const PadicNum&)>* extra,
                             long long r, int depth, const FieldContextPtr& ctx) {
    auto integrand = [&](const PadicNum& x) {
        GroupElem m = w_mat * GroupElem::upper(x);
        if (g) m = m * *g;
        LaurentPoly val = induced_eval(v, m);
        if (extra && !val.is_zero()) val = val.scaled((*extra)(x));
        return val;
    };
    return shell_integral(integrand, r, depth, ctx);
}

// Sampling depth that matches the integrand's constancy radius on shell r:
// the character of the unit needs level digits, the additive character needs
// -r digits on negative shells.
int shell_sampling_depth(long long r, const FieldContextPtr& ctx, bool has_additive, int oversample) {
    long long d = ctx->level();
    if (has_additive && r < 0) d = std::max<long long>(d, -r);
    return static_cast<int>(d) + oversample;
}

LaurentPoly functional_over_range(const InducedVec& v, const GroupElem& w_mat, const GroupElem* g,
                                  const std::function<CycNum(const PadicNum&)>* extra, bool has_additive,
                                  int range, const FieldContextPtr& ctx, int oversample) {
    LaurentPoly total = LaurentPoly::zero(ctx->cyclotomic());
    for (long long r = -range; r <= range; ++r)
        total += functional_shell(v, w_mat, g, extra, r,
                                  shell_sampling_depth(r, ctx, has_additive, oversample), ctx);
    // tail ball p^(range+1) o: the integrand is constant there (u(x) lands in J,
    // the additive character is trivial on o)
    GroupElem at_w = g ? w_mat * *g : w_mat;
    LaurentPoly tail = induced_eval(v, at_w);
    return total + tail.scaled(q_power(ctx->prime(), -(range + 1)));
}

} // namespace

LaurentPoly whittaker_omega(const InducedVec& v, const AddChar& psi, int depth_m,
                            const FieldContextPtr& ctx, int oversample) {
    if (depth_m < ctx->level() + 2)
        throw ConfigError("whittaker range must be at least level + 2");
    AddChar psi_inv = psi.conjugate_char();
    std::function<CycNum(const PadicNum&)> extra = [&](const PadicNum& x) {
        return psi_inv.eval(x, *ctx);
    };
    GroupElem w0 = GroupElem::w0(ctx);
    LaurentPoly base = functional_over_range(v, w0, nullptr, &extra, true, depth_m, ctx, oversample);
    LaurentPoly wide = functional_over_range(v, w0, nullptr, &extra, true, depth_m + 2, ctx, oversample);
    if (base != wide)
        throw UnstablePrincipalValue("whittaker integral at ranges " + std::to_string(depth_m) +
                                     " and " + std::to_string(depth_m + 2) + " disagree");
    return base;
}

std::map<long long, LaurentPoly> whittaker_shells(const InducedVec& v, const AddChar& psi,
                                                  int range, const FieldContextPtr& ctx) {
    AddChar psi_inv = psi.conjugate_char();
    std::function<CycNum(const PadicNum&)> extra = [&](const PadicNum& x) {
        return psi_inv.eval(x, *ctx);
    };
    GroupElem w0 = GroupElem::w0(ctx);
    std::map<long long, LaurentPoly> shells;
    for (long long r = -range; r <= range; ++r)
        shells.emplace(r, functional_shell(v, w0, nullptr, &extra, r,
                                           shell_sampling_depth(r, ctx, true, 0), ctx));
    LaurentPoly tail = induced_eval(v, w0);
    shells.emplace(range + 1, tail.scaled(q_power(ctx->prime(), -(range + 1))));
    return shells;
}

InducedVec intertwine(const InducedVec& v, WeylWord w, int depth_m, const FieldContextPtr& ctx) {
    if (depth_m < ctx->level() + 2)
        throw ConfigError("intertwining range must be at least level + 2");
    GroupElem w_mat = w == WeylWord::W0 ? GroupElem::w0(ctx) : GroupElem::w0_inverse(ctx);
    GroupElem id = GroupElem::identity(ctx);
    GroupElem w0 = GroupElem::w0(ctx);

    auto evaluate_at = [&](const GroupElem& g) {
        LaurentPoly base = functional_over_range(v, w_mat, &g, nullptr, false, depth_m, ctx, 0);
        LaurentPoly wide = functional_over_range(v, w_mat, &g, nullptr, false, depth_m + 2, ctx, 0);
        if (base != wide) throw UnstablePrincipalValue("intertwining integral not stable in range");
        return base;
    };

    LaurentPoly at_id = evaluate_at(id);
    LaurentPoly at_w0 = evaluate_at(w0);
    auto as_scalar = [](const LaurentPoly& p) {
        if (p.is_zero()) return CycNum::zero(p.context());
        if (!p.is_monomial() || p.monomial_degree() != 0)
            throw BasisResolutionFailure("intertwined value is not a degree-0 scalar: " + p.to_string());
        return p.coeff(0);
    };
    InducedVec out{as_scalar(at_id), as_scalar(at_w0), v.character.inverse_char(),
                   v.side == SSide::Plus ? SSide::Minus : SSide::Plus};
    return out;
}

LaurentPoly local_coefficient(const ExtChar& chi, const AddChar& psi, const FieldContextPtr& ctx) {
    const int n = ctx->level();
    const int range = ctx->shell_depth() - 2;
    InducedVec f_id = InducedVec::basis_id(chi, ctx, SSide::Plus);

    LaurentPoly numerator = whittaker_omega(f_id, psi, range, ctx);
    InducedVec transported = intertwine(f_id, WeylWord::W0, range, ctx);
    LaurentPoly denominator = whittaker_omega(transported, psi, range, ctx);
    LaurentPoly ratio = numerator.divided_by_monomial(denominator);

    // closed form chi(-pi^n) tau q^n X^n
    PadicNum c = PadicNum::uniformizer_power(-n, ctx);
    CycNum tau = gauss_sum(chi.unit_part(), psi, c, ctx);
    PadicNum minus_pi_n = -PadicNum::uniformizer_power(n, ctx);
    CycNum closed_coeff = chi.eval(minus_pi_n) * tau * q_power(ctx->prime(), n);
    LaurentPoly closed = LaurentPoly::monomial(closed_coeff, n);

    if (ratio != closed)
        throw MismatchWithClosedForm("local coefficient " + ratio.to_string() +
                                     " differs from closed form " + closed.to_string());
    return ratio;
}

LocalFactors factors_and_equations(const ExtChar& chi, const AddChar& psi, const FieldContextPtr& ctx) {
    LocalFactors out;
    out.L = LaurentPoly::constant(ctx->cyc_one());
    out.epsilon_factor = local_coefficient(chi, psi, ctx);

    // functional equation: C(s, chi) * C(1-s, chi^-1)
    LaurentPoly c_inv_char = local_coefficient(chi.inverse_char(), psi, ctx);
    LaurentPoly fe = out.epsilon_factor * c_inv_char.substitute_one_minus_s(ctx->prime());
    if (!fe.is_monomial() || fe.monomial_degree() != 0)
        throw BasisResolutionFailure("functional-equation product is not a scalar");
    out.fe_product = fe.coeff(0);

    // Plancherel scalar from the intertwiner composition
    const int range = ctx->shell_depth() - 2;
    InducedVec f_id = InducedVec::basis_id(chi, ctx, SSide::Plus);
    InducedVec once = intertwine(f_id, WeylWord::W0, range, ctx);
    InducedVec back = intertwine(once, WeylWord::W0Inverse, range, ctx);
    if (!back.coeff_w0.is_zero())
        throw BasisResolutionFailure("intertwiner composition is not scalar on the basis");
    CycNum mu_inv = back.coeff_id;
    out.plancherel = LaurentPoly::constant(mu_inv.inverse());
    return out;
}

} // namespace sl2lc
