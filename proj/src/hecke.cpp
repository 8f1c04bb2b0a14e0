#include "sl2lc/hecke.hpp"

#include <random>
#include <sstream>

namespace sl2lc {

namespace {

Rational q_power(long long q, long long k) {
    Rational out(1);
    for (long long i = 0; i < k; ++i) out *= static_cast<long>(q);
    for (long long i = 0; i < -k; ++i) out /= static_cast<long>(q);
    return out;
}

bool unit_torus(const CellDecomp& dec) { return dec.torus_part.a.valuation_equals(0); }

} // namespace

Cover Cover::make(long long p, const MultCharacter& eta, AddChar psi) {
    return Cover{FieldContext::make(p, eta.level()), eta, psi};
}

long long Cover::coset_count() const {
    long long n = 1;
    for (int i = 0; i < field->level(); ++i) n *= field->prime();
    return n;
}

HeckeOp HeckeOp::basis_id(const Cover& c) { return {c.field->cyc_one(), c.field->cyc_zero()}; }
HeckeOp HeckeOp::basis_w0(const Cover& c) { return {c.field->cyc_zero(), c.field->cyc_one()}; }
HeckeOp HeckeOp::combination(const CycNum& a, const CycNum& b) { return {a, b}; }

WhittakerVec WhittakerVec::basis_id(const Cover& c) { return {c.field->cyc_one(), c.field->cyc_zero()}; }
WhittakerVec WhittakerVec::basis_w0(const Cover& c) { return {c.field->cyc_zero(), c.field->cyc_one()}; }
WhittakerVec WhittakerVec::combination(const CycNum& a, const CycNum& b) { return {a, b}; }

void TorusFn::set(long long k, long long unit_residue, const CycNum& value) {
    if (value.is_zero()) return;
    values_[{k, unit_residue}] = value;
}

std::string TorusFn::to_string() const {
    if (values_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : values_) {
        if (!first) os << "; ";
        first = false;
        os << "(k=" << key.first << ", u=" << key.second << "): " << value.to_string();
    }
    return os.str();
}

TorusFn TorusFn::reference_ch(const Cover& c) {
    TorusFn out;
    long long pn = c.coset_count();
    Rational vol = q_power(c.field->prime(), -c.field->level());
    for (long long u = 1; u < pn; ++u) {
        if (u % c.field->prime() == 0) continue;
        out.set(0, u, c.field->cyc_rational(vol * c.eta.sign_at_residue(u)));
    }
    return out;
}

CycNum hecke_eval(const HeckeOp& T, const GroupElem& g, const Cover& c) {
    if (!in_subgroup(g, Subgroup::K)) throw NotInK();
    const auto& field = c.field;
    if (in_subgroup(g, Subgroup::J)) {
        if (T.coeff_id.is_zero()) return field->cyc_zero();
        // lambda-check of g; the character has order two, so it equals its inverse
        int s = c.eta.sign_at_residue(g.a11().unit_residue(field->level()));
        return T.coeff_id * Rational(s);
    }
    auto dec = cell_decompose(g);
    if (dec.cell == Cell::Bw0J && unit_torus(dec)) {
        if (T.coeff_w0.is_zero()) return field->cyc_zero();
        // g = u(a c) w0 diag(c^-1)^-1-part: the right factor carries eta(c)^-1
        int s = c.eta.sign_at_residue(g.a21().unit_residue(field->level()));
        return T.coeff_w0 * Rational(s);
    }
    return field->cyc_zero();  // level gap inside K
}

namespace {

std::vector<GroupElem> support_coset_reps(const Cover& c) {
    std::vector<GroupElem> reps;
    reps.push_back(GroupElem::identity(c.field));
    for (auto& r : coset_reps_Jw0J(c.field)) reps.push_back(std::move(r));
    return reps;
}

} // namespace

HeckeOp convolve(const HeckeOp& A, const HeckeOp& B, const Cover& c) {
    auto reps = support_coset_reps(c);
    auto brute = [&](const GroupElem& y) {
        CycNum sum = c.field->cyc_zero();
        for (const auto& r : reps) {
            CycNum a = hecke_eval(A, r, c);
            if (a.is_zero()) continue;
            sum += a * hecke_eval(B, r.inverse() * y, c);
        }
        return sum;
    };

    HeckeOp out{brute(GroupElem::identity(c.field)), brute(GroupElem::w0(c.field))};

    // the result must agree with its basis resolution across the support
    std::mt19937_64 rng(91);
    std::vector<GroupElem> samples = reps;
    samples.push_back(random_j_element(rng, c.field));
    samples.push_back(random_j_element(rng, c.field) * GroupElem::w0(c.field) * random_j_element(rng, c.field));
    for (int m = 1; m < c.field->level(); ++m)
        samples.push_back(GroupElem::lower(PadicNum::uniformizer_power(m, c.field)));
    for (const auto& y : samples) {
        if (!(brute(y) == hecke_eval(out, y, c)))
            throw BasisResolutionFailure("convolution fails to close in the span at " + y.to_string());
    }
    return out;
}

CycNum whittaker_eval(const WhittakerVec& v, const GroupElem& g, const Cover& c) {
    const auto& field = c.field;
    auto dec = cell_decompose(g);
    if (dec.cell == Cell::Outside || !unit_torus(dec)) return field->cyc_zero();

    const CycNum& coeff = dec.cell == Cell::BJ ? v.coeff_id : v.coeff_w0;
    if (coeff.is_zero()) return field->cyc_zero();

    const PadicNum& a = dec.torus_part.a;
    CycNum psi_val = c.psi.eval(a * a * dec.unipotent_b_part, *field);
    PadicNum torus_entry = dec.cell == Cell::BJ ? a * dec.j_part.a11() : a.inverse() * dec.j_part.a11();
    int lam = c.eta.sign_at_residue(torus_entry.unit_residue(field->level()));
    return coeff * psi_val * Rational(lam);
}

bool in_whittaker_support(const GroupElem& g) {
    auto dec = cell_decompose(g);
    return dec.cell != Cell::Outside && dec.torus_part.a.valuation_equals(0);
}

WhittakerVec act(const HeckeOp& T, const WhittakerVec& v, const Cover& c) {
    auto reps = support_coset_reps(c);
    std::vector<CycNum> t_values;
    t_values.reserve(reps.size());
    for (const auto& r : reps) t_values.push_back(hecke_eval(T, r, c));

    auto brute = [&](const GroupElem& g) {
        CycNum sum = c.field->cyc_zero();
        for (size_t i = 0; i < reps.size(); ++i) {
            if (t_values[i].is_zero()) continue;
            sum += t_values[i] * whittaker_eval(v, g * reps[i], c);
        }
        return sum;
    };

    WhittakerVec out{brute(GroupElem::identity(c.field)), brute(GroupElem::w0(c.field))};

    // off-basis consistency: translates inside the support and points outside it
    std::mt19937_64 rng(77);
    std::vector<GroupElem> samples;
    samples.push_back(GroupElem::upper(PadicNum::one(c.field)) * random_j_element(rng, c.field));
    samples.push_back(GroupElem::upper(PadicNum::from_rational(1, c.field->prime(), c.field)) *
                      GroupElem::w0(c.field) * random_j_element(rng, c.field));
    samples.push_back(GroupElem::torus(PadicNum::uniformizer_power(1, c.field) * random_unit(rng, c.field)) *
                      random_j_element(rng, c.field));
    samples.push_back(GroupElem::torus(PadicNum::uniformizer_power(-1, c.field)));
    for (int m = 1; m < c.field->level(); ++m)
        samples.push_back(GroupElem::lower(PadicNum::uniformizer_power(m, c.field)) *
                          random_j_element(rng, c.field));
    for (const auto& g : samples) {
        if (!(brute(g) == whittaker_eval(out, g, c)))
            throw BasisResolutionFailure("module action fails to close in the span at " + g.to_string());
    }
    return out;
}

namespace {

TorusFn s_delta_at_range(const WhittakerVec& v, int torus_range, int range, const Cover& c) {
    const auto& field = c.field;
    const int n = field->level();
    long long pn = c.coset_count();
    TorusFn out;
    for (long long k = -torus_range; k <= torus_range; ++k) {
        for (long long ut = 1; ut < pn; ++ut) {
            if (ut % field->prime() == 0) continue;
            PadicNum a = PadicNum::uniformizer_power(k, field) *
                         PadicNum::make(0, mpz_class(static_cast<long>(ut)), field->precision(), field);
            GroupElem t = GroupElem::torus(a);
            auto integrand = [&](const PadicNum& x) {
                return LaurentPoly::constant(whittaker_eval(v, t * GroupElem::lower(x), c));
            };
            CycNum total = field->cyc_zero();
            for (long long r = -range; r < n; ++r) {
                // constancy radius: eta needs level digits; on the one shell that
                // can carry the additive character (v(x) = k < 0) it needs -k
                int depth = n;
                if (r == k && k < 0) depth = std::max<long long>(depth, -k);
                if (depth < 1) depth = 1;
                total += shell_integral(integrand, r, depth, field).coeff(0);
            }
            // ball p^n o: phi is right-J-invariant, so constant there
            total += whittaker_eval(v, t, c) * q_power(field->prime(), -n);
            out.set(k, ut, total * q_power(field->prime(), -k));  // delta^(1/2)(t) = q^(-k)
        }
    }
    return out;
}

} // namespace

TorusFn s_delta_project(const WhittakerVec& v, int torus_range, int depth, const Cover& c) {
    if (torus_range < 2) throw ConfigError("torus range must be at least 2");
    if (depth < c.field->level() + 2) throw ConfigError("integration depth must be at least level + 2");
    TorusFn base = s_delta_at_range(v, torus_range, depth, c);
    TorusFn wide = s_delta_at_range(v, torus_range, depth + 2, c);
    if (!(base == wide))
        throw UnstablePrincipalValue("torus projection changed between integration ranges");
    return base;
}

SignActionReport verify_sign_action(const Cover& c, unsigned long long seed) {
    SignActionReport rep;
    std::ostringstream detail;
    const auto& field = c.field;
    const int eps = c.epsilon();
    const Rational qn = q_power(field->prime(), field->level());

    WhittakerVec phi_id = WhittakerVec::basis_id(c);
    WhittakerVec phi_w0 = WhittakerVec::basis_w0(c);
    HeckeOp t_id = HeckeOp::basis_id(c);
    HeckeOp t_w0 = HeckeOp::basis_w0(c);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-4, 4);
    auto random_cyc = [&]() {
        return field->cyc_rational(Rational(small(rng))) +
               CycNum::root_of_unity(small(rng) >= 0 ? 1 : 2, field->cyclotomic()) * Rational(small(rng));
    };
    auto vec_equal = [](const WhittakerVec& a, const WhittakerVec& b) {
        return a.coeff_id == b.coeff_id && a.coeff_w0 == b.coeff_w0;
    };

    {
        WhittakerVec v = WhittakerVec::combination(random_cyc(), random_cyc());
        rep.act_id_identity = vec_equal(act(t_id, v, c), v);
        if (!rep.act_id_identity) detail << "identity operator failed to act trivially; ";
    }
    {
        WhittakerVec got = act(t_w0, phi_id, c);
        WhittakerVec want{field->cyc_zero(), field->cyc_rational(Rational(eps))};
        rep.act_w0_on_phi_id = vec_equal(got, want);
        if (!rep.act_w0_on_phi_id)
            detail << "T_w0 * phi_id = (" << got.coeff_id.to_string() << ", " << got.coeff_w0.to_string()
                   << ") expected (0, " << eps << "); ";
    }
    {
        WhittakerVec got = act(t_w0, phi_w0, c);
        WhittakerVec want{field->cyc_rational(qn), field->cyc_zero()};
        rep.act_w0_on_phi_w0 = vec_equal(got, want);
        if (!rep.act_w0_on_phi_w0)
            detail << "T_w0 * phi_w0 = (" << got.coeff_id.to_string() << ", " << got.coeff_w0.to_string()
                   << ") expected (" << qn.get_str() << ", 0); ";
    }
    {
        rep.double_action_scalar = true;
        for (int i = 0; i < 3; ++i) {
            WhittakerVec v = WhittakerVec::combination(random_cyc(), random_cyc());
            WhittakerVec twice = act(t_w0, act(t_w0, v, c), c);
            WhittakerVec want{v.coeff_id * qn * Rational(eps), v.coeff_w0 * qn * Rational(eps)};
            if (!vec_equal(twice, want)) {
                rep.double_action_scalar = false;
                detail << "double action is not eps*q^n on a random vector; ";
                break;
            }
        }
    }
    {
        rep.module_law = true;
        for (int i = 0; i < 2; ++i) {
            HeckeOp A = HeckeOp::combination(random_cyc(), random_cyc());
            HeckeOp B = HeckeOp::combination(random_cyc(), random_cyc());
            WhittakerVec v = WhittakerVec::combination(random_cyc(), random_cyc());
            WhittakerVec lhs = act(convolve(A, B, c), v, c);
            WhittakerVec rhs = act(A, act(B, v, c), c);
            if (!vec_equal(lhs, rhs)) {
                rep.module_law = false;
                detail << "module associativity failed on random operators; ";
                break;
            }
        }
    }
    {
        // T_w0 * T_w0 = eps q^n T_id; with the square of the normalization
        // factor eps q^(-n), this is the radical-free form of T*^2 = T*_id.
        HeckeOp square = convolve(t_w0, t_w0, c);
        bool structure = square.coeff_w0.is_zero() &&
                         square.coeff_id == field->cyc_rational(qn * eps);
        bool bookkeeping = false;
        if (structure) {
            CycNum normalized = square.coeff_id * (q_power(field->prime(), -field->level()) * eps);
            bookkeeping = normalized == field->cyc_one();
        }
        rep.normalized_square_identity = structure && bookkeeping;
        if (!rep.normalized_square_identity)
            detail << "T_w0 square = (" << square.coeff_id.to_string() << ", "
                   << square.coeff_w0.to_string() << ") expected (" << (qn * eps).get_str() << ", 0); ";
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace sl2lc
