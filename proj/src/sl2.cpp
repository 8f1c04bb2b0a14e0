#include "sl2lc/sl2.hpp"

#include <sstream>

namespace sl2lc {

GroupElem GroupElem::from_entries(PadicNum a11, PadicNum a12, PadicNum a21, PadicNum a22) {
    GroupElem g;
    g.a11_ = std::move(a11);
    g.a12_ = std::move(a12);
    g.a21_ = std::move(a21);
    g.a22_ = std::move(a22);
    const auto& ctx = g.a11_.context();
    int floor = ctx->precision_floor();
    for (const PadicNum* e : {&g.a11_, &g.a12_, &g.a21_, &g.a22_}) {
        if (e->is_unit_form() && e->rel_precision() < floor)
            throw PrecisionExhausted("matrix entry carries fewer than level+1 digits");
    }
    return g;
}

GroupElem GroupElem::identity(const FieldContextPtr& ctx) {
    return from_entries(PadicNum::one(ctx), PadicNum::zero(ctx), PadicNum::zero(ctx), PadicNum::one(ctx));
}

GroupElem GroupElem::minus_identity(const FieldContextPtr& ctx) {
    PadicNum m = PadicNum::from_integer(-1, ctx);
    return from_entries(m, PadicNum::zero(ctx), PadicNum::zero(ctx), m);
}

GroupElem GroupElem::w0(const FieldContextPtr& ctx) {
    return from_entries(PadicNum::zero(ctx), PadicNum::from_integer(-1, ctx),
                        PadicNum::one(ctx), PadicNum::zero(ctx));
}

GroupElem GroupElem::w0_inverse(const FieldContextPtr& ctx) {
    return from_entries(PadicNum::zero(ctx), PadicNum::one(ctx),
                        PadicNum::from_integer(-1, ctx), PadicNum::zero(ctx));
}

GroupElem GroupElem::upper(const PadicNum& x) {
    const auto& ctx = x.context();
    return from_entries(PadicNum::one(ctx), x, PadicNum::zero(ctx), PadicNum::one(ctx));
}

GroupElem GroupElem::lower(const PadicNum& x) {
    const auto& ctx = x.context();
    return from_entries(PadicNum::one(ctx), PadicNum::zero(ctx), x, PadicNum::one(ctx));
}

GroupElem GroupElem::torus(const PadicNum& a) {
    const auto& ctx = a.context();
    return from_entries(a, PadicNum::zero(ctx), PadicNum::zero(ctx), a.inverse());
}

GroupElem GroupElem::operator*(const GroupElem& other) const {
    return from_entries(a11_ * other.a11_ + a12_ * other.a21_,
                        a11_ * other.a12_ + a12_ * other.a22_,
                        a21_ * other.a11_ + a22_ * other.a21_,
                        a21_ * other.a12_ + a22_ * other.a22_);
}

GroupElem GroupElem::inverse() const {
    return from_entries(a22_, -a12_, -a21_, a11_);
}

bool GroupElem::agrees_with(const GroupElem& other) const {
    return a11_.agrees_with(other.a11_) && a12_.agrees_with(other.a12_) &&
           a21_.agrees_with(other.a21_) && a22_.agrees_with(other.a22_);
}

std::string GroupElem::to_string() const {
    std::ostringstream os;
    os << "[[" << a11_.to_string() << ", " << a12_.to_string() << "], ["
       << a21_.to_string() << ", " << a22_.to_string() << "]]";
    return os.str();
}

GroupElem CellDecomp::reassemble() const {
    const auto& ctx = unipotent_b_part.context();
    GroupElem b = GroupElem::torus(torus_part.a) * GroupElem::upper(unipotent_b_part);
    if (cell == Cell::BJ) return b * j_part;
    if (cell == Cell::Bw0J) return b * GroupElem::w0(ctx) * j_part;
    throw Error("no factorization outside the two cells");
}

bool in_subgroup(const GroupElem& g, Subgroup which) {
    const auto& ctx = g.context();
    int n = ctx->level();
    auto is_zero_entry = [](const PadicNum& x) {
        if (x.is_exact_zero()) return true;
        if (x.is_unit_form()) return false;
        throw PrecisionExhausted("zero test undecidable on a bounded zero");
    };
    switch (which) {
        case Subgroup::J:
            return g.a11().valuation_equals(0) && g.a22().valuation_equals(0) &&
                   g.a12().valuation_at_least(0) && g.a21().valuation_at_least(n);
        case Subgroup::K:
            return g.a11().valuation_at_least(0) && g.a12().valuation_at_least(0) &&
                   g.a21().valuation_at_least(0) && g.a22().valuation_at_least(0);
        case Subgroup::U:
            return is_zero_entry(g.a21()) && g.a11().agrees_with(PadicNum::one(ctx)) &&
                   g.a22().agrees_with(PadicNum::one(ctx));
        case Subgroup::Ubar:
            return is_zero_entry(g.a12()) && g.a11().agrees_with(PadicNum::one(ctx)) &&
                   g.a22().agrees_with(PadicNum::one(ctx));
        case Subgroup::TorusUnits:
            return is_zero_entry(g.a12()) && is_zero_entry(g.a21()) && g.a11().valuation_equals(0);
    }
    throw Error("unknown subgroup");
}

CycNum lambda_eval(const GroupElem& g, const MultCharacter& eta) {
    if (!in_subgroup(g, Subgroup::J)) throw NotInSubgroup("lambda is defined on J only");
    if (eta.level() != g.context()->level())
        throw IncompatibleContext("character level differs from the context level");
    return eta.eval(g.a11());
}

IwahoriFactors iwahori_factor(const GroupElem& j) {
    if (!in_subgroup(j, Subgroup::J)) throw NotInSubgroup("Iwahori factorization is defined on J only");
    IwahoriFactors f;
    f.torus = j.a11();
    f.lower = j.a21() / j.a11();
    f.upper = j.a12() / j.a11();
    return f;
}

CellDecomp cell_decompose(const GroupElem& g) {
    const auto& ctx = g.context();
    const int n = ctx->level();
    const PadicNum& c = g.a21();
    const PadicNum& d = g.a22();

    // BJ:    v(c) >= v(d) + n   (needs the exact valuation of the pivot d)
    // Bw0J:  v(d) >= v(c)       (needs the exact valuation of the pivot c)
    // else the level gap: no factorization with j in J.
    if (d.is_unit_form() && c.valuation_lower_bound() >= d.valuation() + n) {
        CellDecomp out;
        out.cell = Cell::BJ;
        out.torus_part = TorusElem{d.inverse()};
        out.unipotent_b_part = g.a12() * d;
        out.j_part = GroupElem::lower(c / d);
        return out;
    }
    if (c.is_unit_form() && d.valuation_lower_bound() >= c.valuation()) {
        CellDecomp out;
        out.cell = Cell::Bw0J;
        out.torus_part = TorusElem{c.inverse()};
        out.unipotent_b_part = g.a11() * c;
        out.j_part = GroupElem::upper(d / c);
        return out;
    }
    if (c.is_unit_form() && d.is_unit_form() &&
        c.valuation() > d.valuation() && c.valuation() < d.valuation() + n) {
        CellDecomp out;
        out.cell = Cell::Outside;
        out.unipotent_b_part = PadicNum::zero(ctx);
        out.j_part = GroupElem::identity(ctx);
        return out;
    }
    throw PrecisionExhausted("cell membership undecidable at available precision");
}

std::vector<GroupElem> coset_reps_Jw0J(const FieldContextPtr& ctx) {
    long long count = 1;
    for (int i = 0; i < ctx->level(); ++i) count *= ctx->prime();
    std::vector<GroupElem> reps;
    reps.reserve(static_cast<size_t>(count));
    for (long long c = 0; c < count; ++c)
        reps.push_back(GroupElem::upper(PadicNum::from_integer(c, ctx)) * GroupElem::w0(ctx));
    return reps;
}

PadicNum random_unit(std::mt19937_64& rng, const FieldContextPtr& ctx) {
    std::uniform_int_distribution<long long> dist(1, 1'000'000'000);
    long long u = dist(rng);
    while (u % ctx->prime() == 0) u = dist(rng);
    return PadicNum::make(0, mpz_class(static_cast<long>(u)), ctx->precision(), ctx);
}

namespace {

GroupElem random_word(std::mt19937_64& rng, const FieldContextPtr& ctx, int length, bool allow_w0) {
    std::uniform_int_distribution<int> kind(0, allow_w0 ? 3 : 2);
    std::uniform_int_distribution<long long> integer(-1'000'000, 1'000'000);
    long long pn = 1;
    for (int i = 0; i < ctx->level(); ++i) pn *= ctx->prime();
    GroupElem g = GroupElem::identity(ctx);
    for (int i = 0; i < length; ++i) {
        switch (kind(rng)) {
            case 0: g = g * GroupElem::upper(PadicNum::from_integer(integer(rng), ctx)); break;
            case 1: g = g * GroupElem::lower(PadicNum::from_integer(integer(rng) * pn, ctx)); break;
            case 2: g = g * GroupElem::torus(random_unit(rng, ctx)); break;
            default: g = g * GroupElem::w0(ctx); break;
        }
    }
    return g;
}

} // namespace

GroupElem random_j_element(std::mt19937_64& rng, const FieldContextPtr& ctx, int length) {
    return random_word(rng, ctx, length, false);
}

GroupElem random_k_element(std::mt19937_64& rng, const FieldContextPtr& ctx, int length) {
    return random_word(rng, ctx, length, true);
}

} // namespace sl2lc
