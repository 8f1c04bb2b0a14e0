#pragma once

#include <random>
#include <vector>

#include "sl2lc/characters.hpp"
#include "sl2lc/padic.hpp"

namespace sl2lc {

enum class Subgroup { J, K, U, Ubar, TorusUnits };

/// Which Borel cell an element falls in, relative to the level-n subgroup J:
///   BJ       g = b * j
///   Bw0J     g = b * w0 * j
///   Outside  neither (possible once the level exceeds 1)
enum class Cell { BJ, Bw0J, Outside };

/// diag(a, a^-1)
struct TorusElem {
    PadicNum a;
};

/// Determinant-one 2x2 matrix over the local field.
class GroupElem {
public:
    GroupElem() = default;

    static GroupElem from_entries(PadicNum a11, PadicNum a12, PadicNum a21, PadicNum a22);
    static GroupElem identity(const FieldContextPtr& ctx);
    static GroupElem minus_identity(const FieldContextPtr& ctx);
    /// w0 = [[0,-1],[1,0]]
    static GroupElem w0(const FieldContextPtr& ctx);
    static GroupElem w0_inverse(const FieldContextPtr& ctx);
    /// u(x) = [[1,x],[0,1]]
    static GroupElem upper(const PadicNum& x);
    /// ubar(x) = [[1,0],[x,1]]
    static GroupElem lower(const PadicNum& x);
    static GroupElem torus(const PadicNum& a);

    const PadicNum& a11() const { return a11_; }
    const PadicNum& a12() const { return a12_; }
    const PadicNum& a21() const { return a21_; }
    const PadicNum& a22() const { return a22_; }
    const FieldContextPtr& context() const { return a11_.context(); }

    GroupElem operator*(const GroupElem& other) const;
    GroupElem inverse() const;

    bool agrees_with(const GroupElem& other) const;

    std::string to_string() const;

private:
    PadicNum a11_, a12_, a21_, a22_;
};

struct CellDecomp {
    Cell cell = Cell::Outside;
    TorusElem torus_part;    // a in diag(a, a^-1); meaningful off Outside
    PadicNum unipotent_b_part;
    GroupElem j_part;        // member of J for BJ / Bw0J

    /// diag * u(b) [* w0] * j_part
    GroupElem reassemble() const;
};

struct IwahoriFactors {
    PadicNum lower;   // in p^level
    PadicNum torus;   // unit
    PadicNum upper;   // in o
};

/// Membership tests at the context's level; raises PrecisionExhausted when a
/// valuation question cannot be settled with the digits carried.
bool in_subgroup(const GroupElem& g, Subgroup which);

/// lambda(j) = eta(j_11) for j in J.
CycNum lambda_eval(const GroupElem& g, const MultCharacter& eta);

/// j = lower(l) * diag(t, t^-1) * upper(u) for j in J.
IwahoriFactors iwahori_factor(const GroupElem& j);

/// Cell membership and explicit factors, derived by elimination on the
/// bottom row (no reliance on printed decomposition formulas).
CellDecomp cell_decompose(const GroupElem& g);

/// Right-J coset representatives u(c) * w0, c = 0 .. p^level - 1, of the
/// double coset J w0 J.
std::vector<GroupElem> coset_reps_Jw0J(const FieldContextPtr& ctx);

/// Random product of J-generators (for property tests; deterministic given rng).
GroupElem random_j_element(std::mt19937_64& rng, const FieldContextPtr& ctx, int length = 4);
/// Random word in J-generators and w0; always lands in K.
GroupElem random_k_element(std::mt19937_64& rng, const FieldContextPtr& ctx, int length = 5);
/// Random unit of o^x.
PadicNum random_unit(std::mt19937_64& rng, const FieldContextPtr& ctx);

} // namespace sl2lc
