#include "ruled/invariants.hpp"

namespace ruled {

using namespace checked;

Int discriminant(const ChernData& cd) {
    return sub(mul(4, cd.c2), self_intersection(cd.c1));
}

ChernData chern_twist(const ChernData& cd, const DivisorClass& t) {
    require_same_config(cd.c1, t);
    ChernData out;
    out.c1 = cd.c1 + 2 * t;
    out.c2 = add(add(cd.c2, intersect(cd.c1, t)), self_intersection(t));
    return out;
}

ChernData normalize_chern(const ChernData& cd) {
    const auto& c1 = cd.c1;
    std::vector<Int> exc;
    exc.reserve(c1.exc().size());
    for (Int c : c1.exc()) exc.push_back(-floor_div(c, 2));
    DivisorClass t(c1.config(), -floor_div(c1.a(), 2), -floor_div(c1.b(), 2), std::move(exc));
    return chern_twist(cd, t);
}

void ExtensionDatum::validate() const {
    const auto& cfg = chern.config();
    if (static_cast<Int>(q.size()) != cfg.num_points)
        throw Error(ErrorCode::ConfigMismatch, "q must have one entry per blown-up point");
    for (Int qi : q)
        if (qi < 0) throw Error(ErrorCode::InvalidInput, "multiplicities q_i must be >= 0");
    if (mul(2, d) < chern.c1.a())
        throw Error(ErrorCode::InvalidInput, "d must satisfy 2d >= c1.C0-coefficient");
}

DivisorClass ExtensionDatum::sub_class() const {
    return DivisorClass(chern.config(), d, r, q);
}

DivisorClass ExtensionDatum::quotient_class() const { return chern.c1 - sub_class(); }

DivisorClass zeta_class(const ExtensionDatum& ed) {
    ed.validate();
    // sub - quotient = 2 sub - c1
    return 2 * ed.sub_class() - ed.chern.c1;
}

Int length_from_zeta(const ChernData& cd, const DivisorClass& zeta) {
    if (!congruent_mod2(zeta, cd.c1))
        throw Error(ErrorCode::ParityViolation, "zeta is not congruent to c1 mod 2");
    const Int diff = sub(self_intersection(zeta), self_intersection(cd.c1));
    if (diff % 4 != 0)
        throw Error(ErrorCode::ParityViolation, "zeta^2 - c1^2 is not divisible by 4");
    return add(cd.c2, diff / 4);
}

LengthResult length_Z(const ExtensionDatum& ed) {
    LengthResult out;
    out.length = length_from_zeta(ed.chern, zeta_class(ed));
    if (out.length < 0)
        out.warnings.push_back("NegativeLength: ell(Z) = " + std::to_string(out.length) +
                               " < 0, the datum does not come from a bundle");
    return out;
}

Int r0_generic(Int genus, Int eta, Int c2) {
    return ceil_div(sub(sub(eta, c2), genus), 2);
}

bool bound_prop_a(Int r, Int beta, Int genus, Int c2, const std::vector<Int>& q) {
    Int rhs = sub(sub(beta, genus), c2);
    for (Int qi : q) {
        if (qi < 0) throw Error(ErrorCode::InvalidInput, "multiplicities q_i must be >= 0");
        if (qi >= 2) rhs = add(rhs, mul(1 - qi, 1 - qi));
    }
    return mul(2, r) >= rhs;
}

Int nagata_bound(Int pushforward_degree, Int genus) {
    return ceil_div(sub(pushforward_degree, genus), 2);
}

bool is_extension_unique(const ExtensionDatum& ed) { return mul(2, ed.d) > ed.chern.c1.a(); }

}  // namespace ruled
