#include "ruled/families.hpp"

#include <numeric>

namespace ruled {

using namespace checked;

std::string_view to_string(Dominance d) {
    switch (d) {
        case Dominance::Equal: return "equal";
        case Dominance::StrictlyLess: return "less";
        case Dominance::Exceeds: return "exceeds";
    }
    return "equal";
}

Dominance compare_dimensions(Int family_dim, Int moduli) {
    if (family_dim == moduli) return Dominance::Equal;
    return family_dim < moduli ? Dominance::StrictlyLess : Dominance::Exceeds;
}

std::string_view to_string(StructureKind k) {
    switch (k) {
        case StructureKind::OddFiber: return "odd_fiber";
        case StructureKind::EvenFiberGenusZero: return "even_fiber_genus_zero";
        case StructureKind::EvenFiberPositiveGenus: return "even_fiber_positive_genus";
    }
    return "odd_fiber";
}

Int moduli_dim(const ChernData& chern) {
    const Int g = chern.config().genus;
    // 4c2 - c1^2 - 3(1 - g) + g
    return add(sub(discriminant(chern), mul(3, sub(1, g))), g);
}

Ext1Count ext1_rr(const DivisorClass& A, const DivisorClass& B, Int ell_z) {
    require_same_config(A, B);
    if (ell_z < 0) throw Error(ErrorCode::InvalidInput, "ell(Z) must be >= 0");

    Ext1Count out;
    const DivisorClass diff = A - B;
    const DivisorClass dual = canonical_class(A.config()) + B - A;

    VanishingAssumption hom{diff, false, effectivity(diff)};
    if (hom.screen.effective())
        throw Error(ErrorCode::AssumptionViolated,
                    "h^0(O(A - B)) = 0 is assumed but A - B = " + diff.to_string() + " is effective");

    VanishingAssumption h2{dual, ell_z > 0, effectivity(dual)};
    if (h2.screen.effective()) {
        if (ell_z == 0)
            throw Error(ErrorCode::AssumptionViolated,
                        "h^0(O(K + B - A)) = 0 is assumed but K + B - A = " + dual.to_string() +
                            " is effective");
        out.warnings.push_back("K + B - A = " + dual.to_string() +
                               " is effective; the count needs h^0(I_Z(K + B - A)) = 0");
    }

    out.ext1 = add(neg(euler_char(diff)), ell_z);
    out.assumptions.push_back(std::move(hom));
    out.assumptions.push_back(std::move(h2));
    return out;
}

Int family_dim_c1F0(Int genus, Int eta, Int num_points, Int n, Int eps, Int r1,
                    const std::vector<Int>& ell, Int h0) {
    if (h0 < 1) throw Error(ErrorCode::InvalidInput, "h0 must be >= 1");
    Int sq = 0;
    for (Int l : ell) {
        if (l < 0) throw Error(ErrorCode::InvalidInput, "ell_i must be >= 0");
        sq = add(sq, mul(l, l));
    }
    Int v = mul(-2, r1);
    v = add(v, sub(add(eta, mul(3, genus)), 1));
    v = add(v, sub(num_points, sq));
    v = add(v, mul(3, add(mul(2, n), eps)));
    return sub(v, h0);
}

FamilyReport family_report_c1F0(const SurfaceConfig& config, Int eta, Int n, Int eps, Int r1,
                                const std::vector<Int>& ell, Int h0) {
    const std::size_t m = static_cast<std::size_t>(config.num_points);
    if (ell.size() != m) throw Error(ErrorCode::ConfigMismatch, "ell must have one entry per point");
    const Int c2 = add(mul(2, n), eps);

    std::vector<Int> ones(m, 1);
    ChernData chern{DivisorClass(config, 0, eta, ones), c2};
    ExtensionDatum ed{0, r1, ell, chern};
    const auto len = length_Z(ed);
    if (len.length < 0)
        throw Error(ErrorCode::InvalidInput, "ell(Z) = " + std::to_string(len.length) + " < 0");

    auto count = ext1_rr(ed.sub_class(), ed.quotient_class(), len.length);
    FamilyReport rep;
    rep.ext1 = count.ext1;
    // ext^1 + 2 dim Pic^0 + 2 ell(Z) - h^0
    rep.family_dim = sub(add(add(count.ext1, mul(2, config.genus)), mul(2, len.length)), h0);
    rep.moduli_dim = moduli_dim(chern);
    rep.dominance = compare_dimensions(rep.family_dim, rep.moduli_dim);
    rep.assumptions = std::move(count.assumptions);
    rep.warnings = std::move(count.warnings);
    if (rep.dominance == Dominance::Exceeds)
        rep.warnings.push_back("family dimension exceeds the expected moduli dimension");
    return rep;
}

Int family_dim_c1F1(Int genus, Int e, Int beta, Int rho, Int c2) {
    Int v = sub(mul(4, c2), mul(2, beta));
    v = add(v, rho);
    v = add(v, mul(4, genus));
    v = sub(v, 3);
    return add(v, e);
}

FamilyReport family_report_c1F1(const SurfaceConfig& config, Int beta, Int c2) {
    const std::size_t m = static_cast<std::size_t>(config.num_points);
    std::vector<Int> ones(m, 1);
    ChernData chern{DivisorClass(config, 1, beta, ones), c2};

    const DivisorClass sub_cls(config, 1, sub(beta, c2), std::vector<Int>(m, 0));
    const DivisorClass quot_cls(config, 0, c2, ones);
    auto count = ext1_rr(sub_cls, quot_cls, 0);

    FamilyReport rep;
    rep.ext1 = count.ext1;
    rep.family_dim = sub(add(count.ext1, mul(2, config.genus)), 1);
    rep.moduli_dim = moduli_dim(chern);
    rep.dominance = compare_dimensions(rep.family_dim, rep.moduli_dim);
    rep.assumptions = std::move(count.assumptions);
    rep.warnings = std::move(count.warnings);
    if (rep.dominance == Dominance::Exceeds)
        rep.warnings.push_back("family dimension exceeds the expected moduli dimension");
    return rep;
}

ExampleFamily example_family_dim(Int n, Int e) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be >= 1");
    const SurfaceConfig cfg{0, e, 0};
    cfg.validate();
    const auto fiber = DivisorClass::fiber(cfg);
    const Int ell_z = mul(2, n);

    auto count = ext1_rr(-n * fiber, add(n, 1) * fiber, ell_z);

    // 0 -> O -> V(nF) -> I_Z((2n+1)F) -> 0, and general Z imposes independent conditions.
    const Int h0_system = h0_hirzebruch(add(mul(2, n), 1) * fiber);
    const Int h0_ideal = std::max<Int>(0, sub(h0_system, ell_z));

    ExampleFamily out;
    out.ext1 = count.ext1;
    out.h0_vd = add(1, h0_ideal);
    out.dim = sub(add(mul(2, ell_z), out.ext1), out.h0_vd);
    out.assumptions = std::move(count.assumptions);
    return out;
}

FamilyMaximum maximize_family_dim(Int genus, Int eta, Int num_points, Int n, Int eps) {
    if (num_points < 0) throw Error(ErrorCode::InvalidInput, "number of points must be >= 0");
    const Int c2 = add(mul(2, n), eps);
    const std::size_t m = static_cast<std::size_t>(num_points);

    auto feasible = [&](Int r1, const std::vector<Int>& ell, Int h0) {
        if (h0 < 1) return false;
        for (Int l : ell)
            if (l < 0) return false;
        return bound_prop_a(r1, eta, genus, c2, ell);
    };
    auto value = [&](Int r1, const std::vector<Int>& ell, Int h0) {
        return family_dim_c1F0(genus, eta, num_points, n, eps, r1, ell, h0);
    };

    // The objective is -2 r1 - sum l_i^2 - h0 + const, and the constraint only
    // tightens for l_i >= 2, so the optimum sits at the smallest admissible r1.
    FamilyMaximum best;
    best.r1 = r0_generic(genus, eta, c2);
    best.ell.assign(m, 0);
    best.h0 = 1;
    best.value = value(best.r1, best.ell, best.h0);
    best.delta = sub(mul(2, best.r1), sub(sub(eta, c2), genus));

    ChernData chern{DivisorClass(SurfaceConfig{genus, 0, num_points}, 0, eta, std::vector<Int>(m, 1)), c2};
    best.moduli_dim = moduli_dim(chern);
    best.dominance = compare_dimensions(best.value, best.moduli_dim);

    // Every feasible neighbour must be strictly worse.
    best.unique = feasible(best.r1, best.ell, best.h0);
    auto check = [&](Int r1, const std::vector<Int>& ell, Int h0) {
        if (feasible(r1, ell, h0) && value(r1, ell, h0) >= best.value) best.unique = false;
    };
    for (Int dr : {-1, 1}) check(best.r1 + dr, best.ell, best.h0);
    for (Int dh : {-1, 1}) check(best.r1, best.ell, best.h0 + dh);
    for (std::size_t i = 0; i < m; ++i) {
        for (Int dl : {-1, 1}) {
            auto ell = best.ell;
            ell[i] += dl;
            check(best.r1, ell, best.h0);
        }
    }
    return best;
}

Classification classify_structure(const ChernData& chern) {
    const auto norm = normalize_chern(chern);
    const Int g = chern.config().genus;
    Classification out;
    if (norm.c1.a() == 1) {
        out.kind = StructureKind::OddFiber;
        out.rational = (g == 0);
        out.stably_rational = out.rational;
        out.hilbert_exponent = 0;
        out.note = "birational to a projective bundle over Pic^0(C) x Pic^0(C) (large c2)";
        return out;
    }
    out.kind = g == 0 ? StructureKind::EvenFiberGenusZero : StructureKind::EvenFiberPositiveGenus;
    out.stably_rational = (g == 0);
    if (norm.c2 > 0) {
        out.hilbert_exponent = norm.c2;
        out.note = "dominated by a projective bundle over Pic^0(C) x Pic^0(C) x C^[c2]";
    } else {
        out.note = "Hilbert scheme exponent undetermined for normalized c2 <= 0";
    }
    return out;
}

}  // namespace ruled
