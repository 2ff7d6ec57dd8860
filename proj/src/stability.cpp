#include "ruled/stability.hpp"

#include <algorithm>
#include <cstdlib>

namespace ruled {

using namespace checked;

Int slope_margin(const DivisorClass& A, const DivisorClass& c1, const DivisorClass& L) {
    return sub(mul(2, intersect(A, L)), intersect(c1, L));
}

std::string_view to_string(StabilityOutcome v) {
    switch (v) {
        case StabilityOutcome::StableCertified: return "stable_certified";
        case StabilityOutcome::DestabilizerFound: return "destabilizer_found";
        case StabilityOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SearchBox default_box(const DivisorClass& sub, const DivisorClass& quot) {
    Int big = 0;
    for (const auto* d : {&sub, &quot}) {
        big = std::max({big, std::abs(d->a()), std::abs(d->b())});
        for (Int c : d->exc()) big = std::max(big, std::abs(c));
    }
    const Int r = std::max<Int>(5, add(big, 3));
    return {r, r, r};
}

std::pair<BranchCheck, BranchCheck> check_branches(const DivisorClass& sub, const DivisorClass& quot,
                                                   Int ell_z, const DivisorClass& A) {
    BranchCheck one, two;
    one.effectivity = effectivity(sub - A);
    const DivisorClass rest = quot - A;
    two.effectivity = effectivity(rest);

    const auto& cfg = A.config();
    const bool hirzebruch = cfg.genus == 0 && cfg.num_points == 0;
    if (hirzebruch && !two.effectivity.not_effective()) {
        // Hom(O(A), I_Z(quot)) = H^0(I_Z(quot - A)), of dimension
        // max(0, h^0(quot - A) - ell_z) for general Z.
        two.pruned_by_generality = h0_hirzebruch(rest) <= ell_z;
    }
    return {std::move(one), std::move(two)};
}

StabilityVerdict destabilizer_search(const DivisorClass& sub, const DivisorClass& quot, Int ell_z,
                                     const Polarization& L, const SearchBox& box,
                                     const StabilitySearchOptions& opts) {
    require_same_config(sub, quot);
    require_same_config(sub, L.cls());
    if (ell_z < 0) throw Error(ErrorCode::InvalidInput, "ell(Z) must be >= 0");
    if (box.a < 0 || box.b < 0 || box.c < 0)
        throw Error(ErrorCode::InvalidInput, "search box bounds must be >= 0");

    const auto& cfg = sub.config();
    const std::size_t m = static_cast<std::size_t>(cfg.num_points);

    // (2a+1)(2b+1)(2c+1)^m candidates
    Int total = mul(add(mul(2, box.a), 1), add(mul(2, box.b), 1));
    for (std::size_t i = 0; i < m; ++i) {
        total = mul(total, add(mul(2, box.c), 1));
        if (total > opts.max_candidates) break;
    }
    if (total > opts.max_candidates)
        throw Error(ErrorCode::BoxTooLarge, "search box has more than " +
                                                std::to_string(opts.max_candidates) + " candidates");

    const DivisorClass c1 = sub + quot;
    StabilityVerdict out;
    out.box = box;

    bool destabilized = false;
    bool undecided = false;
    std::vector<Int> c(m, -box.c);

    auto evaluate = [&](const DivisorClass& A) {
        ++out.examined;
        const Int margin = slope_margin(A, c1, L.cls());
        if (margin < 0) return;
        auto [one, two] = check_branches(sub, quot, ell_z, A);
        if (!one.excluded()) {
            if (one.effectivity.effective())
                destabilized = true;
            else
                undecided = true;
            out.candidates.push_back({A, 1, std::move(one), margin});
        }
        if (!two.excluded()) {
            // A map to I_Z(quot) need not lift to V.
            undecided = true;
            out.candidates.push_back({A, 2, std::move(two), margin});
        }
    };

    for (Int a = -box.a; a <= box.a; ++a) {
        for (Int b = -box.b; b <= box.b; ++b) {
            std::fill(c.begin(), c.end(), -box.c);
            while (true) {
                evaluate(DivisorClass(cfg, a, b, c));
                std::size_t i = 0;
                while (i < m && c[i] == box.c) c[i++] = -box.c;
                if (i == m) break;
                ++c[i];
            }
        }
    }

    if (destabilized)
        out.verdict = StabilityOutcome::DestabilizerFound;
    else if (undecided)
        out.verdict = StabilityOutcome::Inconclusive;
    else
        out.verdict = StabilityOutcome::StableCertified;

    out.notes.push_back("verdict is relative to the search box |a| <= " + std::to_string(box.a) +
                        ", |b| <= " + std::to_string(box.b) + ", |c_i| <= " + std::to_string(box.c));
    if (!(cfg.genus == 0 && cfg.num_points == 0))
        out.notes.push_back("generality pruning of branch 2 is only available on Hirzebruch surfaces");
    return out;
}

}  // namespace ruled
