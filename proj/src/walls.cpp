#include "ruled/walls.hpp"

#include <algorithm>
#include <cstdlib>

namespace ruled {

using namespace checked;

Polarization::Polarization(DivisorClass cls) : cls_(std::move(cls)) {
    const auto& cfg = cls_.config();
    checks_.square = self_intersection(cls_);
    checks_.dot_fiber = intersect(cls_, DivisorClass::fiber(cfg));
    checks_.dot_section = intersect(cls_, DivisorClass::minimal_section(cfg));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(cfg.num_points); ++i) {
        checks_.dot_exceptional.push_back(intersect(cls_, DivisorClass::exceptional(cfg, i)));
        checks_.dot_strict_fiber.push_back(intersect(cls_, DivisorClass::strict_fiber(cfg, i)));
    }

    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::InvalidPolarization, cls_.to_string() + ": " + what);
    };
    if (checks_.square <= 0) fail("L^2 must be positive");
    if (checks_.dot_fiber <= 0) fail("L.F must be positive");
    if (checks_.dot_section <= 0) fail("L.C0 must be positive");
    for (std::size_t i = 0; i < checks_.dot_exceptional.size(); ++i) {
        if (checks_.dot_exceptional[i] <= 0) fail("L.E" + std::to_string(i + 1) + " must be positive");
        if (checks_.dot_strict_fiber[i] <= 0)
            fail("L.(F-E" + std::to_string(i + 1) + ") must be positive");
    }
}

namespace {

struct Frame {
    Int delta;   // 4c2 - c1^2
    Int x;       // L.F
    Int lsq;     // L^2
    Int e;
    Int y;       // F-coefficient of L
    std::vector<Int> lambda;  // L.E_i
};

Frame make_frame(const ChernData& chern, const Polarization& L) {
    require_same_config(chern.c1, L.cls());
    Frame f;
    f.delta = discriminant(chern);
    f.x = L.checks().dot_fiber;
    f.lsq = L.checks().square;
    f.e = chern.config().invariant_e;
    f.y = L.cls().b();
    f.lambda = L.checks().dot_exceptional;
    return f;
}

// Largest a >= 0 with a^2 L^2 <= delta x^2.
Int max_leading(const Frame& f) {
    if (f.delta <= 0) return 0;
    const Int rhs = mul(f.delta, mul(f.x, f.x));
    Int a = isqrt(rhs / f.lsq);
    while (mul(mul(a + 1, a + 1), f.lsq) <= rhs) ++a;
    while (a > 0 && mul(mul(a, a), f.lsq) > rhs) --a;
    return a;
}

bool same_parity(Int u, Int v) { return ((u - v) & 1) == 0; }

}  // namespace

WallSearchBox wall_search_box(const ChernData& chern, const Polarization& L) {
    const Frame f = make_frame(chern, L);
    WallSearchBox box;
    box.a_max = max_leading(f);
    const std::size_t m = f.lambda.size();
    box.c_lo.assign(m, 0);
    box.c_hi.assign(m, -1);
    if (box.a_max == 0) return box;

    // (x c_i + a lambda_i)^2 <= delta x^2 - a^2 L^2 <= delta x^2 - L^2 for a >= 1.
    const Int s = isqrt(sub(mul(f.delta, mul(f.x, f.x)), f.lsq));
    Int b_hi_num = mul(box.a_max, std::abs(sub(f.y, mul(f.e, f.x))));
    for (std::size_t i = 0; i < m; ++i) {
        const Int lo_shift = std::max(f.lambda[i], mul(box.a_max, f.lambda[i]));
        const Int hi_shift = std::min(f.lambda[i], mul(box.a_max, f.lambda[i]));
        box.c_lo[i] = ceil_div(sub(-s, lo_shift), f.x);
        box.c_hi[i] = floor_div(sub(s, hi_shift), f.x);
        const Int cmax = std::max(std::abs(box.c_lo[i]), std::abs(box.c_hi[i]));
        b_hi_num = add(b_hi_num, mul(std::abs(f.lambda[i]), cmax));
    }
    // zeta^2 >= -delta gives 2ab >= -delta + e a^2; zeta.L <= 0 bounds b above.
    box.b_lo = floor_div(add(-f.delta, std::min<Int>(0, mul(f.e, box.a_max))), 2);
    box.b_hi = floor_div(b_hi_num, f.x);
    return box;
}

WallEnumeration enumerate_walls(const ChernData& chern, const Polarization& L,
                                const WallSearchOptions& opts) {
    const Frame f = make_frame(chern, L);
    WallEnumeration out;
    out.box = wall_search_box(chern, L);
    if (f.delta <= 0) return out;

    const auto& cfg = chern.config();
    const auto& c1 = chern.c1;
    const std::size_t m = f.lambda.size();
    const Int budget_total = mul(f.delta, mul(f.x, f.x));
    std::vector<Int> c(m, 0);

    for (Int a = 1; a <= out.box.a_max; ++a) {
        if (!same_parity(a, c1.a())) continue;
        const Int a_budget = sub(budget_total, mul(mul(a, a), f.lsq));

        // Depth-first over exceptional coefficients with the remaining Hodge budget.
        auto visit = [&](auto&& self, std::size_t i, Int budget) -> void {
            if (i == m) {
                if (++out.candidates_visited > opts.max_candidates)
                    throw Error(ErrorCode::SearchBoundsExceeded,
                                "wall search exceeded " + std::to_string(opts.max_candidates) +
                                    " candidates at a = " + std::to_string(a));
                Int csq = 0, lam_c = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    csq = add(csq, mul(c[j], c[j]));
                    lam_c = add(lam_c, mul(f.lambda[j], c[j]));
                }
                const Int ea2 = mul(f.e, mul(a, a));
                // zeta.L = x b + a (y - e x) + sum lambda_i c_i <= 0
                const Int b_hi_l = floor_div(sub(neg(mul(a, sub(f.y, mul(f.e, f.x)))), lam_c), f.x);
                // zeta^2 = 2ab - e a^2 - sum c^2 in [-delta, 0)
                const Int b_lo = ceil_div(add(sub(ea2, f.delta), csq), mul(2, a));
                const Int b_hi_sq = sub(ceil_div(add(ea2, csq), mul(2, a)), 1);
                const Int b_hi = std::min(b_hi_l, b_hi_sq);
                for (Int b = b_lo; b <= b_hi; ++b) {
                    if (!same_parity(b, c1.b())) continue;
                    DivisorClass zeta(cfg, a, b, c);
                    WallClass w;
                    w.zeta_sq = self_intersection(zeta);
                    w.zF = a;
                    w.zL = intersect(zeta, L.cls());
                    w.ell = length_from_zeta(chern, zeta);
                    w.zeta = std::move(zeta);
                    if (w.ell < 0) {
                        ++out.excluded_negative_length;
                        continue;
                    }
                    if (w.zL < 0)
                        out.separating.push_back(std::move(w));
                    else if (w.zL == 0)
                        out.boundary.push_back(std::move(w));
                }
                return;
            }
            const Int s = isqrt(budget);
            const Int shift = mul(a, f.lambda[i]);
            const Int lo = ceil_div(sub(-s, shift), f.x);
            const Int hi = floor_div(sub(s, shift), f.x);
            for (Int ci = lo; ci <= hi; ++ci) {
                if (!same_parity(ci, c1.exc(i))) continue;
                const Int t = add(mul(f.x, ci), shift);
                c[i] = ci;
                self(self, i + 1, sub(budget, mul(t, t)));
            }
        };
        visit(visit, 0, a_budget);
    }

    std::sort(out.separating.begin(), out.separating.end(),
              [](const WallClass& u, const WallClass& v) { return u.zeta < v.zeta; });
    std::sort(out.boundary.begin(), out.boundary.end(),
              [](const WallClass& u, const WallClass& v) { return u.zeta < v.zeta; });
    return out;
}

std::vector<WallClass> enumerate_separating_walls(const ChernData& chern, const Polarization& L,
                                                  const WallSearchOptions& opts) {
    return enumerate_walls(chern, L, opts).separating;
}

Suitability is_suitable(const ChernData& chern, const Polarization& L,
                        const WallSearchOptions& opts) {
    auto walls = enumerate_walls(chern, L, opts);
    Suitability out;
    out.boundary = walls.boundary;
    if (!walls.separating.empty()) {
        out.witness = walls.separating.front();
    } else if (!walls.boundary.empty()) {
        out.witness = walls.boundary.front();
        out.warnings.push_back("L lies on a wall of type (c1,c2); boundary walls are not treated as suitable");
    }
    out.suitable = !out.witness.has_value();
    return out;
}

DvZeroCertificate certify_dv_zero(const ChernData& chern, const Polarization& L,
                                  const WallSearchOptions& opts) {
    if ((chern.c1.a() & 1) != 0)
        throw Error(ErrorCode::NotApplicable, "c1.F is odd; d_V = 0 is not the expected invariant");
    auto s = is_suitable(chern, L, opts);
    DvZeroCertificate out;
    out.certified = s.suitable;
    out.witness = s.witness;
    out.warnings = std::move(s.warnings);
    return out;
}

std::pair<DivisorClass, Int> hodge_xi(const DivisorClass& L, const DivisorClass& zeta) {
    const auto fiber = DivisorClass::fiber(L.config());
    const Int lf = intersect(L, fiber);
    const Int lz = intersect(L, zeta);
    DivisorClass xi = lf * zeta - lz * fiber;
    return {xi, self_intersection(xi)};
}

}  // namespace ruled
