#include <doctest.h>

#include "ruled/stability.hpp"
#include "support.hpp"

using namespace ruled;
using ruled::testing::Gen;

namespace {

DivisorClass cls(const SurfaceConfig& cfg, Int a, Int b, std::vector<Int> exc = {}) {
    return DivisorClass(cfg, a, b, std::move(exc));
}

StabilityVerdict example_search(Int n, Int e, Int w, Int box) {
    const SurfaceConfig cfg{0, e, 0};
    const auto f = DivisorClass::fiber(cfg);
    const Polarization L(cls(cfg, 1, w));
    return destabilizer_search(-n * f, (n + 1) * f, 2 * n, L, {box, box, 0});
}

}  // namespace

TEST_CASE("slope margin") {
    const SurfaceConfig cfg{0, 1, 0};
    const auto L = cls(cfg, 1, 100);
    const auto c1 = DivisorClass::fiber(cfg);
    CHECK(slope_margin(DivisorClass::zero(cfg), DivisorClass::zero(cfg), L) == 0);
    // A = -3F: 2(-3) - 1
    CHECK(slope_margin(-3 * c1, c1, L) == -7);
    for (Int n = 1; n <= 10; ++n) CHECK(slope_margin(-n * c1, c1, L) == -2 * n - 1);

    // branch 2 with negative C0 coefficient: margin < 0 once w is large
    for (Int n = 1; n <= 6; ++n)
        for (Int e = 1; e <= 3; ++e) {
            const SurfaceConfig s{0, e, 0};
            const Int w = 2 * n + 2 * e + 3;
            const auto Lw = cls(s, 1, w);
            for (Int alpha = -5; alpha <= -1; ++alpha)
                for (Int beta = -20; beta <= n + 1; ++beta)
                    CHECK(slope_margin(cls(s, alpha, beta), DivisorClass::fiber(s), Lw) < 0);
        }
}

TEST_CASE("the example bundle is stable") {
    const auto v = example_search(3, 1, 100, 10);
    CHECK(v.verdict == StabilityOutcome::StableCertified);
    CHECK(v.candidates.empty());
    CHECK(v.examined == 21 * 21);
    CHECK(v.box.a == 10);

    for (Int n = 1; n <= 10; ++n)
        for (Int e = 1; e <= 3; ++e)
            for (Int w : {2 * n + 2 * e + 3, 2 * n + 2 * e + 10}) {
                const auto r = example_search(n, e, w, n + 3);
                CHECK_MESSAGE(r.verdict == StabilityOutcome::StableCertified,
                              "n=" << n << " e=" << e << " w=" << w);
            }
}

TEST_CASE("branch screens") {
    const SurfaceConfig cfg{0, 1, 0};
    const auto f = DivisorClass::fiber(cfg);
    const Int n = 3;
    auto [one, two] = check_branches(-n * f, (n + 1) * f, 2 * n, -n * f);
    CHECK(one.effectivity.effective());
    CHECK_FALSE(one.excluded());
    // h^0((2n+1)F) = 2n+2 > 2n: O(-nF) does map to I_Z((n+1)F)
    CHECK_FALSE(two.pruned_by_generality);

    auto [one0, two0] = check_branches(-n * f, (n + 1) * f, 2 * n, DivisorClass::zero(cfg));
    CHECK(one0.excluded());
    CHECK(two0.pruned_by_generality);
}

TEST_CASE("strictness convention on the trivial bundle") {
    const SurfaceConfig cfg{0, 0, 0};
    const auto zero = DivisorClass::zero(cfg);
    const Polarization L(cls(cfg, 1, 1));
    const auto v = destabilizer_search(zero, zero, 0, L, {2, 2, 0});
    CHECK(v.verdict == StabilityOutcome::DestabilizerFound);
    bool found_zero = false;
    for (const auto& c : v.candidates)
        if (c.A == zero && c.branch == 1) {
            found_zero = true;
            CHECK(c.slope_margin == 0);
            CHECK(c.check.effectivity.effective());
        }
    CHECK(found_zero);
}

TEST_CASE("a separating wall spoils certification") {
    const SurfaceConfig cfg{0, 0, 0};
    const auto f = DivisorClass::fiber(cfg);
    const Polarization bad(cls(cfg, 3, 1));
    const auto v = destabilizer_search(-f, 2 * f, 2, bad, {5, 5, 0});
    CHECK(v.verdict != StabilityOutcome::StableCertified);
    bool saw = false;
    for (const auto& c : v.candidates)
        if (c.A == cls(cfg, -1, 1) && c.branch == 2) {
            saw = true;
            CHECK(c.slope_margin == 1);
        }
    CHECK(saw);
}

TEST_CASE("twist equivariance") {
    Gen gen(51);
    for (int it = 0; it < 500; ++it) {
        const auto cfg = gen.surface(2, 3, 2);
        const auto sub = gen.divisor(cfg, 4), quot = gen.divisor(cfg, 4);
        const auto A = gen.divisor(cfg, 4), T = gen.divisor(cfg, 4);
        const auto L = gen.polarization(cfg).cls();
        const Int ell = gen.range(0, 6);
        CHECK(slope_margin(A + T, sub + quot + 2 * T, L) == slope_margin(A, sub + quot, L));

        const auto [o1, t1] = check_branches(sub, quot, ell, A);
        const auto [o2, t2] = check_branches(sub + T, quot + T, ell, A + T);
        CHECK(o1.effectivity.verdict == o2.effectivity.verdict);
        CHECK(t1.effectivity.verdict == t2.effectivity.verdict);
        CHECK(t1.pruned_by_generality == t2.pruned_by_generality);
    }
}

TEST_CASE("enlarging the box keeps destabilizers") {
    Gen gen(52);
    for (int it = 0; it < 60; ++it) {
        const SurfaceConfig cfg{0, gen.range(0, 3), 0};
        const auto sub = gen.divisor(cfg, 3), quot = gen.divisor(cfg, 3);
        const auto L = gen.polarization(cfg);
        const Int ell = gen.range(0, 4);
        const auto small = destabilizer_search(sub, quot, ell, L, {2, 2, 0});
        const auto large = destabilizer_search(sub, quot, ell, L, {4, 6, 0});
        if (small.verdict == StabilityOutcome::DestabilizerFound)
            CHECK(large.verdict == StabilityOutcome::DestabilizerFound);
        if (large.verdict == StabilityOutcome::StableCertified)
            CHECK(small.verdict == StabilityOutcome::StableCertified);
        CHECK(large.examined > small.examined);
    }
}

TEST_CASE("verdict invariants") {
    Gen gen(53);
    for (int it = 0; it < 60; ++it) {
        const auto cfg = gen.surface(1, 2, 1);
        const auto sub = gen.divisor(cfg, 3), quot = gen.divisor(cfg, 3);
        const auto L = gen.polarization(cfg);
        const auto v = destabilizer_search(sub, quot, gen.range(0, 4), L, {2, 3, 1});
        bool effective_branch_one = false;
        for (const auto& c : v.candidates) {
            CHECK(c.slope_margin >= 0);
            CHECK_FALSE(c.check.excluded());
            if (c.branch == 1 && c.check.effectivity.effective()) effective_branch_one = true;
        }
        CHECK((v.verdict == StabilityOutcome::DestabilizerFound) == effective_branch_one);
        CHECK((v.verdict == StabilityOutcome::StableCertified) == v.candidates.empty());
    }
}

TEST_CASE("no pruning away from Hirzebruch surfaces") {
    const SurfaceConfig cfg{1, 1, 0};
    const auto f = DivisorClass::fiber(cfg);
    const Polarization L(cls(cfg, 1, 20));
    const auto v = destabilizer_search(-3 * f, 4 * f, 6, L, {6, 6, 0});
    CHECK(v.verdict == StabilityOutcome::Inconclusive);
    CHECK(v.notes.size() == 2);
}

TEST_CASE("search limits and input errors") {
    const SurfaceConfig cfg{0, 0, 3};
    const auto zero = DivisorClass::zero(cfg);
    const Polarization L(cls(cfg, 2, 2, {-1, -1, -1}));
    StabilitySearchOptions opts;
    opts.max_candidates = 1000;
    try {
        (void)destabilizer_search(zero, zero, 0, L, {5, 5, 5}, opts);
        FAIL("expected BoxTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoxTooLarge);
    }
    CHECK_THROWS_AS(destabilizer_search(zero, zero, -1, L, {1, 1, 1}), Error);
    CHECK_THROWS_AS(destabilizer_search(zero, zero, 0, L, {-1, 1, 1}), Error);

    const auto box = default_box(cls(cfg, 0, -9, {0, 1, 0}), zero);
    CHECK(box.a == 12);
    CHECK(box.b == 12);
    CHECK(box.c == 12);
    CHECK(default_box(zero, zero).a == 5);
}
