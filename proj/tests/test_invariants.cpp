#include <doctest.h>

#include "ruled/invariants.hpp"
#include "support.hpp"

using namespace ruled;
using ruled::testing::Gen;

namespace {

DivisorClass cls(const SurfaceConfig& cfg, Int a, Int b, std::vector<Int> exc = {}) {
    return DivisorClass(cfg, a, b, std::move(exc));
}

std::vector<Int> ones(Int m) { return std::vector<Int>(static_cast<std::size_t>(m), 1); }
std::vector<Int> zeros(Int m) { return std::vector<Int>(static_cast<std::size_t>(m), 0); }

}  // namespace

TEST_CASE("zeta class") {
    SUBCASE("fiber degree one") {
        for (Int rho = 0; rho <= 3; ++rho) {
            const SurfaceConfig cfg{1, 2, rho};
            const Int beta = 3, c2 = 5;
            ExtensionDatum ed{1, beta - c2, zeros(rho), {cls(cfg, 1, beta, ones(rho)), c2}};
            std::vector<Int> minus(static_cast<std::size_t>(rho), -1);
            CHECK(zeta_class(ed) == cls(cfg, 1, beta - 2 * c2, minus));
            CHECK(length_Z(ed).length == 0);
            CHECK(length_Z(ed).warnings.empty());
        }
    }
    SUBCASE("balanced splitting") {
        const SurfaceConfig cfg{0, 1, 2};
        ExtensionDatum ed{1, 2, {1, 0}, {cls(cfg, 2, 4, {2, 0}), 7}};
        CHECK(zeta_class(ed) == DivisorClass::zero(cfg));
        CHECK(length_Z(ed).length == 7 - self_intersection(ed.chern.c1) / 4);
    }
    SUBCASE("fiber degree zero") {
        const SurfaceConfig cfg{0, 1, 2};
        ExtensionDatum ed{0, -3, {0, 2}, {cls(cfg, 0, 1, {1, 1}), 6}};
        CHECK(zeta_class(ed) == cls(cfg, 0, -7, {-1, 3}));
    }
}

TEST_CASE("length specialization for fiber degree zero") {
    Gen gen(21);
    for (int it = 0; it < 500; ++it) {
        const auto cfg = gen.surface(3, 3, 4);
        const Int eta = gen.range(0, 1), c2 = gen.range(-5, 40), r1 = gen.range(-20, 20);
        const auto ell = gen.nonneg_list(static_cast<std::size_t>(cfg.num_points), 5);
        ExtensionDatum ed{0, r1, ell, {cls(cfg, 0, eta, ones(cfg.num_points)), c2}};
        Int expected = c2;
        for (Int l : ell) expected += l * (1 - l);
        CHECK(length_Z(ed).length == expected);
    }
}

TEST_CASE("length from zeta") {
    const SurfaceConfig cfg{0, 0, 1};
    const ChernData cd{cls(cfg, 0, 2, {2}), 9};
    CHECK(length_from_zeta(cd, DivisorClass::zero(cfg)) == 9 - self_intersection(cd.c1) / 4);
    try {
        (void)length_from_zeta(cd, DivisorClass::fiber(cfg));
        FAIL("expected ParityViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParityViolation);
    }

    ExtensionDatum neg{1, -5, {0}, {cls(cfg, 0, 0, {0}), 0}};
    const auto res = length_Z(neg);
    CHECK(res.length < 0);
    REQUIRE(res.warnings.size() == 1);
    CHECK(res.warnings[0].rfind("NegativeLength", 0) == 0);
}

TEST_CASE("extension datum validation") {
    const SurfaceConfig cfg{0, 1, 2};
    const ChernData cd{cls(cfg, 2, 0, {0, 0}), 3};
    CHECK_THROWS_AS(ExtensionDatum({0, 0, {0}, cd}).validate(), Error);
    CHECK_THROWS_AS(ExtensionDatum({1, 0, {-1, 0}, cd}).validate(), Error);
    CHECK_THROWS_AS(ExtensionDatum({0, 0, {0, 0}, cd}).validate(), Error);
    CHECK_NOTHROW(ExtensionDatum({1, 0, {0, 0}, cd}).validate());
    ExtensionDatum ok{3, -1, {1, 2}, cd};
    CHECK(ok.sub_class() + ok.quotient_class() == cd.c1);
}

TEST_CASE("generic r0") {
    for (Int n = 1; n <= 6; ++n) CHECK(r0_generic(0, 1, 2 * n) == 1 - n);
    CHECK(r0_generic(0, 0, 6) == -3);
    for (Int g = 0; g <= 5; ++g) CHECK(r0_generic(g, 0, 0) == -(g / 2));

    Gen gen(22);
    for (int it = 0; it < 1000; ++it) {
        const Int g = gen.range(0, 10), eta = gen.range(-20, 20), c2 = gen.range(-50, 50);
        const Int r0 = r0_generic(g, eta, c2);
        CHECK(eta - c2 - g <= 2 * r0);
        CHECK(2 * r0 <= eta - c2 - g + 1);
        CHECK(bound_prop_a(r0, eta, g, c2, {}));
        CHECK(bound_prop_a(r0, eta, g, c2, {0, 1, 0}));
        CHECK_FALSE(bound_prop_a(r0 - 1, eta, g, c2, {}));
    }
}

TEST_CASE("lower bounds on r") {
    CHECK_FALSE(bound_prop_a(-1, 0, 0, 4, {3}));
    CHECK(bound_prop_a(-3, 1, 2, 5, {}));
    CHECK_FALSE(bound_prop_a(-4, 1, 2, 5, {}));
    CHECK(bound_prop_a(0, 0, 0, 4, {3}));
    CHECK_THROWS_AS(bound_prop_a(0, 0, 0, 0, {-1}), Error);

    CHECK(nagata_bound(0, 0) == 0);
    CHECK(nagata_bound(5, 2) == 2);
    CHECK(nagata_bound(-7, 1) == -4);
    for (Int deg = -20; deg <= 20; ++deg)
        for (Int g = 0; g <= 4; ++g) {
            const Int r = nagata_bound(deg, g);
            CHECK(2 * r >= deg - g);
            CHECK(2 * (r - 1) < deg - g);
        }
}

TEST_CASE("Chern twists") {
    const SurfaceConfig cfg{0, 0, 1};
    const ChernData cd{cls(cfg, 0, 1, {1}), 4};
    CHECK(chern_twist(cd, DivisorClass::zero(cfg)) == cd);
    const auto tw = chern_twist(cd, DivisorClass::exceptional(cfg, 1));
    CHECK(tw.c1 == cls(cfg, 0, 1, {3}));
    CHECK(tw.c2 == 2);
    CHECK(discriminant(cd) == 17);
    CHECK(discriminant(tw) == 17);

    Gen gen(23);
    for (int it = 0; it < 500; ++it) {
        const auto s = gen.surface();
        const ChernData c{gen.divisor(s), gen.range(-30, 30)};
        const auto t = gen.divisor(s, 5);
        const auto twisted = chern_twist(c, t);
        CHECK(discriminant(twisted) == discriminant(c));
        CHECK(chern_twist(twisted, -t) == c);

        const auto norm = normalize_chern(c);
        CHECK(discriminant(norm) == discriminant(c));
        CHECK((norm.c1.a() == 0 || norm.c1.a() == 1));
        CHECK((norm.c1.b() == 0 || norm.c1.b() == 1));
        for (Int x : norm.c1.exc()) CHECK((x == 0 || x == 1));
        CHECK(normalize_chern(twisted) == norm);
    }
}

TEST_CASE("zeta and length under twists") {
    Gen gen(24);
    int done = 0;
    while (done < 400) {
        const auto cfg = gen.surface(2, 3, 3);
        const ChernData cd{gen.divisor(cfg, 6), gen.range(-10, 30)};
        const Int d = gen.range(0, 4) + (cd.c1.a() + 1) / 2 + (cd.c1.a() < 0 ? -5 : 0);
        ExtensionDatum ed{d, gen.range(-10, 10), gen.nonneg_list(static_cast<std::size_t>(cfg.num_points), 3), cd};
        if (2 * ed.d < cd.c1.a()) continue;

        std::vector<Int> texc(static_cast<std::size_t>(cfg.num_points));
        for (auto& x : texc) x = gen.range(0, 3);
        const DivisorClass t(cfg, gen.range(-3, 3), gen.range(-5, 5), texc);

        ExtensionDatum shifted{ed.d + t.a(), ed.r + t.b(), ed.q, chern_twist(cd, t)};
        for (std::size_t i = 0; i < shifted.q.size(); ++i) shifted.q[i] += texc[i];

        const auto zeta = zeta_class(ed);
        CHECK(zeta_class(shifted) == zeta);
        CHECK(length_Z(shifted).length == length_Z(ed).length);
        CHECK(congruent_mod2(zeta, cd.c1));
        CHECK(is_extension_unique(shifted) == is_extension_unique(ed));
        ++done;
    }
}

TEST_CASE("uniqueness of the extension") {
    const SurfaceConfig cfg{0, 1, 0};
    CHECK(is_extension_unique({1, 0, {}, {cls(cfg, 1, 0), 0}}));
    CHECK_FALSE(is_extension_unique({0, 0, {}, {cls(cfg, 0, 0), 0}}));
    CHECK(is_extension_unique({1, 0, {}, {cls(cfg, 0, 0), 0}}));
}
