#pragma once

// Shared test helpers: seeded generators and brute-force oracles that only use
// the intersection form, never the enumeration or search code they check.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "ruled/walls.hpp"

namespace ruled::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    Int range(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }

    SurfaceConfig surface(Int max_genus = 3, Int max_e = 4, Int max_points = 4) {
        SurfaceConfig cfg;
        cfg.genus = range(0, max_genus);
        cfg.invariant_e = cfg.genus == 0 ? range(0, max_e) : range(-cfg.genus, max_e);
        cfg.num_points = range(0, max_points);
        return cfg;
    }

    DivisorClass divisor(const SurfaceConfig& cfg, Int bound = 10) {
        std::vector<Int> exc(static_cast<std::size_t>(cfg.num_points));
        for (auto& c : exc) c = range(-bound, bound);
        return DivisorClass(cfg, range(-bound, bound), range(-bound, bound), std::move(exc));
    }

    std::vector<Int> nonneg_list(std::size_t n, Int hi) {
        std::vector<Int> out(n);
        for (auto& v : out) v = range(0, hi);
        return out;
    }

    /// A class passing the Polarization filter: x C0 + y F - sum lambda_i E_i.
    Polarization polarization(const SurfaceConfig& cfg, Int max_x = 4, Int max_lambda = 2) {
        for (;;) {
            const Int x = range(1, max_x);
            std::vector<Int> exc(static_cast<std::size_t>(cfg.num_points));
            Int lam_max = 0;
            for (auto& c : exc) {
                const Int lam = range(1, max_lambda);
                c = -lam;
                lam_max = std::max(lam_max, lam);
            }
            // L.C0 = y - e x > 0, L.(F - E_i) = x - lambda_i > 0
            if (x <= lam_max) continue;
            const Int y = cfg.invariant_e * x + range(1, 6);
            DivisorClass cls(cfg, x, y, std::move(exc));
            try {
                return Polarization(cls);
            } catch (const Error&) {
                continue;
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Defining conditions of a separating or boundary wall, checked directly.
inline bool is_wall_candidate(const ChernData& chern, const DivisorClass& zeta) {
    if (!congruent_mod2(zeta, chern.c1)) return false;
    const Int sq = self_intersection(zeta);
    const Int lower = self_intersection(chern.c1) - 4 * chern.c2;
    return lower <= sq && sq < 0 && intersect(zeta, DivisorClass::fiber(chern.config())) > 0;
}

struct BruteWalls {
    std::vector<DivisorClass> separating;
    std::vector<DivisorClass> boundary;
};

/// Scans the enumerator's search box padded by `margin` in every coordinate.
inline BruteWalls brute_force_walls(const ChernData& chern, const Polarization& L, Int margin = 2) {
    BruteWalls out;
    const auto box = wall_search_box(chern, L);
    const auto& cfg = chern.config();
    const std::size_t m = static_cast<std::size_t>(cfg.num_points);
    const Int a_hi = box.a_max + margin;
    const Int b_lo = std::min(box.b_lo, box.b_hi) - margin;
    const Int b_hi = std::max(box.b_lo, box.b_hi) + margin;
    std::vector<Int> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] = std::min(box.c_lo[i], box.c_hi[i]) - margin;
        hi[i] = std::max(box.c_lo[i], box.c_hi[i]) + margin;
    }
    std::vector<Int> c(m);
    for (Int a = -a_hi; a <= a_hi; ++a) {
        for (Int b = b_lo; b <= b_hi; ++b) {
            for (std::size_t i = 0; i < m; ++i) c[i] = lo[i];
            for (;;) {
                DivisorClass z(cfg, a, b, c);
                if (is_wall_candidate(chern, z)) {
                    const Int zl = intersect(z, L.cls());
                    if (zl < 0) out.separating.push_back(z);
                    if (zl == 0) out.boundary.push_back(z);
                }
                std::size_t i = 0;
                while (i < m && c[i] == hi[i]) {
                    c[i] = lo[i];
                    ++i;
                }
                if (i == m) break;
                ++c[i];
            }
        }
    }
    std::sort(out.separating.begin(), out.separating.end());
    std::sort(out.boundary.begin(), out.boundary.end());
    return out;
}

/// Separating-wall candidates for a fixed c1 and L, scanned once over the padded
/// box of `widest` (the largest c2 of interest) and then filtered per c2.
/// The box only grows with c2, so one scan covers every smaller c2.
class WallCandidatePool {
public:
    WallCandidatePool(const ChernData& widest, const Polarization& L, Int margin = 2) : c1_(widest.c1) {
        const auto box = wall_search_box(widest, L);
        const auto& cfg = widest.config();
        const std::size_t m = static_cast<std::size_t>(cfg.num_points);
        const Int a_hi = box.a_max + margin;
        const Int b_lo = std::min(box.b_lo, box.b_hi) - margin;
        const Int b_hi = std::max(box.b_lo, box.b_hi) + margin;
        std::vector<Int> lo(m), hi(m), c(m);
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(box.c_lo[i], box.c_hi[i]) - margin;
            hi[i] = std::max(box.c_lo[i], box.c_hi[i]) + margin;
        }
        // The intersection form written out on coordinates, so the scan allocates
        // only for classes that survive.
        const Int e = cfg.invariant_e;
        const auto& l = L.cls();
        auto odd = [](Int v) { return (v & 1) != 0; };
        for (Int a = -a_hi; a <= a_hi; ++a) {
            if (a <= 0 || odd(a) != odd(c1_.a())) continue;
            for (Int b = b_lo; b <= b_hi; ++b) {
                if (odd(b) != odd(c1_.b())) continue;
                for (std::size_t i = 0; i < m; ++i) c[i] = lo[i];
                for (;;) {
                    bool parity = true;
                    Int zl = -e * a * l.a() + a * l.b() + l.a() * b, sq = -e * a * a + 2 * a * b;
                    for (std::size_t i = 0; i < m; ++i) {
                        parity = parity && odd(c[i]) == odd(c1_.exc(i));
                        zl -= c[i] * l.exc(i);
                        sq -= c[i] * c[i];
                    }
                    if (parity && zl < 0 && sq < 0) pool_.emplace_back(DivisorClass(cfg, a, b, c), sq);
                    std::size_t i = 0;
                    while (i < m && c[i] == hi[i]) {
                        c[i] = lo[i];
                        ++i;
                    }
                    if (i == m) break;
                    ++c[i];
                }
            }
        }
        std::sort(pool_.begin(), pool_.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    }

    std::vector<DivisorClass> separating(Int c2) const {
        const Int lower = self_intersection(c1_) - 4 * c2;
        std::vector<DivisorClass> out;
        for (const auto& [z, sq] : pool_)
            if (sq >= lower) out.push_back(z);
        return out;
    }

private:
    DivisorClass c1_;
    std::vector<std::pair<DivisorClass, Int>> pool_;
};

inline std::vector<DivisorClass> zetas(const std::vector<WallClass>& walls) {
    std::vector<DivisorClass> out;
    for (const auto& w : walls) out.push_back(w.zeta);
    return out;
}

}  // namespace ruled::testing
