#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruled/invariants.hpp"

namespace ruled {

/// Intersection numbers recorded for a candidate polarization.
struct PositivityChecks {
    Int square = 0;
    Int dot_fiber = 0;
    Int dot_section = 0;
    std::vector<Int> dot_exceptional;
    std::vector<Int> dot_strict_fiber;
};

/// A class passing the necessary numerical conditions for ampleness:
/// L^2 > 0, L.F > 0, L.C0 > 0, L.E_i > 0, L.(F - E_i) > 0.
/// This is a filter, not an ampleness certificate.
class Polarization {
public:
    /// Throws InvalidPolarization if any recorded value is <= 0.
    explicit Polarization(DivisorClass cls);

    const DivisorClass& cls() const { return cls_; }
    const PositivityChecks& checks() const { return checks_; }

private:
    DivisorClass cls_;
    PositivityChecks checks_;
};

/// Numerical wall data of type (c1, c2).
struct WallClass {
    DivisorClass zeta;
    Int zeta_sq = 0;
    Int ell = 0;  // length induced by zeta via c2 + (zeta^2 - c1^2)/4
    Int zF = 0;
    Int zL = 0;

    bool operator==(const WallClass&) const = default;
};

/// Coordinate box containing every zeta with zeta.F > 0, zeta.L <= 0 and
/// c1^2 - 4c2 <= zeta^2. Used by the enumerator and exposed for oracles.
struct WallSearchBox {
    Int a_max = 0;  // a ranges over [1, a_max]; a_max = 0 means empty
    Int b_lo = 0, b_hi = -1;
    std::vector<Int> c_lo, c_hi;
};

WallSearchBox wall_search_box(const ChernData& chern, const Polarization& L);

struct WallSearchOptions {
    /// Cap on the number of (a, c) prefixes visited before giving up.
    Int max_candidates = 20'000'000;
};

struct WallEnumeration {
    std::vector<WallClass> separating;  // zeta.L < 0
    std::vector<WallClass> boundary;    // zeta.L = 0
    Int excluded_negative_length = 0;
    Int candidates_visited = 0;
    WallSearchBox box;
};

/// All zeta = c1 (mod 2) with c1^2 - 4c2 <= zeta^2 < 0, zeta.F > 0 and
/// zeta.L <= 0, split by the sign of zeta.L. Sorted lexicographically.
WallEnumeration enumerate_walls(const ChernData& chern, const Polarization& L,
                                const WallSearchOptions& opts = {});

/// The walls separating F from L (zeta.L < 0 part of enumerate_walls).
std::vector<WallClass> enumerate_separating_walls(const ChernData& chern, const Polarization& L,
                                                  const WallSearchOptions& opts = {});

struct Suitability {
    bool suitable = false;
    std::optional<WallClass> witness;
    std::vector<WallClass> boundary;
    std::vector<std::string> warnings;
};

/// Suitable iff no wall separates F from L and no wall passes through L.
Suitability is_suitable(const ChernData& chern, const Polarization& L,
                        const WallSearchOptions& opts = {});

struct DvZeroCertificate {
    bool certified = false;
    /// A wall that would allow a bundle with d_V > 0 to be L-stable.
    std::optional<WallClass> witness;
    std::vector<std::string> warnings;
};

/// d_V = 0 for every L-stable V, certified through suitability.
/// Throws NotApplicable when c1.F is odd.
DvZeroCertificate certify_dv_zero(const ChernData& chern, const Polarization& L,
                                  const WallSearchOptions& opts = {});

/// xi = (L.F) zeta - (L.zeta) F together with xi^2. xi.L = 0 by construction.
std::pair<DivisorClass, Int> hodge_xi(const DivisorClass& L, const DivisorClass& zeta);

}  // namespace ruled
