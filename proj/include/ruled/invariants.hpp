#pragma once

#include <string>
#include <vector>

#include "ruled/surface.hpp"

namespace ruled {

/// Chern classes (c1, c2) of a rank-two bundle.
struct ChernData {
    DivisorClass c1;
    Int c2 = 0;

    const SurfaceConfig& config() const { return c1.config(); }
    bool operator==(const ChernData&) const = default;
};

/// 4 c2 - c1^2.
Int discriminant(const ChernData& cd);

/// Chern classes of V (x) O(T): (c1 + 2T, c2 + c1.T + T^2).
ChernData chern_twist(const ChernData& cd, const DivisorClass& t);

/// The unique twist of `cd` whose c1 coefficients all lie in {0, 1}.
ChernData normalize_chern(const ChernData& cd);

/// Numerical shadow of a canonical extension
///   0 -> O(d C0 + r F + D) -> V -> I_Z((alpha - d) C0 + (beta - r) F + G - D) -> 0
/// with D = sum q_i E_i. The degree-zero twists on the base curve and Z itself are
/// represented only through their dimension counts.
struct ExtensionDatum {
    Int d = 0;
    Int r = 0;
    std::vector<Int> q;
    ChernData chern;

    /// Throws InvalidInput unless q has m entries, all q_i >= 0 and 2d >= c1.a.
    void validate() const;

    /// d C0 + r F + sum q_i E_i.
    DivisorClass sub_class() const;
    /// c1 - sub_class().
    DivisorClass quotient_class() const;
};

/// (2d - alpha) C0 + (2r - beta) F + sum (2 q_i - gamma_i) E_i.
DivisorClass zeta_class(const ExtensionDatum& ed);

/// ell(Z) computed from an arbitrary class zeta = c1 (mod 2):
/// c2 + (zeta^2 - c1^2)/4. Throws ParityViolation when zeta is not congruent to c1.
Int length_from_zeta(const ChernData& cd, const DivisorClass& zeta);

struct LengthResult {
    Int length = 0;
    /// Set when the length is negative: the datum cannot come from a bundle.
    std::vector<std::string> warnings;
};

LengthResult length_Z(const ExtensionDatum& ed);

/// ceil((eta - c2 - g) / 2).
Int r0_generic(Int genus, Int eta, Int c2);

/// 2r >= beta - g - c2 + sum_{q_i >= 2} (1 - q_i)^2.
bool bound_prop_a(Int r, Int beta, Int genus, Int c2, const std::vector<Int>& q);

/// Least r with 2r >= deg - g.
Int nagata_bound(Int pushforward_degree, Int genus);

/// The extension is determined by V exactly when 2d > alpha.
bool is_extension_unique(const ExtensionDatum& ed);

}  // namespace ruled
