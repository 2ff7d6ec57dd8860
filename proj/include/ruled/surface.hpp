#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ruled/checked.hpp"

// Numerical lattice Num(X) of a blowup X of a geometrically ruled surface
// at m general points, in the basis {C0, F, E_1..E_m}:
//   C0^2 = -e, C0.F = 1, F^2 = 0, E_i.E_j = -delta_ij, all other products 0.

namespace ruled {

/// The triple (g, e, m) fixing the surface and its lattice.
struct SurfaceConfig {
    Int genus = 0;
    Int invariant_e = 0;
    Int num_points = 0;

    /// Throws InvalidInput unless genus >= 0, m >= 0 and (g = 0 implies e >= 0).
    void validate() const;

    bool operator==(const SurfaceConfig&) const = default;
};

/// Integer class a*C0 + b*F + sum c_i E_i on a fixed surface.
class DivisorClass {
public:
    DivisorClass() = default;
    /// `exc` must have exactly `config.num_points` entries.
    DivisorClass(SurfaceConfig config, Int a, Int b, std::vector<Int> exc);

    static DivisorClass zero(const SurfaceConfig& config);
    static DivisorClass minimal_section(const SurfaceConfig& config);
    static DivisorClass fiber(const SurfaceConfig& config);
    /// E_i, 1-based index as in the usual notation.
    static DivisorClass exceptional(const SurfaceConfig& config, std::size_t i);
    /// F - E_i, the strict transform of the fiber through the i-th point.
    static DivisorClass strict_fiber(const SurfaceConfig& config, std::size_t i);

    const SurfaceConfig& config() const { return config_; }
    Int a() const { return a_; }
    Int b() const { return b_; }
    const std::vector<Int>& exc() const { return exc_; }
    Int exc(std::size_t i) const { return exc_.at(i); }
    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator-() const;
    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    friend DivisorClass operator*(Int s, const DivisorClass& d);

    bool operator==(const DivisorClass& other) const = default;
    /// Lexicographic on (a, b, c_1, ..., c_m); only meaningful on a shared config.
    std::strong_ordering operator<=>(const DivisorClass& other) const;

    std::string to_string() const;

private:
    SurfaceConfig config_{};
    Int a_ = 0;
    Int b_ = 0;
    std::vector<Int> exc_;
};

void require_same_config(const DivisorClass& x, const DivisorClass& y);

/// Symmetric bilinear intersection form.
Int intersect(const DivisorClass& x, const DivisorClass& y);
inline Int self_intersection(const DivisorClass& x) { return intersect(x, x); }

/// K_X = -2 C0 + (2g - 2 - e) F + sum E_i.
DivisorClass canonical_class(const SurfaceConfig& config);

/// chi(O_X(D)) = (1 - g) + D.(D - K_X)/2.
Int euler_char(const DivisorClass& d);

/// True iff every coefficient of x - y is even.
bool congruent_mod2(const DivisorClass& x, const DivisorClass& y);

// -- Effectivity ---------------------------------------------------------

enum class EffectivityVerdict { Effective, NotEffective, Unknown };

std::string_view to_string(EffectivityVerdict v);

/// Answer of the effectivity semi-decision.
///
/// Effective answers carry a decomposition over the generating set
/// {C0, F, E_i, F - E_i}; NotEffective answers carry the violated necessary
/// inequality.
struct Effectivity {
    EffectivityVerdict verdict = EffectivityVerdict::Unknown;
    /// Generator name ("C0", "F", "E1", "F-E1", ...) -> multiplicity > 0.
    std::map<std::string, Int> decomposition;
    std::string violated;

    bool effective() const { return verdict == EffectivityVerdict::Effective; }
    bool not_effective() const { return verdict == EffectivityVerdict::NotEffective; }
};

Effectivity effectivity(const DivisorClass& d);

/// Exact h^0 on a Hirzebruch surface (g = 0, m = 0):
/// h^0(aC0 + bF) = sum_{k=0..a} max(0, b - k e + 1), and 0 for a < 0.
Int h0_hirzebruch(const DivisorClass& d);

}  // namespace ruled
