#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/invariants.hpp"

namespace ruled {

enum class Dominance { Equal, StrictlyLess, Exceeds };

std::string_view to_string(Dominance d);
Dominance compare_dimensions(Int family_dim, Int moduli_dim);

/// A vanishing h^0 = 0 assumed by a Riemann-Roch count.
struct VanishingAssumption {
    DivisorClass cls;
    /// True when the sheaf is O(cls) twisted by the ideal of Z.
    bool twisted_by_ideal = false;
    Effectivity screen;
};

struct Ext1Count {
    Int ext1 = 0;
    std::vector<VanishingAssumption> assumptions;
    std::vector<std::string> warnings;
};

struct FamilyReport {
    Int family_dim = 0;
    Int moduli_dim = 0;
    Int ext1 = 0;
    std::vector<VanishingAssumption> assumptions;
    Dominance dominance = Dominance::Equal;
    std::vector<std::string> warnings;
};

/// Expected dimension 4c2 - c1^2 - 3 chi(O_X) + q(X) with chi = 1 - g, q = g.
Int moduli_dim(const ChernData& chern);

/// ext^1(I_Z (x) O(B), O(A)) = -chi(O(A - B)) + ell(Z), valid when
/// h^0(O(A - B)) = 0 and h^0(I_Z(K + B - A)) = 0. Throws AssumptionViolated
/// if a vanishing class is certified effective.
Ext1Count ext1_rr(const DivisorClass& A, const DivisorClass& B, Int ell_z);

/// Dimension of the extension family with sub-line-bundle O(r1 F + sum l_i E_i)
/// for c1 = eta F + sum E_i, c2 = 2n + eps:
///   -2 r1 + (eta + 3g - 1) + (m - sum l_i^2) + 3(2n + eps) - h0.
Int family_dim_c1F0(Int genus, Int eta, Int num_points, Int n, Int eps, Int r1,
                    const std::vector<Int>& ell, Int h0);

/// Full report for the same family, computing ext^1 through ext1_rr.
FamilyReport family_report_c1F0(const SurfaceConfig& config, Int eta, Int n, Int eps, Int r1,
                                const std::vector<Int>& ell, Int h0);

/// 4 c2 - 2 beta + rho + 4g - 3 + e, for c1 = C0 + beta F + sum_{i<=rho} E_i.
Int family_dim_c1F1(Int genus, Int e, Int beta, Int rho, Int c2);

/// Report for the c1.F = 1 family on the surface (g, e, rho).
FamilyReport family_report_c1F1(const SurfaceConfig& config, Int beta, Int c2);

struct ExampleFamily {
    Int dim = 0;
    Int ext1 = 0;
    Int h0_vd = 0;
    std::vector<VanishingAssumption> assumptions;
};

/// Family of extensions 0 -> O(-nF) -> V -> I_Z((n+1)F) -> 0 on a Hirzebruch
/// surface of invariant e, Z general of length 2n.
ExampleFamily example_family_dim(Int n, Int e = 1);

struct FamilyMaximum {
    Int r1 = 0;
    std::vector<Int> ell;
    Int h0 = 1;
    Int value = 0;
    /// 2 r0 - (eta - c2 - g), in {0, 1}.
    Int delta = 0;
    Int moduli_dim = 0;
    Dominance dominance = Dominance::Equal;
    bool unique = false;
};

/// Maximizes family_dim_c1F0 over {bound_prop_a holds, l_i >= 0, h0 >= 1}.
FamilyMaximum maximize_family_dim(Int genus, Int eta, Int num_points, Int n, Int eps);

enum class StructureKind { OddFiber, EvenFiberGenusZero, EvenFiberPositiveGenus };

std::string_view to_string(StructureKind k);

struct Classification {
    StructureKind kind = StructureKind::OddFiber;
    bool rational = false;
    bool stably_rational = false;
    /// Exponent of the Hilbert scheme C^[l] when pinned down; empty = undetermined.
    std::optional<Int> hilbert_exponent;
    std::string note;
};

Classification classify_structure(const ChernData& chern);

}  // namespace ruled
