#pragma once

#include <string>
#include <vector>

#include "ruled/walls.hpp"

namespace ruled {

/// 2 (A.L) - c1.L. A destabilizes iff the margin is >= 0 (not stable), and
/// violates semistability iff the margin is > 0.
Int slope_margin(const DivisorClass& A, const DivisorClass& c1, const DivisorClass& L);

enum class StabilityOutcome { StableCertified, DestabilizerFound, Inconclusive };

std::string_view to_string(StabilityOutcome v);

/// Inclusive coefficient bounds |a| <= a, |b| <= b, |c_i| <= c.
struct SearchBox {
    Int a = 5;
    Int b = 5;
    Int c = 5;
};

/// max(5, largest |coefficient| of sub and quot + 3) in every coordinate.
SearchBox default_box(const DivisorClass& sub, const DivisorClass& quot);

/// Verdict of one route O(A) -> V for a fixed candidate A.
struct BranchCheck {
    Effectivity effectivity;
    /// Branch 2 only: discarded because general Z of the given length
    /// imposes independent conditions on |quot - A|.
    bool pruned_by_generality = false;
    bool excluded() const { return effectivity.not_effective() || pruned_by_generality; }
};

struct StabilityCandidate {
    DivisorClass A;
    /// 1: O(A) -> O(sub); 2: O(A) -> I_Z(quot).
    int branch = 1;
    BranchCheck check;
    Int slope_margin = 0;
};

struct StabilityVerdict {
    StabilityOutcome verdict = StabilityOutcome::Inconclusive;
    /// Branches that survive the screens and have margin >= 0.
    std::vector<StabilityCandidate> candidates;
    SearchBox box;
    Int examined = 0;
    std::vector<std::string> notes;
};

struct StabilitySearchOptions {
    Int max_candidates = 5'000'000;
};

/// Evaluates both branches for one candidate A.
std::pair<BranchCheck, BranchCheck> check_branches(const DivisorClass& sub, const DivisorClass& quot,
                                                   Int ell_z, const DivisorClass& A);

/// Searches for a destabilizing rank-one subsheaf O(A) of an extension
///   0 -> O(sub) -> V -> I_Z(quot) -> 0,  length(Z) = ell_z,
/// among all A inside `box`. StableCertified is always relative to the box.
StabilityVerdict destabilizer_search(const DivisorClass& sub, const DivisorClass& quot, Int ell_z,
                                     const Polarization& L, const SearchBox& box,
                                     const StabilitySearchOptions& opts = {});

}  // namespace ruled
