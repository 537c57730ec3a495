#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tcgap/binexp.hpp"
#include "tcgap/common.hpp"

// Closed-form evaluation of r(m) for even m whose block structure falls into
// one of the known case families, and the cross-check machinery that compares
// those predictions with the recursion in rfun.hpp.
//
// Cases are named by the shape of cbe(m) = (n_1, z_1, ..., n_w, z_w):
//   Spaced       strictly growing one-blocks, every n_u < z_u
//   SpacedWeak   as Spaced but allowing n_u = z_u (entries at equal d merge)
//   SingleBlock  w = 1 with n > z
//   TwoBlockA    w = 2, n_1 <= z_1, max(n_1, z_2) < n_2
//   TwoBlockB    w = 2, n_2 <= n_1 <= min(z_1, z_2)
//   TwoBlockC    w = 2, n_2 <= z_2 < n_1 <= z_1
//   TwoBlockD    w = 2, z_1 < n_1 < n_2 <= z_2
// ShiftedSpaced labels predictions produced by shifted_family_check, which
// covers m + i near a Spaced/SpacedWeak base m.
//
// The classification priority (first match wins) is Spaced, SpacedWeak,
// SingleBlock, TwoBlockA..D, None. In particular a single block with
// n <= z counts as Spaced/SpacedWeak with w = 1, not as SingleBlock, and the
// two-block hypotheses are mutually exclusive anyway.

namespace tcgap {

enum class CaseId {
    Spaced,
    SpacedWeak,
    ShiftedSpaced,
    SingleBlock,
    TwoBlockA,
    TwoBlockB,
    TwoBlockC,
    TwoBlockD,
    None,
};

std::string_view to_string(CaseId id);

struct ClosedFormCase {
    CaseId id = CaseId::None;
    Cbe cbe;                    // cbe of the classified m
    std::optional<Nat> sigma;   // SingleBlock / TwoBlockA: largest integer < n/z
    std::optional<Nat> q, rho;  // TwoBlockD: division of n_1 - z_1 - 1 by z_1
};

// One predicted non-zero schedule entry. The d value is stated as the
// run-length literal the closed form gives; `d` is its integer value. For the
// Spaced/SpacedWeak family `index_runs` is the literal for the position l
// itself (elsewhere the position is recoverable as l = d_0 - d since e = 0).
struct PredictionEntry {
    std::vector<Run> d_runs;
    Nat d = 0;
    Nat r = 0;
    std::vector<Run> index_runs;
};

struct Prediction {
    CaseId id = CaseId::None;
    Nat m = 0;
    Nat r_predicted = 0;
    // Entries exactly as the case formulas state them, kappa/ell order, before
    // merging. Two stated entries may name the same d; their r values add.
    std::vector<PredictionEntry> raw_entries;

    // (d, r) pairs summed at equal d, increasing d: the multiset to compare
    // with RSchedule::nonzero(). Empty for ShiftedSpaced (the shifted family
    // predicts only the total).
    std::vector<std::pair<Nat, Nat>> merged() const;
};

// Classifies an even m (>= 2). Odd m is rejected: the closed forms all assume
// e(m) = 0.
ClosedFormCase classify(Nat m);

// Evaluates the matching closed form. Throws NotApplicable when classify
// returns None. The construction verifies sum(d*r) = m and
// 1 + sum(r) = r_predicted before returning.
Prediction closed_r(Nat m);

// The shifted family: for a Spaced/SpacedWeak base m and 0 <= i < 2^{z_w},
// set j = (i+1) * (2^{n_w} + 1) - 2. An odd C(m+j, m+i) predicts
// r(m+i) = 1 + 2^{n_w}. When j < 2^{z_w} the parity reduces to that of
// C(j, i), which is reported alongside.
struct ShiftCheck {
    Nat base_m = 0;
    Nat i = 0;
    Nat j = 0;
    bool parity_odd = false;
    std::optional<bool> simplified_parity;  // engaged when j < 2^{z_w}
    std::optional<Prediction> prediction;   // engaged when parity_odd
};

ShiftCheck shifted_family_check(Nat m, Nat i);

}  // namespace tcgap
