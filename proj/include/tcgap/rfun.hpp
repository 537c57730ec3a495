#pragma once

#include <utility>
#include <vector>

#include "tcgap/common.hpp"

// The recursion behind the stabilization bound r(m).
//
// For m whose successor is not a power of two, let e = e_of(m), let k be the
// least exponent with 2^k > m, and let d0 = 2^k - m - 1 (the bitwise
// complement of m below 2^k; note 2^e divides d0). Walking d down from d0 to
// 2^e in steps of 2^e, each step with an odd binomial parity C(m+d, d) grabs
// the largest multiple of d still available inside the budget m - (2^e - 1):
//
//   r_l = floor(remaining / d_l)  if C(m + d_l, d_l) is odd, else 0.
//
// The budget is spent exactly (the last step divides evenly), and
// r(m) = 1 + sum r_l bounds the stabilization point s(m) of the gap
// sequence from above; see zcl.hpp.

namespace tcgap {

struct ScheduleEntry {
    Nat d;            // d_l = d0 - 2^e * l
    bool parity_odd;  // C(m + d_l, d_l) mod 2
    Nat numerator;    // budget remaining before this step
    Nat r;            // r_l
};

struct RSchedule {
    Nat m = 0;
    unsigned e = 0;  // e_of(m)
    unsigned k = 0;  // least k with 2^k > m
    Nat d0 = 0;
    Nat t = 0;                          // (d0 - 2^e) / 2^e
    std::vector<ScheduleEntry> entries; // l = 0..t, zero entries kept
    Nat r = 0;                          // 1 + sum of entry r values

    // The (d, r) pairs with r > 0, in increasing d order.
    std::vector<std::pair<Nat, Nat>> nonzero() const;
};

// True when the recursion is defined: m >= 1 and m+1 not a power of two.
bool r_defined(Nat m);

// Full trace, all consistency checks enforced. Throws PowerOfTwoSuccessor.
RSchedule r_schedule(Nat m);

// r(m) alone, without storing the trace (the trace for m near 2^20 has ~2^19
// entries; sweeps only need the total).
Nat r_of(Nat m);

}  // namespace tcgap
