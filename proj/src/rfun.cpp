#include "tcgap/rfun.hpp"

#include <algorithm>
#include <bit>

#include "tcgap/binexp.hpp"

namespace tcgap {
namespace {

struct Params {
    unsigned e;
    unsigned k;
    Nat d0;
    Nat t;
    Nat budget;  // m - (2^e - 1)
};

Params params_for(Nat m) {
    if (m == 0 || is_pow2(m + 1)) throw PowerOfTwoSuccessor(m);
    Params p;
    p.e = e_of(m);
    p.k = static_cast<unsigned>(std::bit_width(m));  // 2^{k-1} <= m < 2^k
    p.d0 = (Nat{1} << p.k) - m - 1;
    const Nat step = Nat{1} << p.e;
    if (p.d0 % step != 0 || p.d0 < step)
        throw TheoremViolation("r_schedule: d0 not a positive multiple of 2^e");
    p.t = (p.d0 - step) >> p.e;
    p.budget = m - (step - 1);
    return p;
}

// Runs the recursion, handing each step to `sink(l, d, parity_odd, numerator, r_l)`.
template <typename Sink>
Nat run_schedule(Nat m, const Params& p, Sink&& sink) {
    const Nat step = Nat{1} << p.e;
    Nat remaining = p.budget;
    Nat total = 0;
    for (Nat l = 0; l <= p.t; ++l) {
        const Nat d = p.d0 - step * l;
        const bool odd = binom_parity(m + d, d) != 0;
        const Nat r = odd ? remaining / d : 0;
        sink(l, d, odd, remaining, r);
        if ((l == 0 || l == p.t) && !odd)
            throw TheoremViolation("r_schedule: endpoint parity must be odd");
        remaining -= d * r;  // r = floor(remaining/d) keeps this non-negative
        total += r;
    }
    if (remaining != 0)
        throw TheoremViolation("r_schedule: budget not exhausted at d = 2^e");
    return 1 + total;
}

}  // namespace

bool r_defined(Nat m) { return m >= 1 && !is_pow2(m + 1); }

std::vector<std::pair<Nat, Nat>> RSchedule::nonzero() const {
    std::vector<std::pair<Nat, Nat>> out;
    for (const ScheduleEntry& s : entries)
        if (s.r > 0) out.emplace_back(s.d, s.r);
    std::sort(out.begin(), out.end());
    return out;
}

RSchedule r_schedule(Nat m) {
    const Params p = params_for(m);
    RSchedule sch;
    sch.m = m;
    sch.e = p.e;
    sch.k = p.k;
    sch.d0 = p.d0;
    sch.t = p.t;
    sch.entries.reserve(p.t + 1);
    sch.r = run_schedule(m, p, [&](Nat, Nat d, bool odd, Nat num, Nat r) {
        sch.entries.push_back({d, odd, num, r});
    });
    return sch;
}

Nat r_of(Nat m) {
    const Params p = params_for(m);
    return run_schedule(m, p, [](Nat, Nat, bool, Nat, Nat) {});
}

}  // namespace tcgap
