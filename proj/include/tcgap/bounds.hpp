#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcgap/common.hpp"
#include "tcgap/zcl.hpp"

// Bound intervals for TC_s(RP^m) assembled from the computed cup-length data:
//
//   max(zcl_s, m(s-1))  <=  TC_s(RP^m)  <=  s*m,
//
// with the parallelizable cases m = 1, 3, 7 pinned exactly at m(s-1). The
// defect delta_s(m) = s*m - TC_s(RP^m) then lies in [0, G_s(m)]; for s = 2 it
// is the gap between the double dimension and the Euclidean immersion
// dimension of RP^m, and published immersion results pin delta_2 for a few m
// (the fixture table). Reports never assert an open conjecture; they only
// tabulate whether the known data is consistent with it.

namespace tcgap {

enum class BoundSource {
    ZclLower,   // zcl_s(RP^m) <= TC_s
    CatLower,   // cat((RP^m)^{s-1}) = m(s-1) <= TC_s
    DimUpper,   // TC_s <= s * hdim = s*m
    HopfExact,  // m in {1, 3, 7}: TC_s = m(s-1)
    Fixture,    // delta_2 interval from immersion results (s = 2 only)
};

std::string_view to_string(BoundSource src);

struct TcBounds {
    Nat m = 0;
    Nat s = 0;
    Nat lower = 0;
    Nat upper = 0;
    bool exact = false;
    std::vector<BoundSource> provenance;
};

// delta_2(m) is known to lie in [delta2_min, delta2_max].
struct Fixture {
    Nat m = 0;
    Nat delta2_min = 0;
    Nat delta2_max = 0;
    std::string note;
};

// Immersion-derived delta_2 data, loaded from a JSON array of
// {"m":, "delta2_min":, "delta2_max":, "note":}. Loading validates each entry
// against the hard bound delta_2(m) <= G_2(m).
class FixtureTable {
public:
    FixtureTable() = default;
    static FixtureTable load(const std::filesystem::path& file);
    static FixtureTable from_entries(std::vector<Fixture> entries);  // same validation

    const Fixture* find(Nat m) const;
    const std::vector<Fixture>& entries() const { return entries_; }

private:
    std::vector<Fixture> entries_;
};

// The interval for TC_s(RP^m), s >= 2. A fixture sharpens the s = 2 interval
// when one is available.
TcBounds tc_bounds(Nat m, Nat s, const FixtureTable* fixtures = nullptr);

// m+1 for even m, (m+1)/2 for m = 1 mod 4, undefined for m = 3 mod 4.
std::optional<Nat> ell_of(Nat m);

// The computable members of the chain lambda(m) <= s(m) <= r(m): lambda
// itself depends on unknown TC values and is reported only through the
// inequality.
struct ChainReport {
    Nat m = 0;
    Nat s_of_m = 0;
    std::optional<Nat> r_of_m;  // undefined when m+1 is a 2-power
    std::optional<Nat> ell;     // undefined for m = 3 mod 4
    Nat g_limit = 0;
};

ChainReport chain_report(Nat m);

// Consistency report for the conjectured bound delta_j(3*2^a) <= (r - j) * a.
struct ConjectureCell {
    Nat j = 0;
    Nat bound = 0;  // (r - j) * a
    Nat g_j = 0;    // computed hard bound delta_j <= G_j
};

struct ConjectureRecord {
    Nat a = 0;
    Nat m = 0;  // 3 * 2^a
    Nat r = 0;  // r(m)
    std::vector<ConjectureCell> cells;  // j = 2..r
    std::optional<Fixture> fixture;     // delta_2 data when known
    bool consistent = true;   // some admissible delta_2 satisfies the j = 2 bound
    bool tight = false;       // the fixture pins delta_2 exactly at the bound
    std::optional<Nat> settles_tc2;  // consistency would force TC_2 = 2m - bound
};

std::vector<ConjectureRecord> conjecture_reports(Nat a_min, Nat a_max,
                                                 const FixtureTable* fixtures = nullptr);

}  // namespace tcgap
