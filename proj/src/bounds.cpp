#include "tcgap/bounds.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "tcgap/binexp.hpp"
#include "tcgap/rfun.hpp"

namespace tcgap {

std::string_view to_string(BoundSource src) {
    switch (src) {
        case BoundSource::ZclLower: return "zcl";
        case BoundSource::CatLower: return "cat";
        case BoundSource::DimUpper: return "dim";
        case BoundSource::HopfExact: return "hopf";
        case BoundSource::Fixture: return "fixture";
    }
    return "?";
}

FixtureTable FixtureTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open fixture file: " + file.string());
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_array()) throw std::runtime_error("fixture file: expected a JSON array");
    std::vector<Fixture> entries;
    for (const auto& item : doc) {
        Fixture f;
        f.m = item.at("m").get<Nat>();
        f.delta2_min = item.at("delta2_min").get<Nat>();
        f.delta2_max = item.at("delta2_max").get<Nat>();
        f.note = item.value("note", std::string{});
        entries.push_back(std::move(f));
    }
    return from_entries(std::move(entries));
}

FixtureTable FixtureTable::from_entries(std::vector<Fixture> entries) {
    for (const Fixture& f : entries) {
        if (f.m == 0 || f.delta2_min > f.delta2_max)
            throw std::runtime_error("fixture table: malformed entry for m = " + std::to_string(f.m));
        // delta_2 <= G_2 always; a fixture outside that range is corrupt data
        const Nat g2 = zcl_s(f.m, 2).gap;
        if (f.delta2_max > g2)
            throw std::runtime_error("fixture table: delta_2 range for m = " + std::to_string(f.m) +
                                     " exceeds G_2 = " + std::to_string(g2));
    }
    std::sort(entries.begin(), entries.end(), [](const Fixture& a, const Fixture& b) { return a.m < b.m; });
    FixtureTable t;
    t.entries_ = std::move(entries);
    return t;
}

const Fixture* FixtureTable::find(Nat m) const {
    for (const Fixture& f : entries_)
        if (f.m == m) return &f;
    return nullptr;
}

TcBounds tc_bounds(Nat m, Nat s, const FixtureTable* fixtures) {
    if (m == 0 || s < 2) throw std::invalid_argument("tc_bounds: need m >= 1, s >= 2");
    TcBounds b;
    b.m = m;
    b.s = s;

    if (m == 1 || m == 3 || m == 7) {
        b.lower = b.upper = m * (s - 1);
        b.exact = true;
        b.provenance = {BoundSource::HopfExact};
        return b;
    }

    const GapRow row = zcl_s(m, s);
    b.lower = std::max(row.zcl, m * (s - 1));
    b.upper = s * m;
    b.provenance = {row.zcl >= m * (s - 1) ? BoundSource::ZclLower : BoundSource::CatLower,
                    BoundSource::DimUpper};
    if (s == 2 && fixtures != nullptr) {
        if (const Fixture* f = fixtures->find(m)) {
            b.upper = std::min(b.upper, 2 * m - f->delta2_min);
            b.lower = std::max(b.lower, 2 * m - f->delta2_max);
            b.provenance.push_back(BoundSource::Fixture);
        }
    }
    if (b.lower > b.upper) throw TheoremViolation("tc_bounds: crossed interval at m = " + std::to_string(m));
    b.exact = b.lower == b.upper;
    return b;
}

std::optional<Nat> ell_of(Nat m) {
    if (m == 0) throw std::invalid_argument("ell_of: m must be >= 1");
    if (m % 2 == 0) return m + 1;
    if (m % 4 == 1) return (m + 1) / 2;
    return std::nullopt;
}

ChainReport chain_report(Nat m) {
    const StabilizationReport st = stabilization(m);
    ChainReport rep;
    rep.m = m;
    rep.s_of_m = st.s_of_m;
    rep.r_of_m = st.r_of_m;
    rep.ell = ell_of(m);
    rep.g_limit = st.g_limit;
    return rep;
}

std::vector<ConjectureRecord> conjecture_reports(Nat a_min, Nat a_max, const FixtureTable* fixtures) {
    if (a_min < 1 || a_min > a_max) throw std::invalid_argument("conjecture_reports: need 1 <= a_min <= a_max");
    std::vector<ConjectureRecord> out;
    for (Nat a = a_min; a <= a_max; ++a) {
        ConjectureRecord rec;
        rec.a = a;
        rec.m = 3 * (Nat{1} << a);
        rec.r = r_of(rec.m);
        GapEngine eng(rec.m);
        for (Nat j = 2; j <= rec.r; ++j)
            rec.cells.push_back({j, (rec.r - j) * a, eng.row(j).gap});
        if (fixtures != nullptr) {
            if (const Fixture* f = fixtures->find(rec.m)) {
                rec.fixture = *f;
                const Nat bound2 = rec.cells.front().bound;  // j = 2
                rec.consistent = f->delta2_min <= bound2;
                rec.tight = f->delta2_min == bound2 && f->delta2_min == f->delta2_max;
                if (f->delta2_min == bound2 && f->delta2_max > bound2)
                    rec.settles_tc2 = 2 * rec.m - bound2;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace tcgap
