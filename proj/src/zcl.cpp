#include "tcgap/zcl.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "tcgap/binexp.hpp"
#include "tcgap/rfun.hpp"

namespace tcgap {

void FactorVector::validate() const {
    if (m == 0) throw std::invalid_argument("FactorVector: m must be >= 1");
    for (Nat e : exponents)
        if (e > 2 * m)
            throw std::invalid_argument("FactorVector: exponent " + std::to_string(e) +
                                        " exceeds 2m = " + std::to_string(2 * m));
}

Nat min_cost(Nat m, Nat e) {
    if (m == 0) throw std::invalid_argument("min_cost: m must be >= 1");
    if (e > 2 * m) throw std::invalid_argument("min_cost: exponent exceeds 2m");
    return e - max_submask_leq(e, m);
}

bool product_nonzero(const FactorVector& v) {
    v.validate();
    Nat total = 0;
    for (Nat e : v.exponents) {
        total += min_cost(v.m, e);
        if (total > v.m) return false;
    }
    return true;
}

std::optional<Certificate> product_certificate(const FactorVector& v) {
    v.validate();
    Certificate c;
    c.factors = v;
    Nat total = 0;
    c.witness.push_back(0);  // x_1 exponent, filled below
    for (Nat e : v.exponents) {
        const Nat a = max_submask_leq(e, v.m);
        total += e - a;
        if (total > v.m) return std::nullopt;
        c.splits.push_back({e, a, e - a});
        c.witness.push_back(a);
    }
    c.witness[0] = total;
    return c;
}

void check_certificate(const Certificate& c) {
    c.factors.validate();
    const Nat m = c.factors.m;
    const std::size_t nfac = c.factors.exponents.size();
    if (c.splits.size() != nfac || c.witness.size() != nfac + 1)
        throw CertificateInvalid("certificate: size mismatch");
    Nat x1_total = 0;
    for (std::size_t i = 0; i < nfac; ++i) {
        const FactorSplit& sp = c.splits[i];
        if (sp.exponent != c.factors.exponents[i])
            throw CertificateInvalid("certificate: split exponent mismatch");
        if (sp.x1_part + sp.xj_part != sp.exponent)
            throw CertificateInvalid("certificate: split does not sum to the exponent");
        if (sp.xj_part > m)
            throw CertificateInvalid("certificate: x_j power exceeds m");
        if (!binom_parity(sp.exponent, sp.xj_part))
            throw CertificateInvalid("certificate: even binomial coefficient in a split");
        if (c.witness[i + 1] != sp.xj_part)
            throw CertificateInvalid("certificate: witness entry differs from split");
        x1_total += sp.x1_part;
    }
    if (x1_total > m) throw CertificateInvalid("certificate: x_1 power exceeds m");
    if (c.witness[0] != x1_total)
        throw CertificateInvalid("certificate: witness x_1 exponent differs from split total");
}

// ---------------------------------------------------------------------------
// Brute-force oracle: dense coefficients, one bit per monomial.
//
// Monomials are indexed with the x_1 exponent packed into the bits of a
// 64-bit word (so m <= 63) and the exponents of x_2..x_s as mixed-radix
// digits (radix m+1) of the row index. Multiplying by one factor term
// x_1^c * x_j^a is a word shift plus a row shift; truncation falls out of the
// word mask and of skipping rows whose digit would pass m.
// ---------------------------------------------------------------------------

bool brute_product_nonzero(const FactorVector& v, const BruteLimits& lim) {
    v.validate();
    const Nat m = v.m;
    const std::size_t nfac = v.exponents.size();
    if (m > lim.max_m || v.s() > lim.max_s)
        throw std::invalid_argument("brute_product_nonzero: size guard exceeded");
    if (m > 63) throw std::invalid_argument("brute_product_nonzero: m does not fit a word");

    const Nat radix = m + 1;
    Nat rows = 1;
    for (std::size_t i = 0; i < nfac; ++i) {
        if (rows > (Nat{1} << 24) / radix)
            throw std::invalid_argument("brute_product_nonzero: table too large");
        rows *= radix;
    }
    const Nat word_mask = (radix == 64) ? ~Nat{0} : (Nat{1} << radix) - 1;

    std::vector<Nat> poly(rows, 0);
    poly[0] = 1;

    std::vector<Nat> factor(radix);  // factor[a] = bits of x_1 powers paired with x_j^a
    std::vector<Nat> next(rows);

    Nat stride = 1;
    for (std::size_t i = 0; i < nfac; ++i, stride *= radix) {
        // expand (x_1 + x_j)^{e} literally in the two-variable truncated ring
        std::fill(factor.begin(), factor.end(), Nat{0});
        factor[0] = 1;
        for (Nat p = 0; p < v.exponents[i]; ++p) {
            for (Nat a = radix; a-- > 0;) {
                Nat acc = (factor[a] << 1) & word_mask;
                if (a > 0) acc ^= factor[a - 1];
                factor[a] = acc;
            }
        }

        std::fill(next.begin(), next.end(), Nat{0});
        const Nat groups = rows / (stride * radix);
        for (Nat a = 0; a <= m; ++a) {
            if (factor[a] == 0) continue;
            for (Nat c = 0; c <= m; ++c) {
                if (!((factor[a] >> c) & 1u)) continue;
                // multiply by x_1^c x_j^a: digit_j + a <= m survives
                for (Nat hi = 0; hi < groups; ++hi) {
                    const Nat base = hi * stride * radix;
                    for (Nat digit = 0; digit + a <= m; ++digit) {
                        const Nat* src = poly.data() + base + digit * stride;
                        Nat* dst = next.data() + base + (digit + a) * stride;
                        for (Nat lo = 0; lo < stride; ++lo)
                            dst[lo] ^= (src[lo] << c) & word_mask;
                    }
                }
            }
        }
        poly.swap(next);
        if (std::all_of(poly.begin(), poly.end(), [](Nat w) { return w == 0; })) return false;
    }
    return std::any_of(poly.begin(), poly.end(), [](Nat w) { return w != 0; });
}

// ---------------------------------------------------------------------------
// Knapsack engine
// ---------------------------------------------------------------------------

GapEngine::GapEngine(Nat m) : m_(m) {
    if (m == 0) throw std::invalid_argument("GapEngine: m must be >= 1");
    g_limit_ = (Nat{1} << e_of(m)) - 1;

    // best exponent per cost, then the Pareto staircase (weights and values
    // both strictly increasing; dominated items can never help)
    constexpr Nat kNone = std::numeric_limits<Nat>::max();
    std::vector<Nat> best(m + 1, kNone);
    for (Nat e = 0; e <= 2 * m; ++e) {
        const Nat w = min_cost(m, e);
        if (w <= m && (best[w] == kNone || best[w] < e)) best[w] = e;
    }
    for (Nat w = 0; w <= m; ++w) {
        if (best[w] == kNone) continue;
        if (!item_value_.empty() && best[w] <= item_value_.back()) continue;
        item_weight_.push_back(w);
        item_value_.push_back(best[w]);
    }
    layers_.emplace_back(m + 1, 0);  // zero factors
}

void GapEngine::extend_to(Nat layers) {
    while (layers_.size() <= layers) {
        const std::vector<Nat>& f = layers_.back();
        std::vector<Nat> g(m_ + 1);
        for (Nat w = 0; w <= m_; ++w) {
            Nat b = 0;
            for (std::size_t i = 0; i < item_weight_.size() && item_weight_[i] <= w; ++i) {
                const Nat cand = f[w - item_weight_[i]] + item_value_[i];
                if (cand > b) b = cand;
            }
            g[w] = b;
        }
        layers_.push_back(std::move(g));
    }
}

std::vector<Nat> GapEngine::reconstruct(Nat s, Nat target) const {
    std::vector<Nat> exps;
    Nat budget = m_;
    for (Nat slot = 0; slot < s - 1; ++slot) {
        const std::vector<Nat>& rest = layers_[s - 2 - slot];
        bool found = false;
        for (Nat e = 0; e <= 2 * m_; ++e) {
            const Nat w = min_cost(m_, e);
            if (w > budget || e > target) continue;
            if (rest[budget - w] == target - e) {
                exps.push_back(e);
                budget -= w;
                target -= e;
                found = true;
                break;
            }
        }
        if (!found) throw TheoremViolation("zcl witness reconstruction failed");
    }
    return exps;
}

GapRow GapEngine::row(Nat s, bool with_witness) {
    if (s < 2) throw std::invalid_argument("zcl_s: s must be >= 2");
    extend_to(s - 1);
    GapRow r;
    r.m = m_;
    r.s = s;
    r.zcl = layers_[s - 1][m_];
    if (r.zcl + g_limit_ > s * m_)
        throw TheoremViolation("gap below 2^e - 1 at m = " + std::to_string(m_) +
                               ", s = " + std::to_string(s));
    r.gap = s * m_ - r.zcl;
    if (with_witness) r.witness = FactorVector{m_, reconstruct(s, r.zcl)};
    return r;
}

GapRow zcl_s(Nat m, Nat s) {
    GapEngine eng(m);
    return eng.row(s, true);
}

std::vector<GapRow> gap_table(Nat m, Nat s_max, bool with_witness) {
    if (s_max < 2) throw std::invalid_argument("gap_table: s_max must be >= 2");
    GapEngine eng(m);
    std::vector<GapRow> rows;
    rows.reserve(s_max - 1);
    for (Nat s = 2; s <= s_max; ++s) {
        GapRow r = eng.row(s, with_witness);
        if (!rows.empty() && r.gap > rows.back().gap)
            throw TheoremViolation("gap sequence increased at m = " + std::to_string(m) +
                                   ", s = " + std::to_string(s));
        rows.push_back(std::move(r));
    }
    return rows;
}

StabilizationReport stabilization(Nat m) {
    GapEngine eng(m);
    StabilizationReport rep;
    rep.m = m;
    rep.g_limit = eng.g_limit();

    if (!r_defined(m)) {
        // m = 2^e - 1: every item costing more than 0 is unusable, so the
        // first row already sits at the limit
        const GapRow r2 = eng.row(2);
        if (r2.gap != rep.g_limit)
            throw TheoremViolation("G_2(2^e - 1) differs from 2^e - 1 at m = " + std::to_string(m));
        rep.s_of_m = 2;
        rep.gap_sequence = {r2.gap};
        return rep;
    }

    rep.r_of_m = r_of(m);
    for (Nat s = 2; s <= *rep.r_of_m; ++s) {
        const GapRow r = eng.row(s);
        if (!rep.gap_sequence.empty() && r.gap > rep.gap_sequence.back())
            throw TheoremViolation("gap sequence increased at m = " + std::to_string(m));
        rep.gap_sequence.push_back(r.gap);
        if (r.gap == rep.g_limit) {
            rep.s_of_m = s;
            return rep;
        }
    }
    throw TheoremViolation("gap did not stabilize by s = r(m) at m = " + std::to_string(m));
}

Certificate schedule_certificate(Nat m) {
    const RSchedule sch = r_schedule(m);
    Certificate c;
    c.factors.m = m;
    c.witness.push_back(m - ((Nat{1} << sch.e) - 1));
    for (const ScheduleEntry& ent : sch.entries) {
        for (Nat i = 0; i < ent.r; ++i) {
            c.factors.exponents.push_back(m + ent.d);
            c.splits.push_back({m + ent.d, m, ent.d});
            c.witness.push_back(m);
        }
    }
    if (c.factors.s() != sch.r)
        throw CertificateInvalid("schedule certificate: factor count differs from r(m) - 1");
    check_certificate(c);
    Nat degree = 0;
    for (Nat e : c.factors.exponents) degree += e;
    if (degree + ((Nat{1} << sch.e) - 1) != sch.r * m)
        throw CertificateInvalid("schedule certificate: total degree is not s*m - (2^e - 1)");
    return c;
}

}  // namespace tcgap
