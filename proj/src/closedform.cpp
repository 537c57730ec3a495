#include "tcgap/closedform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tcgap {
namespace {

// largest integer strictly smaller than n/z
Nat sigma_of(Nat n, Nat z) {
    return (n % z == 0) ? n / z - 1 : n / z;
}

Nat pow2(Nat k) { return Nat{1} << k; }

// tail 0^{n_{u+1}} 1^{z_{u+1}} ... 0^{n_w} 1^{z_w} appended after a leading
// one-block, shared by the d-literals of the spaced family
void append_tail(std::vector<Run>& runs, const Cbe& c, std::size_t u) {
    for (std::size_t v = u + 1; v <= c.omega(); ++v) {
        runs.push_back({0, c.n(v)});
        runs.push_back({1, c.z(v)});
    }
}

PredictionEntry make_entry(std::vector<Run> d_runs, Nat r, std::vector<Run> index_runs = {}) {
    PredictionEntry e;
    e.d = from_runs(d_runs);
    e.d_runs = std::move(d_runs);
    e.r = r;
    e.index_runs = std::move(index_runs);
    return e;
}

void verify(const Prediction& p) {
    // every case must reproduce the budget identity of the recursion exactly
    Nat sum_dr = 0, sum_r = 0;
    for (const PredictionEntry& e : p.raw_entries) {
        sum_dr += e.d * e.r;
        sum_r += e.r;
    }
    if (sum_dr != p.m || 1 + sum_r != p.r_predicted)
        throw TheoremViolation("closed form inconsistent at m = " + std::to_string(p.m));
}

}  // namespace

std::string_view to_string(CaseId id) {
    switch (id) {
        case CaseId::Spaced: return "Spaced";
        case CaseId::SpacedWeak: return "SpacedWeak";
        case CaseId::ShiftedSpaced: return "ShiftedSpaced";
        case CaseId::SingleBlock: return "SingleBlock";
        case CaseId::TwoBlockA: return "TwoBlockA";
        case CaseId::TwoBlockB: return "TwoBlockB";
        case CaseId::TwoBlockC: return "TwoBlockC";
        case CaseId::TwoBlockD: return "TwoBlockD";
        case CaseId::None: return "None";
    }
    return "?";
}

std::vector<std::pair<Nat, Nat>> Prediction::merged() const {
    std::map<Nat, Nat> agg;
    for (const PredictionEntry& e : raw_entries) agg[e.d] += e.r;
    std::vector<std::pair<Nat, Nat>> out;
    for (const auto& [d, r] : agg)
        if (r > 0) out.emplace_back(d, r);
    return out;
}

ClosedFormCase classify(Nat m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("classify: m must be even and >= 2");
    ClosedFormCase out;
    out.cbe = to_cbe(m);
    const Cbe& c = out.cbe;
    const std::size_t w = c.omega();

    bool increasing = true;
    bool strictly_spaced = true;
    bool weakly_spaced = true;
    for (std::size_t u = 1; u <= w; ++u) {
        if (u < w && c.n(u) >= c.n(u + 1)) increasing = false;
        if (c.n(u) >= c.z(u)) strictly_spaced = false;
        if (c.n(u) > c.z(u)) weakly_spaced = false;
    }
    if (increasing && strictly_spaced) {
        out.id = CaseId::Spaced;
        return out;
    }
    if (increasing && weakly_spaced) {
        out.id = CaseId::SpacedWeak;
        return out;
    }
    if (w == 1 && c.n(1) > c.z(1)) {
        out.id = CaseId::SingleBlock;
        out.sigma = sigma_of(c.n(1), c.z(1));
        return out;
    }
    if (w == 2) {
        const Nat n1 = c.n(1), z1 = c.z(1), n2 = c.n(2), z2 = c.z(2);
        if (n1 <= z1 && std::max(n1, z2) < n2) {
            out.id = CaseId::TwoBlockA;
            out.sigma = sigma_of(n2, z2);
            return out;
        }
        if (n2 <= n1 && n1 <= std::min(z1, z2)) {
            out.id = CaseId::TwoBlockB;
            return out;
        }
        if (n2 <= z2 && z2 < n1 && n1 <= z1) {
            out.id = CaseId::TwoBlockC;
            return out;
        }
        if (z1 < n1 && n1 < n2 && n2 <= z2) {
            out.id = CaseId::TwoBlockD;
            out.q = (n1 - z1 - 1) / z1;
            out.rho = (n1 - z1 - 1) % z1;
            return out;
        }
    }
    out.id = CaseId::None;
    return out;
}

Prediction closed_r(Nat m) {
    const ClosedFormCase cf = classify(m);
    const Cbe& c = cf.cbe;
    Prediction p;
    p.id = cf.id;
    p.m = m;

    switch (cf.id) {
        case CaseId::Spaced:
        case CaseId::SpacedWeak: {
            const std::size_t w = c.omega();
            for (std::size_t u = 1; u <= w; ++u) {
                // position literals: the shared prefix 1^{z_1} 0^{n_2} ... 1^{z_{u-1}}
                // is empty for u = 1 (kappa_1 = 0)
                std::vector<Run> prefix;
                if (u > 1) {
                    prefix.push_back({1, c.z(1)});
                    for (std::size_t v = 2; v < u; ++v) {
                        prefix.push_back({0, c.n(v)});
                        prefix.push_back({1, c.z(v)});
                    }
                }
                Nat tail_all = 0, tail_next = 0;
                for (std::size_t v = u; v <= w; ++v) tail_all += c.n(v) + c.z(v);
                for (std::size_t v = u + 1; v <= w; ++v) tail_next += c.n(v) + c.z(v);

                std::vector<Run> kappa_index = prefix;
                kappa_index.push_back({0, tail_all});
                std::vector<Run> ell_index = prefix;
                ell_index.push_back({0, c.n(u)});
                ell_index.push_back({1, c.z(u) - c.n(u)});
                ell_index.push_back({0, c.n(u) + tail_next});

                std::vector<Run> d_kappa{{1, c.z(u)}};
                append_tail(d_kappa, c, u);
                std::vector<Run> d_ell{{1, c.n(u)}};
                append_tail(d_ell, c, u);

                const Nat r_kappa = (u == 1) ? pow2(c.n(1)) - 1 : pow2(c.n(u)) - pow2(c.n(u - 1)) - 1;
                p.raw_entries.push_back(make_entry(std::move(d_kappa), r_kappa, std::move(kappa_index)));
                p.raw_entries.push_back(make_entry(std::move(d_ell), 1, std::move(ell_index)));
            }
            p.r_predicted = 1 + pow2(c.n(w));
            break;
        }
        case CaseId::SingleBlock: {
            const Nat n = c.n(1), z = c.z(1), sg = *cf.sigma;
            Nat rsum = 0;
            for (Nat i = 0; i <= sg; ++i) rsum += pow2(n - i * z);
            p.raw_entries.push_back(make_entry({{1, z}}, rsum - 1));
            p.raw_entries.push_back(make_entry({{1, n - sg * z}}, 1));
            p.r_predicted = 1 + rsum;
            break;
        }
        case CaseId::TwoBlockA: {
            const Nat n1 = c.n(1), z1 = c.z(1), n2 = c.n(2), z2 = c.z(2), sg = *cf.sigma;
            Nat rsum = 0;
            for (Nat i = 0; i <= sg; ++i) rsum += pow2(n2 - i * z2);
            p.raw_entries.push_back(make_entry({{1, z1}, {0, n2}, {1, z2}}, pow2(n1) - 1));
            p.raw_entries.push_back(make_entry({{1, n1}, {0, n2}, {1, z2}}, 1));
            p.raw_entries.push_back(make_entry({{1, z2}}, rsum - pow2(n1) - 1));
            p.raw_entries.push_back(make_entry({{1, n2 - sg * z2}}, 1));
            p.r_predicted = 1 + rsum;
            break;
        }
        case CaseId::TwoBlockB: {
            const Nat n1 = c.n(1), z1 = c.z(1), n2 = c.n(2), z2 = c.z(2);
            p.raw_entries.push_back(make_entry({{1, z1}, {0, n2}, {1, z2}}, pow2(n1) - 1));
            p.raw_entries.push_back(make_entry({{1, n2}, {0, z2}, {1, n1}}, 1));
            p.r_predicted = 1 + pow2(n1);
            break;
        }
        case CaseId::TwoBlockC: {
            const Nat n1 = c.n(1), z1 = c.z(1), n2 = c.n(2), z2 = c.z(2);
            const Nat mn = std::min(n2, n1 - z2);
            p.raw_entries.push_back(make_entry({{1, z1}, {0, n2}, {1, z2}}, pow2(n1) - 1));
            p.raw_entries.push_back(make_entry({{1, z2}}, pow2(mn) - 1));
            if (n2 >= n1 - z2) {
                std::vector<Run> d_ell1{{1, n2}, {0, n1}, {1, z2}};
                std::vector<Run> d_ell2{{1, n1 - z2}};
                if (n2 == n1 - z2) {
                    // the other branch's literals must agree on the boundary
                    if (from_runs(d_ell1) != from_runs({{1, n2}, {0, z2}, {1, n1 - n2 - z2}, {0, n2}, {1, z2}}) ||
                        from_runs(d_ell2) != from_runs({{1, n2}}))
                        throw TheoremViolation("TwoBlockC boundary branches disagree at m = " +
                                               std::to_string(m));
                }
                p.raw_entries.push_back(make_entry(std::move(d_ell1), 1));
                p.raw_entries.push_back(make_entry(std::move(d_ell2), 1));
            } else {
                p.raw_entries.push_back(
                    make_entry({{1, n2}, {0, z2}, {1, n1 - n2 - z2}, {0, n2}, {1, z2}}, 1));
                p.raw_entries.push_back(make_entry({{1, n2}}, 1));
            }
            p.r_predicted = 1 + pow2(n1) + pow2(mn);
            break;
        }
        case CaseId::TwoBlockD: {
            const Nat n1 = c.n(1), z1 = c.z(1), n2 = c.n(2), z2 = c.z(2);
            const Nat q = *cf.q, rho = *cf.rho;
            Nat geo = 0;
            for (Nat i = 0; i <= q; ++i) geo += pow2(i * z1 + 2);
            const Nat r_k2 = pow2(n1 + 1) * (pow2(n2 - n1 - 1) - 1) + pow2(rho) * (pow2(z1 - 1) - 1) * geo +
                             pow2(rho + 1) - 1;
            const Nat r_k1 = pow2(n2) - r_k2 - 2;
            p.raw_entries.push_back(make_entry({{1, z1}, {0, n2}, {1, z2}}, r_k1));
            p.raw_entries.push_back(make_entry({{1, z2}}, r_k2));
            p.raw_entries.push_back(make_entry({{1, rho + 1}, {0, n2}, {1, z2}}, 1));
            p.raw_entries.push_back(make_entry({{1, n2}}, 1));
            p.r_predicted = 1 + pow2(n2);
            break;
        }
        case CaseId::ShiftedSpaced:
        case CaseId::None:
            throw NotApplicable("closed_r: no closed form covers m = " + std::to_string(m));
    }
    verify(p);
    return p;
}

ShiftCheck shifted_family_check(Nat m, Nat i) {
    const ClosedFormCase cf = classify(m);
    if (cf.id != CaseId::Spaced && cf.id != CaseId::SpacedWeak)
        throw NotApplicable("shifted_family_check: base m must be Spaced/SpacedWeak");
    const std::size_t w = cf.cbe.omega();
    const Nat nw = cf.cbe.n(w), zw = cf.cbe.z(w);
    if (i >= pow2(zw))
        throw std::invalid_argument("shifted_family_check: i must be below 2^{z_w}");

    ShiftCheck out;
    out.base_m = m;
    out.i = i;
    out.j = (i + 1) * (pow2(nw) + 1) - 2;
    out.parity_odd = binom_parity(m + out.j, m + i) != 0;
    if (out.j < pow2(zw)) out.simplified_parity = binom_parity(out.j, i) != 0;
    if (out.parity_odd) {
        Prediction p;
        p.id = CaseId::ShiftedSpaced;
        p.m = m + i;
        p.r_predicted = 1 + pow2(nw);
        out.prediction = std::move(p);
    }
    return out;
}

}  // namespace tcgap
