#pragma once

#include <optional>
#include <vector>

#include "tcgap/common.hpp"

// Exact computation of the s-th zero-divisor cup-length of real projective
// m-space and of the gap G_s(m) = s*m - zcl_s.
//
// Working mod 2, the ideal of s-th zero-divisors of RP^m is generated by the
// degree-one classes x_1 + x_j (2 <= j <= s), and a non-zero product of N
// zero-divisors expands to a non-zero product of N generators. So
//
//   zcl_s(RP^m) = max { e_2 + ... + e_s :
//                       (x_1+x_2)^{e_2} ... (x_1+x_s)^{e_s} != 0
//                       in Z_2[x_1..x_s] / (x_i^{m+1}) }.
//
// Each x_j with j >= 2 lives in exactly one factor, so the expansion of the
// product has one term per choice of split e_j = c_j + a_j with coefficient
// prod C(e_j, a_j), and distinct choices give distinct monomials: the product
// is non-zero iff some choice has every a_j <= m, every C(e_j, a_j) odd, and
// c_2 + ... + c_s <= m. Minimizing each c_j independently is therefore
// globally optimal, which turns zcl_s into a bounded knapsack: pick s-1
// exponents e in [0, 2m] of weight min_cost(m, e) and value e, total weight
// at most m, maximizing total value.

namespace tcgap {

// A product of factors (x_1 + x_j)^{e_j}, j = 2..s. Exponents above 2m are
// rejected: such a factor dies in the truncated ring (no split keeps both
// variable powers at most m).
struct FactorVector {
    Nat m = 0;
    std::vector<Nat> exponents;  // e_j for j = 2..s

    Nat s() const { return exponents.size() + 1; }
    void validate() const;  // throws std::invalid_argument
};

// One factor's chosen split e_j = x1_part + xj_part with C(e_j, xj_part) odd.
struct FactorSplit {
    Nat exponent;
    Nat xj_part;
    Nat x1_part;
};

// Proof that a factor product is non-zero: the expansion contains the basis
// monomial x_1^{w_1} x_2^{w_2} ... x_s^{w_s} (w = witness) with odd
// coefficient, one odd-parity split per factor.
struct Certificate {
    FactorVector factors;
    std::vector<Nat> witness;         // (w_1, ..., w_s), all <= m
    std::vector<FactorSplit> splits;  // one per factor, j = 2..s
};

// Least x_1-exponent a single factor (x_1 + x_j)^e can contribute to a term
// that survives truncation, namely e - max_submask_leq(e, m). May exceed m,
// in which case no product containing the factor is non-zero. Requires
// e <= 2m.
Nat min_cost(Nat m, Nat e);

// Decides non-vanishing by summing per-factor minimum costs.
bool product_nonzero(const FactorVector& v);

// Same decision, plus the witness assembled from the per-factor maximizing
// submasks when non-zero.
std::optional<Certificate> product_certificate(const FactorVector& v);

// Independent re-validation of a certificate (split sums, parities, witness
// bounds). Throws CertificateInvalid.
void check_certificate(const Certificate& c);

// Literal expansion of the product in Z_2[x_1..x_s]/(x_i^{m+1}) over a dense
// bit array, one bit per monomial. Exists to validate product_nonzero and
// min_cost; quadratic-ish and memory-hungry, so guarded.
struct BruteLimits {
    Nat max_m = 12;
    Nat max_s = 5;
};
bool brute_product_nonzero(const FactorVector& v, const BruteLimits& lim = {});

struct GapRow {
    Nat m = 0;
    Nat s = 0;
    Nat zcl = 0;
    Nat gap = 0;  // s*m - zcl
    std::optional<FactorVector> witness;
};

// Per-m incremental knapsack. Layer n holds the best total exponent over
// exactly n factors for every budget w <= m; each additional s reuses all
// previous layers. Exponent 0 is an admissible item (an empty factor), which
// makes zcl_s non-decreasing in s by construction.
class GapEngine {
public:
    explicit GapEngine(Nat m);

    Nat m() const { return m_; }
    Nat g_limit() const { return g_limit_; }  // 2^{e(m)} - 1

    // Computes the row for one s (>= 2). Enforces gap >= g_limit. The witness
    // is the lexicographically smallest maximizing exponent vector.
    GapRow row(Nat s, bool with_witness = false);

private:
    void extend_to(Nat layers);
    std::vector<Nat> reconstruct(Nat s, Nat target) const;

    Nat m_;
    Nat g_limit_;
    std::vector<Nat> item_weight_;  // Pareto staircase, weights increasing
    std::vector<Nat> item_value_;   // values increasing
    std::vector<std::vector<Nat>> layers_;  // layers_[n][w], n factors, budget w
};

// zcl_s, the gap, and a maximizing witness for one (m, s).
GapRow zcl_s(Nat m, Nat s);

// Rows for s = 2..s_max. Enforces monotonicity of the gap and the floor
// g_limit across the table.
std::vector<GapRow> gap_table(Nat m, Nat s_max, bool with_witness = false);

struct StabilizationReport {
    Nat m = 0;
    Nat g_limit = 0;              // the stabilized gap value 2^{e(m)} - 1
    Nat s_of_m = 0;               // first s >= 2 with G_s = g_limit
    std::optional<Nat> r_of_m;    // the upper bound, when m+1 is not a 2-power
    std::vector<Nat> gap_sequence;  // G_2 .. G_{s(m)}
};

// Walks s upward until the gap reaches 2^{e(m)} - 1. For m+1 a power of two
// the first row already sits at the limit; otherwise the search is capped at
// r(m), and failing to stabilize by then throws TheoremViolation.
StabilizationReport stabilization(Nat m);

// The canonical witness product read off the r-schedule: for every schedule
// entry with r_l > 0, r_l factors of exponent m + d_l. Validates that the
// expansion contains x_1^{m-(2^e-1)} x_2^m ... x_s^m with s = r(m) and that
// the total degree is s*m - (2^e - 1). Throws PowerOfTwoSuccessor /
// CertificateInvalid.
Certificate schedule_certificate(Nat m);

}  // namespace tcgap
