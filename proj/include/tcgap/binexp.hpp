#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tcgap/common.hpp"

// Binary-expansion combinatorics: run-length codification of an integer's
// binary digits, the derived parameters e/alpha/mu/nu, binomial parity, and
// bounded submask maximization. Everything here is a pure function.

namespace tcgap {

// Run-length encoding (n1, z1, n2, z2, ...) of the binary digits of m, most
// significant digit first: n1 leading ones, then z1 zeros, then n2 ones, ...
// Every entry is >= 1. The length is odd for odd m (trailing one-block) and
// even for even m.
struct Cbe {
    std::vector<Nat> blocks;

    std::size_t omega() const { return (blocks.size() + 1) / 2; }  // number of one-blocks
    Nat n(std::size_t u) const { return blocks.at(2 * u - 2); }    // u in [1, omega]
    Nat z(std::size_t u) const { return blocks.at(2 * u - 1); }    // u in [1, omega(-1 if m odd)]
    bool has_z(std::size_t u) const { return 2 * u - 1 < blocks.size(); }

    std::string str() const;  // "(n1, z1, ...)"
};

// A non-negative integer with bit-indexed access; bit(i) is the coefficient
// of 2^i.
struct BitNat {
    Nat value = 0;

    bool bit(unsigned i) const { return i < 64 && ((value >> i) & 1u); }
    // Number of binary digits; 0 for value 0, mu+1 otherwise.
    unsigned width() const;
};

// One block of a run-length literal: `count` copies of `digit` (0 or 1).
// A count of 0 is allowed and means the block is skipped, so degenerate
// literals like 1^{a}0^{0}1^{b} collapse the way the notation suggests.
struct Run {
    int digit;
    Nat count;
};

Cbe to_cbe(Nat m);          // m >= 1; throws std::invalid_argument on 0
Nat from_cbe(const Cbe&);   // inverse of to_cbe; validates entries >= 1

// Value of a run-length literal 1^{a}0^{b}1^{c}... Throws on digits outside
// {0,1} and on a literal whose first non-empty block is a zero-block.
Nat from_runs(std::span<const Run> runs);
Nat from_runs(std::initializer_list<Run> runs);
std::string runs_str(std::span<const Run> runs);  // "1^3 0^2 ..." display form

// Length of the terminal block of ones in the binary expansion: the unique
// e with m = 2^e - 1 (mod 2^{e+1}). Zero exactly when m is even.
unsigned e_of(Nat m);

unsigned alpha(Nat m);  // number of ones in the binary expansion
unsigned mu(Nat m);     // position of the leading one: 2^mu <= m < 2^{mu+1}, m >= 1
unsigned nu(Nat m);     // exponent of the largest 2-power dividing m, m >= 1

// Parity of the binomial coefficient C(n, k): odd exactly when k is a
// bitwise submask of n. Returns 0 for k > n.
inline int binom_parity(Nat n, Nat k) { return (n & k) == k ? 1 : 0; }

// The largest submask of e that is <= cap. A value always exists (0 is a
// submask of everything). Greedy from the most significant bit: while the
// prefix matches cap exactly, a shared one-bit is always taken; at the first
// position where e is 0 and cap is 1 the prefix drops strictly below cap and
// every remaining bit of e can be taken.
Nat max_submask_leq(Nat e, Nat cap);

}  // namespace tcgap
