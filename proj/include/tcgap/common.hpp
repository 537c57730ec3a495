#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcgap {

// Every quantity in this library is an exact non-negative integer. A 64-bit
// word is exact for all m < 2^31: the largest intermediate value anywhere is
// s*m with s <= m+1, which stays below 2^62. No floating point, no factorials;
// binomial parities are decided bitwise (see binexp.hpp).
using Nat = std::uint64_t;

inline bool is_pow2(Nat x) { return x != 0 && (x & (x - 1)) == 0; }

// m+1 a power of two: the complement recursion r(m) has no starting point
// (d0 would be 0). For such m the gap is m itself for every s >= 2.
class PowerOfTwoSuccessor : public std::domain_error {
public:
    explicit PowerOfTwoSuccessor(Nat m)
        : std::domain_error("r(m) undefined: m+1 is a power of two (m = " + std::to_string(m) + ")"),
          m_(m) {}
    Nat m() const { return m_; }

private:
    Nat m_;
};

// A computation produced a value the stabilization theorems rule out.
// Thrown only on an internal bug; never expected to surface.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A witness certificate failed its independent re-validation.
class CertificateInvalid : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested a closed-form evaluation for an m outside every covered case.
class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace tcgap
