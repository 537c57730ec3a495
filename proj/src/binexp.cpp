#include "tcgap/binexp.hpp"

#include <bit>
#include <stdexcept>

namespace tcgap {

std::string Cbe::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(blocks[i]);
    }
    out += ")";
    return out;
}

unsigned BitNat::width() const {
    return static_cast<unsigned>(std::bit_width(value));
}

Cbe to_cbe(Nat m) {
    if (m == 0) throw std::invalid_argument("to_cbe: m must be >= 1 (0 has no leading one-block)");
    Cbe c;
    int i = std::bit_width(m) - 1;
    while (i >= 0) {
        const Nat digit = (m >> i) & 1u;
        Nat len = 0;
        while (i >= 0 && ((m >> i) & 1u) == digit) {
            ++len;
            --i;
        }
        c.blocks.push_back(len);
    }
    return c;
}

Nat from_cbe(const Cbe& c) {
    if (c.blocks.empty()) throw std::invalid_argument("from_cbe: empty block sequence");
    std::vector<Run> runs;
    runs.reserve(c.blocks.size());
    int digit = 1;
    for (Nat len : c.blocks) {
        if (len == 0) throw std::invalid_argument("from_cbe: block lengths must be >= 1");
        runs.push_back({digit, len});
        digit ^= 1;
    }
    return from_runs(runs);
}

Nat from_runs(std::span<const Run> runs) {
    Nat v = 0;
    bool seen_one = false;
    for (const Run& r : runs) {
        if (r.digit != 0 && r.digit != 1)
            throw std::invalid_argument("from_runs: digit must be 0 or 1");
        if (r.count == 0) continue;
        if (!seen_one) {
            if (r.digit == 0)
                throw std::invalid_argument("from_runs: literal starts with a zero-block");
            seen_one = true;
        }
        for (Nat i = 0; i < r.count; ++i) v = (v << 1) | static_cast<Nat>(r.digit);
    }
    if (!seen_one) throw std::invalid_argument("from_runs: literal has no one-block");
    return v;
}

Nat from_runs(std::initializer_list<Run> runs) {
    return from_runs(std::span<const Run>(runs.begin(), runs.size()));
}

std::string runs_str(std::span<const Run> runs) {
    std::string out;
    for (const Run& r : runs) {
        if (!out.empty()) out += " ";
        out += std::to_string(r.digit) + "^" + std::to_string(r.count);
    }
    return out;
}

unsigned e_of(Nat m) {
    return static_cast<unsigned>(std::countr_one(m));
}

unsigned alpha(Nat m) {
    return static_cast<unsigned>(std::popcount(m));
}

unsigned mu(Nat m) {
    if (m == 0) throw std::invalid_argument("mu: m must be >= 1");
    return static_cast<unsigned>(std::bit_width(m)) - 1;
}

unsigned nu(Nat m) {
    if (m == 0) throw std::invalid_argument("nu: m must be >= 1");
    return static_cast<unsigned>(std::countr_zero(m));
}

Nat max_submask_leq(Nat e, Nat cap) {
    if (e <= cap) return e;
    Nat result = 0;
    bool tight = true;
    for (int i = std::bit_width(e) - 1; i >= 0; --i) {
        const Nat bit = Nat{1} << i;
        if (!tight) {
            result |= e & bit;
            continue;
        }
        const bool eb = e & bit;
        const bool cb = cap & bit;
        if (eb && cb) {
            result |= bit;  // taking a shared bit dominates any choice below it
        } else if (!eb && cb) {
            tight = false;  // prefix is now strictly below cap; take the rest of e
        }
        // eb && !cb: cannot take the bit while tight; skip it.
    }
    return result;
}

}  // namespace tcgap
