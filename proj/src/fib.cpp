#include "tcgap/fib.hpp"

#include <stdexcept>

#include "tcgap/binexp.hpp"

namespace tcgap {

ParityWord series_prefix(std::size_t length) {
    if (length == 0) throw std::invalid_argument("series_prefix: length must be >= 1");
    std::size_t cap = 2;
    while (cap < length) cap *= 2;
    ParityWord buf{1, 1};
    buf.reserve(cap);  // doubling steps below never reallocate
    // grow f_{c-1} -> f_c in place; f_{c-2} is a prefix of f_{c-1}, so the
    // whole step reads from the buffer's own front
    std::size_t prev = 1;  // |f_{c-2}|
    while (buf.size() < length) {
        const std::size_t cur = buf.size();
        for (std::size_t i = 0; i < prev; ++i) buf.push_back(buf[i]);
        buf.insert(buf.end(), cur / 2, 0);
        prev = cur;
    }
    buf.resize(length);
    return buf;
}

ParityWord parity_window(unsigned l) {
    if (l < 2) throw std::invalid_argument("parity_window: l must be >= 2");
    ParityWord out;
    out.reserve(std::size_t{1} << (l - 1));
    const Nat hi = (Nat{1} << (l + 1)) - 2;
    for (Nat i = Nat{1} << l; i <= hi; i += 2)
        out.push_back(static_cast<std::uint8_t>(binom_parity(3 * i + 1, i)));
    return out;
}

PatternReport check_pattern(unsigned l_max) {
    if (l_max < 2) throw std::invalid_argument("check_pattern: l_max must be >= 2");
    PatternReport rep;
    rep.l_max = l_max;
    rep.ok = true;
    for (unsigned l = 2; l <= l_max; ++l) {
        const ParityWord window = parity_window(l);
        const std::size_t half = std::size_t{1} << (l - 2);
        const ParityWord prefix = series_prefix(half);
        for (std::size_t idx = 0; idx < 2 * half; ++idx) {
            const std::uint8_t expect = idx < half ? prefix[idx] : 0;
            if (window[idx] != expect) {
                rep.ok = false;
                rep.first_failure_l = l;
                rep.first_failure_index = idx;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace tcgap
