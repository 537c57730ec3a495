#pragma once

#include <cstdint>
#include <vector>

#include "tcgap/common.hpp"

// The self-similar parity series and its window check.
//
// The series f is defined by f_0 = (1), f_1 = (1, 1) and
// f_c = f_{c-1} || f_{c-2} || 0^{2^{c-2}}, so each f_c extends the last
// (length 2^c) and a prefix of any length is well defined. The claim under
// test: listing the parities of C(3i+1, i) over even i in
// [2^l, 2^{l+1} - 2] reproduces the first 2^{l-2} series entries followed by
// 2^{l-2} zeros, for every l >= 2.

namespace tcgap {

using ParityWord = std::vector<std::uint8_t>;  // entries 0/1

ParityWord series_prefix(std::size_t length);  // length >= 1

// The 2^{l-1} parities of C(3i+1, i), even i ascending in [2^l, 2^{l+1}-2].
ParityWord parity_window(unsigned l);  // l >= 2

struct PatternReport {
    unsigned l_max = 0;
    bool ok = false;
    unsigned first_failure_l = 0;        // meaningful when !ok
    std::size_t first_failure_index = 0; // position within the window
};

PatternReport check_pattern(unsigned l_max);  // l = 2..l_max

}  // namespace tcgap
