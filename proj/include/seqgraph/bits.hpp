#pragma once

#include <cstdint>
#include <string>

#include "seqgraph/errors.hpp"

namespace seqgraph {

/// Reverses the low `width` bits of v.
inline std::uint64_t reverse_bits(std::uint64_t v, int width) {
    std::uint64_t r = 0;
    for (int i = 0; i < width; ++i) {
        r = (r << 1) | (v & 1);
        v >>= 1;
    }
    return r;
}

inline bool all_ones(std::uint64_t v, int width) {
    return v == ((std::uint64_t{1} << width) - 1);
}

/// 1-based position of the first zero bit counted from the most significant
/// of the low `width` bits. Pre: not all-ones.
inline int first_zero_from_left(std::uint64_t v, int width) {
    for (int k = 1; k <= width; ++k)
        if (((v >> (width - k)) & 1) == 0) return k;
    throw InvalidParam("first_zero_from_left: value is all-ones");
}

inline std::string bit_string(std::uint64_t v, int width) {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if ((v >> (width - 1 - i)) & 1) s[i] = '1';
    return s;
}

struct BitParts {
    std::uint64_t b0; // first m bits from the left (high half)
    std::uint64_t b1; // last m bits (low half)
};

/// Splits the 2m-bit representation b(i) into halves b_0, b_1.
inline BitParts split_bits(std::uint64_t i, int m) {
    if (m < 1 || m > 30) throw OutOfRange("split_bits: m out of range");
    if (i >= (std::uint64_t{1} << (2 * m))) throw OutOfRange("split_bits: i >= 4^m");
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    return BitParts{i >> m, i & mask};
}

} // namespace seqgraph
