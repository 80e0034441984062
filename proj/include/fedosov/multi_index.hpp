#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fedosov {

/// Sorted multiset of fiber indices (the y part of a Weyl monomial).
using YIdx = std::vector<std::uint8_t>;

inline int y_mult(const YIdx& y, int i) {
    int m = 0;
    for (auto v : y)
        if (v == i) ++m;
    return m;
}

inline YIdx y_insert(YIdx y, int i) {
    auto it = y.begin();
    while (it != y.end() && *it <= i) ++it;
    y.insert(it, (std::uint8_t)i);
    return y;
}

inline YIdx y_erase_one(YIdx y, int i) {
    for (auto it = y.begin(); it != y.end(); ++it)
        if (*it == i) {
            y.erase(it);
            break;
        }
    return y;
}

inline YIdx y_merge(const YIdx& a, const YIdx& b) {
    YIdx r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) r.push_back(a[i] <= b[j] ? a[i++] : b[j++]);
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

/// dx index sets are bitmasks; factors are ordered ascending with the sign
/// convention of sorted order.

/// Sign of dx^A wedge dx^B brought to sorted order; 0 when they overlap.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inv = 0;
    std::uint32_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (j + 1)); // elements of A above j must pass over dx^j
    }
    return (inv % 2 == 0) ? 1 : -1;
}

/// Sign of dx^i wedge dx^S (i not in S); 0 when i is in S.
inline int front_wedge_sign(int i, std::uint32_t s) {
    if (s & (1u << i)) return 0;
    return (std::popcount(s & ((1u << i) - 1)) % 2 == 0) ? 1 : -1;
}

} // namespace fedosov
