// detail/cyclic_ops.hpp — alphabet-generic primitives shared by the byte
// and integer paths: border arrays, primitive-root decomposition,
// omega-order comparison of cyclic views, and the power-tie reordering
// applied before a root conjugate array is expanded to the full powers.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cebwt/types.hpp"

namespace cebwt::detail {

// Border array b of t: b[i] = length of the longest proper border of
// t[0..i] (KMP failure function, 0-based).
template <typename Sym>
std::vector<std::uint32_t> border_array_t(std::span<const Sym> t) {
    std::vector<std::uint32_t> b(t.size(), 0);
    std::uint32_t k = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        while (k > 0 && t[i] != t[k]) k = b[k - 1];
        if (t[i] == t[k]) ++k;
        b[i] = k;
    }
    return b;
}

// Length of the primitive root of t and the exponent e with t = root^e.
template <typename Sym>
std::pair<std::size_t, std::uint32_t> root_period_t(std::span<const Sym> t) {
    if (t.empty()) return {0, 0};
    const auto b = border_array_t(t);
    const std::size_t n = t.size();
    const std::size_t p = n - b[n - 1];
    if (n % p == 0) return {p, static_cast<std::uint32_t>(n / p)};
    return {n, 1};
}

// A rotation of a sequence, read cyclically. `start` is 0-based.
template <typename Sym>
struct CyclicView {
    std::span<const Sym> base;
    std::size_t start;

    Sym operator[](std::size_t k) const {
        std::size_t i = start + k;
        if (i >= base.size()) i -= base.size() * (i / base.size());
        // start < n and k < 2n in all callers, so one subtraction suffices;
        // the division form keeps this safe for arbitrary k.
        return base[i % base.size()];
    }
    std::size_t size() const { return base.size(); }
};

// Omega-order comparison of two cyclic strings: S precedes T iff
// S^omega < T^omega lexicographically, or the infinite powers coincide
// (same primitive root) and |S| < |T| (smaller exponent). A mismatch, if
// any, occurs within the first |S|+|T| characters (Fine and Wilf), so the
// scan below is exact.
template <typename Sym>
std::strong_ordering omega_compare_views(CyclicView<Sym> s, CyclicView<Sym> t) {
    const std::size_t limit = s.size() + t.size();
    for (std::size_t k = 0; k < limit; ++k) {
        const Sym a = s[k];
        const Sym b = t[k];
        if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (s.size() != t.size())
        return s.size() < t.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// The conjugate array of the primitive roots orders omega-equal
// conjugates (identical root words) by document index, but the full
// collection orders them by document length first: when u^omega =
// v^omega, the shorter string is the smaller one. Before expanding the
// roots' array, reorder every maximal run of equal root conjugates by
// full document length, keeping document order within equal lengths.
// No-op when no document is a proper power (then equal conjugates have
// equal full lengths already).
template <typename Sym>
void order_power_ties(std::vector<GcaEntry>& gca,
                      const std::vector<std::span<const Sym>>& roots,
                      const std::vector<std::uint64_t>& full_lens) {
    bool any_power = false;
    for (std::size_t d = 0; d < roots.size() && !any_power; ++d)
        any_power = full_lens[d] != roots[d].size();
    if (!any_power) return;

    const auto equal_conjugates = [&](const GcaEntry& a, const GcaEntry& b) {
        const auto ra = roots[a.doc - 1];
        const auto rb = roots[b.doc - 1];
        if (ra.size() != rb.size()) return false;
        const std::size_t n = ra.size();
        std::size_t ia = a.pos - 1, ib = b.pos - 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (ra[ia] != rb[ib]) return false;
            if (++ia == n) ia = 0;
            if (++ib == n) ib = 0;
        }
        return true;
    };

    std::size_t i = 0;
    while (i < gca.size()) {
        std::size_t j = i;
        while (j + 1 < gca.size() && equal_conjugates(gca[j], gca[j + 1])) ++j;
        if (j > i)
            std::stable_sort(gca.begin() + i, gca.begin() + j + 1,
                             [&](const GcaEntry& a, const GcaEntry& b) {
                                 return full_lens[a.doc - 1] < full_lens[b.doc - 1];
                             });
        i = j + 1;
    }
}

}  // namespace cebwt::detail
