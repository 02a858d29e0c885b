// oracle.cpp — brute-force GCA/eBWT reference.
#include "cebwt/oracle.hpp"

#include <algorithm>
#include <span>

#include "cebwt/detail/cyclic_ops.hpp"
#include "cebwt/strings.hpp"

namespace cebwt {

Gca oracle_gca(const SeqCollection& coll) {
    coll.validate();

    std::vector<std::span<const unsigned char>> docs;
    docs.reserve(coll.size());
    for (const auto& d : coll.docs)
        docs.push_back({reinterpret_cast<const unsigned char*>(d.seq.data()), d.seq.size()});

    Gca entries;
    entries.reserve(coll.total_length());
    for (std::uint32_t d = 0; d < docs.size(); ++d)
        for (std::uint32_t j = 1; j <= docs[d].size(); ++j)
            entries.push_back({j, d + 1});

    // Compare conjugates as cyclic views; no rotation is materialized.
    // omega_compare_views is exactly omega_compare on the rotated strings.
    std::sort(entries.begin(), entries.end(), [&](const GcaEntry& a, const GcaEntry& b) {
        const detail::CyclicView<unsigned char> va{docs[a.doc - 1], a.pos - 1};
        const detail::CyclicView<unsigned char> vb{docs[b.doc - 1], b.pos - 1};
        const auto ord = detail::omega_compare_views(va, vb);
        if (ord != std::strong_ordering::equal) return ord == std::strong_ordering::less;
        if (a.doc != b.doc) return a.doc < b.doc;
        return a.pos < b.pos;
    });
    return entries;
}

EbwtResult oracle_ebwt(const SeqCollection& coll, bool with_samples) {
    return ebwt_from_gca(coll, oracle_gca(coll), with_samples);
}

}  // namespace cebwt
