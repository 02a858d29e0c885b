// strings.cpp — byte-level cyclic-string primitives.
#include "cebwt/strings.hpp"

#include <span>
#include <stdexcept>

#include "cebwt/detail/cyclic_ops.hpp"

namespace cebwt {

namespace {

std::span<const unsigned char> as_bytes(std::string_view s) {
    return {reinterpret_cast<const unsigned char*>(s.data()), s.size()};
}

}  // namespace

std::vector<std::uint32_t> border_array(std::string_view t) {
    return detail::border_array_t(as_bytes(t));
}

RootDecomposition root_and_exponent(std::string_view t) {
    if (t.empty()) throw std::invalid_argument("root_and_exponent: empty string");
    const auto [p, e] = detail::root_period_t(as_bytes(t));
    return {std::string(t.substr(0, p)), e};
}

std::string conjugate(std::string_view t, std::size_t i) {
    if (i < 1 || i > t.size())
        throw std::out_of_range("conjugate: index " + std::to_string(i) +
                                " outside [1, " + std::to_string(t.size()) + "]");
    std::string out;
    out.reserve(t.size());
    out.append(t.substr(i - 1));
    out.append(t.substr(0, i - 1));
    return out;
}

std::strong_ordering omega_compare(std::string_view s, std::string_view t) {
    // Fast path: equal primitive roots order by exponent alone.
    const auto bs = as_bytes(s);
    const auto bt = as_bytes(t);
    const auto [ps, es] = detail::root_period_t(bs);
    const auto [pt, et] = detail::root_period_t(bt);
    if (ps == pt && s.substr(0, ps) == t.substr(0, pt)) {
        if (es == et) return std::strong_ordering::equal;
        return es < et ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Distinct roots: the infinite powers differ within |s|+|t| characters.
    return detail::omega_compare_views<unsigned char>({bs, 0}, {bt, 0});
}

Gca expand_gca(const Gca& roots_gca,
               const std::vector<std::uint32_t>& exponents,
               const std::vector<std::uint32_t>& root_lengths) {
    if (exponents.size() != root_lengths.size())
        throw std::invalid_argument("expand_gca: exponents/root_lengths size mismatch");

    std::uint64_t expect_entries = 0, total = 0;
    for (std::size_t d = 0; d < exponents.size(); ++d) {
        if (exponents[d] == 0 || root_lengths[d] == 0)
            throw std::invalid_argument("expand_gca: zero exponent or root length");
        expect_entries += root_lengths[d];
        total += static_cast<std::uint64_t>(exponents[d]) * root_lengths[d];
    }
    if (roots_gca.size() != expect_entries)
        throw std::invalid_argument("expand_gca: root GCA size disagrees with root lengths");

    Gca out;
    out.reserve(total);
    for (const GcaEntry& e : roots_gca) {
        if (e.doc < 1 || e.doc > exponents.size() || e.pos < 1 || e.pos > root_lengths[e.doc - 1])
            throw std::invalid_argument("expand_gca: entry outside declared root");
        const std::uint32_t len = root_lengths[e.doc - 1];
        for (std::uint32_t k = 0; k < exponents[e.doc - 1]; ++k)
            out.push_back({e.pos + k * len, e.doc});
    }
    return out;
}

EbwtResult ebwt_from_gca(const SeqCollection& coll, const Gca& gca, bool with_samples) {
    coll.validate();
    if (gca.size() != coll.total_length())
        throw std::invalid_argument("ebwt_from_gca: GCA size differs from collection length");

    EbwtResult res;
    res.bwt.reserve(gca.size());
    for (const GcaEntry& e : gca) {
        if (e.doc < 1 || e.doc > coll.size())
            throw std::invalid_argument("ebwt_from_gca: bad document index");
        const std::string& t = coll.docs[e.doc - 1].seq;
        if (e.pos < 1 || e.pos > t.size())
            throw std::invalid_argument("ebwt_from_gca: bad position");
        res.bwt.push_back(e.pos == 1 ? t.back() : t[e.pos - 2]);
        if (e.pos == 1) res.index_set.push_back(res.bwt.size());
    }

    if (with_samples) {
        std::vector<GcaSample> samples;
        std::size_t i = 0;
        while (i < res.bwt.size()) {
            std::size_t j = i;
            while (j + 1 < res.bwt.size() && res.bwt[j + 1] == res.bwt[i]) ++j;
            samples.push_back({i + 1, gca[i]});
            samples.push_back({j + 1, gca[j]});
            i = j + 1;
        }
        res.samples = std::move(samples);
    }
    return res;
}

}  // namespace cebwt
