// csais.cpp — cyclic induced sorting over a collection of primitive
// strings, on byte or integer alphabets.

#include "cebwt/csais.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>

#include "cebwt/detail/cyclic_ops.hpp"
#include "cebwt/strings.hpp"

namespace cebwt {
namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint8_t kL = 0;
constexpr std::uint8_t kS = 1;

// Documents of length >= 2 concatenated into flat arrays so the induced
// passes can walk one global workspace. Positions are global 0-based.
struct Flat {
    std::vector<std::uint32_t> sym;     // concatenated symbols
    std::vector<std::uint32_t> doc_of;  // global position -> flat doc ordinal
    std::vector<std::uint32_t> start;   // flat doc ordinal -> first global position
    std::vector<std::uint32_t> len;     // flat doc ordinal -> length
    std::uint32_t sigma = 0;

    std::uint32_t pred(std::uint32_t g) const {
        const std::uint32_t d = doc_of[g];
        return g == start[d] ? start[d] + len[d] - 1 : g - 1;
    }
    std::uint32_t succ(std::uint32_t g) const {
        const std::uint32_t d = doc_of[g];
        return g + 1 == start[d] + len[d] ? start[d] : g + 1;
    }
};

// Cyclic L/S types for every flat position. Each document needs at least
// one adjacent mismatch to anchor the classification; a document without
// one is a repeated single symbol and cannot be primitive.
std::vector<std::uint8_t> assign_types_flat(const Flat& f) {
    std::vector<std::uint8_t> type(f.sym.size(), kL);
    for (std::uint32_t d = 0; d < f.start.size(); ++d) {
        const std::uint32_t s = f.start[d];
        const std::uint32_t n = f.len[d];
        const auto next = [&](std::uint32_t g) { return g + 1 == s + n ? s : g + 1; };
        std::uint32_t anchor = kEmpty;
        for (std::uint32_t g = s; g < s + n; ++g) {
            if (f.sym[g] != f.sym[next(g)]) {
                anchor = g;
                break;
            }
        }
        if (anchor == kEmpty)
            throw std::invalid_argument(
                "cyclic type assignment: document is a repeated single symbol");
        type[anchor] = f.sym[anchor] < f.sym[next(anchor)] ? kS : kL;
        std::uint32_t i = anchor;
        for (std::uint32_t k = 1; k < n; ++k) {
            const std::uint32_t j = i == s ? s + n - 1 : i - 1;
            type[j] = f.sym[j] != f.sym[i] ? (f.sym[j] < f.sym[i] ? kS : kL) : type[i];
            i = j;
        }
    }
    return type;
}

bool is_lms(const Flat& f, const std::vector<std::uint8_t>& type, std::uint32_t g) {
    return type[g] == kS && type[f.pred(g)] == kL;
}

std::vector<std::uint32_t> bucket_bounds(const Flat& f) {
    std::vector<std::uint32_t> bounds(f.sigma + 1, 0);
    for (std::uint32_t c : f.sym) ++bounds[c + 1];
    std::partial_sum(bounds.begin(), bounds.end(), bounds.begin());
    return bounds;
}

// One full induced sort: seeds dropped at decrementing bucket tails (last
// seed first, so seed-list order equals ascending slot order), then the
// L-inducing ascending pass and the S-inducing descending pass. The S
// pass overwrites the seed slots; both passes read slots already filled
// during the same pass.
void induce(const Flat& f, const std::vector<std::uint8_t>& type,
            const std::vector<std::uint32_t>& seeds, std::vector<std::uint32_t>& A) {
    const std::size_t N = f.sym.size();
    A.assign(N, kEmpty);
    const std::vector<std::uint32_t> bounds = bucket_bounds(f);
    std::vector<std::uint32_t> cur(bounds.begin() + 1, bounds.end());
    for (auto it = seeds.rbegin(); it != seeds.rend(); ++it) A[--cur[f.sym[*it]]] = *it;
    cur.assign(bounds.begin(), bounds.end() - 1);
    for (std::size_t i = 0; i < N; ++i) {
        if (A[i] == kEmpty) continue;
        const std::uint32_t g = f.pred(A[i]);
        if (type[g] == kL) A[cur[f.sym[g]]++] = g;
    }
    cur.assign(bounds.begin() + 1, bounds.end());
    for (std::size_t i = N; i-- > 0;) {
        if (A[i] == kEmpty) continue;
        const std::uint32_t g = f.pred(A[i]);
        if (type[g] == kS) A[--cur[f.sym[g]]] = g;
    }
}

// Length of the LMS substring starting at global position g: the cyclic
// distance to the next LMS position of the same document, plus one (the
// terminal LMS position is included). A document with a single LMS
// position yields its full length plus one (one complete wrap).
std::uint32_t lms_substring_length(const Flat& f, std::uint32_t g, std::uint32_t next_g) {
    const std::uint32_t d = f.doc_of[g];
    const std::uint32_t n = f.len[d];
    const std::uint32_t loc = g - f.start[d];
    const std::uint32_t nloc = next_g - f.start[d];
    return (nloc + n - loc - 1) % n + 1 + 1;
}

bool equal_lms_substrings(const Flat& f, std::uint32_t g1, std::uint32_t n1g,
                          std::uint32_t g2, std::uint32_t n2g) {
    const std::uint32_t len1 = lms_substring_length(f, g1, n1g);
    const std::uint32_t len2 = lms_substring_length(f, g2, n2g);
    if (len1 != len2) return false;
    const std::uint32_t d1 = f.doc_of[g1], d2 = f.doc_of[g2];
    const std::uint32_t s1 = f.start[d1], s2 = f.start[d2];
    const std::uint32_t m1 = f.len[d1], m2 = f.len[d2];
    const std::uint32_t l1 = g1 - s1, l2 = g2 - s2;
    for (std::uint32_t k = 0; k < len1; ++k)
        if (f.sym[s1 + (l1 + k) % m1] != f.sym[s2 + (l2 + k) % m2]) return false;
    return true;
}

struct LevelResult {
    // (pos, doc) entries, both 1-based, doc in the level's own numbering.
    std::vector<GcaEntry> entries;
};

Flat flatten(const std::vector<std::vector<std::uint32_t>>& docs,
             const std::vector<std::uint32_t>& big, std::uint32_t sigma) {
    Flat f;
    f.sigma = sigma;
    std::uint64_t total = 0;
    for (std::uint32_t d : big) total += docs[d].size();
    if (total >= kEmpty)
        throw std::invalid_argument("collection too large: total length must be < 2^32 - 1");
    f.sym.reserve(total);
    f.doc_of.reserve(total);
    f.start.reserve(big.size());
    f.len.reserve(big.size());
    for (std::uint32_t b = 0; b < big.size(); ++b) {
        const auto& doc = docs[big[b]];
        f.start.push_back(static_cast<std::uint32_t>(f.sym.size()));
        f.len.push_back(static_cast<std::uint32_t>(doc.size()));
        f.sym.insert(f.sym.end(), doc.begin(), doc.end());
        f.doc_of.insert(f.doc_of.end(), doc.size(), b);
    }
    return f;
}

// Conjugate array of one recursion level. Every document must be
// non-empty and primitive (guaranteed by the callers: the entry point
// validates, and reduced collections of primitive strings are primitive).
LevelResult gca_level(const std::vector<std::vector<std::uint32_t>>& docs,
                      std::uint32_t sigma) {
    std::vector<std::uint32_t> big;  // level doc indices with length >= 2
    std::vector<std::pair<std::uint32_t, std::uint32_t>> singles;  // (symbol, level doc)
    for (std::uint32_t d = 0; d < docs.size(); ++d) {
        if (docs[d].size() >= 2)
            big.push_back(d);
        else
            singles.emplace_back(docs[d][0], d);
    }
    std::stable_sort(singles.begin(), singles.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    LevelResult out;
    if (big.empty()) {
        for (const auto& [c, d] : singles) out.entries.push_back({1, d + 1});
        return out;
    }

    const Flat f = flatten(docs, big, sigma);
    const std::size_t N = f.sym.size();
    const std::vector<std::uint8_t> type = assign_types_flat(f);

    // LMS positions in text order (ascending global position) and, per
    // flat document, the cyclically next LMS position.
    std::vector<std::uint32_t> lms_text;
    for (std::uint32_t g = 0; g < N; ++g)
        if (is_lms(f, type, g)) lms_text.push_back(g);
    const std::size_t n1 = lms_text.size();
    if (n1 == 0 || 2 * n1 > N)
        throw std::logic_error("induced sort: LMS count out of range");
    std::vector<std::vector<std::uint32_t>> lms_by_big(big.size());
    for (std::uint32_t g : lms_text) lms_by_big[f.doc_of[g]].push_back(g);
    std::vector<std::uint32_t> next_lms(N, kEmpty);
    for (const auto& list : lms_by_big)
        for (std::size_t r = 0; r < list.size(); ++r)
            next_lms[list[r]] = list[(r + 1) % list.size()];

    // Step 3: sort by LMS prefix, then name the LMS substrings by rank.
    std::vector<std::uint32_t> A;
    induce(f, type, lms_text, A);
    std::vector<std::uint32_t> name_of(N, kEmpty);
    std::uint32_t names = 0;
    std::uint32_t prev = kEmpty;
    for (std::uint32_t g : A) {
        if (!is_lms(f, type, g)) continue;
        if (prev == kEmpty || !equal_lms_substrings(f, g, next_lms[g], prev, next_lms[prev]))
            ++names;
        name_of[g] = names - 1;
        prev = g;
    }

    std::vector<std::uint32_t> sorted_lms;
    sorted_lms.reserve(n1);
    if (names == n1) {
        for (std::uint32_t g : A)
            if (is_lms(f, type, g)) sorted_lms.push_back(g);
    } else {
        // Reduced collection: per flat document, the names of its LMS
        // substrings in text order. Its conjugate array gives the order
        // of the LMS conjugates.
        std::vector<std::vector<std::uint32_t>> reduced(big.size());
        for (std::uint32_t b = 0; b < big.size(); ++b) {
            reduced[b].reserve(lms_by_big[b].size());
            for (std::uint32_t g : lms_by_big[b]) reduced[b].push_back(name_of[g]);
        }
        const LevelResult sub = gca_level(reduced, names);
        for (const GcaEntry& e : sub.entries)
            sorted_lms.push_back(lms_by_big[e.doc - 1][e.pos - 1]);
    }

    // Step 6: the final induced sort from the fully sorted LMS seeds.
    induce(f, type, sorted_lms, A);

    // Splice the length-1 documents back in: within bucket c they order
    // after the L conjugates and before the S conjugates, input order
    // among themselves.
    out.entries.reserve(N + singles.size());
    std::size_t ai = 0;
    std::size_t si = 0;
    const auto emit_flat = [&](std::uint32_t g) {
        out.entries.push_back({g - f.start[f.doc_of[g]] + 1, big[f.doc_of[g]] + 1});
    };
    for (std::uint32_t c = 0; c < sigma; ++c) {
        while (ai < N && f.sym[A[ai]] == c && type[A[ai]] == kL) emit_flat(A[ai++]);
        while (si < singles.size() && singles[si].first == c)
            out.entries.push_back({1, singles[si++].second + 1});
        while (ai < N && f.sym[A[ai]] == c) emit_flat(A[ai++]);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> to_int_docs(const SeqCollection& coll) {
    std::vector<std::vector<std::uint32_t>> docs(coll.size());
    for (std::size_t d = 0; d < coll.size(); ++d) {
        const std::string& s = coll.docs[d].seq;
        docs[d].assign(s.begin(), s.end());
        for (auto& v : docs[d]) v = static_cast<unsigned char>(v);
    }
    return docs;
}

void require_primitive(const std::vector<std::uint32_t>& doc) {
    if (doc.empty()) throw std::invalid_argument("document must be non-empty");
    if (detail::root_period_t(std::span<const std::uint32_t>(doc)).second != 1)
        throw std::invalid_argument("document is not primitive");
}

Flat flatten_all(const SeqCollection& coll) {
    coll.validate();
    const auto docs = to_int_docs(coll);
    std::vector<std::uint32_t> big(docs.size());
    std::iota(big.begin(), big.end(), 0);
    for (const auto& d : docs)
        if (d.size() < 2)
            throw std::invalid_argument("induced sort requires documents of length >= 2");
    return flatten(docs, big, 256);
}

}  // namespace

TypeArray assign_types(std::string_view t) {
    if (t.size() < 2)
        throw std::invalid_argument("cyclic type assignment requires length >= 2");
    std::vector<std::vector<std::uint32_t>> docs(1);
    docs[0].reserve(t.size());
    for (char ch : t) docs[0].push_back(static_cast<unsigned char>(ch));
    Flat f = flatten(docs, {0}, 256);
    const std::vector<std::uint8_t> raw = assign_types_flat(f);
    TypeArray out;
    out.types.reserve(t.size());
    out.lms.resize(t.size());
    for (std::uint32_t g = 0; g < t.size(); ++g)
        out.types.push_back(raw[g] == kS ? PosType::S : PosType::L);
    for (std::uint32_t g = 0; g < t.size(); ++g) out.lms[g] = is_lms(f, raw, g);
    return out;
}

Gca induced_sort(const SeqCollection& coll, const std::vector<GcaEntry>& seeds) {
    const Flat f = flatten_all(coll);
    const std::vector<std::uint8_t> type = assign_types_flat(f);
    std::vector<std::uint32_t> flat_seeds;
    flat_seeds.reserve(seeds.size());
    for (const GcaEntry& e : seeds) {
        if (e.doc == 0 || e.doc > f.start.size())
            throw std::invalid_argument("seed document out of range");
        if (e.pos == 0 || e.pos > f.len[e.doc - 1])
            throw std::invalid_argument("seed position out of range");
        const std::uint32_t g = f.start[e.doc - 1] + e.pos - 1;
        if (!is_lms(f, type, g))
            throw std::invalid_argument("seed is not an LMS position");
        flat_seeds.push_back(g);
    }
    std::vector<std::uint32_t> A;
    induce(f, type, flat_seeds, A);
    Gca out;
    out.reserve(A.size());
    for (std::uint32_t g : A) {
        if (g == kEmpty) throw std::logic_error("induced sort left an empty slot");
        out.push_back({g - f.start[f.doc_of[g]] + 1, f.doc_of[g] + 1});
    }
    return out;
}

LmsNaming name_lms_substrings(const SeqCollection& coll, const Gca& lms_sorted) {
    const Flat f = flatten_all(coll);
    const std::vector<std::uint8_t> type = assign_types_flat(f);
    const std::size_t N = f.sym.size();
    if (lms_sorted.size() != N)
        throw std::invalid_argument("naming expects the full induced workspace");

    LmsNaming out;
    out.lms_positions.resize(coll.size());
    for (std::uint32_t g = 0; g < N; ++g)
        if (is_lms(f, type, g))
            out.lms_positions[f.doc_of[g]].push_back(g - f.start[f.doc_of[g]] + 1);
    std::vector<std::uint32_t> next_lms(N, kEmpty);
    for (std::uint32_t d = 0; d < out.lms_positions.size(); ++d) {
        const auto& list = out.lms_positions[d];
        for (std::size_t r = 0; r < list.size(); ++r)
            next_lms[f.start[d] + list[r] - 1] =
                f.start[d] + list[(r + 1) % list.size()] - 1;
    }

    std::vector<std::uint32_t> name_of(N, kEmpty);
    std::uint32_t names = 0;
    std::uint32_t total = 0;
    std::uint32_t prev = kEmpty;
    for (const GcaEntry& e : lms_sorted) {
        const std::uint32_t g = f.start[e.doc - 1] + e.pos - 1;
        if (!is_lms(f, type, g)) continue;
        ++total;
        if (prev == kEmpty || !equal_lms_substrings(f, g, next_lms[g], prev, next_lms[prev]))
            ++names;
        name_of[g] = names - 1;
        prev = g;
    }

    out.reduced.resize(coll.size());
    for (std::uint32_t d = 0; d < out.lms_positions.size(); ++d)
        for (std::uint32_t p : out.lms_positions[d])
            out.reduced[d].push_back(name_of[f.start[d] + p - 1]);
    out.name_count = names;
    out.all_distinct = names == total;
    return out;
}

std::pair<Gca, std::vector<std::uint64_t>> sais_gca(const SeqCollection& coll) {
    coll.validate();
    if (coll.empty()) return {};
    const auto docs = to_int_docs(coll);
    for (const auto& d : docs) require_primitive(d);
    const LevelResult level = gca_level(docs, 256);
    std::vector<std::uint64_t> index_set;
    for (std::size_t r = 0; r < level.entries.size(); ++r)
        if (level.entries[r].pos == 1) index_set.push_back(r + 1);
    return {level.entries, std::move(index_set)};
}

EbwtResult ebwt(const SeqCollection& coll, bool with_samples) {
    coll.validate();
    if (coll.empty()) return {};
    SeqCollection roots;
    std::vector<std::uint32_t> exponents;
    std::vector<std::uint32_t> root_lengths;
    roots.docs.reserve(coll.size());
    for (const SeqDoc& d : coll.docs) {
        const RootDecomposition rd = root_and_exponent(d.seq);
        roots.docs.push_back({d.id, rd.root});
        exponents.push_back(rd.exponent);
        root_lengths.push_back(static_cast<std::uint32_t>(rd.root.size()));
    }
    Gca root_gca = sais_gca(roots).first;
    std::vector<std::span<const char>> root_views;
    std::vector<std::uint64_t> full_lens;
    root_views.reserve(coll.size());
    full_lens.reserve(coll.size());
    for (std::size_t d = 0; d < coll.size(); ++d) {
        root_views.emplace_back(roots.docs[d].seq.data(), roots.docs[d].seq.size());
        full_lens.push_back(coll.docs[d].seq.size());
    }
    detail::order_power_ties(root_gca, root_views, full_lens);
    const Gca full = expand_gca(root_gca, exponents, root_lengths);
    return ebwt_from_gca(coll, full, with_samples);
}

std::pair<std::string, std::uint64_t> bwt_single(std::string_view t) {
    if (t.empty()) throw std::invalid_argument("bwt of an empty string is undefined");
    SeqCollection coll;
    coll.docs.push_back({"t", std::string(t)});
    EbwtResult r = ebwt(coll);
    return {std::move(r.bwt), r.index_set.at(0)};
}

std::vector<GcaEntry> cyclic_gca(const std::vector<std::vector<std::uint32_t>>& docs,
                                 std::uint32_t sigma) {
    for (const auto& d : docs) {
        require_primitive(d);
        for (std::uint32_t v : d)
            if (v >= sigma) throw std::invalid_argument("symbol out of alphabet range");
    }
    if (docs.empty()) return {};
    return gca_level(docs, sigma).entries;
}

}  // namespace cebwt
