// types.hpp — shared value types: document collections, conjugate-array
// entries, and eBWT results.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cebwt {

// One document: a non-empty byte string plus a free-form label.
struct SeqDoc {
    std::string id;
    std::string seq;
};

// An ordered multiset of documents. Order is load-bearing: ties between
// identical conjugates are broken by document index, so callers must not
// reorder documents after construction.
struct SeqCollection {
    std::vector<SeqDoc> docs;

    static SeqCollection from_strings(std::initializer_list<std::string_view> seqs) {
        SeqCollection c;
        c.docs.reserve(seqs.size());
        std::size_t i = 0;
        for (auto s : seqs)
            c.docs.push_back({"doc" + std::to_string(++i), std::string(s)});
        return c;
    }

    static SeqCollection from_strings(const std::vector<std::string>& seqs) {
        SeqCollection c;
        c.docs.reserve(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i)
            c.docs.push_back({"doc" + std::to_string(i + 1), seqs[i]});
        return c;
    }

    std::size_t size() const { return docs.size(); }
    bool empty() const { return docs.empty(); }

    std::uint64_t total_length() const {
        std::uint64_t n = 0;
        for (const auto& d : docs) n += d.seq.size();
        return n;
    }

    // Throws if any document is empty (zero-length docs have no conjugates).
    void validate() const {
        for (const auto& d : docs)
            if (d.seq.empty())
                throw std::invalid_argument("collection contains an empty document: " + d.id);
    }
};

// Entry of the generalized conjugate array: the conjugate of document
// `doc` starting at position `pos`. Both fields are 1-based.
struct GcaEntry {
    std::uint32_t pos;
    std::uint32_t doc;

    friend bool operator==(const GcaEntry&, const GcaEntry&) = default;
};

using Gca = std::vector<GcaEntry>;

// A conjugate-array sample pinned to a BWT position (1-based).
struct GcaSample {
    std::uint64_t bwt_pos;
    GcaEntry entry;

    friend bool operator==(const GcaSample&, const GcaSample&) = default;
};

// Result of an eBWT construction. `index_set` holds the 1-based BWT
// positions of each document's first conjugate, ascending. When present,
// `samples` holds the GCA entry of the first and last position of every
// maximal equal-byte run, in BWT order (run head immediately followed by
// run tail; a singleton run contributes the same entry twice).
struct EbwtResult {
    std::string bwt;
    std::vector<std::uint64_t> index_set;
    std::optional<std::vector<GcaSample>> samples;
};

// T = root^exponent with `root` primitive.
struct RootDecomposition {
    std::string root;
    std::uint32_t exponent;
};

}  // namespace cebwt
