// testutil.hpp — shared helpers for the unit tests: fixture collections,
// random collection generation, and multiset comparison.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cebwt/types.hpp"

namespace testutil {

inline cebwt::SeqCollection coll(std::initializer_list<std::string_view> seqs) {
    return cebwt::SeqCollection::from_strings(seqs);
}

// Example fixtures used across several suites.
inline cebwt::SeqCollection example1() {
    return coll({"GTACAACG", "CGGCACACACGT", "C"});
}
inline cebwt::SeqCollection example3() {
    return coll({"CACGTGCTAT", "CCACTTGCTAGA", "CACTTGCTAT"});
}

inline std::vector<std::string> sorted_seqs(const cebwt::SeqCollection& c) {
    std::vector<std::string> out;
    for (const auto& d : c.docs) out.push_back(d.seq);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same_multiset(const cebwt::SeqCollection& a, const cebwt::SeqCollection& b) {
    return sorted_seqs(a) == sorted_seqs(b);
}

inline std::string gca_to_string(const cebwt::Gca& gca) {
    std::ostringstream out;
    for (const auto& e : gca) out << '(' << e.pos << ',' << e.doc << ')';
    return std::move(out).str();
}

// Random collection: 1..max_docs documents of length 1..max_len over the
// given alphabet; with probability ~1/10 a document is forced to be a
// power, and with probability ~1/10 it duplicates an earlier document.
inline cebwt::SeqCollection random_collection(std::mt19937_64& rng,
                                              unsigned max_docs = 8,
                                              unsigned max_len = 64,
                                              std::string_view alphabet = "ACGTN") {
    std::uniform_int_distribution<unsigned> doc_count(1, max_docs);
    std::uniform_int_distribution<unsigned> percent(0, 99);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    cebwt::SeqCollection out;
    const unsigned m = doc_count(rng);
    for (unsigned d = 0; d < m; ++d) {
        if (!out.docs.empty() && percent(rng) < 10) {
            out.docs.push_back({"dup" + std::to_string(d),
                                out.docs[rng() % out.docs.size()].seq});
            continue;
        }
        std::string seq;
        if (percent(rng) < 10) {
            std::uniform_int_distribution<unsigned> exp_dist(2, 4);
            const unsigned exp = exp_dist(rng);
            std::uniform_int_distribution<unsigned> root_len(1, std::max(1u, max_len / exp));
            const unsigned rl = root_len(rng);
            std::string root;
            for (unsigned i = 0; i < rl; ++i) root.push_back(alphabet[pick(rng)]);
            for (unsigned e = 0; e < exp; ++e) seq += root;
        } else {
            std::uniform_int_distribution<unsigned> len_dist(1, max_len);
            const unsigned len = len_dist(rng);
            for (unsigned i = 0; i < len; ++i) seq.push_back(alphabet[pick(rng)]);
        }
        out.docs.push_back({"doc" + std::to_string(d), std::move(seq)});
    }
    return out;
}

}  // namespace testutil
