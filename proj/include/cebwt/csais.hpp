// csais.hpp — linear-time eBWT construction via induced sorting of
// conjugates. Works directly on the cyclic strings: no end-of-string
// sentinels are appended and no Lyndon-rotation preprocessing is done.
//
// The pipeline for a collection of primitive documents is
//   1. strip length-1 documents,
//   2. classify every position cyclically as L or S and mark LMS positions,
//   3. induce an order sorted by LMS prefix from text-order seeds,
//   4. name the LMS substrings by rank,
//   5. if names repeat, recurse on the reduced collection (size <= N/2),
//   6. induce the final conjugate array from the sorted LMS positions and
//      splice each length-1 document with symbol c between the L-run and
//      S-run of bucket c (ties in input order).
// Non-primitive documents are handled one level up (ebwt) by reducing each
// document to its primitive root and expanding the resulting array.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cebwt/types.hpp"

namespace cebwt {

enum class PosType : std::uint8_t { L, S };

// Cyclic L/S classification of one document. Position i (0-based) is S
// when the conjugate starting at i precedes the conjugate starting at
// i+1 (cyclically), L when it follows it; lms[i] marks S positions whose
// cyclic predecessor is L.
struct TypeArray {
    std::vector<PosType> types;
    std::vector<bool> lms;
};

// Classifies a single primitive document of length >= 2. Finds one anchor
// with t[i] != t[i+1] and resolves the rest in a single right-to-left
// cyclic pass (at most 2|t| steps). Throws std::invalid_argument when
// |t| < 2 or no adjacent mismatch exists (a repeated single symbol, which
// cannot be primitive).
TypeArray assign_types(std::string_view t);

// One three-pass induced sort over the whole collection (all documents of
// length >= 2 and primitive): seeds are placed at the tails of their
// first-symbol buckets so that their list order becomes the ascending
// slot order, then an ascending pass induces L predecessors at bucket
// heads and a descending pass induces S predecessors at bucket tails,
// overwriting the seeds. Returns the full workspace (a permutation of all
// conjugates). Ties between equal LMS prefixes follow seed order.
// Throws when a seed is not an LMS position.
Gca induced_sort(const SeqCollection& coll, const std::vector<GcaEntry>& seeds);

struct LmsNaming {
    // Per document: LMS positions, 1-based, in ascending text order.
    std::vector<std::vector<std::uint32_t>> lms_positions;
    // Per document: the name (rank) of the LMS substring starting at each
    // LMS position, in the same order. These are the reduced strings.
    std::vector<std::vector<std::uint32_t>> reduced;
    std::uint32_t name_count = 0;
    bool all_distinct = false;
};

// Names the LMS substrings (factor from one LMS position to the next,
// cyclically, inclusive of the terminal LMS position) by their rank in
// `lms_sorted`, which must be the induced_sort output seeded in text
// order. Equal substrings receive equal names.
LmsNaming name_lms_substrings(const SeqCollection& coll, const Gca& lms_sorted);

// Full conjugate-array construction for a collection of primitive
// documents (any lengths >= 1). Returns the GCA and the 1-based ranks of
// the (1, d) entries, ascending. Throws std::invalid_argument when a
// document is not primitive. Empty collection yields empty results.
std::pair<Gca, std::vector<std::uint64_t>> sais_gca(const SeqCollection& coll);

// eBWT of an arbitrary collection (documents need not be primitive):
// reduces each document to its primitive root, sorts the roots, and
// expands the array back before reading off the transform.
EbwtResult ebwt(const SeqCollection& coll, bool with_samples = false);

// BWT of a single string: the eBWT of {t} plus the rank of conjugate 1.
std::pair<std::string, std::uint64_t> bwt_single(std::string_view t);

// The same engine over integer alphabets (used for parse multisets).
// Documents must be non-empty, primitive, with symbols < sigma.
std::vector<GcaEntry> cyclic_gca(const std::vector<std::vector<std::uint32_t>>& docs,
                                 std::uint32_t sigma);

}  // namespace cebwt
