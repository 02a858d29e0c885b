// pfp_merge.hpp — assembling the eBWT of a collection from its
// prefix-free parse. The parse strings are themselves a multiset of
// cyclic strings over the phrase-rank alphabet; their conjugate array
// orders every "context" (what follows a phrase occurrence). The final
// transform is then emitted one phrase-suffix group at a time, in
// lexicographic order of the suffixes: within a group the entries are
// ranked by their following context, i.e. by parse conjugate-array
// position, so no character of the original collection is ever compared
// again.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cebwt/pfp.hpp"
#include "cebwt/types.hpp"

namespace cebwt {

// The conjugate array and transform of the parse multiset.
struct ParseEbwt {
    // ebwt_p[p-1] = rank of the phrase cyclically preceding the conjugate
    // at position p of gca_p.
    std::vector<std::uint32_t> ebwt_p;
    // Conjugate array of the parses: (position within parse, document),
    // both 1-based.
    std::vector<GcaEntry> gca_p;
    // occ[d-1] = positions p with ebwt_p[p-1] == d, ascending: the sorted
    // contexts following each occurrence of phrase d.
    std::vector<std::vector<std::uint32_t>> occ;
};

// Builds the parse conjugate array with the same induced-sorting engine
// (reducing non-primitive parses to their roots first).
ParseEbwt ebwt_of_parse(const PfpOutput& pfp);

// The character contributed at parse position p for suffix offset k:
// offset k >= 2 reads inside the phrase occurrence itself, offset 1 (a
// whole phrase) reads the last character owned by the preceding phrase.
char f_char(const ParseEbwt& pe, const std::vector<std::string>& dict,
            std::uint32_t w, std::uint64_t p, std::uint32_t k);

struct MergeOptions {
    bool samples = false;  // record run-boundary conjugate samples
    bool trace = false;    // record per-suffix-group emission blocks
};

// One emitted block (all entries for one phrase-suffix group): the output
// rank where it starts and, per entry, the parse position it came from
// and the character written.
struct BlockTrace {
    std::string suffix;
    std::uint64_t start = 0;
    std::vector<std::pair<std::uint64_t, char>> entries;
};

struct MergeResult {
    EbwtResult result;
    std::vector<BlockTrace> blocks;  // only populated with trace enabled
};

MergeResult merge(const PfpOutput& pfp, const ParseEbwt& pe,
                  const MergeOptions& options = {});

// parse_collection + ebwt_of_parse + merge, returning the transform.
EbwtResult ebwt_via_pfp(const SeqCollection& coll, const TriggerConfig& config,
                        bool with_samples = false);

}  // namespace cebwt
