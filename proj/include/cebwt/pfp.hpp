// pfp.hpp — cyclic prefix-free parsing. Each document is factored at
// trigger positions (length-w windows whose Karp-Rabin residue falls in a
// chosen remainder set, or that match an explicit trigger set) into
// phrases that overlap by w characters. The window is cyclic, so the last
// phrase of a document wraps around to its first trigger and no padding
// characters are introduced. Consecutive distinct proper phrase suffixes
// longer than w form a prefix-free set, which is what the merge step
// exploits.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cebwt/types.hpp"

namespace cebwt {

struct TriggerConfig {
    std::uint32_t w = 10;     // window length
    std::uint64_t p = 100;    // residue modulus
    std::vector<std::uint64_t> remainders = {0};  // residues that trigger
    // When set, a window triggers iff it equals one of these strings
    // (each of length w) and the hash is not consulted.
    std::optional<std::vector<std::string>> explicit_triggers;
    unsigned threads = 1;     // documents parsed in parallel; output identical
};

// Karp-Rabin residue of a window: the base-256 fingerprint modulo
// 2^61 - 1, reduced modulo p.
std::uint64_t kr_window_hash(std::string_view window, std::uint64_t p);

// Grows the remainder set {0} until every document has at least one
// trigger: documents are scanned in order, and a document none of whose
// cyclic windows triggers yet contributes the residue of its last window
// (the one starting at its final position).
std::vector<std::uint64_t> select_remainders(const SeqCollection& coll,
                                             std::uint32_t w, std::uint64_t p);

struct PfpOutput {
    std::vector<std::string> dict;  // distinct phrases, lexicographic, ranks 1-based
    std::vector<std::vector<std::uint32_t>> parses;  // per document: phrase ranks
    // Where character 1 of each document lives: the 1-based index of the
    // phrase occurrence within the document's parse, and the 1-based
    // offset of the character inside that phrase.
    struct StartMark {
        std::uint32_t parse_index = 0;
        std::uint32_t offset = 0;
    };
    std::vector<StartMark> start_marks;
    // Per document: the trigger positions t_1 < ... < t_q (1-based); the
    // r-th phrase occurrence begins at t_r.
    std::vector<std::vector<std::uint32_t>> phrase_starts;
    std::uint32_t w = 0;
};

// Parses every document. Throws std::invalid_argument when a document is
// shorter than w or has no trigger under the given configuration.
PfpOutput parse_collection(const SeqCollection& coll, const TriggerConfig& config);

// Reassembles document d from its parse (inverse of parse_collection).
std::string deparse_doc(const PfpOutput& pfp, std::size_t d);

struct SuffixGroup {
    std::string suffix;
    // (phrase rank, 1-based offset of the suffix inside that phrase),
    // ascending by rank; at most one entry per rank.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sources;
    bool full_phrase = false;  // the group is a whole phrase (offset 1)
};

// All distinct phrase suffixes longer than w, including the phrases
// themselves, in lexicographic order. A whole phrase is never a proper
// suffix of another phrase, so full-phrase groups have a single source.
std::vector<SuffixGroup> suffix_set(const std::vector<std::string>& dict,
                                    std::uint32_t w);

}  // namespace cebwt
