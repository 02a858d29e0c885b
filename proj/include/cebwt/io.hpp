// io.hpp — FASTA ingestion, transform (de)serialization, run-length
// encoding, and eBWT inversion.
//
// File formats (all integers little-endian):
//   <base>.ebwt   raw transform bytes
//   <base>.I      newline-separated decimal 1-based index-set positions
//   <base>.rle    per run: 1 byte + u64 run length
//   <base>.ssa    per run head: u64 transform position (1-based), u64
//                 conjugate position, u64 document (both 1-based)
//   <base>.esa    same records for run tails
//   <base>.dict   per phrase, sorted: u64 length + raw bytes
//   <base>.parse  u64 document count, then per document: u64 phrase
//                 count + u32 phrase ranks (1-based)
//   <base>.starts u64 document count, then per document: u64 document
//                 number, u64 parse index, u64 offset (the start marks)
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cebwt/pfp.hpp"
#include "cebwt/types.hpp"

namespace cebwt {

struct FastaOptions {
    bool to_upper = true;      // fold sequence to uppercase
    bool iupac_to_n = true;    // map letters outside ACGTN to N
    // When set, drop records whose fraction of N exceeds this value
    // (a warning is recorded for each dropped record).
    std::optional<double> max_n_frac;
};

// Reads FASTA records in file order. Throws std::invalid_argument on a
// malformed or empty file or an empty record; non-letter sequence
// characters are rejected. Dropped-record notices go to `warnings`.
SeqCollection read_fasta(std::istream& in, const FastaOptions& opts = {},
                         std::vector<std::string>* warnings = nullptr);
SeqCollection read_fasta_file(const std::string& path, const FastaOptions& opts = {},
                              std::vector<std::string>* warnings = nullptr);

void write_fasta(std::ostream& out, const SeqCollection& coll,
                 std::size_t line_width = 60);
void write_fasta_file(const std::string& path, const SeqCollection& coll,
                      std::size_t line_width = 60);

// Rebuilds the document multiset from (bwt, index_set): decomposes the
// stable first-column-to-last-column permutation into cycles, walks one
// document from each index-set position (ascending), and attributes each
// remaining cycle to the document owning the cycle of the rank just
// before its smallest member (such cycles arise exactly when a document
// is a power of the recovered root). Output order is ascending index-set
// order; ids are synthetic. Throws std::invalid_argument on input that
// cannot be a transform (out-of-range or duplicate indices, two indices
// in one cycle, inconsistent cycle lengths).
SeqCollection invert_ebwt(const EbwtResult& result);

struct RleRun {
    unsigned char byte = 0;
    std::uint64_t length = 0;
    bool operator==(const RleRun&) const = default;
};

struct RleEbwt {
    std::vector<RleRun> runs;  // maximal runs, adjacent bytes distinct
    std::uint64_t n = 0;       // total length
    std::uint64_t r() const { return runs.size(); }
    double ratio() const { return runs.empty() ? 0.0 : double(n) / double(runs.size()); }
};

RleEbwt run_length_encode(std::string_view bwt);

struct OutputOptions {
    bool rle = false;
    bool samples = false;  // requires result.samples to be present
};

// Writes <base>.ebwt and <base>.I, plus .rle and .ssa/.esa when asked.
// Returns the list of paths written. Throws std::runtime_error on I/O
// failure.
std::vector<std::string> write_outputs(const EbwtResult& result,
                                       const std::string& base,
                                       const OutputOptions& opts = {});

// Writes <base>.dict, <base>.parse, <base>.starts.
std::vector<std::string> write_parse_dump(const PfpOutput& pfp,
                                          const std::string& base);

std::string read_bytes(const std::string& path);
std::vector<std::uint64_t> read_index_file(const std::string& path);
RleEbwt read_rle_file(const std::string& path);
std::vector<GcaSample> read_sample_file(const std::string& path);

}  // namespace cebwt
