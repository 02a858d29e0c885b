// cli.hpp — command implementations behind the command-line tool. They
// are plain functions over option structs so tests can drive them
// without spawning processes; all user-facing output is key=value lines.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cebwt {

struct BuildOptions {
    std::string input;        // FASTA path
    std::string output_base;  // defaults to input path
    std::uint32_t w = 10;
    std::uint64_t p = 100;
    std::string mode = "auto";  // pfp | direct | auto
    // Comma-separated explicit trigger strings (each of length w);
    // replaces the hash-based trigger selection.
    std::optional<std::string> triggers;
    bool samples = false;
    bool rle = false;
    bool keep_parse = false;
    bool no_upper = false;   // disable uppercase folding
    bool no_iupac = false;   // disable mapping of degenerate codes to N
    std::optional<double> max_n_frac;
    unsigned threads = 0;    // 0 = all hardware threads
};

struct InvertOptions {
    std::string ebwt_path;
    std::string index_path;  // defaults to ebwt_path with .I extension
    std::string output;      // FASTA path; "-" = stdout
};

struct CheckOptions {
    std::string input;  // FASTA path
    std::uint64_t limit = 10000;
    std::uint32_t w = 10;
    std::uint64_t p = 100;
    std::optional<std::string> triggers;
};

struct StatsOptions {
    std::string input;  // FASTA (built in auto mode) or raw transform file
    std::uint32_t w = 10;
    std::uint64_t p = 100;
};

// Each returns a process exit code: 0 on success, 1 on failure (with a
// message on `err`).
int run_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int run_invert(const InvertOptions& opts, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int run_stats(const StatsOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace cebwt
