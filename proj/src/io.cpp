// io.cpp — FASTA ingestion, serialization, RLE, and inversion.

#include "cebwt/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cebwt {
namespace {

void write_u64le(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b.data(), 8);
}

void write_u32le(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b;
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b.data(), 4);
}

std::uint64_t read_u64le(std::istream& in) {
    std::array<unsigned char, 8> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 8))
        throw std::runtime_error("unexpected end of file");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path, bool binary) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

SeqCollection read_fasta(std::istream& in, const FastaOptions& opts,
                         std::vector<std::string>* warnings) {
    SeqCollection coll;
    std::string line;
    bool have_record = false;
    std::string id, seq;
    std::uint64_t n_count = 0;

    const auto flush_record = [&]() {
        if (!have_record) return;
        if (seq.empty())
            throw std::invalid_argument("empty sequence for record '" + id + "'");
        if (opts.max_n_frac &&
            double(n_count) > *opts.max_n_frac * double(seq.size())) {
            if (warnings)
                warnings->push_back("dropped record '" + id +
                                    "': N fraction exceeds threshold");
        } else {
            coll.docs.push_back({id, seq});
        }
        seq.clear();
        n_count = 0;
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush_record();
            have_record = true;
            const std::size_t end = line.find_first_of(" \t", 1);
            id = line.substr(1, end == std::string::npos ? end : end - 1);
            if (id.empty()) id = "unnamed";
            continue;
        }
        if (!have_record)
            throw std::invalid_argument("sequence data before first FASTA header");
        for (char raw : line) {
            unsigned char c = static_cast<unsigned char>(raw);
            if (std::isspace(c)) continue;
            if (!std::isalpha(c))
                throw std::invalid_argument("invalid sequence character in record '" +
                                            id + "'");
            if (opts.to_upper) c = static_cast<unsigned char>(std::toupper(c));
            if (opts.iupac_to_n) {
                const unsigned char u = static_cast<unsigned char>(std::toupper(c));
                if (u != 'A' && u != 'C' && u != 'G' && u != 'T' && u != 'N')
                    c = opts.to_upper ? 'N' : (std::isupper(static_cast<unsigned char>(raw))
                                                   ? 'N'
                                                   : 'n');
            }
            if (std::toupper(c) == 'N') ++n_count;
            seq.push_back(static_cast<char>(c));
        }
    }
    flush_record();
    if (!have_record) throw std::invalid_argument("no FASTA records found");
    return coll;
}

SeqCollection read_fasta_file(const std::string& path, const FastaOptions& opts,
                              std::vector<std::string>* warnings) {
    std::ifstream in = open_in(path, false);
    return read_fasta(in, opts, warnings);
}

void write_fasta(std::ostream& out, const SeqCollection& coll, std::size_t line_width) {
    if (line_width == 0) line_width = 60;
    for (const SeqDoc& d : coll.docs) {
        out << '>' << d.id << '\n';
        for (std::size_t i = 0; i < d.seq.size(); i += line_width)
            out << std::string_view(d.seq).substr(i, line_width) << '\n';
    }
}

void write_fasta_file(const std::string& path, const SeqCollection& coll,
                      std::size_t line_width) {
    std::ofstream out = open_out(path, false);
    write_fasta(out, coll, line_width);
    finish(out, path);
}

SeqCollection invert_ebwt(const EbwtResult& result) {
    const std::string& L = result.bwt;
    const std::size_t n = L.size();
    SeqCollection out;
    if (n == 0) {
        if (!result.index_set.empty())
            throw std::invalid_argument("index set non-empty for empty transform");
        return out;
    }
    if (result.index_set.empty())
        throw std::invalid_argument("index set is empty");
    for (std::size_t i = 0; i < result.index_set.size(); ++i) {
        const std::uint64_t v = result.index_set[i];
        if (v < 1 || v > n) throw std::invalid_argument("index-set position out of range");
        if (i > 0 && result.index_set[i - 1] >= v)
            throw std::invalid_argument("index set not strictly ascending");
    }

    // Stable mapping from each transform position to the rank of the
    // conjugate obtained by prepending its character.
    std::array<std::uint64_t, 256> count{};
    for (unsigned char c : L) ++count[c];
    std::array<std::uint64_t, 256> before{};
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < 256; ++c) {
        before[c] = acc;
        acc += count[c];
    }
    std::vector<std::uint64_t> lf(n);
    std::array<std::uint64_t, 256> seen{};
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = static_cast<unsigned char>(L[i]);
        lf[i] = before[c] + seen[c]++;
    }

    // Cycle decomposition; cycles are numbered by ascending smallest rank.
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> cycle_of(n, kNone);
    std::vector<std::uint64_t> cycle_min, cycle_len;
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle_of[i] != kNone) continue;
        const std::uint32_t cid = static_cast<std::uint32_t>(cycle_min.size());
        cycle_min.push_back(i);
        std::uint64_t len = 0;
        std::size_t j = i;
        do {
            cycle_of[j] = cid;
            j = lf[j];
            ++len;
        } while (j != i);
        cycle_len.push_back(len);
    }

    // Walk one document root from each index-set rank.
    constexpr std::uint64_t kUnowned = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> owner(cycle_min.size(), kUnowned);
    std::vector<std::string> roots;
    std::vector<std::uint64_t> exponents;
    for (const std::uint64_t start : result.index_set) {
        const std::size_t i = start - 1;
        const std::uint32_t cid = cycle_of[i];
        if (owner[cid] != kUnowned)
            throw std::invalid_argument("two index-set positions share one cycle");
        owner[cid] = roots.size();
        std::string root;
        std::size_t j = i;
        do {
            root.push_back(L[j]);
            j = lf[j];
        } while (j != i);
        std::reverse(root.begin(), root.end());
        roots.push_back(std::move(root));
        exponents.push_back(1);
    }

    // Remaining cycles belong to documents that are powers: each one
    // attaches to the document owning the rank just before its smallest
    // member. Ascending cycle numbering guarantees that owner is known.
    for (std::uint32_t cid = 0; cid < cycle_min.size(); ++cid) {
        if (owner[cid] != kUnowned) continue;
        if (cycle_min[cid] == 0)
            throw std::invalid_argument("cycle not reachable from the index set");
        const std::uint32_t prev = cycle_of[cycle_min[cid] - 1];
        if (owner[prev] == kUnowned)
            throw std::invalid_argument("cycle not reachable from the index set");
        const std::uint64_t h = owner[prev];
        if (cycle_len[cid] != roots[h].size())
            throw std::invalid_argument("cycle length inconsistent with document root");
        owner[cid] = h;
        ++exponents[h];
    }

    out.docs.reserve(roots.size());
    for (std::size_t h = 0; h < roots.size(); ++h) {
        std::string doc;
        doc.reserve(roots[h].size() * exponents[h]);
        for (std::uint64_t e = 0; e < exponents[h]; ++e) doc += roots[h];
        out.docs.push_back({"seq" + std::to_string(h + 1), std::move(doc)});
    }
    return out;
}

RleEbwt run_length_encode(std::string_view bwt) {
    RleEbwt rle;
    rle.n = bwt.size();
    std::size_t i = 0;
    while (i < bwt.size()) {
        std::size_t j = i;
        while (j + 1 < bwt.size() && bwt[j + 1] == bwt[i]) ++j;
        rle.runs.push_back({static_cast<unsigned char>(bwt[i]), j - i + 1});
        i = j + 1;
    }
    return rle;
}

std::vector<std::string> write_outputs(const EbwtResult& result,
                                       const std::string& base,
                                       const OutputOptions& opts) {
    std::vector<std::string> written;
    {
        const std::string path = base + ".ebwt";
        std::ofstream out = open_out(path, true);
        out.write(result.bwt.data(), static_cast<std::streamsize>(result.bwt.size()));
        finish(out, path);
        written.push_back(path);
    }
    {
        const std::string path = base + ".I";
        std::ofstream out = open_out(path, false);
        for (std::uint64_t v : result.index_set) out << v << '\n';
        finish(out, path);
        written.push_back(path);
    }
    if (opts.rle) {
        const std::string path = base + ".rle";
        std::ofstream out = open_out(path, true);
        for (const RleRun& run : run_length_encode(result.bwt).runs) {
            out.put(static_cast<char>(run.byte));
            write_u64le(out, run.length);
        }
        finish(out, path);
        written.push_back(path);
    }
    if (opts.samples) {
        if (!result.samples)
            throw std::invalid_argument("sample output requested but none computed");
        const std::string spath = base + ".ssa";
        const std::string epath = base + ".esa";
        std::ofstream sout = open_out(spath, true);
        std::ofstream eout = open_out(epath, true);
        // Samples alternate run head, run tail.
        for (std::size_t i = 0; i < result.samples->size(); ++i) {
            std::ostream& out = (i % 2 == 0) ? sout : eout;
            const GcaSample& s = (*result.samples)[i];
            write_u64le(out, s.bwt_pos);
            write_u64le(out, s.entry.pos);
            write_u64le(out, s.entry.doc);
        }
        finish(sout, spath);
        finish(eout, epath);
        written.push_back(spath);
        written.push_back(epath);
    }
    return written;
}

std::vector<std::string> write_parse_dump(const PfpOutput& pfp,
                                          const std::string& base) {
    std::vector<std::string> written;
    {
        const std::string path = base + ".dict";
        std::ofstream out = open_out(path, true);
        for (const std::string& phrase : pfp.dict) {
            write_u64le(out, phrase.size());
            out.write(phrase.data(), static_cast<std::streamsize>(phrase.size()));
        }
        finish(out, path);
        written.push_back(path);
    }
    {
        const std::string path = base + ".parse";
        std::ofstream out = open_out(path, true);
        write_u64le(out, pfp.parses.size());
        for (const auto& parse : pfp.parses) {
            write_u64le(out, parse.size());
            for (std::uint32_t r : parse) write_u32le(out, r);
        }
        finish(out, path);
        written.push_back(path);
    }
    {
        const std::string path = base + ".starts";
        std::ofstream out = open_out(path, true);
        write_u64le(out, pfp.start_marks.size());
        for (std::size_t d = 0; d < pfp.start_marks.size(); ++d) {
            write_u64le(out, d + 1);
            write_u64le(out, pfp.start_marks[d].parse_index);
            write_u64le(out, pfp.start_marks[d].offset);
        }
        finish(out, path);
        written.push_back(path);
    }
    return written;
}

std::string read_bytes(const std::string& path) {
    std::ifstream in = open_in(path, true);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::vector<std::uint64_t> read_index_file(const std::string& path) {
    std::ifstream in = open_in(path, false);
    std::vector<std::uint64_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(std::stoull(line));
    }
    return out;
}

RleEbwt read_rle_file(const std::string& path) {
    std::ifstream in = open_in(path, true);
    RleEbwt rle;
    while (true) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) break;
        const std::uint64_t len = read_u64le(in);
        rle.runs.push_back({static_cast<unsigned char>(c), len});
        rle.n += len;
    }
    return rle;
}

std::vector<GcaSample> read_sample_file(const std::string& path) {
    std::ifstream in = open_in(path, true);
    std::vector<GcaSample> out;
    while (true) {
        if (in.peek() == std::char_traits<char>::eof()) break;
        GcaSample s;
        s.bwt_pos = read_u64le(in);
        s.entry.pos = static_cast<std::uint32_t>(read_u64le(in));
        s.entry.doc = static_cast<std::uint32_t>(read_u64le(in));
        out.push_back(s);
    }
    return out;
}

}  // namespace cebwt
