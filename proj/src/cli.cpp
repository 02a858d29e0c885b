// cli.cpp — build / invert / check / stats command implementations.

#include "cebwt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cebwt/csais.hpp"
#include "cebwt/io.hpp"
#include "cebwt/oracle.hpp"
#include "cebwt/pfp.hpp"
#include "cebwt/pfp_merge.hpp"
#include "cebwt/types.hpp"

namespace cebwt {
namespace {

std::vector<std::string> split_triggers(const std::string& arg, std::uint32_t w) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(arg);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    if (out.empty()) throw std::invalid_argument("empty trigger list");
    for (const std::string& t : out)
        if (t.size() != w)
            throw std::invalid_argument("trigger '" + t + "' length differs from w");
    return out;
}

FastaOptions fasta_options(const BuildOptions& opts) {
    FastaOptions fo;
    fo.to_upper = !opts.no_upper;
    fo.iupac_to_n = !opts.no_iupac;
    fo.max_n_frac = opts.max_n_frac;
    return fo;
}

TriggerConfig trigger_config(std::uint32_t w, std::uint64_t p,
                             const std::optional<std::string>& triggers,
                             unsigned threads, const SeqCollection& coll) {
    TriggerConfig cfg;
    cfg.w = w;
    cfg.p = p;
    cfg.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                               : threads;
    if (triggers)
        cfg.explicit_triggers = split_triggers(*triggers, w);
    else
        cfg.remainders = select_remainders(coll, w, p);
    return cfg;
}

void print_stats_lines(std::ostream& out, const std::string& bwt) {
    const RleEbwt rle = run_length_encode(bwt);
    bool present[256] = {};
    for (unsigned char c : bwt) present[c] = true;
    const int sigma = static_cast<int>(std::count(present, present + 256, true));
    out << "sigma=" << sigma << '\n';
    out << "n=" << rle.n << '\n';
    out << "r=" << rle.r() << '\n';
    out << "ratio=" << std::fixed << std::setprecision(4) << rle.ratio()
        << std::defaultfloat << '\n';
}

int fail(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << '\n';
    return 1;
}

}  // namespace

int run_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.w < 2) throw std::invalid_argument("w must be at least 2");
        if (opts.p < 1) throw std::invalid_argument("p must be at least 1");
        if (opts.mode != "pfp" && opts.mode != "direct" && opts.mode != "auto")
            throw std::invalid_argument("mode must be pfp, direct, or auto");
        const auto t0 = std::chrono::steady_clock::now();

        std::vector<std::string> warnings;
        const SeqCollection coll =
            read_fasta_file(opts.input, fasta_options(opts), &warnings);
        for (const std::string& wmsg : warnings) err << "warning: " << wmsg << '\n';
        if (coll.empty()) throw std::invalid_argument("no usable records in input");

        const bool short_doc = std::any_of(
            coll.docs.begin(), coll.docs.end(),
            [&](const SeqDoc& d) { return d.seq.size() < opts.w; });

        std::string mode = opts.mode;
        if (mode == "auto") mode = short_doc ? "direct" : "pfp";

        EbwtResult result;
        std::optional<PfpOutput> pfp;
        if (mode == "pfp") {
            if (short_doc)
                throw std::invalid_argument("document shorter than window; use direct mode");
            const TriggerConfig cfg =
                trigger_config(opts.w, opts.p, opts.triggers, opts.threads, coll);
            try {
                pfp = parse_collection(coll, cfg);
            } catch (const std::invalid_argument&) {
                if (opts.mode != "auto") throw;
                pfp.reset();
            }
            if (pfp) {
                const ParseEbwt pe = ebwt_of_parse(*pfp);
                result = merge(*pfp, pe, {.samples = opts.samples, .trace = false})
                             .result;
            } else {
                mode = "direct";
            }
        }
        if (mode == "direct") result = ebwt(coll, opts.samples);

        const std::string base =
            opts.output_base.empty() ? opts.input : opts.output_base;
        std::vector<std::string> written = write_outputs(
            result, base, {.rle = opts.rle, .samples = opts.samples});
        if (opts.keep_parse) {
            if (pfp) {
                const auto dumped = write_parse_dump(*pfp, base);
                written.insert(written.end(), dumped.begin(), dumped.end());
            } else if (opts.mode == "auto") {
                err << "warning: no parse to keep (direct path used)\n";
            } else {
                throw std::invalid_argument("--keep-parse requires the pfp path");
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        const double seconds =
            std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0).count();

        const RleEbwt rle = run_length_encode(result.bwt);
        out << "mode=" << mode << '\n';
        out << "m=" << coll.size() << '\n';
        out << "n=" << rle.n << '\n';
        out << "r=" << rle.r() << '\n';
        out << "ratio=" << std::fixed << std::setprecision(4) << rle.ratio()
            << std::defaultfloat << '\n';
        if (pfp) {
            std::uint64_t dict_chars = 0;
            std::size_t max_len = 0;
            for (const std::string& ph : pfp->dict) {
                dict_chars += ph.size();
                max_len = std::max(max_len, ph.size());
            }
            std::uint64_t parse_symbols = 0;
            for (const auto& parse : pfp->parses) parse_symbols += parse.size();
            out << "dict_phrases=" << pfp->dict.size() << '\n';
            out << "dict_chars=" << dict_chars << '\n';
            out << "max_phrase_len=" << max_len << '\n';
            out << "parse_symbols=" << parse_symbols << '\n';
        }
        out << "seconds=" << std::fixed << std::setprecision(3) << seconds
            << std::defaultfloat << '\n';
        for (const std::string& path : written) out << "wrote=" << path << '\n';
        return 0;
    } catch (const std::exception& e) {
        return fail(err, e.what());
    }
}

int run_invert(const InvertOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        EbwtResult result;
        result.bwt = read_bytes(opts.ebwt_path);
        std::string index_path = opts.index_path;
        if (index_path.empty()) {
            index_path = opts.ebwt_path;
            const std::size_t dot = index_path.rfind(".ebwt");
            if (dot != std::string::npos && dot == index_path.size() - 5)
                index_path.resize(dot);
            index_path += ".I";
        }
        result.index_set = read_index_file(index_path);
        const SeqCollection coll = invert_ebwt(result);
        if (opts.output.empty() || opts.output == "-")
            write_fasta(out, coll);
        else
            write_fasta_file(opts.output, coll);
        err << "inverted=" << coll.size() << '\n';
        return 0;
    } catch (const std::exception& e) {
        return fail(err, e.what());
    }
}

int run_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const SeqCollection coll = read_fasta_file(opts.input);
        if (coll.total_length() > opts.limit)
            throw std::invalid_argument("input larger than oracle limit");
        const EbwtResult expect = oracle_ebwt(coll);
        const EbwtResult direct = ebwt(coll);

        bool ok = true;
        const auto compare = [&](const char* path, const EbwtResult& got) {
            if (got.bwt == expect.bwt && got.index_set == expect.index_set) {
                out << path << "=ok\n";
                return;
            }
            ok = false;
            out << path << "=mismatch\n";
            for (std::size_t i = 0; i < std::max(got.bwt.size(), expect.bwt.size()); ++i) {
                const char a = i < expect.bwt.size() ? expect.bwt[i] : '?';
                const char b = i < got.bwt.size() ? got.bwt[i] : '?';
                if (a != b) out << "byte_diff=" << i + 1 << ':' << a << ':' << b << '\n';
            }
            if (got.index_set != expect.index_set) out << "index_diff=1\n";
        };
        compare("direct", direct);

        const bool pfp_ok = std::all_of(
            coll.docs.begin(), coll.docs.end(),
            [&](const SeqDoc& d) { return d.seq.size() >= opts.w; });
        if (pfp_ok) {
            TriggerConfig cfg;
            cfg.w = opts.w;
            cfg.p = opts.p;
            if (opts.triggers)
                cfg.explicit_triggers = split_triggers(*opts.triggers, opts.w);
            else
                cfg.remainders = select_remainders(coll, opts.w, opts.p);
            compare("pfp", ebwt_via_pfp(coll, cfg));
        } else {
            out << "pfp=skipped\n";
        }
        out << (ok ? "check=pass\n" : "check=fail\n");
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        return fail(err, e.what());
    }
}

int run_stats(const StatsOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        std::string bytes = read_bytes(opts.input);
        if (bytes.empty()) throw std::invalid_argument("input is empty");
        if (bytes[0] == '>') {
            // FASTA input: report on its transform.
            const SeqCollection coll = read_fasta_file(opts.input);
            const bool short_doc = std::any_of(
                coll.docs.begin(), coll.docs.end(),
                [&](const SeqDoc& d) { return d.seq.size() < opts.w; });
            EbwtResult result;
            if (short_doc) {
                result = ebwt(coll);
            } else {
                TriggerConfig cfg;
                cfg.w = opts.w;
                cfg.p = opts.p;
                cfg.remainders = select_remainders(coll, opts.w, opts.p);
                result = ebwt_via_pfp(coll, cfg);
            }
            print_stats_lines(out, result.bwt);
        } else {
            print_stats_lines(out, bytes);
        }
        return 0;
    } catch (const std::exception& e) {
        return fail(err, e.what());
    }
}

}  // namespace cebwt
