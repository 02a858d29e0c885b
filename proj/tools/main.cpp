// main.cpp — command-line front end: build, invert, check, stats.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cebwt/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"eBWT of string collections via cyclic induced sorting "
                 "and prefix-free parsing"};
    app.require_subcommand(1);

    cebwt::BuildOptions build;
    double build_max_n = -1.0;
    std::string build_triggers;
    CLI::App* cb = app.add_subcommand("build", "compute the transform of a FASTA file");
    cb->add_option("input", build.input, "input FASTA")->required();
    cb->add_option("-o,--output", build.output_base,
                   "output base path (default: input path)");
    cb->add_option("-w", build.w, "trigger window length")->check(CLI::Range(2u, 1u << 20));
    cb->add_option("-p", build.p, "hash residue modulus")->check(CLI::PositiveNumber);
    cb->add_option("-m,--mode", build.mode, "pfp | direct | auto")
        ->check(CLI::IsMember({"pfp", "direct", "auto"}));
    cb->add_option("--triggers", build_triggers,
                   "comma-separated explicit trigger strings of length w");
    cb->add_flag("--samples", build.samples, "write run-boundary samples (.ssa/.esa)");
    cb->add_flag("--rle", build.rle, "write run-length encoding (.rle)");
    cb->add_flag("--keep-parse", build.keep_parse, "write .dict/.parse/.starts");
    cb->add_flag("--no-upper", build.no_upper, "keep sequence case");
    cb->add_flag("--no-iupac", build.no_iupac, "keep degenerate codes");
    cb->add_option("--max-n-frac", build_max_n, "drop records with N fraction above this");
    cb->add_option("--threads", build.threads, "parser threads (0 = all cores)");

    cebwt::InvertOptions invert;
    CLI::App* ci = app.add_subcommand("invert", "rebuild the FASTA from .ebwt + .I");
    ci->add_option("ebwt", invert.ebwt_path, "transform file")->required();
    ci->add_option("-I,--index", invert.index_path, "index file (default: <ebwt>.I)");
    ci->add_option("-o,--output", invert.output, "output FASTA (- = stdout)");

    cebwt::CheckOptions check;
    std::string check_triggers;
    CLI::App* cc = app.add_subcommand("check", "compare both paths against a brute-force reference");
    cc->add_option("input", check.input, "input FASTA")->required();
    cc->add_option("--limit", check.limit, "maximum total input length");
    cc->add_option("-w", check.w, "trigger window length")->check(CLI::Range(2u, 1u << 20));
    cc->add_option("-p", check.p, "hash residue modulus")->check(CLI::PositiveNumber);
    cc->add_option("--triggers", check_triggers, "explicit trigger strings");

    cebwt::StatsOptions stats;
    CLI::App* cs = app.add_subcommand("stats", "run statistics of a transform or FASTA");
    cs->add_option("input", stats.input, "transform file or FASTA")->required();
    cs->add_option("-w", stats.w, "trigger window length")->check(CLI::Range(2u, 1u << 20));
    cs->add_option("-p", stats.p, "hash residue modulus")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (cb->parsed()) {
        if (!build_triggers.empty()) build.triggers = build_triggers;
        if (build_max_n >= 0.0) build.max_n_frac = build_max_n;
        return cebwt::run_build(build, std::cout, std::cerr);
    }
    if (ci->parsed()) return cebwt::run_invert(invert, std::cout, std::cerr);
    if (cc->parsed()) {
        if (!check_triggers.empty()) check.triggers = check_triggers;
        return cebwt::run_check(check, std::cout, std::cerr);
    }
    if (cs->parsed()) return cebwt::run_stats(stats, std::cout, std::cerr);
    return 1;
}
