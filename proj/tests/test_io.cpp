// test_io.cpp — FASTA parsing and normalization, inversion, run-length
// encoding, and on-disk round-trips.

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cebwt/csais.hpp"
#include "cebwt/io.hpp"
#include "cebwt/oracle.hpp"
#include "cebwt/pfp.hpp"
#include "testutil.hpp"

using namespace cebwt;

namespace {

std::vector<std::string> seqs_of(const SeqCollection& c) {
    std::vector<std::string> out;
    for (const auto& d : c.docs) out.push_back(d.seq);
    return out;
}

std::vector<std::string> ids_of(const SeqCollection& c) {
    std::vector<std::string> out;
    for (const auto& d : c.docs) out.push_back(d.id);
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            auto p = base / ("cebwt-test-" + std::to_string(::getpid()) + "-" +
                             std::to_string(i));
            if (std::filesystem::create_directory(p)) {
                path = p;
                break;
            }
        }
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("fasta parsing with normalization") {
    std::istringstream in(
        ">seq1 first record\n"
        "acgRt\n"
        ">seq2\r\n"
        "AC\r\n"
        "GT\n");
    const auto c = read_fasta(in);
    CHECK(ids_of(c) == std::vector<std::string>{"seq1", "seq2"});
    CHECK(seqs_of(c) == std::vector<std::string>{"ACGNT", "ACGT"});
}

TEST_CASE("fasta normalization can be switched off") {
    std::istringstream in(">s\nacgRt\n");
    FastaOptions opts;
    opts.to_upper = false;
    opts.iupac_to_n = false;
    const auto c = read_fasta(in, opts);
    CHECK(c.docs[0].seq == "acgRt");

    std::istringstream in2(">s\nacgrt\n");
    FastaOptions opts2;
    opts2.to_upper = false;  // lowercase kept, but r is still not a base
    const auto c2 = read_fasta(in2, opts2);
    CHECK(c2.docs[0].seq == "acgnt");
}

TEST_CASE("records beyond the N threshold are dropped with a warning") {
    std::istringstream in(
        ">ok\nACGT\n"
        ">mostly_n\nNNNNNNNNNA\n");
    FastaOptions opts;
    opts.max_n_frac = 0.5;
    std::vector<std::string> warnings;
    const auto c = read_fasta(in, opts, &warnings);
    CHECK(ids_of(c) == std::vector<std::string>{"ok"});
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("mostly_n") != std::string::npos);

    // At threshold 0.95 the record stays (0.9 <= 0.95).
    std::istringstream in2(">mostly_n\nNNNNNNNNNA\n");
    FastaOptions opts2;
    opts2.max_n_frac = 0.95;
    const auto c2 = read_fasta(in2, opts2);
    CHECK(c2.size() == 1);
}

TEST_CASE("malformed fasta is rejected") {
    std::istringstream no_header("ACGT\n");
    CHECK_THROWS_AS(read_fasta(no_header), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_fasta(empty), std::invalid_argument);
    std::istringstream empty_record(">a\n>b\nACGT\n");
    CHECK_THROWS_AS(read_fasta(empty_record), std::invalid_argument);
    std::istringstream digits(">a\nAC4T\n");
    CHECK_THROWS_AS(read_fasta(digits), std::invalid_argument);
}

TEST_CASE("fasta writing round-trips") {
    SeqCollection c;
    c.docs.push_back({"alpha", std::string(130, 'A') + "CGT"});
    c.docs.push_back({"beta", "ACGT"});
    std::ostringstream out;
    write_fasta(out, c, 60);
    std::istringstream in(out.str());
    const auto back = read_fasta(in);
    CHECK(ids_of(back) == ids_of(c));
    CHECK(seqs_of(back) == seqs_of(c));
    // 133 characters at width 60 -> three sequence lines.
    CHECK(out.str().find(">alpha\n") == 0);
}

TEST_CASE("inverting known transforms") {
    // Two documents sharing one root: TATTAAA with marks {2,6} is the
    // multiset {ATA, TATA}; with marks {2,6,7} it is {ATA, TA, TA}.
    const auto two = invert_ebwt({"TATTAAA", {2, 6}, std::nullopt});
    CHECK(testutil::sorted_seqs(two) == std::vector<std::string>{"ATA", "TATA"});
    const auto three = invert_ebwt({"TATTAAA", {2, 6, 7}, std::nullopt});
    CHECK(testutil::sorted_seqs(three) == std::vector<std::string>{"ATA", "TA", "TA"});
    CHECK(ids_of(three) == std::vector<std::string>{"seq1", "seq2", "seq3"});

    const auto ex1 = invert_ebwt({"CTCCACAGAACTAAGCCGCGG", {11, 12, 18}, std::nullopt});
    CHECK(testutil::sorted_seqs(ex1) ==
          std::vector<std::string>{"C", "CGGCACACACGT", "GTACAACG"});

    const auto aa = invert_ebwt({"AA", {1}, std::nullopt});
    CHECK(testutil::sorted_seqs(aa) == std::vector<std::string>{"AA"});
}

TEST_CASE("inversion rejects impossible inputs") {
    CHECK_THROWS_AS(invert_ebwt({"", {1}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(invert_ebwt({"AB", {}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(invert_ebwt({"AB", {3}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(invert_ebwt({"AB", {2, 1}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(invert_ebwt({"AB", {1, 1}, std::nullopt}), std::invalid_argument);
    // Ranks 2 and 5 of TATTAAA lie on the same conjugacy cycle.
    CHECK_THROWS_AS(invert_ebwt({"TATTAAA", {2, 5}, std::nullopt}), std::invalid_argument);
}

TEST_CASE("inversion round-trips random collections") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 300; ++it) {
        const auto coll = testutil::random_collection(rng, 6, 24);
        const auto r = oracle_ebwt(coll);
        const auto back = invert_ebwt(r);
        REQUIRE_MESSAGE(testutil::same_multiset(back, coll), "iteration " << it);
    }
}

TEST_CASE("run-length encoding") {
    const auto e = run_length_encode("TATTAAA");
    CHECK(e.n == 7);
    CHECK(e.runs == std::vector<RleRun>{{'T', 1}, {'A', 1}, {'T', 2}, {'A', 3}});
    CHECK(e.ratio() == doctest::Approx(7.0 / 4.0));

    const auto b = run_length_encode("nnbaaa");
    CHECK(b.runs == std::vector<RleRun>{{'n', 2}, {'b', 1}, {'a', 3}});

    const auto z = run_length_encode("");
    CHECK(z.n == 0);
    CHECK(z.runs.empty());
    CHECK(z.ratio() == 0.0);
}

TEST_CASE("transform files round-trip") {
    TempDir tmp;
    const auto result = ebwt(testutil::example1(), true);
    OutputOptions opts;
    opts.rle = true;
    opts.samples = true;
    const auto base = tmp.file("ex1");
    const auto paths = write_outputs(result, base, opts);
    CHECK(paths == std::vector<std::string>{base + ".ebwt", base + ".I", base + ".rle",
                                            base + ".ssa", base + ".esa"});

    CHECK(read_bytes(base + ".ebwt") == result.bwt);
    CHECK(read_bytes(base + ".I") == "11\n12\n18\n");
    CHECK(read_index_file(base + ".I") == result.index_set);
    const auto rle = read_rle_file(base + ".rle");
    CHECK(rle.runs == run_length_encode(result.bwt).runs);
    CHECK(rle.n == result.bwt.size());

    REQUIRE(result.samples.has_value());
    std::vector<GcaSample> heads, tails;
    for (std::size_t i = 0; i < result.samples->size(); i += 2) {
        heads.push_back((*result.samples)[i]);
        tails.push_back((*result.samples)[i + 1]);
    }
    CHECK(read_sample_file(base + ".ssa") == heads);
    CHECK(read_sample_file(base + ".esa") == tails);
}

TEST_CASE("default output is just the transform and the index set") {
    TempDir tmp;
    const auto base = tmp.file("plain");
    const auto paths = write_outputs({"AA", {1}, std::nullopt}, base);
    CHECK(paths == std::vector<std::string>{base + ".ebwt", base + ".I"});
    CHECK(!std::filesystem::exists(base + ".rle"));
    CHECK(!std::filesystem::exists(base + ".ssa"));
}

TEST_CASE("sample output without samples is rejected") {
    TempDir tmp;
    OutputOptions opts;
    opts.samples = true;
    CHECK_THROWS_AS(write_outputs({"AA", {1}, std::nullopt}, tmp.file("x"), opts),
                    std::invalid_argument);
}

TEST_CASE("parse dump files") {
    TempDir tmp;
    TriggerConfig cfg;
    cfg.w = 2;
    cfg.explicit_triggers = std::vector<std::string>{"AC", "GC"};
    const auto pfp = parse_collection(testutil::example3(), cfg);
    const auto base = tmp.file("ex3");
    const auto paths = write_parse_dump(pfp, base);
    CHECK(paths == std::vector<std::string>{base + ".dict", base + ".parse",
                                            base + ".starts"});
    // The dictionary file holds the five phrases, sorted, length-prefixed.
    const auto dict_bytes = read_bytes(base + ".dict");
    std::string expected;
    for (const auto& phrase : pfp.dict) {
        std::uint64_t len = phrase.size();
        for (int b = 0; b < 8; ++b)
            expected += char((len >> (8 * b)) & 0xff);
        expected += phrase;
    }
    CHECK(dict_bytes == expected);
    CHECK(std::filesystem::file_size(base + ".parse") ==
          8 + 3 * 8 + 4 * (2 + 3 + 2));
    CHECK(std::filesystem::file_size(base + ".starts") == 8 + 3 * 24);
}

TEST_CASE("readers reject missing files") {
    TempDir tmp;
    CHECK_THROWS_AS(read_bytes(tmp.file("absent.ebwt")), std::runtime_error);
    CHECK_THROWS_AS(read_index_file(tmp.file("absent.I")), std::runtime_error);
}
