// test_oracle.cpp — the brute-force reference itself, pinned against
// hand-worked values and a second, independent reference for the
// single-string case.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cebwt/oracle.hpp"
#include "cebwt/strings.hpp"
#include "testutil.hpp"

using namespace cebwt;

// Full 21-row conjugate array of {GTACAACG, CGGCACACACGT, C}.
static const Gca kExample1Gca = {
    {5, 1}, {3, 1}, {5, 2},  {7, 2}, {6, 1}, {9, 2}, {4, 1},
    {4, 2}, {6, 2}, {8, 2},  {1, 3}, {1, 2}, {7, 1}, {10, 2},
    {3, 2}, {2, 2}, {8, 1},  {1, 1}, {11, 2}, {2, 1}, {12, 2},
};

TEST_CASE("conjugate array of the three-document example, all 21 rows") {
    const auto gca = oracle_gca(testutil::example1());
    REQUIRE(gca.size() == 21);
    CHECK_MESSAGE(gca == kExample1Gca, testutil::gca_to_string(gca));
}

TEST_CASE("transform and index set of the three-document example") {
    const auto res = oracle_ebwt(testutil::example1());
    CHECK(res.bwt == "CTCCACAGAACTAAGCCGCGG");
    CHECK(res.index_set == std::vector<std::uint64_t>{11, 12, 18});
}

TEST_CASE("non-primitive documents collapse to the same transform with different index sets") {
    const auto a = oracle_ebwt(testutil::coll({"ATA", "TATA"}));
    CHECK(a.bwt == "TATTAAA");
    CHECK(a.index_set == std::vector<std::uint64_t>{2, 6});

    const auto b = oracle_ebwt(testutil::coll({"ATA", "TA", "TA"}));
    CHECK(b.bwt == "TATTAAA");
    CHECK(b.index_set == std::vector<std::uint64_t>{2, 6, 7});
}

TEST_CASE("duplicate documents tie by document index") {
    const auto gca = oracle_gca(testutil::coll({"AB", "AB"}));
    CHECK(gca == Gca{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    const auto res = oracle_ebwt(testutil::coll({"AB", "AB"}));
    CHECK(res.bwt == "BBAA");
    CHECK(res.index_set == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("single-character documents order by input position among equals") {
    const auto gca = oracle_gca(testutil::coll({"B", "A", "A"}));
    CHECK(gca == Gca{{1, 2}, {1, 3}, {1, 1}});
    const auto res = oracle_ebwt(testutil::coll({"B", "A", "A"}));
    CHECK(res.bwt == "AAB");
    CHECK(res.index_set == std::vector<std::uint64_t>{1, 2, 3});
}

namespace {

// Second, independent reference for one primitive string: materialize all
// rotations and sort them lexicographically (for equal lengths the omega
// order coincides with plain lexicographic order of the rotations;
// rotations of a primitive string are pairwise distinct).
std::vector<std::uint32_t> rotation_sort(const std::string& t) {
    std::vector<std::uint32_t> order(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) order[i] = i + 1;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return conjugate(t, a) < conjugate(t, b);
    });
    return order;
}

}  // namespace

TEST_CASE("single primitive strings: oracle equals lexicographic rotation sort") {
    std::mt19937_64 rng(23);
    const char* alpha = "ab";
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<unsigned> len_dist(1, 20);
        std::string t;
        for (unsigned i = len_dist(rng); i-- > 0;) t.push_back(alpha[rng() % 2]);
        if (root_and_exponent(t).exponent != 1) continue;  // want primitive only
        ++done;
        const auto gca = oracle_gca(testutil::coll({t}));
        const auto order = rotation_sort(t);
        REQUIRE(gca.size() == order.size());
        for (std::size_t r = 0; r < order.size(); ++r) {
            REQUIRE(gca[r].doc == 1);
            REQUIRE(gca[r].pos == order[r]);
        }
    }
}

TEST_CASE("banana against the rotation sort") {
    const auto gca = oracle_gca(testutil::coll({"banana"}));
    CHECK(gca == Gca{{6, 1}, {4, 1}, {2, 1}, {1, 1}, {5, 1}, {3, 1}});
    const auto res = oracle_ebwt(testutil::coll({"banana"}));
    CHECK(res.bwt == "nnbaaa");
    CHECK(res.index_set == std::vector<std::uint64_t>{4});
}
