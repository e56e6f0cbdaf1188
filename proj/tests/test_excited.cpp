#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/excited.hpp"
#include "ribbonroots/verify.hpp"

using namespace ribbonroots;

TEST_CASE("the six excited diagrams of (3,3,3)/(2,2)") {
    const SkewShape s{Partition{3, 3, 3}, Partition{2, 2}};
    const auto diagrams = enumerate_excited(s);
    REQUIRE(diagrams.size() == 6);
    CHECK(diagrams.front().cells == s.inner().cells());
    std::vector<BigInt> w;
    for (const auto& d : diagrams) w.push_back(diagram_weight(d, s.outer()));
    std::sort(w.rbegin(), w.rend());
    CHECK(w == std::vector<BigInt>{240, 80, 40, 40, 20, 12});
    CHECK(naruse_count(s).value == 6);
    CHECK(brute_force_count(s).value == 6);
}

TEST_CASE("move closure equals the literal definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const SkewShape s = random_skew_shape(rng, 4, 4, 12);
        const auto got = enumerate_excited(s);
        std::set<std::vector<Cell>> mine;
        for (const auto& d : got) {
            CHECK(is_excited_diagram(d.cells, s));
            mine.insert(d.cells);
        }
        CHECK(mine.size() == got.size());
        CHECK(mine == oracle::excited_by_definition(s));
    }
}

TEST_CASE("non-excited diagrams are rejected") {
    const SkewShape s{Partition{3, 3, 3}, Partition{2, 2}};
    CHECK_FALSE(is_excited_diagram(std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}, {3, 2}}, s));
    CHECK_FALSE(is_excited_diagram(std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}}, s));
}

TEST_CASE("Naruse formula matches independent SYT counts") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const SkewShape s = random_skew_shape(rng, 4, 5, 9);
        const BigInt expected = oracle::syt_backtrack(s);
        CHECK(naruse_count(s).value == expected);
        CHECK(brute_force_count(s).value == expected);
    }
}

TEST_CASE("hook length formula on straight shapes") {
    CHECK(frt_count(Partition{3, 2}).value == 5);
    CHECK(frt_count(Partition{4, 4, 3}).value == 462);
    for (int n = 1; n <= 7; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(frt_count(p).value == oracle::syt_backtrack(SkewShape(p, Partition())));
}

TEST_CASE("brute force respects its budget") {
    CHECK_THROWS_AS(brute_force_count(SkewShape(Partition{6, 6, 6, 6}, Partition()), 20), ResourceError);
    CHECK(brute_force_count(SkewShape(Partition{6, 6, 6, 6}, Partition()), 24).value ==
          frt_count(Partition{6, 6, 6, 6}).value);
}
