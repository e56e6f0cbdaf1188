#include "doctest.h"
#include "oracles.hpp"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/shapes.hpp"

using namespace ribbonroots;

TEST_CASE("partition basics") {
    const Partition p{4, 2, 2, 0};
    CHECK(p.length() == 3);
    CHECK(p.size() == 8);
    CHECK(p.row(1) == 4);
    CHECK(p.row(4) == 0);
    CHECK(p.column(1) == 3);
    CHECK(p.column(3) == 1);
    CHECK(p.column(5) == 0);
    CHECK(p.contains(Cell{3, 2}));
    CHECK_FALSE(p.contains(Cell{3, 3}));
    CHECK(p.contains(Partition{3, 2}));
    CHECK_FALSE(p.contains(Partition{3, 3}));
    CHECK(p.cells().size() == 8);
    CHECK(to_string(p) == "(4,2,2)");
}

TEST_CASE("malformed partitions are rejected") {
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
    CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{3}), DomainError);
}

TEST_CASE("partition counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
    CHECK(nonempty_subsets(7).size() == 127);
}

TEST_CASE("conjugate and hooks agree with direct counting") {
    for (int n = 1; n <= 9; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            for (const Cell& c : p.cells()) CHECK(hook_length(p, c) == oracle::hook(p, c));
        }
    CHECK_THROWS_AS(hook_length(Partition{2, 1}, Cell{2, 2}), DomainError);
}

TEST_CASE("ribbon of {3,5}") {
    const SkewShape s = ribbon_from_descent_set({3, 5});
    CHECK(s.outer() == Partition{4, 4, 3});
    CHECK(s.inner() == Partition{3, 2});
    CHECK(s.is_ribbon());
    CHECK(alpha_vector(s.outer()) == std::vector<int>{5, 4, 3, 1});
    CHECK(hook_multiset_below_first_row(s.outer()) == std::vector<int>{5, 4, 3, 1, 3, 2, 1});
    CHECK(to_string(s) == "(4,4,3)/(3,2)");
}

TEST_CASE("ribbon standard fillings match permutations with the descent set") {
    for (const DescentSet& I : nonempty_subsets(6)) {
        const SkewShape s = ribbon_from_descent_set(I);
        CHECK(s.size() == I.max() + 1);
        CHECK(s.is_ribbon());
        CHECK(s.outer().row(1) == s.outer().row(2));
        CHECK(oracle::syt_backtrack(s) == oracle::permutations_with_descents(I.elements(), I.max() + 1));
    }
}

TEST_CASE("alpha vector and first-row extension") {
    CHECK(alpha_vector(Partition{3, 3}) == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(alpha_vector(Partition()), DomainError);
    CHECK(extend_first_row(Partition{4, 4, 3}, 1) == Partition{4, 4, 3});
    CHECK(extend_first_row(Partition{4, 4, 3}, 3) == Partition{6, 4, 3});
    CHECK_THROWS_AS(extend_first_row(Partition{2}, 0), DomainError);
}

TEST_CASE("connectivity") {
    CHECK(SkewShape(Partition{3, 3, 3}, Partition{2, 2}).is_connected());
    CHECK_FALSE(SkewShape(Partition{2, 1}, Partition{1}).is_connected());
    CHECK(SkewShape(Partition{3, 3, 3}, Partition{2, 2}).is_ribbon());
    CHECK_FALSE(SkewShape(Partition{3, 3}, Partition{1}).is_ribbon());
}
