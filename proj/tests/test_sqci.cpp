#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/sqci.hpp"
#include "ribbonroots/verify.hpp"

using namespace ribbonroots;

TEST_CASE("slice and push on (5,5,4,3,2)") {
    const SqciDiagram d(Partition{5, 5, 4, 3, 2}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, {});
    const InequalityVerdict v = check_slice_and_push(d, 1);
    CHECK(v.lhs == 9120);
    CHECK(v.rhs == 4560);
    CHECK(v.holds);
}

TEST_CASE("pushing is needed: (4,3) with two circles") {
    const SqciDiagram d(Partition{4, 3}, {{1, 1}, {1, 2}}, {});
    CHECK(sqci_weight(d) == 27);
    const InequalityVerdict unpushed = check_slice_without_push(d, 1);
    CHECK(unpushed.lhs == 27);
    CHECK(unpushed.rhs == 28);
    CHECK_FALSE(unpushed.holds);
    CHECK(check_slice_and_push(d, 1).holds);
}

TEST_CASE("slice and push primitives") {
    const std::vector<Cell> cells{{1, 1}, {1, 3}, {2, 2}, {3, 1}};
    CHECK(slice(cells, {SliceKind::LeftOfColumn, 1}) == std::vector<Cell>{{1, 1}, {3, 1}});
    CHECK(slice(cells, {SliceKind::RightOfColumn, 1}) == std::vector<Cell>{{1, 3}, {2, 2}});
    CHECK(slice(cells, {SliceKind::TopRows, 1}) == std::vector<Cell>{{1, 1}, {1, 3}});
    CHECK(slice(cells, {SliceKind::BelowRows, 2}) == std::vector<Cell>{{3, 1}});
    CHECK(push(cells, PushDirection::Right)[0] == Cell{1, 2});
    CHECK(push(cells, PushDirection::Southeast)[0] == Cell{2, 2});
    CHECK(normalize_northwest(std::vector<Cell>{{2, 3}, {2, 4}, {3, 3}}) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(is_young_diagram(std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}}));
    CHECK_FALSE(is_young_diagram(std::vector<Cell>{{1, 1}, {2, 2}}));
    CHECK_THROWS_AS(normalize_northwest(std::vector<Cell>{}), DomainError);
}

TEST_CASE("circles need a southeast neighbour") {
    CHECK_THROWS_AS(SqciDiagram(Partition{2, 1}, {{1, 2}}, {}), DomainError);
    CHECK_THROWS_AS(SqciDiagram(Partition{2, 2}, {}, {{3, 1}}), DomainError);
}

TEST_CASE("weights match all 2^|D| moves checked by definition") {
    std::mt19937_64 rng(3);
    const auto family = slice_and_push_family(9);
    for (int trial = 0; trial < 150; ++trial) {
        const SqciDiagram& base = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
        const auto cells = base.ambient().cells();
        std::vector<Cell> squares;
        for (int j = 0; j < trial % 3; ++j)
            squares.push_back(cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)]);
        const SqciDiagram d(base.ambient(), base.circles(), squares);
        CHECK(sqci_weight(d) == oracle::sqci_weight_by_definition(d.ambient(), d.circles(), d.squares()));
    }
}

TEST_CASE("square relation") {
    const Partition lambda{5, 5, 4, 3, 2};
    CHECK(check_square_relation(std::vector<Cell>{}, lambda, {1, 3, 1, 4}));
    CHECK(check_square_relation(std::vector<Cell>{{2, 2}, {2, 2}}, lambda, {2, 4, 1, 3}));
    CHECK_THROWS_AS(check_square_relation(std::vector<Cell>{}, lambda, {1, 5, 1, 3}), DomainError);
}
