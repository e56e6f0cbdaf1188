#pragma once

#include <span>
#include <vector>

#include "ribbonroots/bigint.hpp"
#include "ribbonroots/shapes.hpp"

namespace ribbonroots {

/// A pair (D; F): circles D may each step once to the southeast, squares F stay put.
/// Squares form a multiset, stored sorted with repetition.
class SqciDiagram {
public:
    SqciDiagram(Partition ambient, std::vector<Cell> circles, std::vector<Cell> squares = {});

    const Partition& ambient() const { return ambient_; }
    const std::vector<Cell>& circles() const { return circles_; }
    const std::vector<Cell>& squares() const { return squares_; }

private:
    Partition ambient_;
    std::vector<Cell> circles_;
    std::vector<Cell> squares_;
};

enum class SliceKind {
    LeftOfColumn,   // D|_k: cells in the first k columns
    RightOfColumn,  // |_k D: cells past column k
    TopRows,        // cells in the first i rows
    BelowRows,      // cells past row i
};

struct SliceSpec {
    SliceKind kind;
    int index = 0;
};

std::vector<Cell> slice(std::span<const Cell> cells, SliceSpec spec);

enum class PushDirection { Right, Southeast };

std::vector<Cell> push(std::span<const Cell> cells, PushDirection direction);

/// D translated so its first occupied row and column are both 1.
std::vector<Cell> normalize_northwest(std::span<const Cell> cells);

/// True iff the cell set is D(mu) for some partition mu (the empty set counts as mu = ()).
bool is_young_diagram(std::span<const Cell> cells);

/// Every legal placement D' of the circles (each stays or moves one step southeast,
/// injective, order-preserving on adjacent diagonals), as row-major sorted cell lists.
std::vector<std::vector<Cell>> sqci_placements(const SqciDiagram& d);

/// Sum over legal placements D' of wt(D' ⊔ F).
BigInt sqci_weight(const SqciDiagram& d);

struct InequalityVerdict {
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

/// lhs = wt(D; F), rhs = wt(D|_k; F ⊔ (|_k D)^→), holds = lhs >= rhs.
/// Throws DomainError unless D normalizes to the Young diagram of a nonempty partition.
InequalityVerdict check_slice_and_push(const SqciDiagram& d, int k);

/// The same comparison with the sliced cells kept in place rather than pushed.
/// This is not a valid inequality in general.
InequalityVerdict check_slice_without_push(const SqciDiagram& d, int k);

/// Corners c_{i,j}, c_{i',j}, c_{i,j'}, c_{i',j'}.
struct SquareCorners {
    int row = 1;
    int row2 = 1;
    int col = 1;
    int col2 = 1;
};

/// wt(F ⊔ {c_{i,j}}) + wt(F ⊔ {c_{i',j'}}) == wt(F ⊔ {c_{i,j'}}) + wt(F ⊔ {c_{i',j}}).
bool check_square_relation(std::span<const Cell> squares, const Partition& lambda, SquareCorners corners);

}  // namespace ribbonroots
