#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ribbonroots/bigint.hpp"
#include "ribbonroots/shapes.hpp"

namespace ribbonroots {

/// An excited diagram of type lambda/mu; cells are kept sorted row-major.
struct ExcitedDiagram {
    std::vector<Cell> cells;

    int cells_in_row(int row) const;
    friend bool operator==(const ExcitedDiagram&, const ExcitedDiagram&) = default;
};

struct SytCount {
    BigInt value;
};

/// True iff `image[i]` is content-preserving for `source[i]` and, for every k, the map
/// restricted to the cells of X_k ∪ X_{k+1} is order-preserving (and injective).
bool preserves_adjacent_diagonal_order(std::span<const Cell> source, std::span<const Cell> image);

/// Literal membership test: is `cells` an excited diagram of type shape.outer()/shape.inner()?
/// On each diagonal the bijection is forced to be the monotone one.
bool is_excited_diagram(std::span<const Cell> cells, const SkewShape& shape);

/// Every excited diagram exactly once. The seed D(mu) comes first; the rest follow in the
/// depth-first discovery order obtained by scanning cells row-major and exciting the
/// latest movable cell first.
std::vector<ExcitedDiagram> enumerate_excited(const SkewShape& shape);

/// Product of hook lengths (in lambda) over `cells`, with multiplicity.
BigInt diagram_weight(std::span<const Cell> cells, const Partition& lambda);
inline BigInt diagram_weight(const ExcitedDiagram& d, const Partition& lambda) {
    return diagram_weight(d.cells, lambda);
}

/// f^{lambda/mu} by Naruse's hook-length formula. Throws ConsistencyError if the final
/// division leaves a remainder.
SytCount naruse_count(const SkewShape& shape);

/// f^lambda by the Frame-Robinson-Thrall hook-length formula.
SytCount frt_count(const Partition& lambda);

inline constexpr int kDefaultSytBudget = 20;

/// f^{lambda/mu} by peeling removable corners, memoized on the remaining outer shape.
/// Throws ResourceError when the shape has more than `budget` cells.
SytCount brute_force_count(const SkewShape& shape, int budget = kDefaultSytBudget);

}  // namespace ribbonroots
