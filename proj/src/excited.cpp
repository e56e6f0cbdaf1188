#include "ribbonroots/excited.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

#include "ribbonroots/errors.hpp"

namespace ribbonroots {

int ExcitedDiagram::cells_in_row(int row) const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [row](const Cell& c) { return c.row == row; }));
}

bool preserves_adjacent_diagonal_order(std::span<const Cell> source, std::span<const Cell> image) {
    if (source.size() != image.size()) return false;
    const std::size_t n = source.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (image[a].content() != source[a].content()) return false;
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (image[a] == image[b]) return false;
            if (std::abs(source[a].content() - source[b].content()) > 1) continue;
            if (weakly_northwest(source[a], source[b]) && !weakly_northwest(image[a], image[b])) return false;
        }
    }
    return true;
}

bool is_excited_diagram(std::span<const Cell> cells, const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    std::vector<Cell> image(cells.begin(), cells.end());
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    for (const Cell& c : image)
        if (!lambda.contains(c)) return false;

    std::vector<Cell> source = shape.inner().cells();
    if (source.size() != image.size()) return false;

    // Within a diagonal, cells sorted by row are totally ordered, so an order-preserving
    // bijection must match them up in sorted order.
    auto by_diagonal = [](const Cell& a, const Cell& b) {
        return std::pair(a.content(), a.row) < std::pair(b.content(), b.row);
    };
    std::sort(source.begin(), source.end(), by_diagonal);
    std::sort(image.begin(), image.end(), by_diagonal);
    return preserves_adjacent_diagonal_order(source, image);
}

namespace {

bool has(const std::vector<Cell>& sorted, const Cell& c) { return std::binary_search(sorted.begin(), sorted.end(), c); }

}  // namespace

std::vector<ExcitedDiagram> enumerate_excited(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    std::vector<ExcitedDiagram> out;
    std::set<std::vector<Cell>> seen;

    struct Frame {
        std::vector<Cell> cells;
        std::size_t next;  // counts down over cells, so the latest cell is tried first
    };

    std::vector<Cell> seed = shape.inner().cells();
    seen.insert(seed);
    out.push_back({seed});
    std::vector<Frame> stack;
    stack.push_back({seed, seed.size()});

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == 0) {
            stack.pop_back();
            continue;
        }
        const std::size_t idx = --top.next;
        const Cell c = top.cells[idx];
        const Cell target{c.row + 1, c.col + 1};
        if (!lambda.contains(target) || has(top.cells, {c.row, c.col + 1}) || has(top.cells, {c.row + 1, c.col}) ||
            has(top.cells, target))
            continue;
        std::vector<Cell> next = top.cells;
        next[idx] = target;
        std::sort(next.begin(), next.end());
        if (!seen.insert(next).second) continue;
        out.push_back({next});
        const std::size_t n = next.size();
        stack.push_back({std::move(next), n});
    }
    return out;
}

BigInt diagram_weight(std::span<const Cell> cells, const Partition& lambda) {
    BigInt w = 1;
    for (const Cell& c : cells) w *= hook_length(lambda, c);
    return w;
}

SytCount naruse_count(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    BigInt sum = 0;
    for (const ExcitedDiagram& d : enumerate_excited(shape)) sum += diagram_weight(d, lambda);
    const BigInt numerator = factorial(static_cast<unsigned long>(shape.size())) * sum;
    const BigInt denominator = diagram_weight(lambda.cells(), lambda);
    if (numerator % denominator != 0)
        throw ConsistencyError("Naruse formula left a remainder for " + to_string(shape));
    return {numerator / denominator};
}

SytCount frt_count(const Partition& lambda) {
    const BigInt numerator = factorial(static_cast<unsigned long>(lambda.size()));
    const BigInt denominator = diagram_weight(lambda.cells(), lambda);
    if (numerator % denominator != 0)
        throw ConsistencyError("hook-length formula left a remainder for " + to_string(lambda));
    return {numerator / denominator};
}

namespace {

class CornerPeeler {
public:
    explicit CornerPeeler(const Partition& inner) : inner_(inner) {}

    BigInt count(std::vector<int>& rows) {
        if (Partition(rows) == inner_) return 1;
        auto it = memo_.find(rows);
        if (it != memo_.end()) return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int row = static_cast<int>(i) + 1;
            if (rows[i] <= inner_.row(row)) continue;
            if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
            --rows[i];
            total += count(rows);
            ++rows[i];
        }
        memo_.emplace(rows, total);
        return total;
    }

private:
    Partition inner_;
    std::map<std::vector<int>, BigInt> memo_;
};

}  // namespace

SytCount brute_force_count(const SkewShape& shape, int budget) {
    if (shape.size() > budget)
        throw ResourceError("brute-force SYT count of size " + std::to_string(shape.size()) + " exceeds budget " +
                            std::to_string(budget));
    CornerPeeler peeler(shape.inner());
    std::vector<int> rows = shape.outer().parts();
    return {peeler.count(rows)};
}

}  // namespace ribbonroots
