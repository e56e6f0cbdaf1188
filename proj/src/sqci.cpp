#include "ribbonroots/sqci.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "ribbonroots/errors.hpp"
#include "ribbonroots/excited.hpp"

namespace ribbonroots {

SqciDiagram::SqciDiagram(Partition ambient, std::vector<Cell> circles, std::vector<Cell> squares)
    : ambient_(std::move(ambient)), circles_(std::move(circles)), squares_(std::move(squares)) {
    std::sort(circles_.begin(), circles_.end());
    if (std::adjacent_find(circles_.begin(), circles_.end()) != circles_.end())
        throw DomainError("circles must be distinct cells");
    for (const Cell& c : circles_)
        if (!ambient_.contains(Cell{c.row + 1, c.col + 1}))
            throw DomainError("circle " + to_string(c) + " has no southeast neighbour in " + to_string(ambient_));
    std::sort(squares_.begin(), squares_.end());
    for (const Cell& c : squares_)
        if (!ambient_.contains(c)) throw DomainError("square " + to_string(c) + " is outside " + to_string(ambient_));
}

std::vector<Cell> slice(std::span<const Cell> cells, SliceSpec spec) {
    std::vector<Cell> out;
    for (const Cell& c : cells) {
        bool keep = false;
        switch (spec.kind) {
            case SliceKind::LeftOfColumn: keep = c.col <= spec.index; break;
            case SliceKind::RightOfColumn: keep = c.col > spec.index; break;
            case SliceKind::TopRows: keep = c.row <= spec.index; break;
            case SliceKind::BelowRows: keep = c.row > spec.index; break;
        }
        if (keep) out.push_back(c);
    }
    return out;
}

std::vector<Cell> push(std::span<const Cell> cells, PushDirection direction) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells)
        out.push_back(direction == PushDirection::Right ? Cell{c.row, c.col + 1} : Cell{c.row + 1, c.col + 1});
    return out;
}

std::vector<Cell> normalize_northwest(std::span<const Cell> cells) {
    if (cells.empty()) throw DomainError("cannot normalize an empty diagram");
    int r0 = std::numeric_limits<int>::max(), c0 = std::numeric_limits<int>::max();
    for (const Cell& c : cells) {
        r0 = std::min(r0, c.row);
        c0 = std::min(c0, c.col);
    }
    std::vector<Cell> out;
    for (const Cell& c : cells) out.push_back({c.row - r0 + 1, c.col - c0 + 1});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_young_diagram(std::span<const Cell> cells) {
    std::vector<Cell> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::vector<int> rows;
    for (const Cell& c : sorted) {
        if (c.row < 1 || c.row > static_cast<int>(rows.size()) + 1) return false;
        if (c.row == static_cast<int>(rows.size()) + 1) rows.push_back(0);
        if (c.col != rows.back() + 1) return false;
        ++rows.back();
    }
    return std::is_sorted(rows.rbegin(), rows.rend());
}

namespace {

// Backtracks over circles in row-major order; a circle only needs checking against
// earlier circles, since no later circle can be weakly northwest of it.
class PlacementSearch {
public:
    explicit PlacementSearch(const SqciDiagram& d) : d_(d), image_(d.circles().size()) {}

    template <class Visit>
    void run(Visit&& visit) {
        recurse(0, visit);
    }

private:
    bool compatible(std::size_t a) const {
        const auto& src = d_.circles();
        for (std::size_t b = 0; b < a; ++b) {
            if (std::abs(src[a].content() - src[b].content()) > 1) continue;
            if (image_[a] == image_[b]) return false;
            if (weakly_northwest(src[b], src[a]) && !weakly_northwest(image_[b], image_[a])) return false;
            if (weakly_northwest(src[a], src[b]) && !weakly_northwest(image_[a], image_[b])) return false;
        }
        return true;
    }

    template <class Visit>
    void recurse(std::size_t a, Visit& visit) {
        if (a == image_.size()) {
            visit(image_);
            return;
        }
        const Cell c = d_.circles()[a];
        for (const Cell& choice : {c, Cell{c.row + 1, c.col + 1}}) {
            image_[a] = choice;
            if (compatible(a)) recurse(a + 1, visit);
        }
    }

    const SqciDiagram& d_;
    std::vector<Cell> image_;
};

}  // namespace

std::vector<std::vector<Cell>> sqci_placements(const SqciDiagram& d) {
    std::vector<std::vector<Cell>> out;
    PlacementSearch(d).run([&](const std::vector<Cell>& image) {
        std::vector<Cell> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    });
    return out;
}

BigInt sqci_weight(const SqciDiagram& d) {
    const Partition& lambda = d.ambient();
    BigInt sum = 0;
    PlacementSearch(d).run([&](const std::vector<Cell>& image) { sum += diagram_weight(image, lambda); });
    return sum * diagram_weight(d.squares(), lambda);
}

namespace {

InequalityVerdict compare_sliced(const SqciDiagram& d, int k, bool push_right) {
    if (d.circles().empty() || !is_young_diagram(normalize_northwest(d.circles())))
        throw DomainError("circles do not translate to the Young diagram of a nonempty partition");
    if (k < 0) throw DomainError("slice index must be nonnegative");
    std::vector<Cell> left = slice(d.circles(), {SliceKind::LeftOfColumn, k});
    std::vector<Cell> right = slice(d.circles(), {SliceKind::RightOfColumn, k});
    std::vector<Cell> squares = d.squares();
    if (push_right) right = push(right, PushDirection::Right);
    squares.insert(squares.end(), right.begin(), right.end());

    InequalityVerdict v;
    v.lhs = sqci_weight(d);
    v.rhs = sqci_weight(SqciDiagram(d.ambient(), std::move(left), std::move(squares)));
    v.holds = v.lhs >= v.rhs;
    return v;
}

}  // namespace

InequalityVerdict check_slice_and_push(const SqciDiagram& d, int k) { return compare_sliced(d, k, true); }

InequalityVerdict check_slice_without_push(const SqciDiagram& d, int k) { return compare_sliced(d, k, false); }

bool check_square_relation(std::span<const Cell> squares, const Partition& lambda, SquareCorners q) {
    const Cell corners[] = {{q.row, q.col}, {q.row2, q.col2}, {q.row, q.col2}, {q.row2, q.col}};
    for (const Cell& c : corners)
        if (!lambda.contains(c)) throw DomainError("corner " + to_string(c) + " is outside " + to_string(lambda));
    const BigInt base = diagram_weight(squares, lambda);
    auto with = [&](const Cell& c) { return base * hook_length(lambda, c); };
    return with(corners[0]) + with(corners[1]) == with(corners[2]) + with(corners[3]);
}

}  // namespace ribbonroots
