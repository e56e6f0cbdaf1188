#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace ribbonroots {

/// A cell c_{i,j} of a Young diagram, 1-based, top row = 1, leftmost column = 1.
struct Cell {
    int row = 1;
    int col = 1;

    constexpr int content() const { return col - row; }

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly northwest order: c <= c' iff row <= row' and col <= col'.
constexpr bool weakly_northwest(const Cell& a, const Cell& b) {
    return a.row <= b.row && a.col <= b.col;
}

std::string to_string(const Cell& c);

/// Integer partition with trailing zeros dropped. The empty partition has no parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;

    // Row length; 0 past the last row.
    int row(int i) const;
    // Column length (the conjugate's part); 0 past the first row's length.
    int column(int j) const;

    bool contains(const Cell& c) const;
    bool contains(const Partition& other) const;

    // Cells in row-major order.
    std::vector<Cell> cells() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    // Cells of outer not in inner, row-major.
    std::vector<Cell> cells() const;

    // mu_i < lambda_{i+1} whenever mu_i != 0, and the diagram is nonempty.
    bool is_connected() const;
    // Connected and free of 2x2 blocks.
    bool is_ribbon() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

std::string to_string(const SkewShape& s);

/// A finite set of positive integers; m = max(I ∪ {0}).
class DescentSet {
public:
    DescentSet() = default;
    explicit DescentSet(std::set<int> elements);
    DescentSet(std::initializer_list<int> elements) : DescentSet(std::set<int>(elements)) {}

    const std::set<int>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    int count() const { return static_cast<int>(elements_.size()); }
    int max() const { return elements_.empty() ? 0 : *elements_.rbegin(); }
    bool contains(int i) const { return elements_.count(i) != 0; }

    friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
    std::set<int> elements_;
};

std::string to_string(const DescentSet& I);

/// All nonempty subsets of {1..n}, ordered by bitmask.
std::vector<DescentSet> nonempty_subsets(int n);

/// All partitions of `size`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int size);

Partition conjugate(const Partition& p);

int hook_length(const Partition& lambda, const Cell& c);

/// Hooks of every cell strictly below the first row, row-major.
std::vector<int> hook_multiset_below_first_row(const Partition& lambda);

/// Minimal ribbon of size m+1 whose standard fillings, read from the bottom-left
/// cell to the top-right cell, are the permutations with descent set I.
SkewShape ribbon_from_descent_set(const DescentSet& I);

/// (h(c_{1,1}) - 1, ..., h(c_{1,r}) - 1), r = lambda_1.
std::vector<int> alpha_vector(const Partition& lambda);

/// lambda^{(t)}: the first part replaced by lambda_1 + t - 1.
Partition extend_first_row(const Partition& lambda, int t);

}  // namespace ribbonroots
