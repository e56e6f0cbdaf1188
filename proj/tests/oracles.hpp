#pragma once

// Test-only reference implementations. They share no code with the library beyond the
// basic Cell/Partition containers.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ribbonroots/bigint.hpp"
#include "ribbonroots/shapes.hpp"

namespace oracle {

using ribbonroots::BigInt;
using ribbonroots::Cell;
using ribbonroots::Partition;
using ribbonroots::SkewShape;

inline bool in_shape(const std::vector<int>& rows, int r, int c) {
    return r >= 1 && r <= static_cast<int>(rows.size()) && c >= 1 && c <= rows[static_cast<std::size_t>(r - 1)];
}

// Arm plus leg plus one, counted cell by cell.
inline long hook(const Partition& lambda, Cell cell) {
    long h = 1;
    for (int c = cell.col + 1; lambda.contains(Cell{cell.row, c}); ++c) ++h;
    for (int r = cell.row + 1; lambda.contains(Cell{r, cell.col}); ++r) ++h;
    return h;
}

inline BigInt weight(const std::vector<Cell>& cells, const Partition& lambda) {
    BigInt w = 1;
    for (const Cell& c : cells) w *= hook(lambda, c);
    return w;
}

// Standard fillings counted by placing 1, 2, ... one cell at a time.
inline long syt_backtrack(const SkewShape& s) {
    std::vector<Cell> cells = s.cells();
    std::set<Cell> skew(cells.begin(), cells.end());
    std::set<Cell> filled;
    long count = 0;
    auto rec = [&](auto&& self) -> void {
        if (filled.size() == cells.size()) {
            ++count;
            return;
        }
        for (const Cell& c : cells) {
            if (filled.count(c)) continue;
            const Cell up{c.row - 1, c.col}, left{c.row, c.col - 1};
            if (skew.count(up) && !filled.count(up)) continue;
            if (skew.count(left) && !filled.count(left)) continue;
            filled.insert(c);
            self(self);
            filled.erase(c);
        }
    };
    rec(rec);
    return count;
}

inline std::set<int> descents(const std::vector<int>& perm) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        if (perm[i] > perm[i + 1]) d.insert(static_cast<int>(i + 1));
    return d;
}

inline long permutations_with_descents(const std::set<int>& I, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        if (descents(perm) == I) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Order-preserving on every pair of adjacent diagonals, injective.
inline bool adjacent_order_ok(const std::vector<Cell>& src, const std::vector<Cell>& img) {
    for (std::size_t a = 0; a < src.size(); ++a)
        for (std::size_t b = 0; b < src.size(); ++b) {
            if (a == b) continue;
            if (img[a] == img[b]) return false;
            if (std::abs(src[a].content() - src[b].content()) > 1) continue;
            const bool le = src[a].row <= src[b].row && src[a].col <= src[b].col;
            const bool img_le = img[a].row <= img[b].row && img[a].col <= img[b].col;
            if (le && !img_le) return false;
        }
    return true;
}

// Excited diagrams of lambda/mu straight from the definition: every |mu|-subset of
// lambda is tried; within a diagonal the bijection must be the monotone one.
inline std::set<std::vector<Cell>> excited_by_definition(const SkewShape& s) {
    const std::vector<Cell> all = s.outer().cells();
    const std::vector<Cell> mu = s.inner().cells();
    std::set<std::vector<Cell>> out;
    const std::size_t n = all.size(), k = mu.size();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<Cell> d;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) d.push_back(all[i]);
        std::map<int, std::vector<Cell>> by_diag_src, by_diag_img;
        for (const Cell& c : mu) by_diag_src[c.content()].push_back(c);
        for (const Cell& c : d) by_diag_img[c.content()].push_back(c);
        bool ok = true;
        std::vector<Cell> src, img;
        for (auto& [diag, cs] : by_diag_src) {
            auto& im = by_diag_img[diag];
            if (im.size() != cs.size()) {
                ok = false;
                break;
            }
            std::sort(cs.begin(), cs.end());
            std::sort(im.begin(), im.end());
            src.insert(src.end(), cs.begin(), cs.end());
            img.insert(img.end(), im.begin(), im.end());
        }
        if (ok && img.size() == d.size() && adjacent_order_ok(src, img)) {
            std::sort(d.begin(), d.end());
            out.insert(d);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// Weight of a circle/square diagram from the definition: all 2^|D| moves are tried.
inline BigInt sqci_weight_by_definition(const Partition& lambda, const std::vector<Cell>& circles,
                                        const std::vector<Cell>& squares) {
    BigInt total = 0;
    const std::size_t n = circles.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<Cell> img;
        for (std::size_t i = 0; i < n; ++i) {
            const Cell c = circles[i];
            img.push_back((mask >> i) & 1 ? Cell{c.row + 1, c.col + 1} : c);
        }
        if (!adjacent_order_ok(circles, img)) continue;
        total += weight(img, lambda);
    }
    return total * weight(squares, lambda);
}

}  // namespace oracle
