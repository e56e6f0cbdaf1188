#include "ribbonroots/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ribbonroots/errors.hpp"

namespace ribbonroots {

std::string to_string(const Cell& c) {
    return std::to_string(c.row) + ":" + std::to_string(c.col);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition is not weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column(int j) const {
    if (j < 1) return 0;
    int n = 0;
    for (int p : parts_) {
        if (p < j) break;
        ++n;
    }
    return n;
}

bool Partition::contains(const Cell& c) const { return c.row >= 1 && c.col >= 1 && c.col <= row(c.row); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.row(i) > row(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
    os << ')';
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw DomainError("inner partition " + to_string(inner_) + " is not contained in " + to_string(outer_));
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.push_back({i, j});
    return out;
}

bool SkewShape::is_connected() const {
    if (size() == 0) return false;
    int first = 0, last = 0;
    for (int i = 1; i <= outer_.length(); ++i) {
        if (outer_.row(i) > inner_.row(i)) {
            if (first == 0) first = i;
            last = i;
        }
    }
    // Consecutive rows must share a column.
    for (int i = first; i < last; ++i)
        if (outer_.row(i + 1) <= inner_.row(i)) return false;
    return true;
}

bool SkewShape::is_ribbon() const {
    if (!is_connected()) return false;
    for (int i = 1; i < outer_.length(); ++i)
        // rows i and i+1 share columns inner(i)+1..outer(i+1)
        if (outer_.row(i + 1) >= inner_.row(i) + 2) return false;
    return true;
}

std::string to_string(const SkewShape& s) { return to_string(s.outer()) + "/" + to_string(s.inner()); }

DescentSet::DescentSet(std::set<int> elements) : elements_(std::move(elements)) {
    if (!elements_.empty() && *elements_.begin() < 1) throw DomainError("descent set elements must be positive");
}

std::string to_string(const DescentSet& I) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : I.elements()) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<DescentSet> nonempty_subsets(int n) {
    std::vector<DescentSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(i + 1);
        out.emplace_back(std::move(s));
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(size, size, cur, out);
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> parts;
    for (int j = 1; j <= p.row(1); ++j) parts.push_back(p.column(j));
    return Partition(std::move(parts));
}

int hook_length(const Partition& lambda, const Cell& c) {
    if (!lambda.contains(c)) throw DomainError("cell " + to_string(c) + " is outside " + to_string(lambda));
    return (lambda.row(c.row) - c.col) + (lambda.column(c.col) - c.row) + 1;
}

std::vector<int> hook_multiset_below_first_row(const Partition& lambda) {
    std::vector<int> out;
    for (const Cell& c : lambda.cells())
        if (c.row >= 2) out.push_back(hook_length(lambda, c));
    return out;
}

SkewShape ribbon_from_descent_set(const DescentSet& I) {
    // Row lengths from the bottom: (i_1, i_2 - i_1, ..., m + 1 - i_k). Each row starts in
    // the column where the row below it ends.
    std::vector<int> bottom_up;
    int prev = 0;
    for (int i : I.elements()) {
        bottom_up.push_back(i - prev);
        prev = i;
    }
    bottom_up.push_back(I.max() + 1 - prev);

    const std::size_t rows = bottom_up.size();
    std::vector<int> outer(rows), inner(rows);
    int start = 1;
    for (std::size_t b = 0; b < rows; ++b) {
        const std::size_t top_index = rows - 1 - b;
        inner[top_index] = start - 1;
        outer[top_index] = start + bottom_up[b] - 1;
        start = outer[top_index];
    }
    return SkewShape(Partition(outer), Partition(inner));
}

std::vector<int> alpha_vector(const Partition& lambda) {
    if (lambda.empty()) throw DomainError("alpha vector of the empty partition");
    std::vector<int> out;
    for (int j = 1; j <= lambda.row(1); ++j) out.push_back(hook_length(lambda, {1, j}) - 1);
    return out;
}

Partition extend_first_row(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("extend_first_row needs t >= 1");
    std::vector<int> parts = lambda.parts();
    if (parts.empty()) parts.push_back(0);
    parts[0] += t - 1;
    return Partition(std::move(parts));
}

}  // namespace ribbonroots
