#pragma once

#include <map>

#include "snakes/core.hpp"

namespace snakes {

// Cells with positive integer weights (multiplicities).
class WeightedCellSet {
public:
    WeightedCellSet() = default;
    explicit WeightedCellSet(std::map<std::pair<int, int>, int> m) {
        for (auto& [xy, w] : m) {
            if (w < 1) throw std::invalid_argument("weights must be positive");
            entries_.push_back({Cell{xy.first, xy.second}, w});
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    static WeightedCellSet uniform(const CellSet& s, int w = 1) {
        std::map<std::pair<int, int>, int> m;
        for (Cell c : s) m[{c.x, c.y}] = w;
        return WeightedCellSet(std::move(m));
    }

    std::size_t cell_count() const { return entries_.size(); }
    long long total_weight() const {
        long long t = 0;
        for (auto& [c, w] : entries_) t += w;
        return t;
    }
    int weight_of(Cell c) const {
        for (auto& [a, w] : entries_)
            if (a == c) return w;
        return 0;
    }
    CellSet cells() const {
        std::vector<Cell> v;
        for (auto& [c, w] : entries_) v.push_back(c);
        return CellSet(std::move(v));
    }
    const std::vector<std::pair<Cell, int>>& entries() const { return entries_; }

    friend bool operator==(const WeightedCellSet&, const WeightedCellSet&) = default;

private:
    std::vector<std::pair<Cell, int>> entries_;  // sorted by cell
};

// Multiset sum: cell a'+a'' with multiplicity the number of representations.
inline WeightedCellSet multiset_sum(const CellSet& s1, const CellSet& s2) {
    if (s1.empty() || s2.empty())
        throw std::invalid_argument("multiset_sum needs nonempty operands");
    std::map<std::pair<int, int>, int> m;
    for (Cell a : s1)
        for (Cell b : s2) m[{a.x + b.x, a.y + b.y}] += 1;
    return WeightedCellSet(std::move(m));
}

// The 16 cells eps1*(2,1) + eps2*(1,2) + eps3*(-1,2) + eps4*(-2,1); the knight
// graph on them is the tesseract graph.
inline CellSet build_tesseract_set() {
    std::vector<Cell> v;
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2)
            for (int e3 = 0; e3 < 2; ++e3)
                for (int e4 = 0; e4 < 2; ++e4)
                    v.push_back(e1 * Cell{2, 1} + e2 * Cell{1, 2} + e3 * Cell{-1, 2} +
                                e4 * Cell{-2, 1});
    return CellSet(std::move(v));
}

// Aztec diamond of order two: the 4x4 square without its corners.
inline CellSet build_aztec_diamond_set() {
    std::vector<Cell> v;
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y)
            if (!((x == 0 || x == 3) && (y == 0 || y == 3))) v.push_back({x, y});
    return CellSet(std::move(v));
}

// Weighted knight graph of pseudosnake density 1/2: the multiset sum of the
// Aztec diamond with the tesseract cells; 68 cells of total weight 192.
inline WeightedCellSet build_pancake() {
    return multiset_sum(build_aztec_diamond_set(), build_tesseract_set());
}

}  // namespace snakes
