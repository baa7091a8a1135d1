#pragma once

#include <utility>

#include "snakes/core.hpp"
#include "snakes/path.hpp"

namespace snakes {

// One isometry of a board: optional transpose, then optional flips.
// Transposes apply to square boards only, so rectangles get a group of
// order 4 and squares a group of order 8.
struct BoardSymmetry {
    bool transpose = false;
    bool flip_x = false;
    bool flip_y = false;

    Cell apply(const Board& b, Cell c) const {
        int u = c.x - b.origin.x;
        int v = c.y - b.origin.y;
        if (transpose) std::swap(u, v);
        if (flip_x) u = b.n - 1 - u;
        if (flip_y) v = b.m - 1 - v;
        return {b.origin.x + u, b.origin.y + v};
    }
};

inline std::vector<BoardSymmetry> board_symmetries(const Board& b) {
    std::vector<BoardSymmetry> out;
    for (int t = 0; t < (b.square() ? 2 : 1); ++t)
        for (int fx = 0; fx < 2; ++fx)
            for (int fy = 0; fy < 2; ++fy) out.push_back({t != 0, fx != 0, fy != 0});
    return out;
}

inline CellSet apply_symmetry(const Board& b, const BoardSymmetry& s, const CellSet& set) {
    std::vector<Cell> v;
    v.reserve(set.size());
    for (Cell c : set) v.push_back(s.apply(b, c));
    return CellSet(std::move(v));
}

inline CellPath apply_symmetry(const Board& b, const BoardSymmetry& s, const CellPath& p) {
    std::vector<Cell> v;
    v.reserve(p.cells.size());
    for (Cell c : p.cells) v.push_back(s.apply(b, c));
    return CellPath(std::move(v), p.closed);
}

// Stable orientation: open paths start at their smaller endpoint; cycles start
// at their smallest cell and run toward its smaller neighbour.
inline CellPath normalize_orientation(const CellPath& p) {
    if (p.cells.size() < 2) return p;
    if (!p.closed) {
        return p.cells.front() <= p.cells.back() ? p : p.reversed();
    }
    std::size_t n = p.cells.size();
    std::size_t at = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (p.cells[i] < p.cells[at]) at = i;
    Cell fwd = p.cells[(at + 1) % n];
    Cell bwd = p.cells[(at + n - 1) % n];
    std::vector<Cell> v;
    v.reserve(n);
    if (fwd <= bwd)
        for (std::size_t i = 0; i < n; ++i) v.push_back(p.cells[(at + i) % n]);
    else
        for (std::size_t i = 0; i < n; ++i) v.push_back(p.cells[(at + n - i) % n]);
    return CellPath(std::move(v), true);
}

struct CanonicalSet {
    CellSet representative;
    int orbit_size = 1;
};

struct CanonicalPath {
    CellPath representative;
    int orbit_size = 1;
};

// Deterministic minimum over the board's symmetry group. The orbit size is the
// number of distinct images, i.e. |group| / |stabilizer|.
inline CanonicalSet canonicalize(const Board& b, const CellSet& set) {
    CellSet best = set;
    std::vector<CellSet> images;
    for (const auto& s : board_symmetries(b)) {
        CellSet img = apply_symmetry(b, s, set);
        if (img < best) best = img;
        images.push_back(std::move(img));
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return {best, static_cast<int>(images.size())};
}

inline CanonicalPath canonicalize(const Board& b, const CellPath& p) {
    CellPath best;
    std::vector<std::int64_t> best_key;
    std::vector<std::vector<std::int64_t>> images;
    for (const auto& s : board_symmetries(b)) {
        CellPath img = normalize_orientation(apply_symmetry(b, s, p));
        auto key = edge_encoding(img);
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best = img;
        }
        images.push_back(std::move(key));
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return {best, static_cast<int>(images.size())};
}

}  // namespace snakes
