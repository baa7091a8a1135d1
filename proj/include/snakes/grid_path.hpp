#pragma once

#include <stdexcept>

#include "snakes/path.hpp"
#include "snakes/stamp.hpp"

namespace snakes {

// A path in a grid (wazir) graph together with its segment structure.
// Segments are the maximal straight runs; turns are counted cyclically for
// closed paths, so the closing corners count too.
struct GridPath {
    CellPath path;
    Board board;

    GridPath() : board(1, 1) {}
    GridPath(CellPath p, Board b) : path(std::move(p)), board(b) {
        for (std::size_t i = 0; i + 1 < path.cells.size(); ++i)
            if (!MoveRule::wazir().adjacent(path.cells[i], path.cells[i + 1]))
                throw std::invalid_argument("grid path steps must be unit orthogonal");
        if (path.closed && !path.cells.empty() &&
            !MoveRule::wazir().adjacent(path.cells.back(), path.cells.front()))
            throw std::invalid_argument("grid cycle does not close");
    }

    std::size_t cell_count() const { return path.cells.size(); }
    bool closed() const { return path.closed; }
};

namespace detail {

inline Cell step_dir(Cell a, Cell b) { return {b.x - a.x, b.y - a.y}; }

}  // namespace detail

// True iff the path changes direction at cells[i] (cyclic for closed paths).
inline bool turns_at(const GridPath& gp, std::size_t i) {
    const auto& c = gp.path.cells;
    std::size_t n = c.size();
    if (n < 3) return false;
    if (!gp.closed() && (i == 0 || i + 1 == n)) return false;
    Cell in = detail::step_dir(c[(i + n - 1) % n], c[i]);
    Cell out = detail::step_dir(c[i], c[(i + 1) % n]);
    return !(in == out);
}

inline std::vector<Cell> turn_cells(const GridPath& gp) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < gp.path.cells.size(); ++i)
        if (turns_at(gp, i)) out.push_back(gp.path.cells[i]);
    return out;
}

inline int turn_count(const GridPath& gp) {
    int t = 0;
    for (std::size_t i = 0; i < gp.path.cells.size(); ++i)
        if (turns_at(gp, i)) ++t;
    return t;
}

// Partition at turn cells; each turn cell belongs to both adjacent segments.
inline std::pair<std::vector<CellPath>, int> path_segments(const GridPath& gp) {
    const auto& c = gp.path.cells;
    std::vector<CellPath> segs;
    if (c.empty()) return {segs, 0};
    if (c.size() == 1 || (c.size() == 2 && !gp.closed())) {
        segs.push_back(gp.path);
        return {segs, 0};
    }
    if (!gp.closed()) {
        std::vector<Cell> cur{c[0]};
        for (std::size_t i = 1; i < c.size(); ++i) {
            cur.push_back(c[i]);
            if (i + 1 < c.size() && turns_at(gp, i)) {
                segs.push_back(CellPath(cur));
                cur = {c[i]};
            }
        }
        segs.push_back(CellPath(cur));
        return {segs, static_cast<int>(segs.size()) - 1};
    }
    // closed: segments run from turn to turn
    int t = turn_count(gp);
    std::size_t n = c.size();
    std::size_t first_turn = 0;
    while (first_turn < n && !turns_at(gp, first_turn)) ++first_turn;
    if (first_turn == n) return {segs, 0};  // a cycle in a grid graph always turns
    std::vector<Cell> cur{c[first_turn]};
    for (std::size_t off = 1; off <= n; ++off) {
        std::size_t i = (first_turn + off) % n;
        cur.push_back(c[i]);
        if (turns_at(gp, i)) {
            segs.push_back(CellPath(cur));
            cur = {c[i]};
        }
    }
    return {segs, t};
}

// The mostly-horizontal fewest-turn Hamiltonian path of the s-by-s grid graph
// associated with a stamp folding; row y carries horizontal segment sigma(y).
// Even-numbered segments run right to left, odd ones left to right, and
// `reflected` mirrors the whole path across the vertical axis.
inline GridPath stamp_to_ham_path(const StampFolding& sf, bool reflected) {
    if (!is_stamp_folding(sf)) throw std::invalid_argument("not a stamp folding");
    int s = static_cast<int>(sf.size());
    Board b(s, s);
    if (s == 1) return GridPath(CellPath({{0, 0}}), b);

    auto pos = sf.positions();
    std::vector<Cell> cells;
    auto push_row = [&](int row, int x_from, int x_to) {
        int step = x_from <= x_to ? 1 : -1;
        for (int x = x_from;; x += step) {
            cells.push_back({x, row});
            if (x == x_to) break;
        }
    };
    int prev_row = -1, prev_end = -1;
    for (int i = 0; i < s; ++i) {
        int row = pos[i];
        int xl = omega_left(sf, pos, i);
        int xr = s - omega_right(sf, pos, i) - 1;
        int from = (i % 2 == 0) ? xr : xl;
        int to = (i % 2 == 0) ? xl : xr;
        if (i > 0) {
            if (from != prev_end)
                throw std::invalid_argument("segment endpoints do not chain");
            int step = row > prev_row ? 1 : -1;
            for (int y = prev_row + step; y != row; y += step) cells.push_back({from, y});
        }
        push_row(row, from, to);
        prev_row = row;
        prev_end = to;
    }
    if (reflected)
        for (Cell& c : cells) c.x = s - 1 - c.x;

    if (static_cast<int>(cells.size()) != s * s)
        throw std::invalid_argument("stamp folding did not yield a Hamiltonian path");
    GridPath gp(CellPath(std::move(cells)), b);
    if (turn_count(gp) != 2 * s - 2)
        throw std::invalid_argument("stamp folding did not yield a fewest-turn path");
    return gp;
}

// Transpose of a grid path (square boards), swapping rows and columns.
inline GridPath transposed(const GridPath& gp) {
    std::vector<Cell> cells;
    cells.reserve(gp.path.cells.size());
    for (Cell c : gp.path.cells) cells.push_back({c.y, c.x});
    return GridPath(CellPath(std::move(cells), gp.closed()), Board(gp.board.m, gp.board.n));
}

}  // namespace snakes
