#pragma once

#include "snakes/path.hpp"
#include "snakes/symmetry.hpp"

namespace snakes {

// A twine: a board of height two. The knight graph on a twine of width >= 2 is
// the disjoint union of four paths.
inline CellSet build_twine(int x_lo, int x_hi, int y_lo) {
    if (x_hi < x_lo) throw std::invalid_argument("twine needs x_hi >= x_lo");
    std::vector<Cell> v;
    for (int x = x_lo; x <= x_hi; ++x) {
        v.push_back({x, y_lo});
        v.push_back({x, y_lo + 1});
    }
    return CellSet(std::move(v));
}

enum class Side { Left, Right };

namespace detail {

inline const std::vector<Cell>& tie_offsets() {
    static const std::vector<Cell> v{{-2, 1}, {-1, 1}, {-1, 3}, {0, 3}};
    return v;
}

inline const std::vector<Cell>& splice_offsets() {
    static const std::vector<Cell> v{{-3, 4}, {-3, 5}, {-2, 2}, {-2, 3}, {-2, 6},
                                     {-1, 1}, {-1, 2}, {-1, 6}, {0, 5},  {0, 6}};
    return v;
}

inline Cell mirror_x(Cell offset) { return {-offset.x, offset.y}; }

inline std::pair<Cell, Cell> twine_corners(const CellSet& twine) {
    // lower-left and lower-right corner cells of a height-2 strip
    int x_lo = twine.begin()->x, x_hi = twine.begin()->x, y_lo = twine.begin()->y;
    for (Cell c : twine) {
        x_lo = std::min(x_lo, c.x);
        x_hi = std::max(x_hi, c.x);
        y_lo = std::min(y_lo, c.y);
    }
    return {Cell{x_lo, y_lo}, Cell{x_hi, y_lo}};
}

inline bool is_twine(const CellSet& s) {
    if (s.empty()) return false;
    auto [lo, hi] = twine_corners(s);
    if (s.size() != 2 * static_cast<std::size_t>(hi.x - lo.x + 1)) return false;
    for (Cell c : s)
        if (c.y != lo.y && c.y != lo.y + 1) return false;
    return true;
}

}  // namespace detail

// Cap a twine end with the four cells that join its four knight paths.
inline CellSet tie_off(const CellSet& twine, Side side) {
    if (!detail::is_twine(twine)) throw std::invalid_argument("tie_off expects a twine");
    auto [lo, hi] = detail::twine_corners(twine);
    std::vector<Cell> v(twine.begin(), twine.end());
    for (Cell off : detail::tie_offsets())
        v.push_back((side == Side::Left ? lo + off : hi + detail::mirror_x(off)));
    return CellSet(std::move(v));
}

// Join two stacked twines with the ten connector cells. On the left the upper
// twine's lower-left corner must sit at lower + (1, 4); mirrored on the right.
inline CellSet splice(const CellSet& e, const CellSet& f, Side side) {
    if (!detail::is_twine(e) || !detail::is_twine(f))
        throw std::invalid_argument("splice expects twines");
    auto [elo, ehi] = detail::twine_corners(e);
    auto [flo, fhi] = detail::twine_corners(f);
    std::vector<Cell> v(e.begin(), e.end());
    v.insert(v.end(), f.begin(), f.end());
    if (side == Side::Left) {
        if (!(elo + Cell{1, 4} == flo))
            throw std::invalid_argument("splice: corners must satisfy a + (1,4) = b");
        for (Cell off : detail::splice_offsets()) v.push_back(elo + off);
    } else {
        if (!(ehi + Cell{-1, 4} == fhi))
            throw std::invalid_argument("splice: corners must satisfy a + (-1,4) = b");
        for (Cell off : detail::splice_offsets()) v.push_back(ehi + detail::mirror_x(off));
    }
    return CellSet(std::move(v));
}

// The skein U(k, I): k stacked twines, tied off at the outer ends and spliced
// together alternately right/left. For k >= 2 and odd |I| the knight graph on
// it is a single cycle.
inline CellSet build_knight_U(int k, int x_lo, int x_hi) {
    if (k < 1) throw std::invalid_argument("U(k, I) needs k >= 1");
    int len = x_hi - x_lo + 1;
    if (len < 8 * k - 5) throw std::invalid_argument("U(k, I) needs |I| >= 8k - 5");

    std::vector<CellSet> twines;
    for (int i = 0; i < k; ++i) {
        if (i % 2 == 0)
            twines.push_back(build_twine(x_lo + 4 * i, x_hi - 4 * i, 4 * i));
        else
            twines.push_back(build_twine(x_lo + 4 * i + 3, x_hi - 4 * i + 3, 4 * i));
    }
    std::vector<Cell> all;
    auto absorb = [&all](const CellSet& s) { all.insert(all.end(), s.begin(), s.end()); };
    absorb(tie_off(twines[0], Side::Left));
    for (int i = 0; i + 1 < k; ++i)
        absorb(splice(twines[i], twines[i + 1], i % 2 == 0 ? Side::Right : Side::Left));
    absorb(tie_off(twines[k - 1], k % 2 == 0 ? Side::Left : Side::Right));
    for (int i = 1; i + 1 < k; ++i) absorb(twines[i]);
    return CellSet(std::move(all));
}

// The knight snake cycle W on an m-by-n board, m = 8k + 14 <= n, n even: four
// skeins winding along the four sides, stitched together at three corners.
inline CellSet build_knight_cycle(int m, int n) {
    if (m > n) throw std::invalid_argument("knight cycle construction assumes m <= n");
    if (n % 2 != 0) throw std::invalid_argument("knight cycle construction needs even n");
    if (m < 38 || (m - 14) % 8 != 0)
        throw std::invalid_argument("knight cycle construction needs m = 8k + 14, k >= 3");
    int k = (m - 14) / 8;
    Board board(n, m);

    CellSet u1 = build_knight_U(k, 8, n - 12);
    std::vector<Cell> v1_cells;
    for (Cell c : build_knight_U(k, 8, m - 12)) v1_cells.push_back({c.y, c.x});
    CellSet v1(std::move(v1_cells));
    auto central = [&](Cell c) { return Cell{n - 1 - c.x, m - 1 - c.y}; };
    std::vector<Cell> u2_cells, v2_cells;
    for (Cell c : u1) u2_cells.push_back(central(c));
    for (Cell c : v1) v2_cells.push_back(central(c));
    CellSet u2(std::move(u2_cells)), v2(std::move(v2_cells));

    CellSet w = u1 | v1 | u2 | v2;

    const std::vector<Cell> del{{6, 9}, {9, 6}};
    const std::vector<Cell> add{{3, 6}, {4, 4}, {6, 3}, {7, 10}, {9, 9}, {10, 7}};
    auto stitch = [&](auto&& transform) {
        for (Cell c : del) w = w.without(transform(Cell{4, 4} + c));
        for (Cell c : add) w = w.with(transform(Cell{4, 4} + c));
    };
    stitch([](Cell c) { return c; });                                   // U_I with V_I
    stitch([&](Cell c) { return Cell{n - 1 - c.x, c.y}; });             // U_I with V_II
    stitch([&](Cell c) { return Cell{c.x, m - 1 - c.y}; });             // V_I with U_II
    for (Cell c : w)
        if (!board.contains(c)) throw std::logic_error("knight cycle construction left the board");
    return w;
}

}  // namespace snakes
