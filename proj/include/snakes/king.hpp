#pragma once

#include <unordered_map>
#include <unordered_set>

#include "snakes/grid_path.hpp"
#include "snakes/lift.hpp"
#include "snakes/path.hpp"

namespace snakes {

namespace detail {

// Straight run from a to b along a shared row or column, inclusive.
inline void push_run(std::vector<Cell>& out, Cell a, Cell b, bool skip_first = false) {
    int dx = (b.x > a.x) - (b.x < a.x);
    int dy = (b.y > a.y) - (b.y < a.y);
    Cell c = a;
    if (skip_first && !(a == b)) c = c + Cell{dx, dy};
    while (true) {
        out.push_back(c);
        if (c == b) break;
        c = c + Cell{dx, dy};
    }
}

}  // namespace detail

// Longest snake path of the even king graph: concentric spiral arcs joined at
// diagonal steps, length n^2/2 - 1.
inline CellPath build_even_king_spiral(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("spiral needs even n >= 2");
    int k = n / 2;
    std::vector<Cell> cells;
    auto arc = [&](int i, bool truncated) {
        // (i,i) .. (n-i-2,i) .. (n-i-1,i+1) .. (n-i-1,n-i-2) .. (n-i-2,n-i-1)
        // .. (i+1,n-i-1) .. (i,n-i-2) then, unless truncated, down to (i,i+3)
        // and inward to (i+2,i+2).
        bool share = !cells.empty();
        detail::push_run(cells, {i, i}, {n - i - 2, i}, share);
        detail::push_run(cells, {n - i - 1, i + 1}, {n - i - 1, n - i - 2});
        detail::push_run(cells, {n - i - 2, n - i - 1}, {i + 1, n - i - 1});
        cells.push_back({i, n - i - 2});
        if (truncated) return;
        detail::push_run(cells, {i, n - i - 3}, {i, i + 3});
        cells.push_back({i + 1, i + 2});
        cells.push_back({i + 2, i + 2});
    };
    for (int i = 0; i <= k - 3; i += 2) arc(i, false);
    if (k % 2 == 0) {
        arc(k - 2, true);
    } else {
        if (k == 1) {
            cells = {{0, 0}, {1, 1}};
        } else {
            cells.push_back({k, k});
        }
    }
    return CellPath(std::move(cells));
}

// Longest snake path of the odd king graph: rows of even y restricted to
// 1 <= x <= n-2, walked boustrophedon with the boundary connector cells of the
// comb pattern inserted between rows; length (n^2 - 1)/2.
inline CellPath build_odd_king_comb(int n) {
    if (n < 1 || n % 2 != 1) throw std::invalid_argument("comb needs odd n >= 1");
    if (n == 1) return CellPath({{0, 0}});
    int k = (n + 1) / 2;
    std::vector<Cell> cells;
    cells.push_back({0, 0});
    for (int y = 0; y < n; y += 2) {
        bool left_to_right = (y / 2) % 2 == 0;
        if (left_to_right)
            detail::push_run(cells, {1, y}, {n - 2, y});
        else
            detail::push_run(cells, {n - 2, y}, {1, y});
        if (y + 2 < n) {
            int yc = y + 1;
            cells.push_back(left_to_right ? Cell{n - 1, yc} : Cell{0, yc});
        }
    }
    // terminal corner: (0, n-1) when k is even, (n-1, n-1) when k is odd
    cells.push_back(k % 2 == 0 ? Cell{0, n - 1} : Cell{n - 1, n - 1});
    return CellPath(std::move(cells));
}

namespace detail {

// The double-spiral Hamiltonian path of the even grid of side j whose frames
// all carry the two-thread pattern; endpoints (0,0) and (0,1).
inline std::vector<Cell> double_spiral_grid_path(int j) {
    if (j < 2 || j % 2 != 0) throw std::invalid_argument("double spiral needs even side");
    int m = j / 2 - 1;
    std::vector<Cell> A{{0, 0}};
    std::vector<Cell> B{{0, 1}};
    auto long_run = [&](std::vector<Cell>& t, int i) {
        push_run(t, {i, i}, {j - 1 - i, i}, true);
        push_run(t, {j - 1 - i, i + 1}, {j - 1 - i, j - 1 - i});
        push_run(t, {j - 2 - i, j - 1 - i}, {i, j - 1 - i});
        push_run(t, {i, j - 2 - i}, {i, i + 2});
        t.push_back({i + 1, i + 2});
    };
    auto short_step = [&](std::vector<Cell>& t, int i) { t.push_back({i + 1, i + 1}); };
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0) {
            long_run(A, i);
            short_step(B, i);
        } else {
            long_run(B, i);
            short_step(A, i);
        }
    }
    std::vector<Cell>& X = (m % 2 == 0) ? A : B;  // ends at (m, m)
    std::vector<Cell>& Y = (m % 2 == 0) ? B : A;  // ends at (m, m+1)
    X.push_back({m + 1, m});
    X.push_back({m + 1, m + 1});
    std::vector<Cell> full = X;
    for (auto it = Y.rbegin(); it != Y.rend(); ++it) full.push_back(*it);
    return full;
}

// Hamiltonian cycle of the even grid of side k: outer ring opened at the edge
// (0,1)-(0,2) and rerouted through the double spiral of the inner board.
inline std::vector<Cell> double_spiral_grid_cycle(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("grid cycle needs even k >= 4");
    std::vector<Cell> inner = double_spiral_grid_path(k - 2);
    for (Cell& c : inner) c = c + Cell{1, 1};
    if (!(inner.front() == Cell{1, 1})) std::reverse(inner.begin(), inner.end());
    std::vector<Cell> order{{0, 1}};
    order.insert(order.end(), inner.begin(), inner.end());
    push_run(order, {0, 2}, {0, k - 1});
    push_run(order, {1, k - 1}, {k - 1, k - 1});
    push_run(order, {k - 1, k - 2}, {k - 1, 0});
    push_run(order, {k - 2, 0}, {0, 0});
    return order;
}

// Complete a king snake cycle over a Hamiltonian grid cycle: each 2x2 subboard
// contributes an ordered cell pair, except the single deficient subboard which
// contributes one cell. Chordlessness is maintained incrementally and the
// caller re-verifies the result.
inline std::optional<CellPath> complete_cycle_blowup(const std::vector<Cell>& order,
                                                     std::size_t deficient_at,
                                                     std::uint64_t node_cap = 50'000'000) {
    std::size_t K = order.size();
    std::vector<Cell> rot(order.begin() + deficient_at, order.end());
    rot.insert(rot.end(), order.begin(), order.begin() + deficient_at);

    std::vector<std::array<Cell, 4>> options(K);
    for (std::size_t i = 0; i < K; ++i) {
        Cell b = rot[i];
        options[i] = {Cell{2 * b.x, 2 * b.y}, Cell{2 * b.x + 1, 2 * b.y},
                      Cell{2 * b.x, 2 * b.y + 1}, Cell{2 * b.x + 1, 2 * b.y + 1}};
    }

    std::vector<Cell> path;
    std::unordered_set<std::int64_t> placed;
    std::uint64_t nodes = 0;
    MoveRule king = MoveRule::king();

    // A new cell may touch only the current path end (and, when closing, the
    // cycle's first cell); anything else would be a chord.
    auto can_place = [&](Cell c, bool closing) -> bool {
        if (placed.count(cell_key(c))) return false;
        if (!king.adjacent(c, path.back())) return false;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                Cell nb{c.x + dx, c.y + dy};
                if (!placed.count(cell_key(nb))) continue;
                if (nb == path.back()) continue;
                if (closing && nb == path.front()) continue;
                return false;
            }
        return true;
    };
    auto push = [&](Cell c) {
        path.push_back(c);
        placed.insert(cell_key(c));
    };
    auto pop = [&]() {
        placed.erase(cell_key(path.back()));
        path.pop_back();
    };

    std::optional<CellPath> result;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (++nodes > node_cap) return false;
        if (i == K) {
            result = CellPath(path, true);
            return true;
        }
        if (i == 0) {
            for (Cell c : options[0]) {
                push(c);
                if (self(self, 1)) return true;
                pop();
            }
            return false;
        }
        bool last = (i + 1 == K);
        for (Cell c1 : options[i]) {
            if (!can_place(c1, false)) continue;
            push(c1);
            for (Cell c2 : options[i]) {
                if (c2 == c1) continue;
                if (!can_place(c2, last)) continue;
                if (last && !king.adjacent(c2, path.front())) continue;
                push(c2);
                if (self(self, i + 1)) return true;
                pop();
            }
            pop();
        }
        return false;
    };
    if (rec(rec, 0)) return result;
    return std::nullopt;
}

}  // namespace detail

// Longest snake cycle of the king graph for n divisible by four: a double
// spiral of length n^2/2 - 1. Built by blowing the Hamiltonian grid cycle up
// to the king board; the construction is accepted only after verification.
inline CellPath build_king_0mod4_cycle(int n) {
    if (n < 8 || n % 4 != 0) throw std::invalid_argument("cycle construction needs n = 0 mod 4, n >= 8");
    int k = n / 2;
    auto order = detail::double_spiral_grid_cycle(k);
    // the deficient subboard sits at an end of the opened ring edge
    for (Cell candidate : {Cell{0, 1}, Cell{0, 2}}) {
        std::size_t at = 0;
        while (!(order[at] == candidate)) ++at;
        auto got = detail::complete_cycle_blowup(order, at);
        if (!got) continue;
        PieceGraph g(MoveRule::king(), Board(n, n));
        if (got->length() == static_cast<long long>(n) * n / 2 - 1 && is_snake_cycle(g, *got))
            return normalize_orientation(*got);
    }
    throw std::logic_error("king cycle completion failed");
}

// The boundary pattern D_n of the crystallisation construction: diagonal comb
// cells with their symmetry images, plus the corner repairs. The result is the
// vertex set of a snake path on the n-by-n board.
inline CellSet build_D_n(int n, int n_star) {
    if (n_star < 7) throw std::invalid_argument("D_n needs n_star >= 7");
    if (n < n_star || (n - n_star) % 4 != 0)
        throw std::invalid_argument("D_n needs n = n_star mod 4, n >= n_star");
    Board board(n, n);
    std::vector<Cell> base;
    for (int y = 0; y <= (n - n_star) / 2; y += 2)
        for (int x = 0; x < n; ++x)
            if (x - y >= 1 && x + y <= n - 2) base.push_back({x, y});
    std::vector<Cell> all;
    for (const auto& s : board_symmetries(board))
        for (Cell c : base) all.push_back(s.apply(board, c));
    CellSet set = CellSet(std::move(all));
    for (Cell c : {Cell{0, 2}, Cell{0, 3}, Cell{0, 4}}) set = set.without(c);
    set = set.with({1, 2}).with({1, 4});
    for (int i = 2; i <= (n - n_star) / 2; i += 2) {
        for (Cell d : {Cell{0, 1}, Cell{0, 3}, Cell{0, 4}}) set = set.without(Cell{i, i} + d);
        for (Cell a : {Cell{0, 0}, Cell{1, 2}, Cell{1, 4}}) set = set.with(Cell{i, i} + a);
    }
    return set;
}

}  // namespace snakes
