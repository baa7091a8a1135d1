#pragma once

#include <unordered_set>

#include "snakes/grid_path.hpp"
#include "snakes/symmetry.hpp"

namespace snakes {

// A free 4-cycle of a grid path: edge (a1, a2) lies on the path and the path
// goes straight through both of its ends, while the opposite cells (b1, b2)
// are both turns. Cell pairs are stored sorted.
struct FreeCycle {
    Cell a1, a2;  // the path edge
    Cell b1, b2;  // the two turn cells

    // King-board cell where the lifted aberration sits: twice the 4-cycle center.
    Cell aberration_cell() const {
        Cell s = a1 + a2 + b1 + b2;
        return {s.x / 2, s.y / 2};
    }

    friend bool operator==(const FreeCycle&, const FreeCycle&) = default;
    friend bool operator<(const FreeCycle& u, const FreeCycle& v) {
        if (!(u.a1 == v.a1)) return u.a1 < v.a1;
        if (!(u.a2 == v.a2)) return u.a2 < v.a2;
        if (!(u.b1 == v.b1)) return u.b1 < v.b1;
        return u.b2 < v.b2;
    }
};

namespace detail {

inline std::int64_t edge_key(Cell a, Cell b) {
    if (b < a) std::swap(a, b);
    return cell_key(a) * 1000003 ^ cell_key(b);
}

struct PathIndex {
    std::unordered_set<std::int64_t> edges;
    std::unordered_set<std::int64_t> turns;

    explicit PathIndex(const GridPath& gp) {
        for (auto [a, b] : gp.path.edges()) edges.insert(edge_key(a, b));
        for (Cell t : turn_cells(gp)) turns.insert(cell_key(t));
    }
    bool has_edge(Cell a, Cell b) const { return edges.count(edge_key(a, b)) != 0; }
    bool turn(Cell c) const { return turns.count(cell_key(c)) != 0; }
};

inline FreeCycle make_free_cycle(Cell a1, Cell a2, Cell b1, Cell b2) {
    if (a2 < a1) std::swap(a1, a2);
    if (b2 < b1) std::swap(b1, b2);
    return {a1, a2, b1, b2};
}

}  // namespace detail

// Geometric route: scan every unit square of the board against the path.
inline std::vector<FreeCycle> find_free_cycles(const GridPath& gp) {
    detail::PathIndex idx(gp);
    std::vector<FreeCycle> out;
    const Board& b = gp.board;
    auto consider = [&](Cell a1, Cell a2, Cell b1, Cell b2) {
        if (!idx.has_edge(a1, a2)) return;
        if (idx.has_edge(a2, b2) || idx.has_edge(b2, b1) || idx.has_edge(b1, a1)) return;
        // straight through both a-ends: the 4-cell run through the edge is on the path
        Cell c1 = a1 + (a1 - a2);
        Cell c2 = a2 + (a2 - a1);
        if (!idx.has_edge(c1, a1) || !idx.has_edge(a2, c2)) return;
        if (!idx.turn(b1) || !idx.turn(b2)) return;
        out.push_back(detail::make_free_cycle(a1, a2, b1, b2));
    };
    for (int y = b.origin.y; y + 1 < b.origin.y + b.m; ++y)
        for (int x = b.origin.x; x + 1 < b.origin.x + b.n; ++x) {
            Cell p00{x, y}, p10{x + 1, y}, p11{x + 1, y + 1}, p01{x, y + 1};
            consider(p00, p10, p01, p11);  // bottom edge, turns above
            consider(p01, p11, p00, p10);  // top edge, turns below
            consider(p00, p01, p10, p11);  // left edge, turns right
            consider(p10, p11, p00, p01);  // right edge, turns left
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Combinatorial route: read the free cycles straight off the stamp folding.
// Must agree with find_free_cycles over stamp_to_ham_path(sf, false).
inline std::vector<FreeCycle> free_cycles_from_stamp(const StampFolding& sf) {
    if (!is_stamp_folding(sf)) throw std::invalid_argument("not a stamp folding");
    int k = static_cast<int>(sf.size());
    auto pos = sf.positions();
    auto sign = [](int v) { return v % 2 == 0 ? 1 : -1; };
    std::vector<FreeCycle> out;
    for (int eps : {1, -1}) {
        for (int i = 0; i + 1 < k; ++i) {
            int u = sf.sigma[i];
            int v = sf.sigma[i + 1];
            int u2 = u + eps * sign(u);
            int v2 = v + eps * sign(v);
            if (u2 < 0 || u2 >= k || v2 < 0 || v2 >= k) continue;
            if (!lies_between(pos, u, u2, v2) || !lies_between(pos, v, u2, v2)) continue;
            bool boxed = false;
            for (int j = 0; j < k && !boxed; ++j) {
                int j2 = j + eps * sign(j);
                if (j2 < 0 || j2 >= k) continue;
                boxed = lies_between(pos, u, j, j2) && lies_between(pos, v, j, j2) &&
                        lies_between(pos, u2, j, j2) && lies_between(pos, v2, j, j2);
            }
            if (!boxed) continue;
            int col_a, col_b;
            if (eps == 1) {
                col_a = omega_left(sf, pos, u) - 1;
                col_b = col_a + 1;
            } else {
                col_a = k - omega_right(sf, pos, u);
                col_b = col_a - 1;
            }
            out.push_back(detail::make_free_cycle({col_a, i}, {col_a, i + 1}, {col_b, i},
                                                  {col_b, i + 1}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Chosen subset of a grid path's free cycles; no two may share the path edge.
struct LiftSelection {
    std::vector<FreeCycle> chosen;
};

// Scale a grid path by two into the king graph, inserting edge midpoints.
inline CellPath phi(const GridPath& gp) {
    const auto& c = gp.path.cells;
    std::vector<Cell> out;
    if (c.empty()) return CellPath({}, gp.closed());
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(2 * c[i]);
        bool has_next = (i + 1 < n) || gp.closed();
        if (has_next && n > 1) out.push_back(c[i] + c[(i + 1) % n]);
    }
    return CellPath(std::move(out), gp.closed());
}

// phi with every sharp turn smoothed into a single diagonal king step.
inline CellPath psi(const GridPath& gp) {
    const auto& c = gp.path.cells;
    std::vector<Cell> out;
    if (c.empty()) return CellPath({}, gp.closed());
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!turns_at(gp, i)) out.push_back(2 * c[i]);
        bool has_next = (i + 1 < n) || gp.closed();
        if (has_next && n > 1) out.push_back(c[i] + c[(i + 1) % n]);
    }
    return CellPath(std::move(out), gp.closed());
}

// psi with an aberration inserted at each selected free cycle: the midpoint of
// the cycle's path edge moves to the doubled cycle center. Every lift of a
// fewest-turn path is a snake path of the same length as psi.
inline CellPath lift(const GridPath& gp, const LiftSelection& sel) {
    auto free_list = find_free_cycles(gp);
    std::unordered_set<std::int64_t> seen_edges;
    for (const FreeCycle& fc : sel.chosen) {
        if (std::find(free_list.begin(), free_list.end(), fc) == free_list.end())
            throw std::invalid_argument("lift: selection contains a non-free cycle");
        if (!seen_edges.insert(detail::edge_key(fc.a1, fc.a2)).second)
            throw std::invalid_argument("lift: two selected cycles share a path edge");
    }
    CellPath out = psi(gp);
    for (const FreeCycle& fc : sel.chosen) {
        Cell midpoint = fc.a1 + fc.a2;  // already the doubled midpoint (a1+a2)/2 * 2
        Cell target = fc.aberration_cell();
        bool done = false;
        for (Cell& c : out.cells)
            if (c == midpoint) {
                c = target;
                done = true;
                break;
            }
        if (!done) throw std::logic_error("lift: free-cycle midpoint not on psi");
    }
    return out;
}

// Detect and straighten every rectifiable aberration: a subpath b'-a'-b-a''-b''
// whose middle cell b sits beside the straight midpoint c of the even cells
// a', a''. Returns the rectified path and the number of aberrations removed.
inline std::pair<CellPath, int> rectify_all(const PieceGraph& g, const CellPath& p) {
    CellPath cur = p;
    int removed = 0;
    auto even_cell = [](Cell c) { return c.x % 2 == 0 && c.y % 2 == 0; };
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t n = cur.cells.size();
        if (n < 5) break;
        std::size_t windows = cur.closed ? n : n - 4;
        for (std::size_t w = 0; w < windows && !changed; ++w) {
            auto at = [&](std::size_t off) { return cur.cells[(w + off) % n]; };
            Cell bp = at(0), ap = at(1), b = at(2), app = at(3), bpp = at(4);
            if (!even_cell(ap) || !even_cell(app)) continue;
            Cell d = app - ap;
            if (!((d.x == 0 && std::abs(d.y) == 2) || (d.y == 0 && std::abs(d.x) == 2)))
                continue;
            Cell c{(ap.x + app.x) / 2, (ap.y + app.y) / 2};
            if (!g.rule.adjacent(ap, c) || !g.rule.adjacent(c, app)) continue;
            if (!(bp == ap + (ap - c)) || !(bpp == app + (app - c))) continue;
            if (b == c) continue;
            cur.cells[(w + 2) % n] = c;
            ++removed;
            changed = true;
        }
    }
    return {cur, removed};
}

}  // namespace snakes
