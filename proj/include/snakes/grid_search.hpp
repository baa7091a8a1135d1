#pragma once

#include <map>

#include "snakes/grid_path.hpp"
#include "snakes/path.hpp"
#include "snakes/symmetry.hpp"

namespace snakes {

struct TurnSearchResult {
    std::vector<CellPath> solutions;  // unoriented, deduplicated, sorted by encoding
    long long count = 0;
};

namespace detail {

struct GridSearcher {
    Board board;
    std::vector<Cell> cells;
    std::vector<char> active;
    std::vector<std::array<int, 4>> adj;  // -1 padded
    int active_count = 0;

    explicit GridSearcher(const Board& b, const std::vector<char>& act) : board(b), active(act) {
        cells = b.cells();
        int n = static_cast<int>(cells.size());
        adj.assign(n, {-1, -1, -1, -1});
        for (int i = 0; i < n; ++i) {
            if (active[i]) ++active_count;
            int slot = 0;
            for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
                Cell c = cells[i] + d;
                if (!b.contains(c)) continue;
                int j = (c.y - b.origin.y) * b.n + (c.x - b.origin.x);
                if (active[j]) adj[i][slot++] = j;
            }
        }
    }

    int index_of(Cell c) const {
        return (c.y - board.origin.y) * board.n + (c.x - board.origin.x);
    }

    static bool collinear(Cell a, Cell b, Cell c) {
        return (b - a) == (c - b);
    }

    // all Hamiltonian paths over the active set with at most max_turns turns
    void paths(int max_turns, std::map<std::vector<std::int64_t>, CellPath>& out) {
        std::vector<char> visited(cells.size(), 0);
        std::vector<int> stack;
        std::vector<int> rd(cells.size(), 0);  // unvisited degree
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (active[i])
                for (int j : adj[i])
                    if (j >= 0) ++rd[i];

        auto rec = [&](auto&& self, int head, int turns) -> void {
            if (static_cast<int>(stack.size()) == active_count) {
                std::vector<Cell> cs;
                for (int i : stack) cs.push_back(cells[i]);
                CellPath p(std::move(cs));
                out.emplace(edge_encoding(p), normalize_orientation(p));
                return;
            }
            for (int c : adj[head]) {
                if (c < 0 || visited[c]) continue;
                int nt = turns;
                if (stack.size() >= 2 &&
                    !collinear(cells[stack[stack.size() - 2]], cells[head], cells[c]))
                    ++nt;
                if (nt > max_turns) continue;
                // a cell stranded with no unvisited neighbours kills the branch
                bool dead = false;
                visited[c] = 1;
                for (int u : adj[c]) {
                    if (u < 0 || visited[u] || u == c) continue;
                    if (--rd[u] == 0 && u != c) {
                        bool head_adj = false;
                        for (int v : adj[u])
                            if (v == c) head_adj = true;
                        if (!head_adj) dead = true;
                    }
                }
                if (!dead) {
                    stack.push_back(c);
                    self(self, c, nt);
                    stack.pop_back();
                }
                for (int u : adj[c])
                    if (u >= 0 && !visited[u]) ++rd[u];
                visited[c] = 0;
            }
        };

        for (std::size_t s = 0; s < cells.size(); ++s) {
            if (!active[s]) continue;
            visited[s] = 1;
            for (int u : adj[s])
                if (u >= 0) --rd[u];
            stack.push_back(static_cast<int>(s));
            rec(rec, static_cast<int>(s), 0);
            stack.pop_back();
            for (int u : adj[s])
                if (u >= 0) ++rd[u];
            visited[s] = 0;
        }
    }

    // all Hamiltonian cycles over the active set with at most max_turns turns
    // (counted cyclically); anchored at the smallest active cell
    void cycles(int max_turns, std::map<std::vector<std::int64_t>, CellPath>& out) {
        if (active_count < 4) return;
        int anchor = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (active[i]) {
                anchor = static_cast<int>(i);
                break;
            }
        std::vector<char> visited(cells.size(), 0);
        std::vector<int> stack{anchor};
        visited[anchor] = 1;

        auto cyclic_turns = [&]() {
            int t = 0;
            std::size_t n = stack.size();
            for (std::size_t i = 0; i < n; ++i) {
                Cell prev = cells[stack[(i + n - 1) % n]];
                Cell cur = cells[stack[i]];
                Cell nxt = cells[stack[(i + 1) % n]];
                if (!collinear(prev, cur, nxt)) ++t;
            }
            return t;
        };

        auto rec = [&](auto&& self, int head, int turns) -> void {
            if (static_cast<int>(stack.size()) == active_count) {
                bool closes = false;
                for (int u : adj[head])
                    if (u == anchor) closes = true;
                if (!closes) return;
                if (stack[1] > stack.back()) return;  // one orientation only
                if (cyclic_turns() > max_turns) return;
                std::vector<Cell> cs;
                for (int i : stack) cs.push_back(cells[i]);
                CellPath p(std::move(cs), true);
                out.emplace(edge_encoding(p), normalize_orientation(p));
                return;
            }
            for (int c : adj[head]) {
                if (c < 0 || visited[c]) continue;
                int nt = turns;
                if (stack.size() >= 2 &&
                    !collinear(cells[stack[stack.size() - 2]], cells[head], cells[c]))
                    ++nt;
                if (nt > max_turns) continue;  // interior turns never exceed the cyclic count
                visited[c] = 1;
                stack.push_back(c);
                self(self, c, nt);
                stack.pop_back();
                visited[c] = 0;
            }
        };
        rec(rec, anchor, 0);
    }
};

}  // namespace detail

// All Hamiltonian paths of the k-by-k grid graph making at most max_turns
// turns. At max_turns = 2k-2 these are exactly the fewest-turn paths.
inline TurnSearchResult enumerate_grid_ham_paths(int k, int max_turns, int cap = 6) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > cap) throw std::invalid_argument("grid Hamiltonian-path cap exceeded");
    Board b(k, k);
    detail::GridSearcher gs(b, std::vector<char>(static_cast<std::size_t>(k) * k, 1));
    std::map<std::vector<std::int64_t>, CellPath> out;
    gs.paths(max_turns, out);
    TurnSearchResult res;
    for (auto& [enc, p] : out) res.solutions.push_back(p);
    res.count = static_cast<long long>(res.solutions.size());
    return res;
}

// All Hamiltonian cycles of the k-by-k grid graph with at most max_turns
// cyclic turns. Odd k is rejected: the grid graph is bipartite with unequal
// colour classes, so no Hamiltonian cycle exists.
inline TurnSearchResult enumerate_grid_ham_cycles(int k, int max_turns, int cap = 8) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k % 2 != 0) throw std::invalid_argument("no Hamiltonian cycle exists for odd k");
    if (k > cap) throw std::invalid_argument("grid Hamiltonian-cycle cap exceeded");
    Board b(k, k);
    detail::GridSearcher gs(b, std::vector<char>(static_cast<std::size_t>(k) * k, 1));
    std::map<std::vector<std::int64_t>, CellPath> out;
    gs.cycles(max_turns, out);
    TurnSearchResult res;
    for (auto& [enc, p] : out) res.solutions.push_back(p);
    res.count = static_cast<long long>(res.solutions.size());
    return res;
}

// All cycles of the k-by-k grid graph visiting all but one cell, with at most
// max_turns cyclic turns; k must be odd.
inline TurnSearchResult enumerate_near_ham_cycles(int k, int max_turns, int cap = 7) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    if (k % 2 != 1) throw std::invalid_argument("near-Hamiltonian enumeration expects odd k");
    if (k > cap) throw std::invalid_argument("near-Hamiltonian cap exceeded");
    Board b(k, k);
    std::map<std::vector<std::int64_t>, CellPath> out;
    for (int omit = 0; omit < k * k; ++omit) {
        std::vector<char> act(static_cast<std::size_t>(k) * k, 1);
        act[omit] = 0;
        detail::GridSearcher gs(b, act);
        gs.cycles(max_turns, out);
    }
    TurnSearchResult res;
    for (auto& [enc, p] : out) res.solutions.push_back(p);
    res.count = static_cast<long long>(res.solutions.size());
    return res;
}

}  // namespace snakes
