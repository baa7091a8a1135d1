#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "snakes/core.hpp"

namespace snakes {

// Ordered vertex sequence. Open paths have length |cells|-1, cycles |cells|.
// Paths are identified with their reversals when compared as edge sets.
struct CellPath {
    std::vector<Cell> cells;
    bool closed = false;

    CellPath() = default;
    CellPath(std::vector<Cell> cs, bool cyc = false) : cells(std::move(cs)), closed(cyc) {}

    std::size_t cell_count() const { return cells.size(); }
    long long length() const {
        if (cells.empty()) return 0;
        return closed ? static_cast<long long>(cells.size())
                      : static_cast<long long>(cells.size()) - 1;
    }

    std::vector<std::pair<Cell, Cell>> edges() const {
        std::vector<std::pair<Cell, Cell>> out;
        if (cells.size() < 2) return out;
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) out.push_back({cells[i], cells[i + 1]});
        if (closed) out.push_back({cells.back(), cells.front()});
        return out;
    }

    CellPath reversed() const {
        auto v = cells;
        std::reverse(v.begin(), v.end());
        return CellPath(std::move(v), closed);
    }

    CellSet cell_set() const { return CellSet(cells); }

    friend bool operator==(const CellPath&, const CellPath&) = default;
};

// Orientation-free identity of a path or cycle: its sorted edge list.
inline std::vector<std::int64_t> edge_encoding(const CellPath& p) {
    std::vector<std::int64_t> out;
    for (auto [a, b] : p.edges()) {
        if (b < a) std::swap(a, b);
        out.push_back(cell_key(a));
        out.push_back(cell_key(b));
    }
    // sort edge pairs
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t i = 0; i < out.size(); i += 2) pairs.push_back({out[i], out[i + 1]});
    std::sort(pairs.begin(), pairs.end());
    out.clear();
    if (pairs.empty() && !p.cells.empty()) {
        // single-cell path: identify by its cell
        out.push_back(cell_key(p.cells[0]));
        return out;
    }
    for (auto [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

struct VerifyReport {
    bool ok = true;
    std::string message;

    static VerifyReport good() { return {}; }
    static VerifyReport bad(std::string m) { return {false, std::move(m)}; }
};

namespace detail {

inline VerifyReport check_snake(const PieceGraph& g, const CellPath& p, bool want_cycle) {
    if (p.closed != want_cycle)
        return VerifyReport::bad(want_cycle ? "expected a cycle, got an open path"
                                            : "expected an open path, got a cycle");
    if (p.cells.empty()) return VerifyReport::bad("empty path");
    if (want_cycle && p.cells.size() < 4)
        return VerifyReport::bad("cycles must have at least 4 cells");

    std::unordered_map<std::int64_t, std::size_t> index;
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        Cell c = p.cells[i];
        if (!g.board.contains(c)) return VerifyReport::bad("cell off board: " + to_string(c));
        if (!index.emplace(cell_key(c), i).second)
            return VerifyReport::bad("repeated cell: " + to_string(c));
    }

    std::size_t nc = p.cells.size();
    auto consecutive = [&](std::size_t i, std::size_t j) {
        std::size_t d = i < j ? j - i : i - j;
        if (d == 1) return true;
        return want_cycle && nc >= 2 && d == nc - 1;
    };
    for (std::size_t i = 0; i + 1 < nc; ++i)
        if (!g.rule.adjacent(p.cells[i], p.cells[i + 1]))
            return VerifyReport::bad("consecutive cells not adjacent: " + to_string(p.cells[i]) +
                                     "-" + to_string(p.cells[i + 1]));
    if (want_cycle && !g.rule.adjacent(p.cells.back(), p.cells.front()))
        return VerifyReport::bad("cycle does not close");

    auto vectors = g.rule.move_vectors();
    for (std::size_t i = 0; i < nc; ++i) {
        Cell c = p.cells[i];
        for (Cell v : vectors) {
            auto it = index.find(cell_key(c + v));
            if (it == index.end()) continue;
            if (!consecutive(i, it->second))
                return VerifyReport::bad("chord between " + to_string(c) + " and " +
                                         to_string(c + v));
        }
    }
    return VerifyReport::good();
}

}  // namespace detail

inline VerifyReport verify_snake_path(const PieceGraph& g, const CellPath& p) {
    return detail::check_snake(g, p, false);
}
inline VerifyReport verify_snake_cycle(const PieceGraph& g, const CellPath& p) {
    return detail::check_snake(g, p, true);
}

// True iff p is a path in g and an induced subgraph of g.
inline bool is_snake_path(const PieceGraph& g, const CellPath& p) {
    return verify_snake_path(g, p).ok;
}

// True iff p is a chordless cycle in g; cycles of fewer than 4 cells are rejected.
inline bool is_snake_cycle(const PieceGraph& g, const CellPath& p) {
    return verify_snake_cycle(g, p).ok;
}

// True iff every member of s has at most two neighbours inside s.
inline bool is_pseudosnake(const PieceGraph& g, const CellSet& s) {
    for (Cell c : s) {
        if (!g.board.contains(c)) return false;
        if (g.induced_degree(s, c) > 2) return false;
    }
    return true;
}

// If the rule-graph induced on `s` is one simple path or one cycle, return it
// in traversal order; otherwise nullopt. Useful for sets built as vertex sets.
inline std::optional<CellPath> trace_single_chain(const MoveRule& rule, const CellSet& s) {
    if (s.empty()) return std::nullopt;
    std::unordered_map<std::int64_t, std::vector<Cell>> adj;
    auto vectors = rule.move_vectors();
    std::vector<Cell> deg1;
    for (Cell c : s) {
        auto& lst = adj[cell_key(c)];
        for (Cell v : vectors)
            if (s.contains(c + v)) lst.push_back(c + v);
        if (lst.size() > 2) return std::nullopt;
        if (lst.size() == 1) deg1.push_back(c);
        if (lst.empty() && s.size() > 1) return std::nullopt;
    }
    bool cycle = deg1.empty();
    if (!cycle && deg1.size() != 2) return std::nullopt;
    if (cycle && s.size() < 3) return std::nullopt;

    Cell start = cycle ? *s.begin() : std::min(deg1[0], deg1[1]);
    std::vector<Cell> order{start};
    std::unordered_set<std::int64_t> seen{cell_key(start)};
    Cell cur = start;
    while (true) {
        const auto& lst = adj[cell_key(cur)];
        bool moved = false;
        for (Cell nb : lst) {
            if (!seen.count(cell_key(nb))) {
                order.push_back(nb);
                seen.insert(cell_key(nb));
                cur = nb;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (order.size() != s.size()) return std::nullopt;  // disconnected
    return CellPath(std::move(order), cycle);
}

}  // namespace snakes
