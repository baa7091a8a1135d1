#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace snakes {

// A cell is an integer point in the plane, (x, y) = (column, row).
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Cell operator*(int s, Cell a) { return {s * a.x, s * a.y}; }
};

// Cells order by (y, x); every canonical encoding in the library relies on this.
constexpr bool operator<(Cell a, Cell b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}
constexpr bool operator>(Cell a, Cell b) { return b < a; }
constexpr bool operator<=(Cell a, Cell b) { return !(b < a); }
constexpr bool operator>=(Cell a, Cell b) { return !(a < b); }

inline std::int64_t cell_key(Cell c) {
    return (static_cast<std::int64_t>(c.y) << 32) ^ static_cast<std::uint32_t>(c.x);
}

inline std::string to_string(Cell c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

// Rectangular board: n columns by m rows anchored at origin (inclusive).
struct Board {
    int n = 1;  // width, columns
    int m = 1;  // height, rows
    Cell origin = {0, 0};

    Board() = default;
    Board(int width, int height, Cell org = {0, 0}) : n(width), m(height), origin(org) {
        if (n < 1 || m < 1) throw std::invalid_argument("board sides must be positive");
    }

    bool contains(Cell c) const {
        return c.x >= origin.x && c.x < origin.x + n && c.y >= origin.y && c.y < origin.y + m;
    }
    bool square() const { return n == m; }
    long long cell_count() const { return static_cast<long long>(n) * m; }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(cell_count()));
        for (int y = origin.y; y < origin.y + m; ++y)
            for (int x = origin.x; x < origin.x + n; ++x) out.push_back({x, y});
        return out;
    }

    friend bool operator==(const Board&, const Board&) = default;
};

// Piece move rules. Leaper(0,1), Leaper(1,1) and Leaper(1,2) move exactly like
// the wazir, fers and knight; the named variants exist for reporting clarity.
class MoveRule {
public:
    enum class Kind { King, Knight, Wazir, Fers, Leaper };

    static MoveRule king() { return MoveRule(Kind::King, 0, 0); }
    static MoveRule knight() { return MoveRule(Kind::Knight, 1, 2); }
    static MoveRule wazir() { return MoveRule(Kind::Wazir, 0, 1); }
    static MoveRule fers() { return MoveRule(Kind::Fers, 1, 1); }
    static MoveRule leaper(int p, int q) {
        if (p > q) std::swap(p, q);
        if (p < 0 || (p == 0 && q == 0)) throw std::invalid_argument("bad leaper parameters");
        return MoveRule(Kind::Leaper, p, q);
    }

    Kind kind() const { return kind_; }
    int p() const { return p_; }
    int q() const { return q_; }

    bool adjacent(Cell a, Cell b) const {
        int dx = std::abs(a.x - b.x);
        int dy = std::abs(a.y - b.y);
        if (kind_ == Kind::King) return (dx | dy) != 0 && dx <= 1 && dy <= 1;
        if (dx > dy) std::swap(dx, dy);
        return dx == p_ && dy == q_;
    }

    // Distinct displacement vectors of one move.
    std::vector<Cell> move_vectors() const {
        std::vector<Cell> out;
        if (kind_ == Kind::King) {
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy)
                    if (dx != 0 || dy != 0) out.push_back({dx, dy});
            return out;
        }
        auto add = [&out](Cell v) {
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        };
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                add({sx * p_, sy * q_});
                add({sx * q_, sy * p_});
            }
        return out;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::King: return "king";
            case Kind::Knight: return "knight";
            case Kind::Wazir: return "wazir";
            case Kind::Fers: return "fers";
            case Kind::Leaper:
                return "leaper-" + std::to_string(p_) + "-" + std::to_string(q_);
        }
        return "?";
    }

    static MoveRule parse(const std::string& s) {
        if (s == "king") return king();
        if (s == "knight") return knight();
        if (s == "wazir") return wazir();
        if (s == "fers") return fers();
        if (s.rfind("leaper-", 0) == 0) {
            auto rest = s.substr(7);
            auto dash = rest.find('-');
            if (dash != std::string::npos) {
                int p = std::stoi(rest.substr(0, dash));
                int q = std::stoi(rest.substr(dash + 1));
                return leaper(p, q);
            }
        }
        throw std::invalid_argument("unknown move rule: " + s);
    }

    friend bool operator==(const MoveRule&, const MoveRule&) = default;

private:
    MoveRule(Kind k, int p, int q) : kind_(k), p_(p), q_(q) {}
    Kind kind_;
    int p_;
    int q_;
};

inline bool adjacent(const MoveRule& rule, Cell a, Cell b) { return rule.adjacent(a, b); }

// Finite set of cells with value semantics; stored sorted by (y, x).
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    bool contains(Cell c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    CellSet with(Cell c) const {
        auto v = cells_;
        v.push_back(c);
        return CellSet(std::move(v));
    }
    CellSet without(Cell c) const {
        std::vector<Cell> v;
        v.reserve(cells_.size());
        for (Cell a : cells_)
            if (!(a == c)) v.push_back(a);
        return CellSet(std::move(v));
    }
    friend CellSet operator|(const CellSet& a, const CellSet& b) {
        auto v = a.cells_;
        v.insert(v.end(), b.cells_.begin(), b.cells_.end());
        return CellSet(std::move(v));
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;
    friend bool operator<(const CellSet& a, const CellSet& b) {
        return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(),
                                            b.cells_.begin(), b.cells_.end());
    }

private:
    std::vector<Cell> cells_;
};

inline Board bounding_board(const std::vector<Cell>& cells, int pad = 0) {
    if (cells.empty()) return Board(1, 1);
    int xmin = cells[0].x, xmax = cells[0].x, ymin = cells[0].y, ymax = cells[0].y;
    for (Cell c : cells) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    return Board(xmax - xmin + 1 + 2 * pad, ymax - ymin + 1 + 2 * pad,
                 Cell{xmin - pad, ymin - pad});
}

// Piece graph: vertices are the board cells, edges are the piece's moves.
struct PieceGraph {
    MoveRule rule;
    Board board;

    PieceGraph(MoveRule r, Board b) : rule(r), board(b) {}

    bool contains(Cell c) const { return board.contains(c); }

    bool edge(Cell a, Cell b) const {
        return board.contains(a) && board.contains(b) && rule.adjacent(a, b);
    }

    CellSet neighbors(Cell a) const {
        if (!board.contains(a)) throw std::invalid_argument("neighbors: cell off board");
        std::vector<Cell> out;
        for (Cell v : rule.move_vectors()) {
            Cell b = a + v;
            if (board.contains(b)) out.push_back(b);
        }
        return CellSet(std::move(out));
    }

    // Degree of `a` in the subgraph induced on `s`; requires a in s.
    int induced_degree(const CellSet& s, Cell a) const {
        if (!s.contains(a)) throw std::invalid_argument("induced_degree: cell not in set");
        int d = 0;
        for (Cell v : rule.move_vectors()) {
            Cell b = a + v;
            if (board.contains(b) && s.contains(b)) ++d;
        }
        return d;
    }
};

}  // namespace snakes
