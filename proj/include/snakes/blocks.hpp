#pragma once

#include <map>

#include "snakes/path.hpp"
#include "snakes/symmetry.hpp"

namespace snakes {

inline bool odd_cell(Cell c) {
    auto odd = [](int v) { return ((v % 2) + 2) % 2 == 1; };
    return odd(c.x) && odd(c.y);
}

// A king-graph edge is regular when neither endpoint is an odd cell.
inline bool regular_edge(Cell a, Cell b) { return !odd_cell(a) && !odd_cell(b); }

// The certificate subgraphs of the odd king board. A little block holds four
// cells (one odd) and three regular edges, capacity 1; a large block holds
// nine cells (two odd) and eight regular edges, capacity 2.
struct Block {
    enum class Kind { Little, Large };
    Kind kind;
    CellSet cells;
    std::vector<std::pair<Cell, Cell>> edges;  // endpoints sorted within each pair

    int capacity() const { return kind == Kind::Little ? 1 : 2; }

    bool has_edge(Cell a, Cell b) const {
        if (b < a) std::swap(a, b);
        for (auto& [u, v] : edges)
            if (u == a && v == b) return true;
        return false;
    }
};

struct BlockDecomposition {
    int n = 0;
    std::vector<Block> blocks;
};

namespace detail {

inline std::pair<Cell, Cell> norm_edge(Cell a, Cell b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

inline std::vector<std::int64_t> block_encoding(const Block& b) {
    std::vector<std::int64_t> key;
    key.push_back(b.kind == Block::Kind::Little ? 0 : 1);
    for (Cell c : b.cells) key.push_back(cell_key(c));
    auto es = b.edges;
    std::sort(es.begin(), es.end());
    for (auto& [u, v] : es) {
        key.push_back(cell_key(u));
        key.push_back(cell_key(v));
    }
    return key;
}

inline Block map_block(const Board& board, const BoardSymmetry& sym, const Block& b) {
    Block out;
    out.kind = b.kind;
    out.cells = apply_symmetry(board, sym, b.cells);
    for (auto& [u, v] : b.edges)
        out.edges.push_back(norm_edge(sym.apply(board, u), sym.apply(board, v)));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace detail

// Little blocks sit on the even diagonal cells, large blocks on the even cells
// below the diagonal within the lower triangle; both families are closed under
// the symmetries of the board.
inline BlockDecomposition build_odd_blocks(int n) {
    if (n < 5 || n % 2 != 1) throw std::invalid_argument("block decomposition needs odd n >= 5");
    int k = (n + 1) / 2;
    Board board(n, n);

    std::vector<Block> base;
    for (int z = 0; z + 2 <= k; z += 2) {
        Block b;
        b.kind = Block::Kind::Little;
        Cell a{z, z};
        b.cells = CellSet({a, a + Cell{1, 0}, a + Cell{0, 1}, a + Cell{1, 1}});
        b.edges = {detail::norm_edge(a, a + Cell{0, 1}), detail::norm_edge(a, a + Cell{1, 0}),
                   detail::norm_edge(a + Cell{0, 1}, a + Cell{1, 0})};
        std::sort(b.edges.begin(), b.edges.end());
        base.push_back(std::move(b));
    }
    for (int x = 2; x <= n - 3; x += 2)
        for (int y = 0; y < x; y += 2) {
            if (x + y > n - 3) continue;
            Block b;
            b.kind = Block::Kind::Large;
            Cell a{x, y};
            std::vector<Cell> cs;
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = 0; dy <= 2; ++dy) cs.push_back(a + Cell{dx, dy});
            b.cells = CellSet(std::move(cs));
            b.edges.push_back(detail::norm_edge(a, a + Cell{-1, 0}));
            b.edges.push_back(detail::norm_edge(a, a + Cell{1, 0}));
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy : {0, 2})
                    b.edges.push_back(detail::norm_edge(a + Cell{0, 1}, a + Cell{dx, dy}));
            std::sort(b.edges.begin(), b.edges.end());
            base.push_back(std::move(b));
        }

    std::map<std::vector<std::int64_t>, Block> dedup;
    for (const auto& sym : board_symmetries(board))
        for (const Block& b : base) {
            Block img = detail::map_block(board, sym, b);
            dedup.emplace(detail::block_encoding(img), std::move(img));
        }

    BlockDecomposition out;
    out.n = n;
    for (auto& [key, b] : dedup) out.blocks.push_back(std::move(b));
    return out;
}

struct BlockWeight {
    int w_cell = 0;  // odd path cells inside the block
    int w_edge = 0;  // regular path edges inside the block
    int w() const { return w_cell + w_edge; }
};

inline BlockWeight block_weight(const Block& b, const CellPath& p) {
    BlockWeight out;
    for (Cell c : p.cells)
        if (odd_cell(c) && b.cells.contains(c)) ++out.w_cell;
    for (auto [u, v] : p.edges())
        if (regular_edge(u, v) && b.has_edge(u, v)) ++out.w_edge;
    return out;
}

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verify the two coverage conditions and return the summed capacities, which
// equal (n^2 - 1)/2. A violation signals a construction bug, not a bad input.
inline long long odd_upper_bound_certificate(int n) {
    BlockDecomposition dec = build_odd_blocks(n);
    Board board(n, n);

    for (const Block& b : dec.blocks) {
        int odd = 0;
        for (Cell c : b.cells)
            if (odd_cell(c)) ++odd;
        std::size_t want_cells = b.kind == Block::Kind::Little ? 4 : 9;
        std::size_t want_edges = b.kind == Block::Kind::Little ? 3 : 8;
        int want_odd = b.kind == Block::Kind::Little ? 1 : 2;
        if (b.cells.size() != want_cells || b.edges.size() != want_edges || odd != want_odd)
            throw CertificateError("malformed block");
        for (auto& [u, v] : b.edges) {
            if (!regular_edge(u, v)) throw CertificateError("block edge not regular");
            if (!MoveRule::king().adjacent(u, v)) throw CertificateError("block edge not a king move");
            if (!board.contains(u) || !board.contains(v)) throw CertificateError("block leaves the board");
        }
    }

    for (Cell c : board.cells()) {
        if (!odd_cell(c)) continue;
        int in = 0;
        for (const Block& b : dec.blocks)
            if (b.cells.contains(c)) ++in;
        if (in < 2) throw CertificateError("odd cell covered by fewer than two blocks: " + to_string(c));
    }
    for (Cell c : board.cells())
        for (Cell d : {Cell{1, 0}, Cell{0, 1}, Cell{1, 1}, Cell{1, -1}}) {
            Cell e = c + d;
            if (!board.contains(e) || !regular_edge(c, e)) continue;
            bool covered = false;
            for (const Block& b : dec.blocks)
                if (b.has_edge(c, e)) covered = true;
            if (!covered)
                throw CertificateError("regular edge uncovered: " + to_string(c) + "-" + to_string(e));
        }

    long long total = 0;
    for (const Block& b : dec.blocks) total += b.capacity();
    return total;
}

// length(p) <= 2 w_Cell(P) + w_Edge(P) <= sum over blocks of w(B) <= capacity.
inline bool path_weight_bound(int n, const CellPath& p) {
    BlockDecomposition dec = build_odd_blocks(n);
    long long w_cell = 0, w_edge = 0;
    for (Cell c : p.cells)
        if (odd_cell(c)) ++w_cell;
    for (auto [u, v] : p.edges())
        if (regular_edge(u, v)) ++w_edge;
    long long block_sum = 0, cap = 0;
    for (const Block& b : dec.blocks) {
        block_sum += block_weight(b, p).w();
        cap += b.capacity();
    }
    return p.length() <= 2 * w_cell + w_edge && 2 * w_cell + w_edge <= block_sum &&
           block_sum <= cap;
}

}  // namespace snakes
