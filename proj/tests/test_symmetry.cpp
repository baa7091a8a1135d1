#include <doctest.h>

#include "snakes/king.hpp"
#include "snakes/symmetry.hpp"

using namespace snakes;

TEST_CASE("group sizes") {
    CHECK(board_symmetries(Board(5, 5)).size() == 8);
    CHECK(board_symmetries(Board(5, 3)).size() == 4);
}

TEST_CASE("canonicalize sets: idempotent and orbit-constant") {
    Board b(4, 4);
    CellSet s({{0, 0}, {1, 2}, {3, 1}});
    auto canon = canonicalize(b, s);
    CHECK(canonicalize(b, canon.representative).representative == canon.representative);
    for (const auto& sym : board_symmetries(b)) {
        auto img = apply_symmetry(b, sym, s);
        CHECK(canonicalize(b, img).representative == canon.representative);
        CHECK(canonicalize(b, img).orbit_size == canon.orbit_size);
    }
}

TEST_CASE("centrally symmetric set has a small orbit") {
    Board b(4, 4);
    CellSet s({{0, 0}, {3, 3}});  // preserved by the central symmetry and the diagonal
    CHECK(canonicalize(b, s).orbit_size < 8);
}

TEST_CASE("paths compare as edge sets, reversal identified") {
    Board b(3, 3);
    CellPath p({{0, 0}, {1, 1}, {2, 1}});
    auto c1 = canonicalize(b, p);
    auto c2 = canonicalize(b, p.reversed());
    CHECK(edge_encoding(c1.representative) == edge_encoding(c2.representative));
}

TEST_CASE("snake property is closed under board symmetry") {
    PieceGraph king(MoveRule::king(), Board(8, 8));
    auto spiral = build_even_king_spiral(8);
    for (const auto& sym : board_symmetries(king.board))
        CHECK(is_snake_path(king, apply_symmetry(king.board, sym, spiral)));
}

TEST_CASE("cycle orientation normalization is rotation-invariant") {
    std::vector<Cell> cells{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CellPath a(cells, true);
    std::rotate(cells.begin(), cells.begin() + 2, cells.end());
    std::reverse(cells.begin(), cells.end());
    CellPath b(cells, true);
    CHECK(normalize_orientation(a) == normalize_orientation(b));
}
