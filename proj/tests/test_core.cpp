#include <doctest.h>

#include "snakes/core.hpp"
#include "snakes/king.hpp"
#include "snakes/path.hpp"

using namespace snakes;

TEST_CASE("adjacency by rule") {
    CHECK(adjacent(MoveRule::king(), {0, 0}, {1, 1}));
    CHECK(adjacent(MoveRule::king(), {0, 0}, {0, 1}));
    CHECK_FALSE(adjacent(MoveRule::king(), {0, 0}, {0, 0}));
    CHECK_FALSE(adjacent(MoveRule::king(), {0, 0}, {2, 1}));
    CHECK_FALSE(adjacent(MoveRule::knight(), {0, 0}, {0, 1}));
    CHECK(adjacent(MoveRule::knight(), {0, 0}, {2, 1}));
    CHECK(adjacent(MoveRule::leaper(1, 3), {0, 0}, {1, 3}));
    CHECK_FALSE(adjacent(MoveRule::leaper(1, 3), {0, 0}, {3, 3}));
    CHECK(adjacent(MoveRule::wazir(), {4, 2}, {4, 3}));
    CHECK(adjacent(MoveRule::fers(), {4, 2}, {5, 3}));
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    std::vector<MoveRule> rules = {MoveRule::king(),   MoveRule::knight(),
                                   MoveRule::wazir(),  MoveRule::fers(),
                                   MoveRule::leaper(2, 3), MoveRule::leaper(0, 2)};
    for (const auto& r : rules)
        for (int ax = -2; ax <= 2; ++ax)
            for (int ay = -2; ay <= 2; ++ay)
                for (int bx = -2; bx <= 4; ++bx)
                    for (int by = -2; by <= 4; ++by) {
                        Cell a{ax, ay}, b{bx, by};
                        CHECK(adjacent(r, a, b) == adjacent(r, b, a));
                        if (a == b) CHECK_FALSE(adjacent(r, a, b));
                    }
}

TEST_CASE("leaper aliases match the named pieces on small boards") {
    struct Alias {
        MoveRule named, leaper;
    };
    for (auto [named, leaper] : {Alias{MoveRule::knight(), MoveRule::leaper(1, 2)},
                                 Alias{MoveRule::wazir(), MoveRule::leaper(0, 1)},
                                 Alias{MoveRule::fers(), MoveRule::leaper(1, 1)}}) {
        Board b(10, 10);
        for (Cell u : b.cells())
            for (Cell v : b.cells()) CHECK(named.adjacent(u, v) == leaper.adjacent(u, v));
    }
}

TEST_CASE("neighbors") {
    PieceGraph king3(MoveRule::king(), Board(3, 3));
    CHECK(king3.neighbors({1, 1}).size() == 8);
    PieceGraph knight8(MoveRule::knight(), Board(8, 8));
    CHECK(knight8.neighbors({0, 0}) == CellSet({{1, 2}, {2, 1}}));
    PieceGraph wazir1(MoveRule::wazir(), Board(1, 1));
    CHECK(wazir1.neighbors({0, 0}).empty());
    CHECK_THROWS_AS(king3.neighbors({5, 5}), std::invalid_argument);
}

TEST_CASE("induced degree") {
    PieceGraph king(MoveRule::king(), Board(5, 5));
    CellSet diag({{0, 0}, {1, 1}, {2, 2}});
    CHECK(king.induced_degree(diag, {1, 1}) == 2);
    PieceGraph knight(MoveRule::knight(), Board(5, 5));
    CHECK(knight.induced_degree(CellSet({{0, 0}}), {0, 0}) == 0);
    CHECK_THROWS_AS(king.induced_degree(diag, {4, 4}), std::invalid_argument);
}

TEST_CASE("snake path predicate") {
    PieceGraph king(MoveRule::king(), Board(8, 8));
    CHECK(is_snake_path(king, CellPath({{0, 0}, {0, 1}})));
    CHECK_FALSE(is_snake_path(king, CellPath({{0, 0}, {1, 0}, {1, 1}})));  // chord
    CHECK(is_snake_path(king, build_even_king_spiral(8)));
    CHECK_FALSE(is_snake_path(king, CellPath({{0, 0}, {3, 3}})));  // not a path at all
    CHECK_FALSE(is_snake_path(king, CellPath({{0, 0}, {0, 1}}, true)));
    CHECK(is_snake_path(king, CellPath({{4, 4}})));
}

TEST_CASE("snake cycle predicate") {
    PieceGraph king4(MoveRule::king(), Board(4, 4));
    // triangles never count as snake cycles
    CHECK_FALSE(is_snake_cycle(king4, CellPath({{0, 0}, {1, 0}, {1, 1}}, true)));
    PieceGraph grid(MoveRule::wazir(), Board(2, 2));
    CHECK(is_snake_cycle(grid, CellPath({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true)));
    PieceGraph king3(MoveRule::king(), Board(3, 3));
    CHECK_FALSE(is_snake_cycle(king3, CellPath({{0, 0}, {1, 0}, {2, 1}, {1, 1}}, true)));
}

TEST_CASE("pseudosnake predicate") {
    PieceGraph king(MoveRule::king(), Board(3, 3));
    CHECK(is_pseudosnake(king, CellSet{}));
    CHECK_FALSE(is_pseudosnake(king, CellSet(Board(3, 3).cells())));
    PieceGraph wazir(MoveRule::wazir(), Board(6, 6));
    std::vector<Cell> mod3;
    for (Cell c : Board(6, 6).cells())
        if (((c.x - c.y) % 3 + 3) % 3 != 0) mod3.push_back(c);
    CHECK(is_pseudosnake(wazir, CellSet(mod3)));
}

TEST_CASE("every snake path is a pseudosnake, converse fails") {
    PieceGraph king(MoveRule::king(), Board(8, 8));
    auto spiral = build_even_king_spiral(8);
    CHECK(is_pseudosnake(king, spiral.cell_set()));
    // two far-apart edges form a pseudosnake that is not one path
    CellSet witness({{0, 0}, {0, 1}, {5, 5}, {5, 6}});
    CHECK(is_pseudosnake(king, witness));
    CHECK_FALSE(trace_single_chain(king.rule, witness).has_value());
}

TEST_CASE("trace single chain") {
    auto cyc = trace_single_chain(MoveRule::wazir(),
                                  CellSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    REQUIRE(cyc.has_value());
    CHECK(cyc->closed);
    CHECK(cyc->cells.size() == 4);
    auto path = trace_single_chain(MoveRule::wazir(), CellSet({{0, 0}, {1, 0}, {2, 0}}));
    REQUIRE(path.has_value());
    CHECK_FALSE(path->closed);
    CHECK(path->cells.front() == Cell{0, 0});
}

TEST_CASE("move rule names round-trip") {
    for (auto r : {MoveRule::king(), MoveRule::knight(), MoveRule::wazir(), MoveRule::fers(),
                   MoveRule::leaper(1, 3), MoveRule::leaper(0, 2)})
        CHECK(MoveRule::parse(r.name()) == r);
    CHECK_THROWS(MoveRule::parse("queen"));
}
