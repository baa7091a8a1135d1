#pragma once

#include <set>
#include <sstream>

#include "snakes/grid_search.hpp"
#include "snakes/king.hpp"
#include "snakes/lift.hpp"
#include "snakes/search.hpp"

namespace snakes {

struct BijectionReport {
    bool ok = false;
    long long max_length = -1;
    long long generated = 0;  // lifts from grid paths/cycles
    long long searched = 0;   // exhaustively found maxima
    bool injective = false;
    std::string detail;
};

namespace detail {

inline std::vector<GridPath> all_fewest_turn_ham_paths(int k) {
    std::map<std::vector<std::int64_t>, GridPath> by_enc;
    for (const auto& sf : enumerate_stamp_foldings(k)) {
        for (bool refl : {false, true}) {
            GridPath gp = stamp_to_ham_path(sf, refl);
            by_enc.emplace(edge_encoding(gp.path), gp);
            if (k > 1) {
                GridPath tr = transposed(gp);
                by_enc.emplace(edge_encoding(tr.path), tr);
            }
        }
    }
    std::vector<GridPath> out;
    for (auto& [enc, gp] : by_enc) out.push_back(gp);
    return out;
}

// every subset of the free cycles, as lift selections
inline std::vector<LiftSelection> all_selections(const std::vector<FreeCycle>& fcs) {
    std::vector<LiftSelection> out;
    std::size_t f = fcs.size();
    for (std::size_t mask = 0; mask < (1ULL << f); ++mask) {
        LiftSelection sel;
        for (std::size_t i = 0; i < f; ++i)
            if (mask & (1ULL << i)) sel.chosen.push_back(fcs[i]);
        out.push_back(std::move(sel));
    }
    return out;
}

inline std::set<std::vector<std::int64_t>> expand_search_solutions(const Board& board,
                                                                   const SearchResult& sr) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& rep : sr.solutions)
        for (const auto& sym : board_symmetries(board))
            out.insert(edge_encoding(apply_symmetry(board, sym, rep)));
    return out;
}

inline BijectionReport check_lift_bijection(int n, bool cycles, const SearchOptions& base) {
    BijectionReport rep;
    if (n < 3 || n % 2 != 1) {
        rep.detail = "n must be odd and at least 3";
        return rep;
    }
    if (cycles && n % 4 != 3) {
        rep.detail = "cycle bijection needs n = 3 mod 4";
        return rep;
    }
    int k = (n + 1) / 2;
    Board king_board(n, n);
    PieceGraph king(MoveRule::king(), king_board);
    long long want_len = (static_cast<long long>(n) * n - 1) / 2;

    // generate all lifts
    std::set<std::vector<std::int64_t>> lifts;
    long long pairs = 0;
    std::vector<GridPath> gps;
    if (!cycles) {
        gps = all_fewest_turn_ham_paths(k);
    } else {
        for (const auto& c : enumerate_grid_ham_cycles(k, 2 * k).solutions)
            gps.push_back(GridPath(c, Board(k, k)));
    }
    for (const auto& gp : gps) {
        auto fcs = find_free_cycles(gp);
        for (const auto& sel : all_selections(fcs)) {
            CellPath lifted = lift(gp, sel);
            ++pairs;
            if (lifted.length() != want_len) {
                rep.detail = "lift of unexpected length " + std::to_string(lifted.length());
                return rep;
            }
            bool good = cycles ? is_snake_cycle(king, lifted) : is_snake_path(king, lifted);
            if (!good) {
                rep.detail = "lift failed verification";
                return rep;
            }
            lifts.insert(edge_encoding(normalize_orientation(lifted)));
        }
    }
    rep.generated = static_cast<long long>(lifts.size());
    rep.injective = pairs == rep.generated;

    // enumerate all maxima by exhaustive search
    SearchOptions opt = base;
    opt.mode = cycles ? SearchOptions::Mode::Cycle : SearchOptions::Mode::Path;
    opt.objective = SearchOptions::Objective::EnumerateMax;
    SearchResult sr = longest_snake(king, opt);
    rep.max_length = sr.max_length;
    rep.searched = sr.total_count;
    if (!sr.exhausted) {
        rep.detail = "search budget exhausted";
        return rep;
    }
    if (sr.max_length != want_len) {
        rep.detail = "searched maximum " + std::to_string(sr.max_length) + " != expected " +
                     std::to_string(want_len);
        return rep;
    }
    auto searched = expand_search_solutions(king_board, sr);
    if (searched != lifts) {
        std::ostringstream os;
        os << "set mismatch: " << lifts.size() << " lifts vs " << searched.size()
           << " searched maxima";
        rep.detail = os.str();
        return rep;
    }
    rep.ok = rep.injective;
    if (!rep.injective) rep.detail = "duplicate lifts: map is not injective";
    return rep;
}

}  // namespace detail

// Check that the lifts of fewest-turn Hamiltonian paths of the half-sized grid
// are exactly the longest snake paths of the odd king graph, one lift per path.
inline BijectionReport verify_lift_bijection(int n, SearchOptions opt = {}) {
    return detail::check_lift_bijection(n, false, opt);
}

// Cycle analogue for n = 3 mod 4, using fewest-turn Hamiltonian grid cycles.
inline BijectionReport verify_cycle_lift_bijection(int n, SearchOptions opt = {}) {
    return detail::check_lift_bijection(n, true, opt);
}

}  // namespace snakes
