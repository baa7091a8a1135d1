#pragma once

#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "snakes/path.hpp"
#include "snakes/symmetry.hpp"

namespace snakes {

struct SearchOptions {
    enum class Mode { Path, Cycle };
    enum class Objective { FindMax, EnumerateMax, EnumerateLength };

    Mode mode = Mode::Path;
    Objective objective = Objective::FindMax;
    long long target_length = -1;  // EnumerateLength only
    std::uint64_t node_budget = 4'000'000'000ULL;
    int workers = 1;
    bool symmetry_reduction = true;
    std::string checkpoint_file;  // empty: no checkpointing (checkpointed runs are single-worker)
};

struct SearchResult {
    long long max_length = -1;
    std::vector<CellPath> solutions;  // canonical class representatives, sorted
    long long total_count = 0;        // including symmetry copies
    long long distinct_count = 0;     // essentially distinct
    std::uint64_t nodes = 0;
    bool exhausted = true;
};

namespace detail {

struct Mask64 {
    std::uint64_t a = 0;
    static Mask64 bit(int i) { return {1ULL << i}; }
    bool test(int i) const { return (a >> i) & 1; }
    int count() const { return std::popcount(a); }
    friend Mask64 operator|(Mask64 x, Mask64 y) { return {x.a | y.a}; }
    friend Mask64 operator&(Mask64 x, Mask64 y) { return {x.a & y.a}; }
    friend Mask64 operator~(Mask64 x) { return {~x.a}; }
    template <class F>
    void for_each(F f) const {
        std::uint64_t w = a;
        while (w) {
            f(std::countr_zero(w));
            w &= w - 1;
        }
    }
};

struct Mask128 {
    std::uint64_t a = 0, b = 0;
    static Mask128 bit(int i) {
        return i < 64 ? Mask128{1ULL << i, 0} : Mask128{0, 1ULL << (i - 64)};
    }
    bool test(int i) const { return i < 64 ? (a >> i) & 1 : (b >> (i - 64)) & 1; }
    int count() const { return std::popcount(a) + std::popcount(b); }
    friend Mask128 operator|(Mask128 x, Mask128 y) { return {x.a | y.a, x.b | y.b}; }
    friend Mask128 operator&(Mask128 x, Mask128 y) { return {x.a & y.a, x.b & y.b}; }
    friend Mask128 operator~(Mask128 x) { return {~x.a, ~x.b}; }
    template <class F>
    void for_each(F f) const {
        std::uint64_t w = a;
        while (w) {
            f(std::countr_zero(w));
            w &= w - 1;
        }
        w = b;
        while (w) {
            f(64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
};

// One unit of splittable work: a fixed first cell or first edge.
// second == -1 runs every continuation; -2 records the single-cell path only.
struct SearchTask {
    int start = 0;
    int second = -1;
};

template <class Mask>
struct SnakeEngine {
    const PieceGraph& g;
    SearchOptions opt;
    int ncell = 0;
    std::vector<Mask> nbr;
    std::vector<Mask> above;  // cells with strictly larger index
    std::vector<Cell> cells;
    Mask allmask{};

    std::atomic<long long>& shared_best;
    std::atomic<std::uint64_t>& nodes_used;
    std::atomic<bool>& aborted;

    long long best = -1;
    std::vector<std::vector<int>> found;  // index sequences at local best length
    std::uint64_t local_nodes = 0;

    SnakeEngine(const PieceGraph& graph, const SearchOptions& options,
                std::atomic<long long>& sb, std::atomic<std::uint64_t>& nu,
                std::atomic<bool>& ab)
        : g(graph), opt(options), shared_best(sb), nodes_used(nu), aborted(ab) {
        cells = g.board.cells();
        ncell = static_cast<int>(cells.size());
        nbr.assign(ncell, Mask{});
        above.assign(ncell, Mask{});
        for (int i = 0; i < ncell; ++i) {
            allmask = allmask | Mask::bit(i);
            for (int j = 0; j < ncell; ++j) {
                if (g.rule.adjacent(cells[i], cells[j])) nbr[i] = nbr[i] | Mask::bit(j);
                if (j > i) above[i] = above[i] | Mask::bit(j);
            }
        }
    }

    bool enumerating() const { return opt.objective != SearchOptions::Objective::FindMax; }

    long long needed() const {
        if (opt.objective == SearchOptions::Objective::EnumerateLength)
            return opt.target_length;
        return shared_best.load(std::memory_order_relaxed);
    }

    bool count_node() {
        if (++local_nodes % 8192 == 0) {
            std::uint64_t total = nodes_used.fetch_add(8192, std::memory_order_relaxed) + 8192;
            if (total > opt.node_budget) aborted.store(true, std::memory_order_relaxed);
            if (aborted.load(std::memory_order_relaxed)) return false;
        }
        return true;
    }

    void record(const std::vector<int>& stack, long long len) {
        if (opt.objective == SearchOptions::Objective::EnumerateLength) {
            if (len == opt.target_length) found.push_back(stack);
            return;
        }
        if (len > best) {
            best = len;
            long long prev = shared_best.load(std::memory_order_relaxed);
            while (prev < len &&
                   !shared_best.compare_exchange_weak(prev, len, std::memory_order_relaxed)) {
            }
            if (enumerating()) found.clear();
        }
        if (enumerating() && len == best) found.push_back(stack);
    }

    // Open path search. `forbidden` holds every cell adjacent to an interior
    // path cell; a candidate must be adjacent to the head and nothing else.
    void dfs_path(std::vector<int>& stack, Mask visited, Mask forbidden, int head) {
        if (!count_node()) return;
        long long len = static_cast<long long>(stack.size()) - 1;
        record(stack, len);
        Mask alive = allmask & ~(visited | forbidden);
        long long bound = len + alive.count();
        long long need = needed();
        if (enumerating() ? bound < need : bound <= need) return;
        Mask cand = nbr[head] & alive;
        Mask nf = forbidden | nbr[head];
        cand.for_each([&](int c) {
            if (aborted.load(std::memory_order_relaxed)) return;
            stack.push_back(c);
            dfs_path(stack, visited | Mask::bit(c), nf, c);
            stack.pop_back();
        });
    }

    // Chordless cycle search anchored at the cycle's smallest cell. A head
    // adjacent to the anchor can only close; extending would leave a chord.
    void dfs_cycle(std::vector<int>& stack, Mask visited, Mask forbidden, int head) {
        if (!count_node()) return;
        int anchor = stack.front();
        if (stack.size() >= 3 && nbr[anchor].test(head)) {
            if (stack.size() >= 4 && stack[1] < head)
                record(stack, static_cast<long long>(stack.size()));
            return;
        }
        Mask alive = allmask & ~(visited | forbidden) & above[anchor];
        long long bound = static_cast<long long>(stack.size()) + alive.count();
        long long need = needed();
        if (enumerating() ? bound < need : bound <= need) return;
        Mask cand = nbr[head] & alive;
        Mask nf = forbidden | nbr[head];
        cand.for_each([&](int c) {
            if (aborted.load(std::memory_order_relaxed)) return;
            stack.push_back(c);
            dfs_cycle(stack, visited | Mask::bit(c), nf, c);
            stack.pop_back();
        });
    }

    void run_task(const SearchTask& t) {
        std::vector<int> stack{t.start};
        if (t.second == -2) {
            record(stack, 0);
            return;
        }
        Mask visited = Mask::bit(t.start);
        if (opt.mode == SearchOptions::Mode::Path) {
            if (t.second < 0) {
                dfs_path(stack, visited, Mask{}, t.start);
            } else {
                stack.push_back(t.second);
                dfs_path(stack, visited | Mask::bit(t.second), nbr[t.start], t.second);
            }
        } else {
            stack.push_back(t.second);
            dfs_cycle(stack, visited | Mask::bit(t.second), Mask{}, t.second);
        }
    }
};

inline std::vector<Cell> fundamental_starts(const Board& b) {
    std::vector<Cell> out;
    auto syms = board_symmetries(b);
    for (Cell c : b.cells()) {
        bool minimal = true;
        for (const auto& s : syms)
            if (s.apply(b, c) < c) minimal = false;
        if (minimal) out.push_back(c);
    }
    return out;
}

template <class Mask>
SearchResult run_snake_search(const PieceGraph& g, SearchOptions opt) {
    if (!opt.checkpoint_file.empty()) opt.workers = 1;
    std::atomic<long long> shared_best{-1};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};

    std::vector<Cell> cells = g.board.cells();
    long long cell_total = g.board.cell_count();
    auto index_of = [&](Cell c) {
        return static_cast<int>((c.y - g.board.origin.y) * g.board.n +
                                (c.x - g.board.origin.x));
    };

    std::vector<int> starts;
    if (opt.symmetry_reduction) {
        for (Cell c : fundamental_starts(g.board)) starts.push_back(index_of(c));
    } else {
        for (int i = 0; i < cell_total; ++i) starts.push_back(i);
    }
    std::sort(starts.begin(), starts.end());

    std::vector<SearchTask> tasks;
    {
        SnakeEngine<Mask> probe(g, opt, shared_best, nodes, aborted);
        for (int s : starts) {
            if (opt.mode == SearchOptions::Mode::Path) {
                if (cell_total <= 20) {
                    tasks.push_back({s, -1});
                } else {
                    tasks.push_back({s, -2});
                    probe.nbr[s].for_each([&](int c) { tasks.push_back({s, c}); });
                }
            } else {
                (probe.nbr[s] & probe.above[s]).for_each([&](int c) {
                    tasks.push_back({s, c});
                });
            }
        }
    }

    std::set<std::size_t> done;
    std::vector<std::vector<int>> resumed;
    long long resumed_best = -1;
    if (!opt.checkpoint_file.empty()) {
        std::ifstream in(opt.checkpoint_file);
        if (in) {
            std::string header, tok;
            std::getline(in, header);
            while (in >> tok) {
                if (tok == "done") {
                    std::size_t id;
                    in >> id;
                    done.insert(id);
                } else if (tok == "best") {
                    in >> resumed_best;
                } else if (tok == "sol") {
                    std::size_t n;
                    in >> n;
                    std::vector<int> v(n);
                    for (auto& x : v) in >> x;
                    resumed.push_back(std::move(v));
                }
            }
        }
        shared_best.store(resumed_best);
    }

    int workers = std::max(1, opt.workers);
    std::vector<std::unique_ptr<SnakeEngine<Mask>>> engines;
    for (int w = 0; w < workers; ++w)
        engines.push_back(std::make_unique<SnakeEngine<Mask>>(g, opt, shared_best, nodes,
                                                              aborted));
    engines[0]->best = resumed_best;
    engines[0]->found = std::move(resumed);

    auto save_checkpoint = [&]() {  // single-worker only
        std::string tmp = opt.checkpoint_file + ".tmp";
        std::ofstream out(tmp, std::ios::trunc);
        out << "snakecp/1 " << g.rule.name() << " " << g.board.m << " " << g.board.n << "\n";
        for (auto id : done) out << "done " << id << "\n";
        out << "best " << engines[0]->best << "\n";
        for (const auto& sol : engines[0]->found) {
            out << "sol " << sol.size();
            for (int x : sol) out << " " << x;
            out << "\n";
        }
        out.close();
        std::rename(tmp.c_str(), opt.checkpoint_file.c_str());
    };

    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
        while (true) {
            std::size_t id = next.fetch_add(1);
            if (id >= tasks.size()) break;
            if (aborted.load(std::memory_order_relaxed)) break;
            if (done.count(id)) continue;  // done is static under multi-worker runs
            engines[w]->run_task(tasks[id]);
            if (!opt.checkpoint_file.empty() && !aborted.load(std::memory_order_relaxed)) {
                done.insert(id);
                save_checkpoint();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    std::uint64_t leftover = 0;
    for (auto& e : engines) leftover += e->local_nodes % 8192;
    res.nodes = nodes.load() + leftover;
    res.exhausted = !aborted.load();

    long long max_len = -1;
    for (auto& e : engines) max_len = std::max(max_len, e->best);
    if (opt.objective == SearchOptions::Objective::EnumerateLength)
        max_len = opt.target_length;
    res.max_length = max_len;
    if (opt.objective == SearchOptions::Objective::FindMax) return res;

    bool cyc = opt.mode == SearchOptions::Mode::Cycle;
    std::map<std::vector<std::int64_t>, CellPath> by_encoding;
    for (auto& e : engines) {
        for (const auto& sol : e->found) {
            if (static_cast<long long>(sol.size()) - (cyc ? 0 : 1) != max_len) continue;
            std::vector<Cell> cs;
            cs.reserve(sol.size());
            for (int i : sol) cs.push_back(cells[i]);
            CellPath p(std::move(cs), cyc);
            for (const auto& sym : board_symmetries(g.board)) {
                CellPath img = normalize_orientation(apply_symmetry(g.board, sym, p));
                by_encoding.emplace(edge_encoding(img), img);
            }
        }
    }
    res.total_count = static_cast<long long>(by_encoding.size());
    std::map<std::vector<std::int64_t>, std::pair<CellPath, int>> classes;
    for (const auto& [enc, p] : by_encoding) {
        auto canon = canonicalize(g.board, p);
        classes.emplace(edge_encoding(canon.representative),
                        std::make_pair(canon.representative, canon.orbit_size));
    }
    res.distinct_count = static_cast<long long>(classes.size());
    long long orbit_total = 0;
    for (const auto& [key, rep] : classes) {
        res.solutions.push_back(rep.first);
        orbit_total += rep.second;
    }
    if (orbit_total != res.total_count)
        throw std::logic_error("orbit accounting mismatch in enumeration");
    return res;
}

}  // namespace detail

// Exhaustive longest snake path/cycle search with optional enumeration of all
// optima. Results are deterministic for any worker count: workers only race on
// the incumbent bound, and solution sets merge as sets.
inline SearchResult longest_snake(const PieceGraph& g, const SearchOptions& opt) {
    long long cell_total = g.board.cell_count();
    if (cell_total > 128) throw std::invalid_argument("board too large for exhaustive search");
    if (cell_total <= 64) return detail::run_snake_search<detail::Mask64>(g, opt);
    return detail::run_snake_search<detail::Mask128>(g, opt);
}

inline SearchResult enumerate_maxima(const PieceGraph& g, SearchOptions::Mode mode,
                                     SearchOptions opt = {}) {
    opt.mode = mode;
    opt.objective = SearchOptions::Objective::EnumerateMax;
    return longest_snake(g, opt);
}

}  // namespace snakes
