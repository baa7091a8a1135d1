#pragma once

#include <atomic>
#include <cmath>
#include <thread>

#include "snakes/path.hpp"
#include "snakes/weighted.hpp"

namespace snakes {

struct SolverBudget {
    std::uint64_t node_budget = 2'000'000'000ULL;
    int workers = 1;
};

struct SolverResult {
    long long optimum = 0;
    CellSet witness;
    std::uint64_t nodes = 0;
    bool proven_optimal = false;
};

namespace detail {

// Branch and bound over include/exclude decisions in a fixed static order
// (descending weight, then cell order). Including a cell may saturate a
// neighbour at induced degree two, which excludes that neighbour's remaining
// undecided neighbours.
struct PseudosnakeSolver {
    std::vector<Cell> cells;      // decision order
    std::vector<int> weight;
    std::vector<std::vector<int>> adj;
    int n = 0;

    enum : char { Undecided = 0, In = 1, Out = 2 };

    explicit PseudosnakeSolver(const WeightedCellSet& g, const MoveRule& rule) {
        for (auto& [c, w] : g.entries()) {
            cells.push_back(c);
            weight.push_back(w);
        }
        n = static_cast<int>(cells.size());
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (weight[a] != weight[b]) return weight[a] > weight[b];
            return cells[a] < cells[b];
        });
        std::vector<Cell> oc(n);
        std::vector<int> ow(n);
        for (int i = 0; i < n; ++i) {
            oc[i] = cells[order[i]];
            ow[i] = weight[order[i]];
        }
        cells = std::move(oc);
        weight = std::move(ow);
        adj.assign(n, {});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rule.adjacent(cells[i], cells[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
    }

    // search state
    std::vector<char> state;
    std::vector<int> deg_in;     // included neighbours, tracked for every cell
    std::vector<int> trail;      // cells forced Out, for undo
    long long committed = 0;
    long long remaining = 0;     // total undecided weight
    std::uint64_t nodes = 0;
    std::uint64_t node_budget = 0;
    bool aborted = false;

    long long best = -1;
    std::vector<char> best_state;
    bool have_witness = false;
    bool collect_min_witness = false;       // second pass
    std::vector<std::vector<char>>* optima = nullptr;  // optional enumeration
    std::size_t optima_cap = 0;

    void reset(std::uint64_t budget) {
        state.assign(n, Undecided);
        deg_in.assign(n, 0);
        trail.clear();
        committed = 0;
        remaining = 0;
        for (int w : weight) remaining += w;
        nodes = 0;
        node_budget = budget;
        aborted = false;
    }

    void force_out(int c) {
        state[c] = Out;
        remaining -= weight[c];
        trail.push_back(c);
    }

    // include cell c; returns trail length before changes, or -1 if infeasible
    int try_include(int c) {
        if (deg_in[c] > 2) return -1;
        int mark = static_cast<int>(trail.size());
        state[c] = In;
        committed += weight[c];
        remaining -= weight[c];
        bool ok = true;
        for (int u : adj[c]) {
            ++deg_in[u];
            if (state[u] == In && deg_in[u] > 2) ok = false;
        }
        if (ok && deg_in[c] == 2)
            for (int u : adj[c])
                if (state[u] == Undecided) force_out(u);
        if (ok)
            for (int u : adj[c])
                if (state[u] == In && deg_in[u] == 2)
                    for (int v : adj[u])
                        if (state[v] == Undecided) force_out(v);
        if (!ok) {
            undo_include(c, mark);
            return -1;
        }
        return mark;
    }

    void undo_include(int c, int mark) {
        while (static_cast<int>(trail.size()) > mark) {
            int u = trail.back();
            trail.pop_back();
            state[u] = Undecided;
            remaining += weight[u];
        }
        for (int u : adj[c]) --deg_in[u];
        state[c] = Undecided;
        committed -= weight[c];
        remaining += weight[c];
    }

    void note_solution() {
        if (committed > best) {
            best = committed;
            best_state = state;
            have_witness = true;
        } else if (collect_min_witness && committed == best) {
            if (!have_witness) {
                best_state = state;
                have_witness = true;
            } else {
                // canonical minimum: compare included-cell lists in cell order
                std::vector<Cell> cur, inc;
                for (int i = 0; i < n; ++i)
                    if (state[i] == In) cur.push_back(cells[i]);
                for (int i = 0; i < n; ++i)
                    if (best_state[i] == In) inc.push_back(cells[i]);
                std::sort(cur.begin(), cur.end());
                std::sort(inc.begin(), inc.end());
                if (std::lexicographical_compare(cur.begin(), cur.end(), inc.begin(),
                                                 inc.end()))
                    best_state = state;
            }
        }
        if (optima && committed == best && optima->size() < optima_cap)
            optima->push_back(state);
    }

    void dfs(int idx, std::atomic<long long>* shared_best) {
        if (aborted) return;
        if (++nodes > node_budget) {
            aborted = true;
            return;
        }
        while (idx < n && state[idx] != Undecided) ++idx;
        long long horizon = shared_best && !collect_min_witness
                                ? std::max(best, shared_best->load(std::memory_order_relaxed))
                                : best;
        bool strict = collect_min_witness || optima;
        if (strict ? committed + remaining < horizon : committed + remaining <= horizon)
            return;
        if (idx == n) {
            note_solution();
            if (shared_best) {
                long long prev = shared_best->load(std::memory_order_relaxed);
                while (prev < best && !shared_best->compare_exchange_weak(
                                          prev, best, std::memory_order_relaxed)) {
                }
            }
            return;
        }
        int mark = try_include(idx);
        if (mark >= 0) {
            dfs(idx + 1, shared_best);
            undo_include(idx, mark);
        }
        if (aborted) return;
        force_out(idx);
        dfs(idx + 1, shared_best);
        int u = trail.back();
        trail.pop_back();
        state[u] = Undecided;
        remaining += weight[u];
    }

    CellSet witness_of(const std::vector<char>& st) const {
        std::vector<Cell> v;
        for (int i = 0; i < n; ++i)
            if (st[i] == In) v.push_back(cells[i]);
        return CellSet(std::move(v));
    }
};

}  // namespace detail

// Exact maximum-weight pseudosnake. Two passes: find the optimum, then sweep
// once more at the proven optimum to make the reported witness the canonical
// minimum among all optima, independent of search order and worker count.
inline SolverResult max_weight_pseudosnake(const WeightedCellSet& g, const MoveRule& rule,
                                           SolverBudget budget = {}) {
    SolverResult out;
    if (g.cell_count() == 0) {
        out.proven_optimal = true;
        return out;
    }
    int workers = std::max(1, budget.workers);
    if (workers == 1) {
        detail::PseudosnakeSolver solver(g, rule);
        solver.reset(budget.node_budget);
        solver.dfs(0, nullptr);
        out.nodes = solver.nodes;
        out.optimum = solver.best;
        out.witness = solver.witness_of(solver.best_state);
        out.proven_optimal = !solver.aborted;
    } else {
        // split on the first few decisions; workers share the incumbent bound
        int depth = 1;
        while ((1 << depth) < 2 * workers && depth < 8) ++depth;
        std::atomic<long long> shared_best{-1};
        std::atomic<int> next{0};
        int tasks = 1 << depth;
        std::vector<SolverResult> partial(tasks);
        auto run_task = [&](int mask) {
            detail::PseudosnakeSolver solver(g, rule);
            solver.reset(budget.node_budget / tasks + 1);
            bool feasible = true;
            for (int d = 0; d < depth && feasible; ++d) {
                int idx = 0;
                while (idx < solver.n && solver.state[idx] != detail::PseudosnakeSolver::Undecided)
                    ++idx;
                if (idx >= solver.n) {
                    feasible = (mask >> d) == 0;  // propagation decided the rest
                    break;
                }
                if ((mask >> d) & 1)
                    feasible = solver.try_include(idx) >= 0;
                else
                    solver.force_out(idx);
            }
            if (feasible) solver.dfs(0, &shared_best);
            SolverResult r;
            r.nodes = solver.nodes;
            r.optimum = solver.best;
            r.proven_optimal = !solver.aborted;
            if (solver.have_witness) r.witness = solver.witness_of(solver.best_state);
            return r;
        };
        auto worker_loop = [&](int w) {
            (void)w;
            while (true) {
                int t = next.fetch_add(1);
                if (t >= tasks) break;
                partial[t] = run_task(t);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_loop, w);
        for (auto& th : pool) th.join();
        out.optimum = -1;
        out.proven_optimal = true;
        for (auto& r : partial) {
            out.nodes += r.nodes;
            out.proven_optimal = out.proven_optimal && r.proven_optimal;
            if (r.optimum > out.optimum) {
                out.optimum = r.optimum;
                out.witness = r.witness;
            }
        }
    }
    if (!out.proven_optimal) return out;

    if (g.cell_count() <= 80) {  // canonical-witness sweep
        detail::PseudosnakeSolver second(g, rule);
        second.reset(budget.node_budget);
        second.collect_min_witness = true;
        second.best = out.optimum;
        second.best_state.assign(second.n, detail::PseudosnakeSolver::Out);
        second.dfs(0, nullptr);
        if (!second.aborted) {
            out.witness = second.witness_of(second.best_state);
            out.nodes += second.nodes;
        }
    }
    return out;
}

// All optimum solutions (small instances), for essential-uniqueness checks.
inline std::vector<CellSet> enumerate_optimal_pseudosnakes(const WeightedCellSet& g,
                                                           const MoveRule& rule,
                                                           std::size_t cap = 10000,
                                                           SolverBudget budget = {}) {
    auto opt = max_weight_pseudosnake(g, rule, budget);
    if (!opt.proven_optimal) throw std::runtime_error("budget exhausted before enumeration");
    detail::PseudosnakeSolver solver(g, rule);
    solver.reset(budget.node_budget);
    std::vector<std::vector<char>> states;
    solver.optima = &states;
    solver.optima_cap = cap;
    solver.best = opt.optimum;
    solver.dfs(0, nullptr);
    std::vector<CellSet> out;
    for (auto& st : states) out.push_back(solver.witness_of(st));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct TauResult {
    Rational density;
    SolverResult solve;
};

// Pseudosnake density of the n-by-n board under the given rule.
inline TauResult tau_n(const MoveRule& rule, int n, SolverBudget budget = {}) {
    Board b(n, n);
    WeightedCellSet unit = WeightedCellSet::uniform(CellSet(b.cells()), 1);
    TauResult out;
    out.solve = max_weight_pseudosnake(unit, rule, budget);
    out.density = Rational::reduced(out.solve.optimum, static_cast<long long>(n) * n);
    return out;
}

// Explicit form of the capacity bound: tau * (copies of gamma inside the
// board) plus every cell near enough to the boundary that some copy through
// it overflows the board. Valid for any pseudosnake of the m-by-n graph.
//
//   copies   = max(0, n-w+1) * max(0, m-h+1)      (w, h: bounding box of gamma)
//   interior = max(0, n-2w+2) * max(0, m-2h+2)
//   bound    = ceil(tau * copies) + (m*n - interior)
inline long long capacity_upper_bound(const WeightedCellSet& gamma, Rational tau, int m,
                                      int n) {
    Board box = bounding_board(gamma.cells().cells());
    long long w = box.n, h = box.m;
    long long copies = std::max<long long>(0, n - w + 1) * std::max<long long>(0, m - h + 1);
    long long interior =
        std::max<long long>(0, n - 2 * w + 2) * std::max<long long>(0, m - 2 * h + 2);
    long long scaled = tau.num * copies;
    long long lead = scaled / tau.den + (scaled % tau.den != 0 ? 1 : 0);
    return lead + (static_cast<long long>(m) * n - interior);
}

}  // namespace snakes
