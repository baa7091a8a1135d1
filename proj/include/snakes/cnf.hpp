#pragma once

#include <sstream>

#include "snakes/weighted.hpp"

namespace snakes {

// DIMACS encoding of "some pseudosnake of the instance has weight >= target".
//
// Variables 1..N are the cells in (y, x) order; variable i true means cell i
// is selected. Degree clauses forbid a selected cell from having three
// selected neighbours. The weight threshold sum(w_i x_i) >= T is encoded as
// sum(w_i (1-x_i)) <= W-T with a sequential weighted counter: auxiliary
// variable s(i,j) = N + (i-1)*K + j says "the first i deselections weigh at
// least j", K = W-T.
struct CnfInstance {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
    std::string comment;

    std::string to_dimacs() const {
        std::ostringstream os;
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) os << "c " << line << "\n";
        os << "p cnf " << variables << " " << clauses.size() << "\n";
        for (const auto& cl : clauses) {
            for (int lit : cl) os << lit << " ";
            os << "0\n";
        }
        return os.str();
    }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace detail

inline CnfInstance export_density_instance(const WeightedCellSet& g, const MoveRule& rule,
                                           long long target) {
    const auto& entries = g.entries();
    int n = static_cast<int>(entries.size());
    long long total = g.total_weight();

    CnfInstance out;
    {
        std::ostringstream id;
        id << rule.name() << "|" << target;
        for (auto& [c, w] : entries) id << "|" << c.x << "," << c.y << "," << w;
        std::ostringstream comment;
        comment << "pseudosnake weight >= " << target << " decision instance\n";
        comment << "rule=" << rule.name() << " cells=" << n << " total-weight=" << total
                << " target=" << target << "\n";
        comment << "instance-hash=" << std::hex << detail::fnv1a(id.str()) << std::dec << "\n";
        comment << "vars 1.." << n << ": cells in (y,x) order; rest: weighted counter";
        out.comment = comment.str();
    }

    // degree <= 2: no selected cell has three selected neighbours
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rule.adjacent(entries[i].first, entries[j].first)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (int v = 0; v < n; ++v) {
        const auto& nb = adj[v];
        int d = static_cast<int>(nb.size());
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                for (int c = b + 1; c < d; ++c)
                    out.clauses.push_back(
                        {-(v + 1), -(nb[a] + 1), -(nb[b] + 1), -(nb[c] + 1)});
    }

    long long K = total - target;
    if (K < 0) {
        // unreachable target: trivially unsatisfiable
        out.variables = n;
        out.clauses.push_back({1});
        out.clauses.push_back({-1});
        return out;
    }
    if (K >= total) {  // threshold <= 0: nothing to encode
        out.variables = n;
        return out;
    }

    auto s_var = [&](long long i, long long j) {
        return static_cast<int>(n + (i - 1) * K + j);
    };
    out.variables = static_cast<int>(n + static_cast<long long>(n) * K);
    // deselection literal of cell i is -(i+1); weight w_i
    for (long long i = 1; i <= n; ++i) {
        long long w = entries[static_cast<std::size_t>(i - 1)].second;
        int x = static_cast<int>(i);
        // deselecting cell i makes the first-i sum at least min(w, K)
        for (long long j = 1; j <= std::min(w, K); ++j)
            out.clauses.push_back({x, s_var(i, j)});
        if (i > 1) {
            for (long long j = 1; j <= K; ++j) {
                // monotone in i
                out.clauses.push_back({-s_var(i - 1, j), s_var(i, j)});
                // deselection adds w to the running sum
                if (j + w <= K)
                    out.clauses.push_back({x, -s_var(i - 1, j), s_var(i, j + w)});
            }
        }
        // overflow: running sum may never exceed K
        if (w > K) {
            out.clauses.push_back({x});
        } else if (i > 1 && K - w + 1 >= 1) {
            out.clauses.push_back({x, -s_var(i - 1, K - w + 1)});
        }
    }
    return out;
}

}  // namespace snakes
