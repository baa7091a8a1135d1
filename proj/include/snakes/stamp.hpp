#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "snakes/core.hpp"

namespace snakes {

// A candidate stamp folding: sigma[p] is the stamp at stack position p.
// Validity is decided by is_stamp_folding, never assumed.
struct StampFolding {
    std::vector<int> sigma;

    std::size_t size() const { return sigma.size(); }

    bool is_permutation() const {
        std::vector<char> seen(sigma.size(), 0);
        for (int v : sigma) {
            if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    // inverse[v] = position of stamp v in the stack
    std::vector<int> positions() const {
        std::vector<int> inv(sigma.size(), -1);
        for (std::size_t p = 0; p < sigma.size(); ++p) inv[sigma[p]] = static_cast<int>(p);
        return inv;
    }

    friend bool operator==(const StampFolding&, const StampFolding&) = default;
    friend bool operator<(const StampFolding& a, const StampFolding& b) {
        return a.sigma < b.sigma;
    }
};

// "u lies between v and w": u's stack position is strictly between theirs.
inline bool lies_between(const std::vector<int>& pos, int u, int v, int w) {
    int pu = pos[u], pv = pos[v], pw = pos[w];
    return (pv < pu && pu < pw) || (pw < pu && pu < pv);
}

// Folding criterion: no same-parity crease pair (i, j) may have exactly one of
// stamps i, i+1 positioned strictly between stamps j and j+1.
inline bool is_stamp_folding(const StampFolding& sf) {
    if (!sf.is_permutation()) throw std::invalid_argument("sigma is not a permutation");
    int s = static_cast<int>(sf.size());
    if (s <= 2) return true;
    auto pos = sf.positions();
    for (int i = 0; i + 1 < s; ++i) {
        for (int j = i + 2; j + 1 < s; j += 2) {
            bool a = lies_between(pos, i, j, j + 1);
            bool b = lies_between(pos, i + 1, j, j + 1);
            if (a != b) return false;
        }
    }
    return true;
}

// All stamp foldings of s elements, in lexicographic order of sigma.
inline std::vector<StampFolding> enumerate_stamp_foldings(int s, int cap = 10) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (s > cap) throw std::invalid_argument("stamp folding enumeration cap exceeded");
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i;
    std::vector<StampFolding> out;
    do {
        StampFolding sf{perm};
        if (is_stamp_folding(sf)) out.push_back(std::move(sf));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// omega_left(i): number of even j such that stamp i sits strictly inside
// crease (j, j+1); omega_right counts odd j. These give the column extents of
// the fewest-turn Hamiltonian path associated with a folding.
inline int omega_left(const StampFolding& sf, const std::vector<int>& pos, int i) {
    int s = static_cast<int>(sf.size());
    int count = 0;
    for (int j = 0; j + 1 < s; j += 2)
        if (lies_between(pos, i, j, j + 1)) ++count;
    return count;
}

inline int omega_right(const StampFolding& sf, const std::vector<int>& pos, int i) {
    int s = static_cast<int>(sf.size());
    int count = 0;
    for (int j = 1; j + 1 < s; j += 2)
        if (lies_between(pos, i, j, j + 1)) ++count;
    return count;
}

}  // namespace snakes
