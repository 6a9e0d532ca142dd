#pragma once

// Every quandle on {0..n-1} by brute force over column permutations, for
// tiny n. Shares nothing with the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

using Table = std::vector<std::vector<int>>; // t[x][y] = x*y, 0-based

struct Catalog {
    // connected quandles whose translations share one cycle type with
    // distinct lengths, keyed by that type
    std::map<std::vector<int>, std::vector<Table>> by_profile;
    std::vector<Table> all;
};

inline auto cycle_type(const std::vector<int> & perm) -> std::vector<int>
{
    std::vector<bool> seen(perm.size());
    std::vector<int> lengths;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s])
            continue;
        int len = 0;
        for (auto x = s; ! seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

inline auto column(const Table & t, int j) -> std::vector<int>
{
    std::vector<int> c;
    for (const auto & row : t)
        c.push_back(row[j]);
    return c;
}

inline auto is_connected(const Table & t) -> bool
{
    const int n = static_cast<int>(t.size());
    std::vector<bool> reached(n);
    reached[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x)
            if (reached[x])
                for (int j = 0; j < n; ++j)
                    if (! reached[t[x][j]])
                        reached[t[x][j]] = grew = true;
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

// Lexicographically smallest relabelled table over all n! relabellings.
inline auto canonical_image(const Table & t) -> Table
{
    const int n = static_cast<int>(t.size());
    std::vector<int> phi(n);
    std::iota(phi.begin(), phi.end(), 0);
    Table best;
    do {
        Table r(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                r[phi[x]][phi[y]] = phi[t[x][y]];
        if (best.empty() || r < best)
            best = r;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return best;
}

inline auto enumerate(int n) -> Catalog
{
    // candidate columns: permutations fixing j
    std::vector<std::vector<std::vector<int>>> choices(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int j = 0; j < n; ++j)
            if (perm[j] == j)
                choices[j].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Catalog catalog;
    std::vector<std::vector<int>> cols(n);
    // (x*j)*k = (x*k)*(j*k) checked once columns j, k and j*k are all set
    auto consistent = [&](int upto) {
        for (int j = 0; j <= upto; ++j)
            for (int k = 0; k <= upto; ++k) {
                int jk = cols[k][j];
                if (jk > upto || (j != upto && k != upto && jk != upto))
                    continue;
                for (int x = 0; x < n; ++x)
                    if (cols[k][cols[j][x]] != cols[jk][cols[k][x]])
                        return false;
            }
        return true;
    };
    auto rec = [&](auto & self, int j) -> void {
        if (j == n) {
            Table t(n, std::vector<int>(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    t[x][y] = cols[y][x];
            catalog.all.push_back(t);
            if (! is_connected(t))
                return;
            auto type = cycle_type(column(t, 0));
            if (std::adjacent_find(type.begin(), type.end()) != type.end())
                return;
            for (int y = 1; y < n; ++y)
                if (cycle_type(column(t, y)) != type)
                    return;
            catalog.by_profile[type].push_back(t);
            return;
        }
        for (const auto & c : choices[j]) {
            cols[j] = c;
            if (consistent(j))
                self(self, j + 1);
        }
    };
    rec(rec, 0);
    return catalog;
}

} // namespace naive
