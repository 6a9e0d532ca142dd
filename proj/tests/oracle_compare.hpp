#pragma once

#include "naive_oracle.hpp"

#include <quandlekit/search.hpp>

#include <set>
#include <string>

// One distinct-length profile at one order: the search against the naive
// catalogue.
struct OracleComparison {
    std::vector<int> profile;
    std::size_t search_count = 0;
    std::size_t oracle_canonical_count = 0;
    std::size_t search_classes = 0;
    std::size_t oracle_classes = 0;
    bool same_tables = false;
    bool same_classes = false;

    auto agrees() const -> bool
    {
        return same_tables && same_classes && search_count == oracle_canonical_count
            && search_classes == oracle_classes;
    }
};

inline auto distinct_length_profiles(int n) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    std::vector<int> current{1};
    auto rec = [&](auto & self, int remaining, int last) -> void {
        if (remaining == 0) {
            if (current.size() >= 2)
                out.push_back(current);
            return;
        }
        for (int len = last + 1; len <= remaining; ++len) {
            current.push_back(len);
            self(self, remaining - len, len);
            current.pop_back();
        }
    };
    rec(rec, n - 1, 1);
    return out;
}

inline auto standard_first_column(const std::vector<int> & profile) -> std::vector<int>
{
    std::vector<int> col;
    int start = 0;
    for (int len : profile) {
        for (int k = 0; k < len; ++k)
            col.push_back(start + (k + 1) % len);
        start += len;
    }
    return col;
}

inline auto compare_with_oracle(const naive::Catalog & catalog, const std::vector<int> & profile)
    -> OracleComparison
{
    OracleComparison cmp;
    cmp.profile = profile;

    std::set<naive::Table> oracle_tables, oracle_classes;
    auto it = catalog.by_profile.find(profile);
    if (it != catalog.by_profile.end())
        for (const auto & t : it->second) {
            oracle_classes.insert(naive::canonical_image(t));
            if (naive::column(t, 0) == standard_first_column(profile))
                oracle_tables.insert(t);
        }
    cmp.oracle_canonical_count = oracle_tables.size();
    cmp.oracle_classes = oracle_classes.size();

    quandlekit::SearchSpec spec;
    for (int len : profile)
        spec.target_profile.push_back(static_cast<std::uint32_t>(len));
    spec.dedup_isomorphic = true;
    auto result = quandlekit::search_by_profile(spec);
    cmp.search_count = result.quandles.size();
    cmp.search_classes = result.iso_classes.size();

    std::set<naive::Table> search_tables, search_classes;
    for (const auto & q : result.quandles) {
        const auto n = q.order();
        naive::Table t(n, std::vector<int>(n));
        for (quandlekit::index_t x = 0; x < n; ++x)
            for (quandlekit::index_t y = 0; y < n; ++y)
                t[x][y] = static_cast<int>(q.at(x, y));
        search_tables.insert(t);
        search_classes.insert(naive::canonical_image(t));
    }
    cmp.same_tables = search_tables == oracle_tables;
    cmp.same_classes = search_classes == oracle_classes;
    return cmp;
}
