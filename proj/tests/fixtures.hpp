#pragma once

#include <quandlekit/qdl.hpp>

#include <string>
#include <vector>

inline auto fixture_path(const std::string & name) -> std::string
{
    return std::string(QUANDLEKIT_FIXTURES) + "/" + name;
}

inline auto load_fixture(const std::string & name) -> quandlekit::QuandleTable
{
    return quandlekit::QuandleTable::from_rows(quandlekit::read_qdl_file(fixture_path(name)).rows);
}

inline auto zero_based_rows(const quandlekit::QuandleTable & q) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> rows(q.order(), std::vector<int>(q.order()));
    for (quandlekit::index_t x = 0; x < q.order(); ++x)
        for (quandlekit::index_t y = 0; y < q.order(); ++y)
            rows[x][y] = static_cast<int>(q.at(x, y));
    return rows;
}
