#include <quandlekit/structure.hpp>

#include <algorithm>

namespace quandlekit {

auto connectivity(const QuandleTable & q) -> Connectivity
{
    const auto n = q.order();
    std::vector<int> orbit_of(n, -1);
    Connectivity result;
    std::vector<index_t> stack;
    for (index_t start = 0; start < n; ++start) {
        if (orbit_of[start] != -1)
            continue;
        const int id = static_cast<int>(result.orbits.size());
        auto & orbit = result.orbits.emplace_back();
        orbit_of[start] = id;
        stack.assign(1, start);
        // Orbits of a finite permutation group are closed under the
        // generators alone; inverses are powers of the generators.
        while (! stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            orbit.emplace_back(x);
            for (auto y : q.row(x))
                if (orbit_of[y] == -1) {
                    orbit_of[y] = id;
                    stack.push_back(y);
                }
        }
        std::sort(orbit.begin(), orbit.end());
    }
    result.connected = result.orbits.size() == 1;
    return result;
}

auto is_connected(const QuandleTable & q) -> bool
{
    return connectivity(q).connected;
}

auto is_latin(const QuandleTable & q) -> bool
{
    const auto n = q.order();
    std::vector<std::size_t> stamp(n, 0);
    for (index_t i = 0; i < n; ++i)
        for (auto v : q.row(i)) {
            if (stamp[v] == i + 1)
                return false;
            stamp[v] = i + 1;
        }
    return true;
}

auto translation_cycle_structures(const QuandleTable & q) -> std::vector<CycleStructure>
{
    const auto n = q.order();
    std::vector<CycleStructure> result;
    result.reserve(n);
    std::vector<char> seen(n);
    std::vector<std::uint32_t> lengths;
    for (index_t i = 0; i < n; ++i) {
        auto col = q.column(i);
        std::fill(seen.begin(), seen.end(), 0);
        lengths.clear();
        for (index_t start = 0; start < n; ++start) {
            if (seen[start])
                continue;
            std::uint32_t len = 0;
            for (auto x = start; ! seen[x]; x = col[x]) {
                seen[x] = 1;
                ++len;
            }
            lengths.push_back(len);
        }
        result.emplace_back(lengths);
    }
    return result;
}

auto Profile::to_string() const -> std::string
{
    if (connected_form)
        return connected_form->to_string();
    std::string out = "[";
    for (std::size_t k = 0; k < structures.size(); ++k) {
        if (k != 0)
            out += ", ";
        out += structures[k].to_string();
    }
    return out + "]";
}

auto profile(const QuandleTable & q) -> Profile
{
    auto structures = translation_cycle_structures(q);
    Profile result;
    if (is_connected(q)) {
        for (std::size_t i = 1; i < structures.size(); ++i)
            if (structures[i] != structures[0])
                throw QuandleError(ErrorKind::ProfileInconsistency,
                    "connected quandle with differing translations R_1 and R_" + std::to_string(i + 1));
        result.connected_form = structures[0];
        result.structures = {structures[0]};
        return result;
    }
    std::sort(structures.begin(), structures.end());
    structures.erase(std::unique(structures.begin(), structures.end()), structures.end());
    result.structures = std::move(structures);
    return result;
}

auto subquandle_closure(const QuandleTable & q, const ElementSet & seed) -> ElementSet
{
    const auto n = q.order();
    std::vector<char> member(n, 0);
    std::vector<index_t> members;
    for (auto e : seed) {
        if (e.index() >= n)
            throw QuandleError(ErrorKind::IndexOutOfRange, "seed element " + std::to_string(e.label()) + " not in quandle");
        if (! member[e.index()]) {
            member[e.index()] = 1;
            members.push_back(e.index());
        }
    }
    // members[0..done) have been multiplied with each other in both orders.
    for (std::size_t done = 0; done < members.size() && members.size() < n; ++done) {
        auto x = members[done];
        for (std::size_t k = 0; k <= done; ++k) {
            auto y = members[k];
            for (auto v : {q.at(x, y), q.at(y, x)})
                if (! member[v]) {
                    member[v] = 1;
                    members.push_back(v);
                }
        }
    }
    std::vector<Element> result;
    result.reserve(members.size());
    for (auto v : members)
        result.emplace_back(v);
    return make_element_set(std::move(result));
}

auto is_closed(const QuandleTable & q, const ElementSet & subset) -> bool
{
    std::vector<char> member(q.order(), 0);
    for (auto e : subset)
        member[e.index()] = 1;
    for (auto x : subset)
        for (auto y : subset)
            if (! member[q.at(x.index(), y.index())])
                return false;
    return true;
}

auto subquandle_table(const QuandleTable & q, const ElementSet & subset) -> QuandleTable
{
    const auto m = subset.size();
    std::vector<index_t> position(q.order(), static_cast<index_t>(-1));
    for (index_t k = 0; k < m; ++k)
        position[subset[k].index()] = k;
    std::vector<index_t> entries(m * m);
    for (index_t a = 0; a < m; ++a)
        for (index_t b = 0; b < m; ++b) {
            auto v = position[q.at(subset[a].index(), subset[b].index())];
            if (v == static_cast<index_t>(-1))
                throw QuandleError(ErrorKind::NotClosed, "subset is not closed under *");
            entries[a * m + b] = v;
        }
    return QuandleTable{detail::TrustedTag{}, m, std::move(entries)};
}

} // namespace quandlekit
